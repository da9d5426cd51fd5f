#include "borelsum/combinatorics.hpp"

#include <string>

#include "borelsum/errors.hpp"

namespace borelsum {

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
  rows_[0] = {mpz_class(1)};
  for (unsigned n = 0; n < n_max_; ++n) {
    auto& next = rows_[n + 1];
    next.assign(n + 2, mpz_class(0));
    for (unsigned k = 1; k <= n + 1; ++k) {
      next[k] = rows_[n][k - 1];
      if (k <= n) next[k] -= mpz_class(n) * rows_[n][k];
    }
  }
}

const mpz_class& StirlingTable::operator()(unsigned n, unsigned k) const {
  if (k > n) throw IndexError("stirling_first: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  if (n > n_max_) {
    throw IndexError("stirling_first: n=" + std::to_string(n) + " beyond table size " + std::to_string(n_max_));
  }
  return rows_[n][k];
}

mpz_class stirling_first(unsigned n, unsigned k) {
  if (k > n) throw IndexError("stirling_first: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
  return StirlingTable(n)(n, k);
}

BellArguments BellArguments::factorial_over_successor(unsigned l_max) {
  std::vector<mpq_class> values;
  values.reserve(l_max);
  mpz_class fact = 1;
  for (unsigned l = 1; l <= l_max; ++l) {
    fact *= l;
    mpq_class x(fact, mpz_class(l + 1));
    x.canonicalize();
    values.push_back(x);
  }
  return BellArguments(std::move(values));
}

BellArguments::BellArguments(std::vector<mpq_class> values) : values_(std::move(values)) {}

const mpq_class& BellArguments::operator()(unsigned l) const {
  if (l == 0 || l > values_.size()) {
    throw IndexError("Bell argument index " + std::to_string(l) + " outside 1.." + std::to_string(values_.size()));
  }
  return values_[l - 1];
}

BellTable::BellTable(const BellArguments& args, unsigned j_max) : j_max_(j_max), rows_(j_max + 1) {
  if (j_max > args.l_max()) throw IndexError("BellTable: not enough arguments for j_max");
  std::vector<std::vector<mpz_class>> binom(j_max + 1);
  for (unsigned n = 0; n <= j_max; ++n) {
    binom[n].assign(n + 1, mpz_class(1));
    for (unsigned k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  rows_[0] = {mpq_class(1)};
  for (unsigned j = 1; j <= j_max; ++j) {
    rows_[j].assign(j + 1, mpq_class(0));
    for (unsigned p = 1; p <= j; ++p) {
      mpq_class sum = 0;
      for (unsigned i = 1; i <= j - p + 1; ++i) {
        const mpq_class& prev = rows_[j - i][p - 1];
        if (prev == 0) continue;
        sum += mpq_class(binom[j - 1][i - 1]) * args(i) * prev;
      }
      rows_[j][p] = sum;
    }
  }
}

const mpq_class& BellTable::operator()(unsigned j, unsigned p) const {
  if (p > j) throw IndexError("bell_partial: p=" + std::to_string(p) + " exceeds j=" + std::to_string(j));
  if (j > j_max_) throw IndexError("bell_partial: j=" + std::to_string(j) + " beyond table size");
  return rows_[j][p];
}

mpq_class bell_partial(unsigned j, unsigned p, const BellArguments& args) {
  if (p < 1 || p > j) {
    throw IndexError("bell_partial: need 1 <= p <= j, got j=" + std::to_string(j) + ", p=" + std::to_string(p));
  }
  return BellTable(args, j)(j, p);
}

DCoefficientTable::DCoefficientTable(unsigned j_max)
    : j_max_(j_max),
      bell_(BellArguments::factorial_over_successor(j_max), j_max),
      weights_(j_max + 1),
      denominators_(j_max + 1),
      factorials_(j_max + 1) {
  factorials_[0] = 1;
  for (unsigned j = 1; j <= j_max; ++j) factorials_[j] = factorials_[j - 1] * j;
  for (unsigned j = 1; j <= j_max; ++j) {
    mpz_class den = 1;
    for (unsigned p = 1; p <= j; ++p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), bell_(j, p).get_den_mpz_t());
    denominators_[j] = den;
    weights_[j].assign(j + 1, mpz_class(0));
    for (unsigned p = 1; p <= j; ++p) {
      const mpq_class& b = bell_(j, p);
      weights_[j][p] = b.get_num() * (den / b.get_den());
    }
  }
}

mpq_class DCoefficientTable::exact(const mpq_class& r, unsigned j) const {
  if (r <= 0) throw DomainError("d_coefficient: r must be positive");
  if (j > j_max_) throw IndexError("d_coefficient: j=" + std::to_string(j) + " beyond table size");
  if (j == 0) return mpq_class(1);
  const mpz_class& P = r.get_num();
  const mpz_class& Q = r.get_den();

  std::vector<mpz_class> q_pow(j + 1);
  q_pow[0] = 1;
  for (unsigned i = 1; i <= j; ++i) q_pow[i] = q_pow[i - 1] * Q;

  // sum_p B_{j,p} (r-1)(r-2)...(r-p), scaled by D_j Q^j
  mpz_class acc = 0;
  mpz_class falling = 1;
  for (unsigned p = 1; p <= j; ++p) {
    falling *= P - mpz_class(p) * Q;
    if (falling == 0) break;
    acc += weights_[j][p] * falling * q_pow[j - p];
  }
  if (acc == 0) return mpq_class(0);
  // rising factorial r(r+1)...(r+j-1), scaled by Q^j
  mpz_class rising = 1;
  for (unsigned i = 0; i < j; ++i) rising *= P + mpz_class(i) * Q;

  mpq_class result(acc * rising, denominators_[j] * q_pow[j] * q_pow[j] * factorials_[j]);
  result.canonicalize();
  return result;
}

Real DCoefficientTable::value(const mpq_class& r, unsigned j, const PrecisionConfig& config) const {
  return Real(exact(r, j), config.mantissa_bits());
}

Real d_coefficient(const mpq_class& r, unsigned j, const PrecisionConfig& config) {
  return DCoefficientTable(j).value(r, j, config);
}

}  // namespace borelsum
