#include "borelsum/ramified_summation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "borelsum/combinatorics.hpp"
#include "borelsum/errors.hpp"
#include "borelsum/special_functions.hpp"
#include "gamma_kernel.hpp"

namespace borelsum {

namespace {

Complex projected(const RamifiedPoint& z, const char* who) {
  Complex zp = z.projection();
  if (!(zp.real() > 0L)) {
    throw DomainError(std::string(who) + ": requires Re z' > 0 for the projected point z'");
  }
  return zp;
}

}  // namespace

SummationResult branch_sum(const FormalSeries& f, const Real& lambda, const RamifiedPoint& z, std::size_t N,
                           const PrecisionConfig& config) {
  const unsigned m = f.m();
  const unsigned bits = config.mantissa_bits();
  f.require(m * (N + 1), "branch_sum");
  Complex zp = projected(z, "branch_sum");
  BranchDecomposition parts = branch_split(f);

  SummationResult result;
  result.method = Method::branch;
  result.N = N;
  Complex total = parts.constant;
  Real heuristic(0L, bits);
  bool heuristic_complete = true;
  Real abs_z = z.modulus();
  for (unsigned l = 1; l <= m; ++l) {
    const FormalSeries& branch = parts.branches[l - 1];
    std::size_t depth = std::min(N + 2, branch.max_index());
    FactorialExpansion e = FactorialExpansion::from_series(branch, lambda, depth, config);
    SummationResult s = factorial_series_sum(e, zp, N, config);
    total += power(z, static_cast<long>(m - l), m) * s.estimate;
    if (s.heuristic_error) {
      heuristic += pow(abs_z, Real(static_cast<long>(m - l), bits) / static_cast<long>(m)) * *s.heuristic_error;
    } else {
      heuristic_complete = false;
    }
    result.diagnostics.coefficient_condition =
        std::max(result.diagnostics.coefficient_condition, s.diagnostics.coefficient_condition);
    result.diagnostics.divergence_suspected |= s.diagnostics.divergence_suspected;
  }
  result.estimate = total;
  if (heuristic_complete) result.heuristic_error = heuristic;
  flag_precision_loss(result.diagnostics, config);
  return result;
}

GeneralizedCoefficients generalized_coefficients(const FormalSeries& f, std::size_t n_max,
                                                 const PrecisionConfig& config) {
  f.require(n_max, "generalized_coefficients");
  const unsigned m = f.m();
  const unsigned bits = config.mantissa_bits();
  const unsigned j_max = n_max > 1 ? static_cast<unsigned>((n_max - 1) / m) : 0;
  DCoefficientTable table(j_max);

  GeneralizedCoefficients out;
  out.d.assign(n_max + 1, Complex::zero(bits));
  out.condition.assign(n_max + 1, 1.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Complex sum = f[n];
    Real magnitude = abs(f[n]);
    for (std::size_t j = 1; j * m < n; ++j) {
      const std::size_t l = n - j * m;
      if (f[l].is_zero()) continue;
      Real d = table.value(mpq_class(static_cast<unsigned long>(l), m), static_cast<unsigned>(j), config);
      if (d.is_zero()) continue;
      Complex part = f[l] * d;
      magnitude += abs(part);
      sum += part;
    }
    Real size = abs(sum);
    if (!size.is_zero()) out.condition[n] = (magnitude / size).to_double();
    else if (!magnitude.is_zero()) out.condition[n] = std::numeric_limits<double>::infinity();
    Real rg = reciprocal_gamma(Real(static_cast<long>(n), bits) / static_cast<long>(m), config);
    out.d[n] = sum * rg;
  }
  return out;
}

GeneralizedCoefficients generalized_coefficients(const FormalSeries& f, const PrecisionConfig& config) {
  return generalized_coefficients(f, f.max_index(), config);
}

SummationResult generalized_factorial_sum(const FormalSeries& f, const Real& lambda, const RamifiedPoint& z,
                                          std::size_t N, const PrecisionConfig& config) {
  f.require(N, "generalized_factorial_sum");
  const unsigned m = f.m();
  const unsigned bits = config.mantissa_bits();
  Complex zp = projected(z, "generalized_factorial_sum");
  const std::size_t depth = std::min(N + 1, f.max_index());
  FormalSeries scaled = scale(f, lambda);
  GeneralizedCoefficients g = generalized_coefficients(scaled, depth, config);
  detail::GammaKernel kernel(zp * lambda, config);

  auto term = [&](std::size_t n) {
    return g.d[n] * kernel(Real(static_cast<long>(n), bits) / static_cast<long>(m)) * lambda;
  };

  SummationResult result;
  result.method = Method::generalized;
  result.N = N;
  Complex total = f[0];
  std::vector<Real> magnitudes;
  for (std::size_t n = 1; n <= N; ++n) {
    if (g.d[n].is_zero()) {
      magnitudes.push_back(Real(0L, bits));
      continue;
    }
    Complex t = term(n);
    magnitudes.push_back(abs(t));
    total += t;
    result.diagnostics.coefficient_condition = std::max(result.diagnostics.coefficient_condition, g.condition[n]);
  }
  result.estimate = total;
  if (depth > N) {
    result.heuristic_error = abs(term(N + 1));
    result.diagnostics.coefficient_condition = std::max(result.diagnostics.coefficient_condition, g.condition[N + 1]);
  }
  result.diagnostics.divergence_suspected = terms_suggest_divergence(magnitudes, m);
  flag_precision_loss(result.diagnostics, config);
  return result;
}

SummationResult rotated_generalized_sum(const FormalSeries& f, const Real& theta, const Real& lambda,
                                        const RamifiedPoint& z, std::size_t N, const PrecisionConfig& config) {
  return generalized_factorial_sum(rotate(f, theta), lambda, z.rotated(theta), N, config);
}

SummationResult least_term_sum_ramified(const FormalSeries& f, const Real& r, const RamifiedPoint& z,
                                        const PrecisionConfig& config,
                                        const std::optional<LeastTermConstants>& constants) {
  const unsigned m = f.m();
  const unsigned bits = config.mantissa_bits();
  Complex zp = z.projection();
  const std::size_t n = least_term_index(r, zp);
  f.require(m * n + m, "least_term_sum_ramified");

  SummationResult result;
  result.method = Method::least_term;
  result.N = m * n;
  result.estimate = partial_sum(f, z, m * n);

  if (zp.real() > 0L) {
    Real largest(0L, bits);
    for (unsigned l = 1; l <= m; ++l) largest = max(largest, abs(f[l + m * n]));
    Real spread(0L, bits);
    for (unsigned i = 0; i < m; ++i) {
      spread += pow(z.modulus(), Real(static_cast<long>(i), bits) / static_cast<long>(m));
    }
    result.heuristic_error = largest * spread / (pow(z.modulus(), static_cast<long>(n)) * zp.real());
  }
  if (constants) result.rigorous_bound = r_as_ramified(r, constants->C, constants->B, n, z, m, config);
  return result;
}

Real r_as_ramified(const Real& r, const Real& C, const Real& B, std::size_t n, const RamifiedPoint& z, unsigned m,
                   const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  Complex zp = z.projection();
  if (!(zp.real() > B)) {
    throw DomainError("r_as_ramified: requires Re z' > B (Re z' = " + zp.real().to_string(8) + ")");
  }
  if (!(r > 0L)) throw DomainError("r_as_ramified: r must be positive");
  Real spread(0L, bits);
  for (unsigned i = 0; i < m; ++i) spread += pow(z.modulus(), Real(static_cast<long>(i), bits) / static_cast<long>(m));
  const long nn = static_cast<long>(n);
  Real log_value = log(C) + B * r + log_gamma(Real(nn + 1, bits), config) - log(r) * nn -
                   log(z.modulus()) * nn - log(zp.real() - B);
  return (exp(log_value) * spread).with_precision(bits);
}

}  // namespace borelsum
