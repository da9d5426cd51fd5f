#include "borelsum/classical_summation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "borelsum/errors.hpp"
#include "borelsum/special_functions.hpp"
#include "gamma_kernel.hpp"

namespace borelsum {

namespace {

void require_right_of(const Complex& z, const Real& B, const char* who) {
  if (!(z.real() > B)) {
    throw DomainError(std::string(who) + ": requires Re z > B (Re z = " + z.real().to_string(8) +
                      ", B = " + B.to_string(8) + ")");
  }
}

Real log_factorial(std::size_t n, const PrecisionConfig& config) {
  return log_gamma(Real(n + 1, config.mantissa_bits()), config);
}

double ratio_as_double(const Real& num, const Real& den) {
  if (den.is_zero()) return num.is_zero() ? 1.0 : std::numeric_limits<double>::infinity();
  return (num / den).to_double();
}

}  // namespace

StirlingTransform stirling_transform(const std::vector<Complex>& a, const StirlingTable& table,
                                     const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  StirlingTransform out;
  if (a.empty()) return out;
  const std::size_t N = a.size() - 1;
  if (N > table.n_max()) throw IndexError("stirling_transform: Stirling table too small");
  out.b.reserve(N + 1);
  out.condition.reserve(N + 1);

  mpz_class factorial = 1;
  std::vector<Complex> terms;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) factorial *= static_cast<unsigned long>(n);
    terms.clear();
    for (std::size_t k = 1; k <= n + 1; ++k) {
      const mpz_class& s = table(static_cast<unsigned>(n), static_cast<unsigned>(k - 1));
      if (s == 0) continue;
      Real weight(s, bits);
      if ((n - k + 1) % 2 == 1) weight = -weight;
      terms.push_back(a[k - 1] * weight);
    }
    std::vector<Real> sizes;
    sizes.reserve(terms.size());
    for (const auto& t : terms) sizes.push_back(abs(t));
    std::vector<std::size_t> order(terms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sizes[y] < sizes[x]; });

    Complex sum = Complex::zero(bits);
    Real magnitude(0L, bits);
    for (std::size_t i : order) {
      sum += terms[i];
      magnitude += sizes[i];
    }
    out.condition.push_back(ratio_as_double(magnitude, abs(sum)));
    out.b.push_back(sum / Real(factorial, bits));
  }
  return out;
}

StirlingTransform stirling_transform(const std::vector<Complex>& a, const PrecisionConfig& config) {
  const unsigned n_max = a.empty() ? 0 : static_cast<unsigned>(a.size() - 1);
  return stirling_transform(a, StirlingTable(n_max), config);
}

FactorialExpansion::FactorialExpansion(Real lambda, Complex a0, std::vector<Complex> b, std::vector<double> condition)
    : lambda_(std::move(lambda)), a0_(std::move(a0)), b_(std::move(b)), condition_(std::move(condition)) {}

double FactorialExpansion::condition(std::size_t n_max) const {
  double worst = 1.0;
  for (std::size_t n = 0; n < condition_.size() && n <= n_max; ++n) worst = std::max(worst, condition_[n]);
  return worst;
}

FactorialExpansion FactorialExpansion::from_series(const FormalSeries& f, const Real& lambda, std::size_t depth,
                                                   const PrecisionConfig& config) {
  if (f.m() != 1) throw DomainError("FactorialExpansion: series must have m = 1, use the ramified pipelines");
  if (depth == 0) throw DomainError("FactorialExpansion: depth must be positive");
  f.require(depth, "FactorialExpansion");
  FormalSeries scaled = scale(f, lambda);
  std::vector<Complex> a(scaled.coefficients().begin() + 1, scaled.coefficients().begin() + depth + 1);
  StirlingTransform t = stirling_transform(a, config);
  return FactorialExpansion(lambda.with_precision(config.mantissa_bits()), f[0], std::move(t.b),
                            std::move(t.condition));
}

FactorialExpansion FactorialExpansion::from_series(const FormalSeries& f, const Real& lambda,
                                                   const PrecisionConfig& config) {
  return from_series(f, lambda, f.max_index(), config);
}

SummationResult factorial_series_sum(const FactorialExpansion& e, const Complex& z, std::size_t N,
                                     const PrecisionConfig& config, const GrowthEnvelope* envelope) {
  if (!(z.real() > 0L)) throw DomainError("factorial_series_sum: requires Re z > 0");
  if (N >= e.b().size()) {
    throw IndexError("factorial_series_sum: truncation N=" + std::to_string(N) + " needs b_" + std::to_string(N) +
                     " but only b_0..b_" + std::to_string(e.b().size() - 1) + " are available");
  }
  const unsigned bits = config.mantissa_bits();
  detail::GammaKernel kernel(z * e.lambda(), config);

  SummationResult result;
  result.method = Method::factorial;
  result.N = N;
  result.diagnostics.coefficient_condition = e.condition(N + 1);
  flag_precision_loss(result.diagnostics, config);

  Complex sum = Complex::zero(bits);
  std::vector<Real> magnitudes;
  for (std::size_t n = 0; n <= N; ++n) {
    Complex term = e.b()[n] * kernel(Real(n + 1, bits));
    magnitudes.push_back(abs(term));
    sum += term;
  }
  result.estimate = e.a0() + sum * e.lambda();
  result.diagnostics.divergence_suspected = terms_suggest_divergence(magnitudes);

  if (N + 1 < e.b().size()) {
    // |b_{N+1}| |Gamma(lambda z)| Gamma(N+2) / (Re z |Gamma(lambda z + N + 1)|)
    Real k = abs(kernel(Real(N + 1, bits)));
    result.heuristic_error = abs(e.b()[N + 1]) * k * static_cast<long>(N + 1) / z.real();
  }
  if (envelope != nullptr) {
    result.rigorous_bound = r_fact(e.lambda(), envelope->A, envelope->B, N, z, config);
  }
  return result;
}

Real r_as(const Real& r, const Real& A, const Real& B, std::size_t n, const Complex& z,
          const PrecisionConfig& config) {
  require_right_of(z, B, "r_as");
  if (!(r > 0L)) throw DomainError("r_as: r must be positive");
  const long nn = static_cast<long>(n);
  Real log_value = log(A) + B * r + log_factorial(n, config) - log(r) * nn - log(abs(z)) * nn -
                   log(z.real() - B);
  return exp(log_value).with_precision(config.mantissa_bits());
}

Real r_fact(const Real& lambda, const Real& A, const Real& B, std::size_t N, const Complex& z,
            const PrecisionConfig& config) {
  require_right_of(z, B, "r_fact");
  const unsigned bits = config.mantissa_bits();
  Real c = lambda * B;
  Real n(N, bits);
  Real log_prefactor = log(A) - c * log(c) + (n + c + 1L) * log(n + c + 1L) - n * log(n + 1L);
  Real kernel = abs(gamma_ratio(z * lambda, N, Real(1L, bits), config));
  return (exp(log_prefactor) * kernel / (z.real() - B)).with_precision(bits);
}

Real r_fact_asymptotic(const Real& lambda, const Real& A, const Real& B, std::size_t N, const Complex& z,
                       const PrecisionConfig& config) {
  require_right_of(z, B, "r_fact_asymptotic");
  if (N == 0) throw DomainError("r_fact_asymptotic: N must be at least 1");
  const unsigned bits = config.mantissa_bits();
  Real c = lambda * B;
  Real log_abs_gamma = log_gamma(z * lambda, config).real();
  Real log_value = log(A) + c * (1L - log(c)) - (lambda * (z.real() - B) - 1L) * log(Real(N, bits)) +
                   log_abs_gamma - log(z.real() - B);
  return exp(log_value).with_precision(bits);
}

Real b_bound(const Real& lambda, const Real& A, const Real& B, std::size_t n, const PrecisionConfig& config) {
  if (n == 0) throw DomainError("b_bound: n must be at least 1");
  Real c = lambda * B;
  Real nn(n, config.mantissa_bits());
  Real log_value = log(A) + (nn + c) * log(nn + c) - c * log(c) - nn * log(nn);
  return exp(log_value).with_precision(config.mantissa_bits());
}

std::size_t least_term_index(const Real& r, const Complex& z) {
  if (!(r > 0L)) throw DomainError("least_term_index: r must be positive");
  Real v = floor(r * abs(z));
  return static_cast<std::size_t>(v.to_long_floor());
}

std::vector<BoundComparisonRow> bound_comparison_table(const Real& A, const Real& B, const Complex& z,
                                                       std::size_t n_max, const PrecisionConfig& config) {
  require_right_of(z, B, "bound_comparison_table");
  const unsigned bits = config.mantissa_bits();
  Real ln2 = Real::ln2(bits);
  Real half_pi = Real::pi(bits) / 2L;
  Real one(1L, bits);
  std::vector<BoundComparisonRow> rows;
  rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows.push_back({n, log(r_as(ln2, A, B, n, z, config)), log(r_as(half_pi, A, B, n, z, config)),
                    log(r_fact(one, A, B, n, z, config))});
  }
  return rows;
}

}  // namespace borelsum
