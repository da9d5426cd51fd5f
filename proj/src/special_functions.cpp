#include "borelsum/special_functions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

constexpr unsigned kTerms = 256;
constexpr unsigned kGuardBits = 24;

// B_{2k} / (2k (2k-1)) for k = 1..kTerms, from the tangent numbers.
const std::vector<mpq_class>& stirling_coefficients() {
  static const std::vector<mpq_class> table = [] {
    std::vector<mpz_class> t(kTerms + 1);
    t[1] = 1;
    for (unsigned k = 2; k <= kTerms; ++k) t[k] = (k - 1) * t[k - 1];
    for (unsigned k = 2; k <= kTerms; ++k) {
      for (unsigned j = k; j <= kTerms; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    std::vector<mpq_class> c(kTerms + 1);
    for (unsigned k = 1; k <= kTerms; ++k) {
      mpz_class p4;
      mpz_ui_pow_ui(p4.get_mpz_t(), 2, 2 * k);
      mpq_class b(mpz_class(2 * k) * t[k], p4 * (p4 - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      c[k] = b / mpz_class(static_cast<unsigned long>(2 * k) * (2 * k - 1));
    }
    return c;
  }();
  return table;
}

// Modulus above which the truncated Stirling series reaches 2^-bits.
double stirling_radius(unsigned bits) {
  double by_minimum_term = 0.12 * bits + 10.0;
  double by_table_length = std::exp((1730.0 + 0.6932 * bits) / (2.0 * kTerms - 1.0)) + 1.0;
  return std::max(by_minimum_term, by_table_length);
}

bool is_nonpositive_integer(const Complex& z) {
  return z.imag().is_zero() && z.real().is_integer() && z.real() <= 0L;
}

Complex stirling_series(const Complex& w, unsigned bits) {
  const auto& coeff = stirling_coefficients();
  Real half_log_two_pi = log(2 * Real::pi(bits)) / 2;
  Complex result = (w - Real(0.5, bits)) * log(w) - w + half_log_two_pi;
  Complex inv = Complex(Real(1L, bits), Real(0L, bits)) / w;
  Complex inv2 = inv * inv;
  Complex power = inv;
  Real threshold = ldexp(abs(result) + Real(1L, bits), -static_cast<long>(bits));
  for (unsigned k = 1; k <= kTerms; ++k) {
    Complex term = power * Real(coeff[k], bits);
    result += term;
    if (abs(term) < threshold) break;
    power *= inv2;
  }
  return result;
}

}  // namespace

unsigned stirling_series_terms() { return kTerms; }

Complex log_gamma(const Complex& z, const PrecisionConfig& config) {
  z.ensure_finite("log_gamma");
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer " + z.real().to_string(6));
  }
  const unsigned bits = config.mantissa_bits();
  const unsigned work = bits + kGuardBits;
  Complex w(z.real().with_precision(work), z.imag().with_precision(work));
  const double radius = stirling_radius(work);

  long shift = 0;
  const double re = w.real().to_double();
  if (!(re > 0.0 && abs(w).to_double() >= radius)) {
    shift = std::max(0L, static_cast<long>(std::ceil(radius - re)));
  }
  Complex correction = Complex::zero(work);
  for (long i = 0; i < shift; ++i) correction += log(w + Real(i, work));

  Complex shifted = w + Real(shift, work);
  Complex result = stirling_series(shifted, work) - correction;
  return Complex(result.real().with_precision(bits), result.imag().with_precision(bits));
}

Real log_gamma(const Real& x, const PrecisionConfig& config) {
  if (!(x > 0L)) throw DomainError("log_gamma: real argument must be positive");
  return log_gamma(Complex(x), config).real();
}

Real reciprocal_gamma(const Real& x, const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  if (x.is_integer() && x <= 0L) return Real(0L, bits);
  PrecisionConfig work(std::min(bits + kGuardBits, PrecisionConfig::kMaxBits), config.default_tolerance());
  Real xw = x.with_precision(work.mantissa_bits());
  if (x > 0L) return exp(-log_gamma(xw, work)).with_precision(bits);
  // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
  Real pi = Real::pi(work.mantissa_bits());
  Real value = exp(log_gamma(1L - xw, work)) * sin(pi * xw) / pi;
  return value.with_precision(bits);
}

Complex gamma_ratio(const Complex& z, unsigned long n, const Real& s, const PrecisionConfig& config) {
  if (s.sign() < 0 || (s.is_zero() && n == 0)) {
    throw DomainError("gamma_ratio: requires s > 0, or s = 0 with n >= 1");
  }
  const unsigned bits = config.mantissa_bits();
  PrecisionConfig work(std::min(bits + kGuardBits, PrecisionConfig::kMaxBits), config.default_tolerance());
  Real sn = s.with_precision(work.mantissa_bits()) + Real(n, work.mantissa_bits());
  Complex total = log_gamma(z, work) + Complex(log_gamma(sn, work)) - log_gamma(z + sn, work);
  Complex value = exp(total);
  return Complex(value.real().with_precision(bits), value.imag().with_precision(bits));
}

}  // namespace borelsum
