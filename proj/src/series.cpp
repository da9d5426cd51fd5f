#include "borelsum/series.hpp"

#include <algorithm>
#include <string>

#include "borelsum/errors.hpp"

namespace borelsum {

FormalSeries::FormalSeries(unsigned m, std::vector<Complex> coefficients)
    : m_(m), coefficients_(std::move(coefficients)) {
  if (m_ == 0) throw DomainError("FormalSeries: ramification order m must be positive");
  if (coefficients_.empty()) throw DomainError("FormalSeries: coefficient list is empty");
  for (const auto& c : coefficients_) c.ensure_finite("FormalSeries coefficient");
}

const Complex& FormalSeries::operator[](std::size_t n) const {
  require(n, "FormalSeries");
  return coefficients_[n];
}

void FormalSeries::require(std::size_t n, const char* who) const {
  if (n > max_index()) {
    throw IndexError(std::string(who) + ": needs coefficient a_" + std::to_string(n) + " but only a_0..a_" +
                     std::to_string(max_index()) + " are stored");
  }
}

unsigned FormalSeries::precision() const {
  unsigned bits = 0;
  for (const auto& c : coefficients_) bits = std::max(bits, c.precision());
  return bits;
}

RamifiedPoint::RamifiedPoint(Real modulus, Real argument)
    : modulus_(std::move(modulus)), argument_(std::move(argument)) {
  if (!(modulus_ > 0L) || !modulus_.is_finite()) throw DomainError("RamifiedPoint: modulus must be positive");
  if (!argument_.is_finite()) throw DomainError("RamifiedPoint: argument must be finite");
}

Real RamifiedPoint::projected_argument() const {
  const unsigned bits = argument_.precision();
  Real pi = Real::pi(bits);
  Real two_pi = 2 * pi;
  Real r = argument_ - two_pi * floor(argument_ / two_pi + Real(0.5, bits));
  // arguments within rounding of an odd multiple of pi map to +pi
  Real slack = ldexp(max(Real(1L, bits), abs(argument_)), 8 - static_cast<long>(bits));
  if (r <= slack - pi) r += two_pi;
  if (r > pi + slack) r -= two_pi;
  return r;
}

Complex RamifiedPoint::projection() const { return Complex::polar(modulus_, projected_argument()); }

bool RamifiedPoint::same_point(const RamifiedPoint& other, unsigned m, const Real& tolerance) const {
  if (abs(modulus_ - other.modulus_) > tolerance) return false;
  Real period = 2 * Real::pi(argument_.precision()) * static_cast<long>(m);
  Real diff = argument_ - other.argument_;
  Real r = diff - period * floor(diff / period + Real(0.5, diff.precision()));
  return abs(r) <= tolerance;
}

Complex power(const RamifiedPoint& z, long k, unsigned m) {
  Real exponent = Real(k, z.modulus().precision()) / static_cast<long>(m);
  return Complex::polar(pow(z.modulus(), exponent), exponent * z.argument());
}

FormalSeries rotate(const FormalSeries& f, const Real& theta) {
  std::vector<Complex> out;
  out.reserve(f.coefficients().size());
  for (std::size_t n = 0; n <= f.max_index(); ++n) {
    Real phase = theta * static_cast<long>(n) / static_cast<long>(f.m());
    out.push_back(f[n] * expi(phase));
  }
  return FormalSeries(f.m(), std::move(out));
}

FormalSeries scale(const FormalSeries& f, const Real& lambda) {
  if (!(lambda > 0L)) throw DomainError("scale: lambda must be positive");
  Real log_lambda = log(lambda);
  const long m = f.m();
  std::vector<Complex> out;
  out.reserve(f.coefficients().size());
  for (std::size_t n = 0; n <= f.max_index(); ++n) {
    long num = static_cast<long>(n) - m;
    out.push_back(f[n] * exp(log_lambda * num / m));
  }
  return FormalSeries(f.m(), std::move(out));
}

BranchDecomposition branch_split(const FormalSeries& f) {
  const std::size_t m = f.m();
  const unsigned bits = f.precision();
  BranchDecomposition parts{f[0], {}};
  for (std::size_t l = 1; l <= m; ++l) {
    std::vector<Complex> coeffs{Complex::zero(bits)};
    for (std::size_t n = l; n <= f.max_index(); n += m) coeffs.push_back(f[n]);
    parts.branches.emplace_back(1, std::move(coeffs));
  }
  return parts;
}

Complex reassembled_partial_sum(const BranchDecomposition& parts, const RamifiedPoint& z, std::size_t N) {
  const unsigned m = static_cast<unsigned>(parts.branches.size());
  Complex total = parts.constant;
  Complex inv_proj = Complex(Real(1L, z.modulus().precision())) / z.projection();
  for (unsigned l = 1; l <= m; ++l) {
    const FormalSeries& branch = parts.branches[l - 1];
    Complex inner = Complex::zero(z.modulus().precision());
    Complex zp = inv_proj;
    for (std::size_t j = 1; l + m * (j - 1) <= N; ++j) {
      inner += branch[j] * zp;
      zp *= inv_proj;
    }
    total += power(z, static_cast<long>(m - l), m) * inner;
  }
  return total;
}

Complex partial_sum(const FormalSeries& f, const RamifiedPoint& z, std::size_t N) {
  f.require(N, "partial_sum");
  Complex total = f[0];
  for (std::size_t k = 1; k <= N; ++k) total += f[k] * power(z, -static_cast<long>(k), f.m());
  return total;
}

GrowthEnvelope::GrowthEnvelope(Real A_, Real B_, Real width_, Domain domain_)
    : A(std::move(A_)), B(std::move(B_)), width(std::move(width_)), domain(domain_) {
  if (!(A > 0L) || !(B > 0L) || !(width > 0L)) {
    throw DomainError("GrowthEnvelope: A, B and r (or lambda) must be positive");
  }
}

}  // namespace borelsum
