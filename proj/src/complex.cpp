#include "borelsum/complex.hpp"

#include <algorithm>
#include <ostream>

#include "borelsum/errors.hpp"

namespace borelsum {

Complex Complex::polar(const Real& modulus, const Real& argument) {
  return Complex(modulus * cos(argument), modulus * sin(argument));
}

unsigned Complex::precision() const { return std::max(re_.precision(), im_.precision()); }

const Complex& Complex::ensure_finite(const char* what) const {
  if (!is_finite()) throw DomainError(std::string(what) + ": non-finite complex value");
  return *this;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / d;
  im_ = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << '(' << z.real() << ", " << z.imag() << ')';
}

Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }
Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }
Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }
Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.real()), z.imag()); }

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real t = sqrt((r + abs(z.real())) / 2);
  if (z.real() >= 0L) return Complex(t, z.imag() / (2 * t));
  Real u = abs(z.imag()) / (2 * t);
  return Complex(u, z.imag().sign() < 0 ? -t : t);
}

Complex pow(const Complex& z, const Real& p) {
  if (z.is_zero()) return Complex::zero(z.precision());
  return exp(log(z) * p);
}

Complex expi(const Real& t) { return Complex(cos(t), sin(t)); }

}  // namespace borelsum
