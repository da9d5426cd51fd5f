#pragma once

#include <iosfwd>
#include <string>

#include "borelsum/real.hpp"

namespace borelsum {

// Complex number over Real; finite by contract, checked by ensure_finite().
class Complex {
 public:
  Complex() = default;
  explicit Complex(const Real& re) : re_(re), im_(0L, re.precision()) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, unsigned bits) : re_(re, bits), im_(im, bits) {}
  static Complex zero(unsigned bits) { return Complex(Real(0L, bits), Real(0L, bits)); }
  static Complex polar(const Real& modulus, const Real& argument);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  unsigned precision() const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  // Throws DomainError naming `what` if a component is NaN or infinite.
  const Complex& ensure_finite(const char* what) const;

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& a, Complex b) { return b *= a; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator+(Complex a, const Real& b) {
    a.re_ += b;
    return a;
  }
  friend Complex operator-(Complex a, const Real& b) {
    a.re_ -= b;
    return a;
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
// Principal branch, argument in (-pi, pi].
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
// exp(p * log z), principal branch.
Complex pow(const Complex& z, const Real& p);
// e^{i t}
Complex expi(const Real& t);

}  // namespace borelsum
