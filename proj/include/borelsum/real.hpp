#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace borelsum {

// Owning MPFR float. Each value carries its own precision; binary operations
// round to the larger precision of their operands.
class Real {
 public:
  Real();
  template <std::signed_integral T>
  Real(T value, unsigned bits) : Real(bits, Tag{}) {
    mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
  }
  template <std::unsigned_integral T>
  Real(T value, unsigned bits) : Real(bits, Tag{}) {
    mpfr_set_ui(v_, static_cast<unsigned long>(value), MPFR_RNDN);
  }
  Real(double value, unsigned bits);
  Real(const mpz_class& value, unsigned bits);
  Real(const mpq_class& value, unsigned bits);
  // Throws ParseError unless the whole text is a finite decimal number.
  static Real parse(std::string_view text, unsigned bits);
  static Real pi(unsigned bits);
  static Real ln2(unsigned bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  // Same value rounded to another precision.
  Real with_precision(unsigned bits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }
  // Scientific notation with `digits` significant digits; 0 means enough to round-trip.
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  template <std::integral T>
  Real& operator+=(T o) { return add_si(static_cast<long>(o)); }
  template <std::integral T>
  Real& operator-=(T o) { return add_si(-static_cast<long>(o)); }
  template <std::integral T>
  Real& operator*=(T o) { return mul_si(static_cast<long>(o)); }
  template <std::integral T>
  Real& operator/=(T o) { return div_si(static_cast<long>(o)); }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  template <std::integral T>
  friend Real operator+(Real a, T b) { return a.add_si(static_cast<long>(b)); }
  template <std::integral T>
  friend Real operator-(Real a, T b) { return a.add_si(-static_cast<long>(b)); }
  template <std::integral T>
  friend Real operator*(Real a, T b) { return a.mul_si(static_cast<long>(b)); }
  template <std::integral T>
  friend Real operator/(Real a, T b) { return a.div_si(static_cast<long>(b)); }
  template <std::integral T>
  friend Real operator+(T a, Real b) { return b.add_si(static_cast<long>(a)); }
  template <std::integral T>
  friend Real operator-(T a, Real b) { return (-b).add_si(static_cast<long>(a)); }
  template <std::integral T>
  friend Real operator*(T a, Real b) { return b.mul_si(static_cast<long>(a)); }
  template <std::integral T>
  friend Real operator/(T a, const Real& b) { return Real(static_cast<long>(a), b.precision()) / b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    return order(mpfr_unordered_p(a.v_, b.v_) != 0, mpfr_cmp(a.v_, b.v_));
  }
  template <std::integral T>
  friend bool operator==(const Real& a, T b) { return mpfr_cmp_si(a.v_, static_cast<long>(b)) == 0; }
  template <std::integral T>
  friend std::partial_ordering operator<=>(const Real& a, T b) {
    return order(mpfr_nan_p(a.v_) != 0, mpfr_cmp_si(a.v_, static_cast<long>(b)));
  }
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b) {
    return order(mpfr_nan_p(a.v_) != 0 || b != b, mpfr_cmp_d(a.v_, b));
  }

 private:
  struct Tag {};
  Real(unsigned bits, Tag);
  Real& add_si(long o);
  Real& mul_si(long o);
  Real& div_si(long o);
  static std::partial_ordering order(bool unordered, int cmp) {
    if (unordered) return std::partial_ordering::unordered;
    return cmp < 0 ? std::partial_ordering::less
                   : (cmp > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asinh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

}  // namespace borelsum
