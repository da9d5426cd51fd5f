#include "borelsum/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

unsigned joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real apply(Unary f, const Real& x) {
  Real r(0L, x.precision());
  f(r.get(), x.get(), kRnd);
  return r;
}

}  // namespace

Real::Real() : Real(53u, Tag{}) { mpfr_set_zero(v_, 1); }

Real::Real(unsigned bits, Tag) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }

Real::Real(double value, unsigned bits) : Real(bits, Tag{}) { mpfr_set_d(v_, value, kRnd); }

Real::Real(const mpz_class& value, unsigned bits) : Real(bits, Tag{}) {
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& value, unsigned bits) : Real(bits, Tag{}) {
  mpfr_set_q(v_, value.get_mpq_t(), kRnd);
}

Real Real::parse(std::string_view text, unsigned bits) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\n");
  auto last = s.find_last_not_of(" \t\n");
  if (first == std::string::npos) throw ParseError("empty number");
  s = s.substr(first, last - first + 1);
  Real r(bits, Tag{});
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, kRnd);
  if (end != s.c_str() + s.size()) {
    throw ParseError("not a decimal number: '" + std::string(text) + "'");
  }
  if (!r.is_finite()) throw ParseError("non-finite number: '" + std::string(text) + "'");
  return r;
}

Real Real::pi(unsigned bits) {
  Real r(bits, Tag{});
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

Real Real::ln2(unsigned bits) {
  Real r(bits, Tag{});
  mpfr_const_log2(r.v_, kRnd);
  return r;
}

Real::Real(const Real& other) : Real(other.precision(), Tag{}) { mpfr_set(v_, other.v_, kRnd); }

Real::Real(Real&& other) noexcept : Real(other.precision(), Tag{}) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(unsigned bits) const {
  Real r(bits, Tag{});
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::operator-() const {
  Real r(precision(), Tag{});
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

#define BORELSUM_COMPOUND(op, fn)                       \
  Real& Real::operator op(const Real& o) {              \
    if (o.precision() > precision()) {                  \
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), kRnd);   \
    }                                                   \
    fn(v_, v_, o.v_, kRnd);                             \
    return *this;                                       \
  }
BORELSUM_COMPOUND(+=, mpfr_add)
BORELSUM_COMPOUND(-=, mpfr_sub)
BORELSUM_COMPOUND(*=, mpfr_mul)
BORELSUM_COMPOUND(/=, mpfr_div)
#undef BORELSUM_COMPOUND

Real& Real::add_si(long o) {
  mpfr_add_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::mul_si(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}

Real& Real::div_si(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

#define BORELSUM_BINARY(op, fn)                      \
  Real operator op(const Real& a, const Real& b) {   \
    Real r(joint(a, b), Real::Tag{});                \
    fn(r.v_, a.v_, b.v_, kRnd);                      \
    return r;                                        \
  }
BORELSUM_BINARY(+, mpfr_add)
BORELSUM_BINARY(-, mpfr_sub)
BORELSUM_BINARY(*, mpfr_mul)
BORELSUM_BINARY(/, mpfr_div)
#undef BORELSUM_BINARY

std::ostream& operator<<(std::ostream& os, const Real& x) {
  auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 0);
}

Real abs(const Real& x) { return apply(mpfr_abs, x); }
Real sqrt(const Real& x) { return apply(mpfr_sqrt, x); }
Real cbrt(const Real& x) { return apply(mpfr_cbrt, x); }
Real exp(const Real& x) { return apply(mpfr_exp, x); }
Real expm1(const Real& x) { return apply(mpfr_expm1, x); }
Real log(const Real& x) { return apply(mpfr_log, x); }
Real log1p(const Real& x) { return apply(mpfr_log1p, x); }
Real sin(const Real& x) { return apply(mpfr_sin, x); }
Real cos(const Real& x) { return apply(mpfr_cos, x); }
Real sinh(const Real& x) { return apply(mpfr_sinh, x); }
Real cosh(const Real& x) { return apply(mpfr_cosh, x); }
Real tanh(const Real& x) { return apply(mpfr_tanh, x); }
Real asinh(const Real& x) { return apply(mpfr_asinh, x); }

Real floor(const Real& x) {
  Real r(0L, x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(0L, joint(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(0L, joint(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(0L, joint(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(0L, x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(0L, x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

}  // namespace borelsum
