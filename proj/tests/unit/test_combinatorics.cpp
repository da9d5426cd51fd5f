#include <doctest.h>

#include "borelsum/combinatorics.hpp"
#include "borelsum/errors.hpp"
#include "borelsum/special_functions.hpp"
#include "oracles/oracles.hpp"

using namespace borelsum;

namespace {

const PrecisionConfig cfg(256);
constexpr unsigned kBits = 256;

mpz_class power(long x, unsigned k) {
  mpz_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

mpq_class x_l(unsigned l) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= l; ++i) f *= i;
  mpq_class q(f, mpz_class(l + 1));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("stirling_first small values") {
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(3, 2) == -3);
  for (unsigned n = 0; n <= 20; ++n) CHECK(stirling_first(n, n) == 1);
  CHECK_THROWS_AS(stirling_first(2, 3), IndexError);
}

TEST_CASE("stirling table invariants") {
  StirlingTable t(40);
  for (unsigned n = 1; n <= 40; ++n) CHECK(t(n, 0) == 0);
  for (unsigned n = 1; n < 40; ++n) {
    for (unsigned k = 1; k <= n; ++k) CHECK(t(n + 1, k) == t(n, k - 1) - mpz_class(n) * t(n, k));
  }
  CHECK_THROWS_AS(t(41, 1), IndexError);
}

TEST_CASE("stirling numbers reproduce the falling product polynomial") {
  StirlingTable t(12);
  for (unsigned n = 0; n <= 12; ++n) {
    auto brute = oracles::falling_product_coefficients(n);
    for (unsigned k = 0; k <= n; ++k) CHECK(t(n, k) == brute[k]);
    for (long x = -5; x <= 5; ++x) {
      mpz_class lhs = 0;
      for (unsigned k = 0; k <= n; ++k) lhs += t(n, k) * power(x, k);
      mpz_class rhs = 1;
      for (unsigned k = 0; k < n; ++k) rhs *= x - static_cast<long>(k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Bell arguments") {
  auto args = BellArguments::factorial_over_successor(10);
  CHECK(args(1) == mpq_class(1, 2));
  CHECK(args(2) == mpq_class(2, 3));
  for (unsigned l = 1; l <= 10; ++l) CHECK(args(l) == x_l(l));
  CHECK_THROWS_AS(args(0), IndexError);
  CHECK_THROWS_AS(args(11), IndexError);
}

TEST_CASE("bell_partial worked values") {
  auto args = BellArguments::factorial_over_successor(12);
  CHECK(bell_partial(1, 1, args) == mpq_class(1, 2));
  for (unsigned j = 1; j <= 12; ++j) {
    mpq_class half_power = 1;
    for (unsigned i = 0; i < j; ++i) half_power /= 2;
    CHECK(bell_partial(j, j, args) == half_power);
    CHECK(bell_partial(j, 1, args) == args(j));
  }
  CHECK(bell_partial(3, 2, args) == 1);
  CHECK_THROWS_AS(bell_partial(3, 4, args), IndexError);
  CHECK_THROWS_AS(bell_partial(3, 0, args), IndexError);
}

TEST_CASE("Bell recurrence matches partition enumeration") {
  auto args = BellArguments::factorial_over_successor(8);
  BellTable table(args, 8);
  for (unsigned j = 1; j <= 8; ++j) {
    for (unsigned p = 1; p <= j; ++p) {
      CHECK(table(j, p) == oracles::bell_by_partitions(j, p, [&](unsigned l) { return args(l); }));
    }
  }
  // a caller-supplied sequence
  BellArguments custom({mpq_class(3), mpq_class(-1, 7), mpq_class(5, 2), mpq_class(2), mpq_class(0), mpq_class(9, 4),
                        mpq_class(1), mpq_class(-2)});
  BellTable custom_table(custom, 8);
  for (unsigned j = 1; j <= 8; ++j) {
    for (unsigned p = 1; p <= j; ++p) {
      CHECK(custom_table(j, p) == oracles::bell_by_partitions(j, p, [&](unsigned l) { return custom(l); }));
    }
  }
}

TEST_CASE("d_coefficient identities") {
  DCoefficientTable table(30);
  CHECK(table.exact(mpq_class(7, 3), 0) == 1);
  for (unsigned j = 1; j <= 30; ++j) CHECK(table.exact(mpq_class(1), j) == 0);
  mpz_class fact = 1;
  for (unsigned j = 1; j <= 30; ++j) {
    fact *= j;
    CHECK(table.exact(mpq_class(2), j) == fact);
  }
  for (auto r : {mpq_class(1, 2), mpq_class(2, 3), mpq_class(5, 4), mpq_class(7), mpq_class(11, 5)}) {
    CHECK(table.exact(r, 1) == r * (r - 1) / 2);
  }
  CHECK_THROWS_AS(table.exact(mpq_class(0), 1), DomainError);
  CHECK_THROWS_AS(table.exact(mpq_class(1, 2), 31), IndexError);
}

TEST_CASE("d_coefficient agrees with the Gamma-based closed form") {
  // sum_p B_{j,p} / Gamma(r-p) * Gamma(r+j)/j!, evaluated with floating Gamma functions
  auto args = BellArguments::factorial_over_successor(15);
  BellTable bell(args, 15);
  for (auto r : {mpq_class(1, 3), mpq_class(2, 3), mpq_class(4, 3), mpq_class(3, 2), mpq_class(5, 2)}) {
    Real rr(r, kBits);
    for (unsigned j = 1; j <= 15; ++j) {
      Real s(0L, kBits);
      for (unsigned p = 1; p <= j; ++p) s += Real(bell(j, p), kBits) * reciprocal_gamma(rr - static_cast<long>(p), cfg);
      Real fact(1L, kBits);
      for (unsigned i = 2; i <= j; ++i) fact *= static_cast<long>(i);
      Real expected = s * oracles::mpfr_gamma_value(rr + static_cast<long>(j)) / fact;
      Real got = d_coefficient(r, j, cfg);
      CHECK(abs(got - expected) <= cfg.epsilon() * 1000L * max(Real(1L, kBits), abs(expected)));
    }
  }
}

TEST_CASE("d_coefficient agrees with the power-series route") {
  for (auto r : {mpq_class(1, 2), mpq_class(2, 3), mpq_class(3, 2), mpq_class(1, 4)}) {
    DCoefficientTable table(40);
    auto ref = oracles::d_coefficients_by_power_series(Real(r, kBits), 41, kBits);
    for (unsigned j = 0; j <= 40; ++j) {
      Real got = table.value(r, j, cfg);
      CHECK(abs(got - ref[j]) <= cfg.epsilon() * 1000L * max(Real(1L, kBits), abs(ref[j])));
    }
  }
}

TEST_CASE("1/z^r expansion identity") {
  // terms decay like j^{-Re z}, so the tail past the Bell-table depth comes from the power-series route
  constexpr std::size_t kTerms = 2500;
  const PrecisionConfig low(128);
  DCoefficientTable table(10);
  for (auto r : {mpq_class(1, 2), mpq_class(2, 3), mpq_class(3, 2)}) {
    Real rr(r, 128);
    auto tail = oracles::d_coefficients_by_power_series(rr, kTerms, 128);
    for (const Complex& z : {Complex(3, 0, 128), Complex(5, 2, 128)}) {
      Complex ratio = exp(log_gamma(z, low) - log_gamma(z + rr, low));
      Complex total = Complex::zero(128);
      for (std::size_t j = 0; j < kTerms; ++j) {
        Real d = j <= 10 ? table.value(r, static_cast<unsigned>(j), low) : tail[j];
        total += ratio * d;
        ratio /= z + rr + Real(static_cast<long>(j), 128);
      }
      Complex expected = exp(-(rr * log(z)));
      CHECK(abs(total - expected) < 1e-9);
    }
  }
}
