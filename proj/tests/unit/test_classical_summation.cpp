#include <doctest.h>

#include <cmath>

#include "borelsum/classical_summation.hpp"
#include "borelsum/errors.hpp"
#include "borelsum/oracle.hpp"
#include "borelsum/special_functions.hpp"
#include "oracles/oracles.hpp"

using namespace borelsum;

namespace {

constexpr unsigned kBits = 256;
const PrecisionConfig cfg(kBits);

Real R(long v) { return Real(v, kBits); }
Real R(double v) { return Real(v, kBits); }
Complex C(double re, double im = 0) { return Complex(re, im, kBits); }
Real eps(long factor = 10) { return cfg.epsilon() * factor; }

std::vector<Complex> unit_vector(std::size_t size, std::size_t hot) {
  std::vector<Complex> a(size, Complex::zero(kBits));
  a[hot] = C(1);
  return a;
}

FormalSeries from_tail(std::vector<Complex> tail) {
  tail.insert(tail.begin(), Complex::zero(kBits));
  return FormalSeries(1, tail);
}

Complex euler_reference(const Complex& z) {
  return laplace_quadrature(builtin_evaluator("euler", kBits), Complex::zero(kBits), R(0L), z, R(1e-25), cfg);
}

}  // namespace

TEST_CASE("stirling_transform worked examples") {
  auto t1 = stirling_transform(unit_vector(12, 0), cfg);
  REQUIRE(t1.b.size() == 12);
  CHECK(t1.b[0] == C(1));
  for (std::size_t n = 1; n < 12; ++n) CHECK(t1.b[n].is_zero());

  auto t2 = stirling_transform(unit_vector(12, 1), cfg);
  CHECK(t2.b[0].is_zero());
  for (std::size_t n = 1; n < 12; ++n) CHECK(abs(t2.b[n] - C(1) / R(static_cast<long>(n))) <= eps());

  auto euler = euler_series(5, cfg);
  std::vector<Complex> a(euler.coefficients().begin() + 1, euler.coefficients().end());
  auto t3 = stirling_transform(a, cfg);
  CHECK(abs(t3.b[0] - C(1)) <= eps());
  CHECK(abs(t3.b[1] - C(-1)) <= eps());
  CHECK(abs(t3.b[2] - C(1) / R(2L)) <= eps());
  CHECK(abs(t3.b[3] - C(-1) / R(3L)) <= eps());
}

TEST_CASE("stirling_transform matches series composition") {
  auto euler = euler_series(30, cfg);
  std::vector<Complex> a(euler.coefficients().begin() + 1, euler.coefficients().end());
  auto t = stirling_transform(a, cfg);
  auto ref = oracles::factorial_coefficients_by_composition(euler.coefficients(), 30, kBits);
  for (std::size_t n = 0; n < 30; ++n) {
    // cancellation in the alternating Stirling sums costs condition[n] ulps
    Real allowed = eps(1000) * R(t.condition[n]) * max(R(1L), abs(ref[n]));
    CHECK(abs(t.b[n] - ref[n]) <= allowed);
  }
}

TEST_CASE("stirling_transform linearity") {
  std::vector<Complex> a, b;
  for (long k = 1; k <= 20; ++k) {
    a.push_back(C(std::sin(k * 1.3), std::cos(k * 0.7)));
    b.push_back(C(1.0 / k, -0.5 * k));
  }
  Complex alpha = C(0.75, -2.0), beta = C(-1.5, 0.25);
  std::vector<Complex> combo;
  for (std::size_t i = 0; i < a.size(); ++i) combo.push_back(alpha * a[i] + beta * b[i]);
  auto ta = stirling_transform(a, cfg), tb = stirling_transform(b, cfg), tc = stirling_transform(combo, cfg);
  for (std::size_t n = 0; n < tc.b.size(); ++n) {
    Complex expected = alpha * ta.b[n] + beta * tb.b[n];
    Real scale = abs(alpha * ta.b[n]) + abs(beta * tb.b[n]) + R(1L);
    CHECK(abs(tc.b[n] - expected) <= eps() * scale * R(static_cast<long>(tc.condition[n] + 1)));
  }
}

TEST_CASE("FactorialExpansion preconditions") {
  FormalSeries ramified(2, {C(1), C(1), C(1)});
  CHECK_THROWS_AS(FactorialExpansion::from_series(ramified, R(1L), cfg), DomainError);
  auto f = from_tail({C(1), C(2)});
  CHECK_THROWS_AS(FactorialExpansion::from_series(f, R(1L), 3, cfg), IndexError);
  auto e = FactorialExpansion::from_series(f, R(1L), cfg);
  CHECK(e.b().size() == 2);
  CHECK_THROWS_AS(factorial_series_sum(e, C(2), 2, cfg), IndexError);
  CHECK_THROWS_AS(factorial_series_sum(e, C(-1), 0, cfg), DomainError);
  CHECK_THROWS_AS(factorial_series_sum(e, C(0, 3), 0, cfg), DomainError);
}

TEST_CASE("factorial_series_sum of 1/z") {
  auto e = FactorialExpansion::from_series(from_tail({C(1), C(0)}), R(1L), cfg);
  for (auto z : {C(2), C(3.5, 1), C(1.25, -4)}) {
    auto r = factorial_series_sum(e, z, 0, cfg);
    CHECK(abs(r.estimate - C(1) / z) <= eps(100));
    CHECK(r.method == Method::factorial);
    REQUIRE(r.heuristic_error.has_value());
    CHECK(*r.heuristic_error <= eps(100));
  }
}

TEST_CASE("factorial series of 1/z^2 at lambda = 1 has the closed-form remainder") {
  // sum_{n > N} 2/(n(n+1)(n+2)(n+3)) = 2/(3(N+1)(N+2)(N+3)) at z = 3
  std::vector<Complex> tail(45, Complex::zero(kBits));
  tail[1] = C(1);
  auto e = FactorialExpansion::from_series(from_tail(tail), R(1L), cfg);
  for (std::size_t N : {5u, 20u, 40u}) {
    auto r = factorial_series_sum(e, C(3), N, cfg);
    long k = static_cast<long>(N);
    Real remainder = R(2L) / (R(3L) * (k + 1) * (k + 2) * (k + 3));
    CHECK(abs(r.estimate - C(1) / R(9L) + remainder) <= eps(1000));
  }
}

TEST_CASE("terminating series are reproduced exactly once lambda accelerates convergence") {
  std::vector<Complex> tail{C(1), C(-2), C(0.5), C(3), C(-1)};
  tail.resize(70, Complex::zero(kBits));
  auto f = from_tail(tail);
  RamifiedPoint z(R(3L), R(0L));
  for (std::size_t K = 1; K <= 5; ++K) {
    std::vector<Complex> trunc(tail.begin(), tail.begin() + static_cast<long>(K));
    trunc.resize(70, Complex::zero(kBits));
    auto g = from_tail(trunc);
    Complex direct = partial_sum(g, z, K);
    auto e = FactorialExpansion::from_series(g, R(8L), cfg);
    for (std::size_t N : {50u, 60u}) {
      auto r = factorial_series_sum(e, C(3), N, cfg);
      CHECK(abs(r.estimate - direct) <= R(1e-15) * abs(direct));
    }
  }
}

TEST_CASE("Euler series against the quadrature oracle") {
  auto euler = euler_series(70, cfg);
  auto e = FactorialExpansion::from_series(euler, R(1L), cfg);
  Complex reference = euler_reference(C(3));
  CHECK(abs(reference.real() - R(0.78625122076) / 3L) < 1e-11);
  Real previous(1L, kBits);
  for (std::size_t N : {10u, 30u, 60u}) {
    auto r = factorial_series_sum(e, C(3), N, cfg);
    Real err = abs(r.estimate - reference);
    CHECK(err < previous);
    CHECK(err <= *r.heuristic_error * 2L);
    CHECK(err >= *r.heuristic_error / 2L);
    previous = err;
  }
  CHECK(previous < 1e-7);
}

TEST_CASE("r_fact bounds the Euler remainder with a sampled envelope") {
  auto g = builtin_evaluator("euler", kBits);
  auto env = sample_envelope(g, GrowthEnvelope::Domain::delta, R(1L), R(0.1), cfg);
  auto euler = euler_series(40, cfg);
  auto e = FactorialExpansion::from_series(euler, R(1L), cfg);
  Complex reference = euler_reference(C(3));
  for (std::size_t N = 0; N <= 30; ++N) {
    auto r = factorial_series_sum(e, C(3), N, cfg, &env);
    REQUIRE(r.rigorous_bound.has_value());
    CHECK(abs(r.estimate - reference) <= *r.rigorous_bound);
    CHECK(*r.rigorous_bound == r_fact(R(1L), env.A, env.B, N, C(3), cfg));
  }
  for (std::size_t n = 1; n <= 30; ++n) CHECK(abs(e.b()[n]) <= b_bound(R(1L), env.A, env.B, n, cfg));
}

TEST_CASE("r_as bounds the least-term remainder on the strip envelope") {
  auto g = builtin_evaluator("euler", kBits);
  Real r(0.9, kBits);
  auto env = sample_envelope(g, GrowthEnvelope::Domain::strip, r, R(0.1), cfg);
  auto euler = euler_series(20, cfg);
  for (double x : {3.0, 10.0}) {
    Complex z = C(x);
    std::size_t n = least_term_index(r, z);
    Complex estimate = partial_sum(euler, RamifiedPoint(R(x), R(0L)), n);
    CHECK(abs(estimate - euler_reference(z)) <= r_as(r, env.A, env.B, n, z, cfg));
  }
}

TEST_CASE("r_as") {
  CHECK(abs(r_as(R(1L), R(1L), R(1L), 0, C(2), cfg) - exp(R(1L))) <= eps());
  Real ln2 = Real::ln2(kBits);
  Real value = r_as(ln2, R(1L), R(1L), 9, C(10, 10), cfg);
  Real direct = exp(ln2) * R(362880L) / pow(ln2 * abs(C(10, 10)), 9) / R(9L);
  CHECK(abs(value - direct) <= eps(100) * direct);
  CHECK(abs(r_as(ln2, R(2L), R(1L), 9, C(10, 10), cfg) - value * 2L) <= eps(100) * value);
  CHECK_THROWS_AS(r_as(R(1L), R(1L), R(2L), 3, C(2), cfg), DomainError);
}

TEST_CASE("r_fact and its asymptotic form") {
  // lambda = 1 against the direct formula A/B^B (N+B+1)^{N+B+1}/(N+1)^N |Gamma(z)N!/Gamma(z+N+1)|/(Re z - B)
  Complex z = C(10, 10);
  Real direct = pow(R(32L), 32) / pow(R(31L), 30) * abs(gamma_ratio(z, 30, R(1L), cfg)) / R(9L);
  Real value = r_fact(R(1L), R(1L), R(1L), 30, z, cfg);
  CHECK(abs(value - direct) <= eps(1000) * direct);
  CHECK_THROWS_AS(r_fact(R(1L), R(1L), R(10L), 30, z, cfg), DomainError);

  Real ratio = r_fact(R(1L), R(1L), R(1L), 10000, C(10), cfg) / r_fact_asymptotic(R(1L), R(1L), R(1L), 10000, C(10), cfg);
  CHECK(ratio >= 0.95);
  CHECK(ratio <= 1.05);

  // prefactor A e and the N^{-8} law at z = 10
  Real a1 = r_fact_asymptotic(R(1L), R(1L), R(1L), 100, C(10), cfg);
  Real a2 = r_fact_asymptotic(R(1L), R(1L), R(1L), 200, C(10), cfg);
  CHECK(abs(a1 / a2 - R(256L)) <= eps(1000) * 256L);
  Real expected = exp(R(1L)) / pow(R(100L), 8) * exp(log_gamma(R(10L), cfg)) / R(9L);
  CHECK(abs(a1 - expected) <= eps(1000) * expected);
  CHECK_THROWS_AS(r_fact_asymptotic(R(1L), R(1L), R(1L), 10, C(0.5), cfg), DomainError);
}

TEST_CASE("b_bound") {
  CHECK(abs(b_bound(R(1L), R(1L), R(1L), 1, cfg) - R(4L)) <= eps());
  CHECK(b_bound(R(1L), R(2L), R(1L), 7, cfg) > b_bound(R(1L), R(1L), R(1L), 7, cfg));
  CHECK_THROWS_AS(b_bound(R(1L), R(1L), R(1L), 0, cfg), DomainError);
}

TEST_CASE("least_term_index") {
  CHECK(least_term_index(R(2L), C(12)) == 24);
  CHECK(least_term_index(Real::ln2(kBits), C(10, 10)) == 9);
  CHECK(least_term_index(R(0.5), C(1.5)) == 0);
}

TEST_CASE("bound comparison table") {
  auto rows = bound_comparison_table(R(1L), R(1L), C(10, 10), 30, cfg);
  REQUIRE(rows.size() == 31);
  auto argmin = [&](auto field) {
    std::size_t best = 0;
    for (std::size_t n = 1; n < rows.size(); ++n) {
      if (field(rows[n]) < field(rows[best])) best = n;
    }
    return best;
  };
  std::size_t min_ln2 = argmin([](const BoundComparisonRow& r) { return r.log_r_as_ln2; });
  std::size_t min_half_pi = argmin([](const BoundComparisonRow& r) { return r.log_r_as_half_pi; });
  CHECK((min_ln2 == 9 || min_ln2 == 10));
  CHECK(min_half_pi >= 21);
  CHECK(min_half_pi <= 23);
  for (std::size_t n = 5; n < 30; ++n) CHECK(rows[n + 1].log_r_fact < rows[n].log_r_fact);
  for (const auto& row : rows) {
    CHECK(row.n <= 30);
    Real direct = log(r_as(Real::ln2(kBits), R(1L), R(1L), row.n, C(10, 10), cfg));
    CHECK(abs(row.log_r_as_ln2 - direct) <= eps(1000) * max(R(1L), abs(direct)));
  }
}
