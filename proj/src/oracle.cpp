#include "borelsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

constexpr int kMaxLevels = 11;

unsigned quadrature_bits(const Real& tol, const PrecisionConfig& config) {
  double digits = -std::log2(tol.to_double());
  if (!std::isfinite(digits)) digits = config.mantissa_bits();
  unsigned needed = static_cast<unsigned>(std::max(64.0, std::ceil(digits) + 48.0));
  return std::min(needed, config.mantissa_bits());
}

Real max_sampled(const BorelEvaluator& g, const Complex& zeta, const Real& B, const Real& current) {
  Real rho = abs(zeta);
  if (rho.is_zero()) return current;
  Complex value = g.evaluate(rho, arg(zeta));
  return max(current, abs(value) * exp(-B * rho));
}

}  // namespace

bool BorelEvaluator::ray_is_valid(double theta) const {
  return std::any_of(valid_rays.begin(), valid_rays.end(),
                     [theta](const auto& ray) { return theta > ray.first && theta < ray.second; });
}

Complex laplace_quadrature(const BorelEvaluator& g, const Complex& a0, const Real& theta, const Complex& z,
                           const Real& tol, const PrecisionConfig& config) {
  if (!(tol > 0L)) throw DomainError("laplace_quadrature: tol must be positive");
  const double th = theta.to_double();
  if (!g.ray_is_valid(th)) {
    throw DomainError("laplace_quadrature: ray theta = " + theta.to_string(8) + " is not valid for '" + g.name + "'");
  }
  const unsigned bits = quadrature_bits(tol, config);
  const Real th_q = theta.with_precision(bits);
  const Complex rot = expi(th_q);
  const Complex w = Complex(z.real().with_precision(bits), z.imag().with_precision(bits)) * rot;
  const auto [growth_a, growth_b] = g.growth(th);
  const Real A(growth_a, bits);
  const Real B(growth_b, bits);
  const Real delta = w.real() - B;
  if (!(delta > 0L)) {
    throw DomainError("laplace_quadrature: requires Re(z e^{i theta}) > B for '" + g.name + "'");
  }
  const Real tol_q = tol.with_precision(bits);
  Real T = log(4L * A / (tol_q * delta)) / delta;
  T = max(T, Real(1L, bits));

  const Real pi = Real::pi(bits);
  const Real half_pi = pi / 2L;
  const Real x_max = Real::ln2(bits) * static_cast<long>(bits) + 10L;
  const Real t_max = asinh(2L * x_max / pi);

  auto node = [&](const Real& t) {
    Real x = half_pi * sinh(t);
    Real e = exp(-2L * x);
    Real denom = 1L + e;
    Real rho = T / denom;
    Real weight = T * 2L * e / (denom * denom) * half_pi * cosh(t);
    if (rho.is_zero() || weight.is_zero()) return Complex::zero(bits);
    return g.evaluate(rho, th_q) * exp(-(w * rho)) * rot * weight;
  };

  Real h(0.5, bits);
  Complex sum = node(Real(0L, bits));
  for (long i = 1; h * i <= t_max; ++i) {
    Real t = h * i;
    sum += node(t) + node(-t);
  }
  Complex previous = sum * h;
  for (int level = 1; level <= kMaxLevels; ++level) {
    h /= 2L;
    for (long i = 1; h * i <= t_max; i += 2) {
      Real t = h * i;
      sum += node(t) + node(-t);
    }
    Complex current = sum * h;
    Real change = abs(current - previous);
    if (level >= 2 && change <= tol_q / 2L) {
      Complex result = a0 + current;
      return Complex(result.real().with_precision(config.mantissa_bits()),
                     result.imag().with_precision(config.mantissa_bits()));
    }
    previous = current;
  }
  throw ConvergenceError("laplace_quadrature: no convergence to tol = " + tol.to_string(3) + " for '" + g.name + "'");
}

BorelEvaluator builtin_evaluator(std::string_view name, unsigned bits) {
  const double pi = 3.14159265358979323846;
  BorelEvaluator g;
  g.name = std::string(name);
  if (name == "euler") {
    g.m = 1;
    g.evaluate = [](const Real& rho, const Real& theta) {
      Complex one(Real(1L, rho.precision()));
      return one / (one + Complex::polar(rho, theta));
    };
    g.valid_rays = {{-pi, pi}};
    g.singularities = builtin_singularities("euler", bits);
    g.growth = [pi](double theta) {
      double a = std::abs(theta) <= pi / 2 ? 1.0 : 1.0 / std::abs(std::sin(theta));
      return std::pair<double, double>{a, 0.0};
    };
  } else if (name == "example2") {
    g.m = 2;
    g.evaluate = [](const Real& rho, const Real& theta) {
      Complex u = Complex::polar(sqrt(rho), theta / 2L);
      return sqrt(u + Real(1L, rho.precision()));
    };
    g.valid_rays = {{-2 * pi, 2 * pi}};
    g.singularities = builtin_singularities("example2", bits);
    g.growth = [](double) { return std::pair<double, double>{1.5, 0.1}; };
  } else if (name == "const1") {
    g.m = 1;
    g.evaluate = [](const Real& rho, const Real&) { return Complex(Real(1L, rho.precision())); };
    g.valid_rays = {{-std::numeric_limits<double>::max(), std::numeric_limits<double>::max()}};
    g.growth = [](double) { return std::pair<double, double>{1.0, 0.0}; };
  } else {
    throw ParseError("unknown Borel evaluator '" + std::string(name) + "' (expected euler, example2 or const1)");
  }
  return g;
}

std::vector<std::string> builtin_evaluator_names() { return {"euler", "example2", "const1"}; }

FormalSeries euler_series(std::size_t depth, const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  std::vector<Complex> a{Complex::zero(bits)};
  mpz_class factorial = 1;
  for (std::size_t k = 1; k <= depth; ++k) {
    if (k > 1) factorial *= static_cast<unsigned long>(k - 1);
    Real v(factorial, bits);
    a.emplace_back(k % 2 == 1 ? v : -v, Real(0L, bits));
  }
  return FormalSeries(1, std::move(a));
}

FormalSeries example2_series(std::size_t depth, const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  const Real sqrt_pi = sqrt(Real::pi(bits));
  std::vector<Complex> a;
  for (std::size_t n = 0; n <= depth && n < 2; ++n) a.push_back(Complex::zero(bits));
  // a_{2+k} = binom(1/2, k) Gamma(k/2 + 1)
  mpq_class binom = 1;
  for (std::size_t k = 0; 2 + k <= depth; ++k) {
    if (k > 0) {
      binom *= mpq_class(1, 2) - mpq_class(static_cast<unsigned long>(k - 1));
      binom /= mpq_class(static_cast<unsigned long>(k));
    }
    mpq_class gamma_rational;
    bool with_sqrt_pi = k % 2 == 1;
    if (!with_sqrt_pi) {
      mpz_class f = 1;
      for (std::size_t i = 2; i <= k / 2; ++i) f *= static_cast<unsigned long>(i);
      gamma_rational = f;
    } else {
      // Gamma(j + 1/2) = (2j)! sqrt(pi) / (4^j j!)
      const std::size_t j = (k + 1) / 2;
      mpz_class num = 1, den = 1;
      for (std::size_t i = 2; i <= 2 * j; ++i) num *= static_cast<unsigned long>(i);
      for (std::size_t i = 2; i <= j; ++i) den *= static_cast<unsigned long>(i);
      mpz_class four_j;
      mpz_ui_pow_ui(four_j.get_mpz_t(), 4, j);
      gamma_rational = mpq_class(num, den * four_j);
      gamma_rational.canonicalize();
    }
    Real value(mpq_class(binom * gamma_rational), bits);
    if (with_sqrt_pi) value *= sqrt_pi;
    a.emplace_back(value, Real(0L, bits));
  }
  return FormalSeries(2, std::move(a));
}

FormalSeries const1_series(std::size_t depth, const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  std::vector<Complex> a(depth + 1, Complex::zero(bits));
  if (depth >= 1) a[1] = Complex(Real(1L, bits));
  return FormalSeries(1, std::move(a));
}

FormalSeries builtin_series(std::string_view name, std::size_t depth, const PrecisionConfig& config) {
  if (name == "euler") return euler_series(depth, config);
  if (name == "example2") return example2_series(depth, config);
  if (name == "const1") return const1_series(depth, config);
  if (name == "psi") return psi_series(depth, config);
  throw ParseError("unknown builtin series '" + std::string(name) + "' (expected euler, example2, const1 or psi)");
}

std::vector<std::string> builtin_series_names() { return {"euler", "example2", "const1", "psi"}; }

std::vector<RamifiedPoint> builtin_singularities(std::string_view name, unsigned bits) {
  const Real pi = Real::pi(bits);
  if (name == "euler") return {RamifiedPoint(Real(1L, bits), pi)};
  if (name == "example2") return {RamifiedPoint(Real(1L, bits), 2L * pi), RamifiedPoint(Real(1L, bits), -2L * pi)};
  if (name == "psi") return {RamifiedPoint(Real(2L, bits), pi)};
  if (name == "const1") return {};
  throw ParseError("unknown builtin series '" + std::string(name) + "'");
}

std::optional<Real> lambda_limit(const std::vector<RamifiedPoint>& singularities, const Real& theta,
                                 unsigned bits) {
  if (singularities.empty()) return std::nullopt;
  const Real half_pi = Real::pi(bits) / 2L;
  Real limit(std::numeric_limits<double>::infinity(), bits);
  for (const auto& s : singularities) {
    const Complex p = RamifiedPoint(s.modulus(), s.argument() - theta).projection();
    auto outside = [&](const Real& lambda) {
      Complex q = p / lambda;
      if (abs(q.imag()) >= half_pi) return true;
      // |e^{-q} - 1| >= 1 rewritten without cancellation
      return exp(-q.real()) >= cos(q.imag()) * 2L;
    };
    Real lo = abs(p) * Real(1e-6, bits);
    if (!outside(lo)) return Real(0L, bits);
    Real hi = lo * 2L;
    while (outside(hi)) {
      lo = hi;
      hi *= 2L;
    }
    for (int i = 0; i < 200; ++i) {
      Real mid = (lo + hi) / 2L;
      if (outside(mid)) lo = mid;
      else hi = mid;
    }
    limit = min(limit, lo);
  }
  return limit;
}

std::optional<std::string> lambda_warning(const std::vector<RamifiedPoint>& singularities, const Real& theta,
                                          const Real& lambda) {
  auto limit = lambda_limit(singularities, theta, std::max(lambda.precision(), 64u));
  if (!limit) return std::nullopt;
  if (lambda > *limit * Real(1.0 + 1e-12, lambda.precision())) {
    return "lambda = " + lambda.to_string(8) + " exceeds the admissible limit " + limit->to_string(8) +
           " for the known Borel singularities; the expansion may converge slowly or not at all";
  }
  return std::nullopt;
}

GrowthEnvelope sample_envelope(const BorelEvaluator& g, GrowthEnvelope::Domain domain, const Real& width,
                               const Real& B, const PrecisionConfig& config, std::size_t samples, double margin) {
  if (g.m != 1) throw DomainError("sample_envelope: only m = 1 evaluators are supported");
  if (samples < 2) throw DomainError("sample_envelope: need at least two samples");
  const unsigned bits = config.mantissa_bits();
  const Real pi = Real::pi(bits);
  Real best(0L, bits);
  const long count = static_cast<long>(samples);
  if (domain == GrowthEnvelope::Domain::strip) {
    const Real reach = max(Real(50L, bits), Real(20L, bits) / B);
    for (long i = 0; i <= count; ++i) {
      Real t = reach * i / count;
      best = max_sampled(g, Complex(t, width), B, best);
      best = max_sampled(g, Complex(t, -width), B, best);
      Real phi = pi / 2L + pi * i / count;
      best = max_sampled(g, Complex::polar(width, phi), B, best);
    }
  } else {
    // boundary of lambda Delta: zeta = -lambda ln(1 + e^{i phi}), -pi < phi < pi
    Complex one(Real(1L, bits));
    for (long i = 1; i < count; ++i) {
      Real phi = pi * (2L * i - count) / count;
      Complex zeta = -(log(one + expi(phi)) * width);
      best = max_sampled(g, zeta, B, best);
    }
    for (long i = 0; i <= count; ++i) {
      best = max_sampled(g, Complex(Real(50L, bits) * width * i / count), B, best);
    }
  }
  return GrowthEnvelope(best * Real(margin, bits), B, width, domain);
}

}  // namespace borelsum
