#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "borelsum/precision.hpp"
#include "borelsum/series.hpp"

namespace borelsum {

// Borel transform f~ known in closed form, evaluated on the ray arg zeta = theta of the m-sheeted cover.
struct BorelEvaluator {
  std::string name;
  unsigned m = 1;
  // f~(rho e^{i theta}) for rho > 0; must be safe to call concurrently.
  std::function<Complex(const Real& rho, const Real& theta)> evaluate;
  // Open intervals of theta on which the rays avoid every singularity.
  std::vector<std::pair<double, double>> valid_rays;
  // Known singular points on the cover (documentation and lambda admissibility).
  std::vector<RamifiedPoint> singularities;
  // (A, B) with |f~(rho e^{i theta})| <= A e^{B rho} along the ray theta.
  std::function<std::pair<double, double>(double theta)> growth;

  bool ray_is_valid(double theta) const;
};

// a_0 + integral_0^{infinity e^{i theta}} f~(zeta) e^{-z zeta} d zeta by tanh-sinh quadrature on [0, T],
// T chosen from the growth bound so the discarded tail is below tol/4.
// Throws DomainError for invalid rays or Re(z e^{i theta}) <= B, ConvergenceError when the
// step halving fails to settle within tol.
Complex laplace_quadrature(const BorelEvaluator& g, const Complex& a0, const Real& theta, const Complex& z,
                           const Real& tol, const PrecisionConfig& config);

// Built-in Borel transforms: "euler" 1/(1+zeta), "example2" (1+zeta^{1/2})^{1/2}, "const1" 1.
// Throws ParseError for other names.
BorelEvaluator builtin_evaluator(std::string_view name, unsigned bits);
std::vector<std::string> builtin_evaluator_names();

// Coefficient generators.
FormalSeries euler_series(std::size_t depth, const PrecisionConfig& config);
FormalSeries example2_series(std::size_t depth, const PrecisionConfig& config);
FormalSeries const1_series(std::size_t depth, const PrecisionConfig& config);
// Asymptotic series of psi with a_0 = 1, m = 3.
FormalSeries psi_series(std::size_t depth, const PrecisionConfig& config);

// Series by name: "euler", "example2", "const1", "psi". Throws ParseError for other names.
FormalSeries builtin_series(std::string_view name, std::size_t depth, const PrecisionConfig& config);
std::vector<std::string> builtin_series_names();
// Known singularities of the Borel transform behind a built-in series; empty when entire.
std::vector<RamifiedPoint> builtin_singularities(std::string_view name, unsigned bits);

// Largest lambda such that every singularity, seen from direction theta and projected to C*,
// lies outside Delta_lambda; nullopt when no singularity constrains lambda.
std::optional<Real> lambda_limit(const std::vector<RamifiedPoint>& singularities, const Real& theta,
                                 unsigned bits);
// Warning text when lambda exceeds lambda_limit; nullopt otherwise.
std::optional<std::string> lambda_warning(const std::vector<RamifiedPoint>& singularities, const Real& theta,
                                          const Real& lambda);

// Sampled (not rigorous) envelope for an m = 1 evaluator: A is the largest sampled
// |f~(zeta)| e^{-B |zeta|} over the boundary of Delta_lambda (domain delta, width lambda)
// or of the strip of half-width r around R+ (domain strip, width r), times `margin`.
GrowthEnvelope sample_envelope(const BorelEvaluator& g, GrowthEnvelope::Domain domain, const Real& width,
                               const Real& B, const PrecisionConfig& config, std::size_t samples = 2000,
                               double margin = 1.01);

}  // namespace borelsum
