#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borelsum/complex.hpp"
#include "borelsum/precision.hpp"

namespace borelsum {

enum class Method { least_term, factorial, generalized, branch, oracle };

std::string_view method_name(Method method);
// Throws ParseError for unknown names.
Method parse_method(std::string_view name);

struct Diagnostics {
  // Largest sum|terms| / |coefficient| met while forming the expansion coefficients.
  double coefficient_condition = 1.0;
  bool divergence_suspected = false;
  std::vector<std::string> warnings;
};

struct SummationResult {
  Complex estimate;
  std::size_t N = 0;
  std::optional<Real> rigorous_bound;
  std::optional<Real> heuristic_error;
  Method method = Method::factorial;
  Diagnostics diagnostics;
};

// Adds a warning when coefficient_condition leaves fewer than 8 correct significant digits.
void flag_precision_loss(Diagnostics& diagnostics, const PrecisionConfig& config);

// True when the tail of a term sequence is much larger than its smallest earlier term.
bool terms_suggest_divergence(const std::vector<Real>& magnitudes, unsigned m = 1);

}  // namespace borelsum
