#include "borelsum/summation_result.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kNames{{
    {Method::least_term, "least-term"},
    {Method::factorial, "factorial"},
    {Method::generalized, "generalized"},
    {Method::branch, "branch"},
    {Method::oracle, "oracle"},
}};

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kNames) {
    if (m == method) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [m, n] : kNames) {
    if (n == name) return m;
  }
  throw ParseError("unknown method '" + std::string(name) +
                   "' (expected least-term, factorial, generalized, branch or oracle)");
}

void flag_precision_loss(Diagnostics& diagnostics, const PrecisionConfig& config) {
  const double lost = diagnostics.coefficient_condition * config.epsilon().to_double();
  if (lost < 1e-8) return;
  diagnostics.warnings.push_back("coefficient cancellation (condition " +
                                 Real(diagnostics.coefficient_condition, 53).to_string(3) + ") exhausts the " +
                                 std::to_string(config.mantissa_bits()) +
                                 "-bit working precision; increase the precision");
}

bool terms_suggest_divergence(const std::vector<Real>& magnitudes, unsigned m) {
  const std::size_t count = magnitudes.size();
  if (count < 8) return false;
  const std::size_t tail = std::max<std::size_t>(std::max<std::size_t>(m, 1), count / 10);
  if (tail >= count) return false;
  const std::size_t head = count - tail;

  const Real* smallest = nullptr;
  for (std::size_t i = 0; i < head; ++i) {
    if (magnitudes[i].is_zero()) continue;
    if (smallest == nullptr || magnitudes[i] < *smallest) smallest = &magnitudes[i];
  }
  if (smallest == nullptr) return false;
  const Real* largest = &magnitudes[head];
  for (std::size_t i = head; i < count; ++i) {
    if (*largest < magnitudes[i]) largest = &magnitudes[i];
  }
  return *largest > *smallest * 100L;
}

}  // namespace borelsum
