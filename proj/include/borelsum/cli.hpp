#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borelsum/classical_summation.hpp"
#include "borelsum/precision.hpp"
#include "borelsum/summation_result.hpp"

namespace borelsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitFail = 3;

enum class Format { json, csv, text };

// Throws ParseError for names other than json, csv, text.
Format parse_format(std::string_view name);

// Arithmetic on decimal numbers and the constants pi, ln2, e with + - * / and parentheses,
// e.g. "2/ln2" or "pi/3". Throws ParseError on malformed text or division by zero.
Real parse_expression(std::string_view text, unsigned bits);

// "10,14,18", "10:40" or "10:40:5". Throws ParseError on malformed or empty lists.
std::vector<std::size_t> parse_n_list(std::string_view text);

struct RunRequest {
  // Exactly one of the two is non-empty.
  std::string series_path;
  std::string builtin;
  Method method = Method::factorial;
  Real lambda;
  Real theta;
  Real z_modulus;
  Real z_argument;
  // Truncation indices, evaluated in order; ignored by least-term and oracle.
  std::vector<std::size_t> N;
  std::optional<Real> A;
  std::optional<Real> B;
  std::optional<Real> r;
  std::optional<Real> C;
  PrecisionConfig precision;
  Real tol;
  Format format = Format::text;
};

// Throws ParseError when a field required by the method is missing.
void validate(const RunRequest& request);

struct Evaluation {
  std::vector<SummationResult> results;
  // Distinct warnings across all results, in first-seen order.
  std::vector<std::string> warnings;
};

// One result per requested N (one in total for least-term and oracle).
Evaluation evaluate(const RunRequest& request);

// JSON: array of {N, estimate: {re, im}, heuristic_error, rigorous_bound?, method, diagnostics}.
// CSV header: N,estimate_re,estimate_im,heuristic_error,rigorous_bound
void render_results(const std::vector<SummationResult>& results, Format format, unsigned bits, std::ostream& out);

// Columns n, log_r_as_ln2, log_r_as_half_pi, log_r_fact (natural logarithms).
void render_bounds(const std::vector<BoundComparisonRow>& rows, Format format, std::ostream& out);

// Full command line (argv[0] is the program name); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borelsum::cli
