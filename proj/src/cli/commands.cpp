#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "borelsum/cli.hpp"
#include "borelsum/errors.hpp"
#include "borelsum/oracle.hpp"
#include "borelsum/ramified_summation.hpp"
#include "borelsum/reproduce.hpp"
#include "borelsum/series_io.hpp"

namespace borelsum::cli {

namespace {

bool is_expansion(Method method) {
  return method == Method::factorial || method == Method::branch || method == Method::generalized;
}

// Coefficients needed by `method` at the largest requested truncation.
std::size_t required_depth(const RunRequest& q, unsigned m) {
  std::size_t n_max = q.N.empty() ? 0 : *std::max_element(q.N.begin(), q.N.end());
  switch (q.method) {
    case Method::factorial:
      return n_max + 2;
    case Method::branch:
      return m * (n_max + 2);
    case Method::generalized:
      return n_max + 1;
    case Method::least_term:
      return m * (least_term_index(*q.r, RamifiedPoint(q.z_modulus, q.z_argument).projection()) + 1);
    case Method::oracle:
      break;
  }
  return 1;
}

FormalSeries load_series(const RunRequest& q) {
  if (!q.series_path.empty()) return read_series_file(q.series_path, q.precision.mantissa_bits());
  unsigned m = builtin_series(q.builtin, 2, q.precision).m();
  return builtin_series(q.builtin, std::max<std::size_t>(required_depth(q, m), 2), q.precision);
}

SummationResult oracle_result(const RunRequest& q) {
  const unsigned bits = q.precision.mantissa_bits();
  BorelEvaluator g = builtin_evaluator(q.builtin, bits);
  Complex a0 = builtin_series(q.builtin, 2, q.precision)[0];
  Complex z = RamifiedPoint(q.z_modulus, q.z_argument).projection();
  SummationResult r;
  r.method = Method::oracle;
  r.estimate = laplace_quadrature(g, a0, q.theta, z, q.tol, q.precision);
  r.heuristic_error = q.tol;
  return r;
}

SummationResult expansion_result(const RunRequest& q, const FormalSeries& f, const RamifiedPoint& z, std::size_t N) {
  const PrecisionConfig& cfg = q.precision;
  switch (q.method) {
    case Method::factorial: {
      if (f.m() != 1) throw DomainError("factorial method needs an m = 1 series; use branch or generalized");
      FactorialExpansion e = FactorialExpansion::from_series(f, q.lambda, std::min(N + 2, f.max_index()), cfg);
      std::optional<GrowthEnvelope> envelope;
      if (q.A && q.B) envelope.emplace(*q.A, *q.B, q.lambda, GrowthEnvelope::Domain::delta);
      return factorial_series_sum(e, z.projection(), N, cfg, envelope ? &*envelope : nullptr);
    }
    case Method::branch:
      return branch_sum(f, q.lambda, z, N, cfg);
    case Method::generalized:
      return generalized_factorial_sum(f, q.lambda, z, N, cfg);
    default:
      break;
  }
  throw DomainError("unsupported method");
}

}  // namespace

Evaluation evaluate(const RunRequest& q) {
  validate(q);
  Evaluation ev;
  if (q.method == Method::oracle) {
    ev.results.push_back(oracle_result(q));
    return ev;
  }

  FormalSeries f = load_series(q);
  RamifiedPoint z(q.z_modulus, q.z_argument);
  if (!q.theta.is_zero()) {
    f = rotate(f, q.theta);
    z = z.rotated(q.theta);
  }

  std::optional<std::string> lambda_note;
  if (is_expansion(q.method) && !q.builtin.empty()) {
    lambda_note = lambda_warning(builtin_singularities(q.builtin, q.precision.mantissa_bits()), q.theta, q.lambda);
  }

  if (q.method == Method::least_term) {
    std::optional<LeastTermConstants> constants;
    if (q.B && (q.C || q.A)) constants = LeastTermConstants{q.C ? *q.C : *q.A, *q.B};
    ev.results.push_back(least_term_sum_ramified(f, *q.r, z, q.precision, constants));
  } else {
    for (std::size_t N : q.N) {
      ev.results.push_back(expansion_result(q, f, z, N));
      if (lambda_note) ev.results.back().diagnostics.warnings.insert(ev.results.back().diagnostics.warnings.begin(),
                                                                    *lambda_note);
    }
  }
  for (const auto& r : ev.results) {
    for (const auto& w : r.diagnostics.warnings) {
      if (std::find(ev.warnings.begin(), ev.warnings.end(), w) == ev.warnings.end()) ev.warnings.push_back(w);
    }
  }
  return ev;
}

namespace {

struct RawOptions {
  std::string series;
  std::string builtin;
  std::string method = "factorial";
  std::string lambda = "1";
  std::string theta = "0";
  std::string z_mod;
  std::string z_arg = "0";
  std::string N;
  std::string N_range;
  std::string A;
  std::string B;
  std::string r;
  std::string C;
  unsigned bits = 256;
  std::string tol;
  std::string format = "text";
  std::string out;
  std::size_t n_max = 30;
  std::string target;
};

std::optional<Real> optional_expression(const std::string& text, unsigned bits) {
  if (text.empty()) return std::nullopt;
  return parse_expression(text, bits);
}

RunRequest build_request(const RawOptions& o, bool table) {
  RunRequest q;
  q.precision = PrecisionConfig(o.bits);
  const unsigned bits = o.bits;
  q.series_path = o.series;
  q.builtin = o.builtin;
  q.method = parse_method(o.method);
  q.lambda = parse_expression(o.lambda, bits);
  q.theta = parse_expression(o.theta, bits);
  if (o.z_mod.empty()) throw ParseError("--z-mod is required");
  q.z_modulus = parse_expression(o.z_mod, bits);
  q.z_argument = parse_expression(o.z_arg, bits);
  if (table) {
    if (!o.N_range.empty()) q.N = parse_n_list(o.N_range);
    else if (!o.N.empty()) q.N = parse_n_list(o.N);
  } else if (!o.N.empty()) {
    q.N = {parse_n_list(o.N).front()};
    if (parse_n_list(o.N).size() != 1) throw ParseError("sum takes a single --N; use table for several");
  }
  q.A = optional_expression(o.A, bits);
  q.B = optional_expression(o.B, bits);
  q.r = optional_expression(o.r, bits);
  q.C = optional_expression(o.C, bits);
  q.tol = o.tol.empty() ? max(Real(1e-30, bits), q.precision.epsilon() * 1024L) : parse_expression(o.tol, bits);
  q.format = parse_format(o.format);
  return q;
}

void add_request_options(CLI::App* app, RawOptions& o) {
  app->add_option("--series", o.series, "JSON series file {\"m\": int, \"coefficients\": [[re, im], ...]}");
  app->add_option("--builtin", o.builtin, "Built-in series: euler, example2, const1, psi");
  app->add_option("--method", o.method, "least-term | factorial | generalized | branch | oracle")
      ->capture_default_str();
  app->add_option("--lambda", o.lambda, "Scaling lambda, e.g. 2/ln2")->capture_default_str();
  app->add_option("--theta", o.theta, "Summation direction, e.g. pi/3")->capture_default_str();
  app->add_option("--z-mod", o.z_mod, "|z|");
  app->add_option("--z-arg", o.z_arg, "arg z on the m-sheeted cover")->capture_default_str();
  app->add_option("--N", o.N, "Truncation index");
  app->add_option("--A", o.A, "Growth constant A of |f~| <= A e^{B|zeta|}");
  app->add_option("--B", o.B, "Growth rate B");
  app->add_option("--r", o.r, "Strip half-width r (least-term)");
  app->add_option("--C", o.C, "Constant C of the ramified least-term bound");
  app->add_option("--precision-bits", o.bits, "Working precision in bits")->capture_default_str();
  app->add_option("--tol", o.tol, "Quadrature tolerance (oracle)");
  app->add_option("--format", o.format, "json | csv | text")->capture_default_str();
  app->add_option("--out", o.out, "Write the output to this file");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ParseError("cannot open output file '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_evaluation(const RawOptions& o, bool table, std::ostream& out, std::ostream& err) {
  RunRequest q = build_request(o, table);
  Evaluation ev = evaluate(q);
  for (const auto& w : ev.warnings) err << "warning: " << w << '\n';
  Output target(o.out, out);
  render_results(ev.results, q.format, q.precision.mantissa_bits(), target.get());
  return kExitOk;
}

int run_compare_bounds(const RawOptions& o, std::ostream& out) {
  PrecisionConfig cfg(o.bits);
  const unsigned bits = o.bits;
  Real A = o.A.empty() ? Real(1L, bits) : parse_expression(o.A, bits);
  Real B = o.B.empty() ? Real(1L, bits) : parse_expression(o.B, bits);
  Complex z(10, 10, bits);
  if (!o.z_mod.empty()) z = Complex::polar(parse_expression(o.z_mod, bits), parse_expression(o.z_arg, bits));
  auto rows = bound_comparison_table(A, B, z, o.n_max, cfg);
  Output target(o.out, out);
  render_bounds(rows, parse_format(o.format), target.get());
  return kExitOk;
}

int run_reproduce(const RawOptions& o, std::ostream& out) {
  PrecisionConfig cfg(o.bits);
  Format format = parse_format(o.format);
  std::vector<std::string> targets;
  if (o.target == "all") targets = reproduce_targets();
  else targets.push_back(o.target);
  Output target(o.out, out);
  bool passed = true;
  for (const auto& name : targets) {
    ReproduceReport report = reproduce(name, cfg);
    render_report(report, format, target.get());
    passed = passed && report.passed();
  }
  return passed ? kExitOk : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel summation of Gevrey-1 series by factorial series", "borelsum"};
  app.require_subcommand(1);
  RawOptions o;

  CLI::App* sum = app.add_subcommand("sum", "Evaluate one truncation");
  add_request_options(sum, o);

  CLI::App* table = app.add_subcommand("table", "Evaluate a sweep of truncations");
  add_request_options(table, o);
  table->add_option("--N-range", o.N_range, "List 10,14,18 or range a:b[:step]");

  CLI::App* bounds = app.add_subcommand("compare-bounds", "Compare the least-term and factorial error bounds");
  bounds->add_option("--A", o.A, "Growth constant A (default 1)");
  bounds->add_option("--B", o.B, "Growth rate B (default 1)");
  bounds->add_option("--z-mod", o.z_mod, "|z| (default: z = 10+10i)");
  bounds->add_option("--z-arg", o.z_arg, "arg z");
  bounds->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
  bounds->add_option("--precision-bits", o.bits, "Working precision in bits")->capture_default_str();
  bounds->add_option("--format", o.format, "json | csv | text")->capture_default_str();
  bounds->add_option("--out", o.out, "Write the output to this file");

  CLI::App* repro = app.add_subcommand("reproduce", "Recompute a published table and compare");
  std::string target_help = "all";
  for (const auto& t : reproduce_targets()) target_help += " | " + t;
  repro->add_option("target", o.target, target_help)->required();
  repro->add_option("--precision-bits", o.bits, "Working precision in bits")->capture_default_str();
  repro->add_option("--format", o.format, "json | csv | text")->capture_default_str();
  repro->add_option("--out", o.out, "Write the output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sum) return run_evaluation(o, false, out, err);
    if (*table) return run_evaluation(o, true, out, err);
    if (*bounds) return run_compare_bounds(o, out);
    return run_reproduce(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace borelsum::cli
