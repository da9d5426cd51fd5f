#include "borelsum/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "borelsum/errors.hpp"
#include "borelsum/oracle.hpp"
#include "borelsum/ramified_summation.hpp"

namespace borelsum::cli {

namespace {

// Value of the psi Borel sum at z = 12 as printed next to the generalized table.
constexpr const char* kPsiReference = "0.2625629228772508441";
constexpr const char* kExample2Reference = "0.2357006";

struct PrintedRow {
  std::size_t N;
  const char* estimate;
  const char* error;
};

// One unit in the last printed digit of a decimal like "0.2625629" or "0.50e-5".
Real last_digit_unit(std::string_view printed, unsigned bits) {
  std::size_t e = printed.find_first_of("eE");
  std::string_view mantissa = printed.substr(0, e);
  long exponent = e == std::string_view::npos ? 0 : std::stol(std::string(printed.substr(e + 1)));
  std::size_t dot = mantissa.find('.');
  long decimals = dot == std::string_view::npos ? 0 : static_cast<long>(mantissa.size() - dot - 1);
  return pow(Real(10L, bits), exponent - decimals);
}

class Report {
 public:
  Report(std::string target, unsigned bits) : bits_(bits) { report_.target = std::move(target); }

  // |value - printed| within one unit of the last printed digit.
  void digits(const std::string& row, const std::string& quantity, const char* printed, const Real& value) {
    Real unit = last_digit_unit(printed, bits_);
    bool pass = abs(value - Real::parse(printed, bits_)) <= unit;
    add(row, quantity, printed, value, "+-" + unit.to_string(1), pass);
  }

  // |value - printed| <= tol
  void near(const std::string& row, const std::string& quantity, const char* printed, const Real& value,
            double tol) {
    bool pass = abs(value - Real::parse(printed, bits_)) <= tol;
    add(row, quantity, printed, value, "+-" + Real(tol, 53).to_string(2), pass);
  }

  // printed/2 <= value <= 2 printed
  void factor_two(const std::string& row, const std::string& quantity, const char* printed, const Real& value) {
    Real p = Real::parse(printed, bits_);
    bool pass = value >= p / 2L && value <= p * 2L;
    add(row, quantity, printed, value, "factor 2", pass);
  }

  void at_most(const std::string& row, const std::string& quantity, const Real& value, const Real& limit,
               const std::string& what) {
    add(row, quantity, "<= " + limit.to_string(3) + " (" + what + ")", value, "", value <= limit);
  }

  void holds(const std::string& row, const std::string& quantity, const std::string& property, const Real& value,
             bool pass) {
    add(row, quantity, property, value, "", pass);
  }

  ReproduceReport finish() { return std::move(report_); }

 private:
  void add(const std::string& row, const std::string& quantity, std::string expected, const Real& value,
           std::string tolerance, bool pass) {
    report_.checks.push_back({row, quantity, std::move(expected), value, std::move(tolerance), pass});
  }

  unsigned bits_;
  ReproduceReport report_;
};

std::string n_label(std::size_t N) { return "N=" + std::to_string(N); }

RamifiedPoint real_point(long x, unsigned bits) { return RamifiedPoint(Real(x, bits), Real(0L, bits)); }

Real psi_lambda(unsigned bits) { return Real(2L, bits) / Real::ln2(bits); }

FormalSeries psi_for(std::size_t depth, const PrecisionConfig& config) { return psi_series(depth, config); }

ReproduceReport branch_table(const char* name, const Real& lambda, const std::vector<PrintedRow>& rows,
                             const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  std::size_t n_max = 0;
  for (const auto& row : rows) n_max = std::max(n_max, row.N);
  FormalSeries f = psi_for(3 * (n_max + 2), config);
  Report report(name, bits);
  for (const auto& row : rows) {
    SummationResult r = branch_sum(f, lambda, real_point(12, bits), row.N, config);
    report.digits(n_label(row.N), "estimate", row.estimate, r.estimate.real());
    report.factor_two(n_label(row.N), "heuristic error", row.error, *r.heuristic_error);
  }
  return report.finish();
}

ReproduceReport table1(const PrecisionConfig& config) {
  return branch_table("table1", psi_lambda(config.mantissa_bits()),
                      {{10, "0.262562935", "0.20e-7"},
                       {14, "0.26256292301", "0.22e-9"},
                       {18, "0.2625629228800", "0.45e-11"},
                       {25, "0.262562922877259", "0.15e-13"},
                       {33, "0.262562922877250882", "0.65e-16"},
                       {40, "0.2625629228772508441", "0.2e-18"}},
                      config);
}

ReproduceReport table2(const PrecisionConfig& config) {
  return branch_table("table2", Real(4L, config.mantissa_bits()),
                      {{14, "0.262562922891", "0.24e-10"}, {18, "0.26256292287739", "0.25e-12"}}, config);
}

ReproduceReport table3(const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  const Real lambda = psi_lambda(bits);
  const std::vector<PrintedRow> rows{{10, "0.262562936", "0.13e-7"},
                                     {18, "0.2625629228786", "0.13e-11"},
                                     {25, "0.2625629228772537", "0.29e-14"}};
  const std::map<std::size_t, const char*> branch_errors{{10, "0.20e-7"}, {18, "0.45e-11"}, {25, "0.15e-13"}};
  FormalSeries f = psi_for(3 * 27 + 3, config);
  const Real reference = Real::parse(kPsiReference, bits);
  Report report("table3", bits);
  for (const auto& row : rows) {
    const std::string label = "n=" + std::to_string(row.N);
    SummationResult g = generalized_factorial_sum(f, lambda, real_point(12, bits), 3 * row.N, config);
    report.digits(label, "estimate", row.estimate, g.estimate.real());
    report.factor_two(label, "error vs reference", row.error, abs(g.estimate.real() - reference));
    report.factor_two(label, "heuristic error", row.error, *g.heuristic_error);
    SummationResult b = branch_sum(f, lambda, real_point(12, bits), row.N, config);
    Real printed_sum = Real::parse(row.error, bits) + Real::parse(branch_errors.at(row.N), bits);
    report.at_most(label, "|branch - generalized|", abs(b.estimate - g.estimate), printed_sum,
                   "sum of printed errors");
  }
  return report.finish();
}

ReproduceReport table4(const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  FormalSeries f = example2_series(101, config);
  Report report("table4", bits);
  SummationResult r10 = generalized_factorial_sum(f, Real(1L, bits), real_point(5, bits), 10, config);
  SummationResult r100 = generalized_factorial_sum(f, Real(1L, bits), real_point(5, bits), 100, config);
  report.near(n_label(10), "estimate", "0.235584", r10.estimate.real(), 1e-6);
  report.near(n_label(100), "estimate", "0.159338", r100.estimate.real(), 1e-5);
  report.holds(n_label(100), "divergence flag", "divergence suspected",
               Real(r100.diagnostics.divergence_suspected ? 1L : 0L, bits), r100.diagnostics.divergence_suspected);
  Real spread = abs(r10.estimate - r100.estimate);
  report.holds("10 vs 100", "|difference|", "> 0.07", spread, spread > 0.07);
  return report.finish();
}

ReproduceReport table5(const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  FormalSeries f = example2_series(151, config);
  const Real theta = Real::pi(bits) / 3L;
  const Real lambda(0.6, bits);
  const Real reference = Real::parse(kExample2Reference, bits);
  struct Row {
    std::size_t N;
    const char* re;
    const char* im;
    const char* error;
  };
  Report report("table5", bits);
  for (const Row& row : {Row{50, "0.2356902", "0.50e-5", "0.12e-4"}, Row{150, "0.2357024", "-0.25e-6", "0.1e-5"}}) {
    SummationResult r = rotated_generalized_sum(f, theta, lambda, real_point(5, bits), row.N, config);
    report.digits(n_label(row.N), "estimate re", row.re, r.estimate.real());
    report.digits(n_label(row.N), "estimate im", row.im, r.estimate.imag());
    Real distance = abs(r.estimate - Complex(reference));
    report.at_most(n_label(row.N), "|estimate - 0.2357006|", distance, Real::parse(row.error, bits) * 2L,
                   "2x printed error");
  }
  return report.finish();
}

ReproduceReport fig2(const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  auto rows = bound_comparison_table(Real(1L, bits), Real(1L, bits), Complex(10, 10, bits), 30, config);
  auto argmin = [&](const std::function<const Real&(const BoundComparisonRow&)>& field) {
    std::size_t best = 0;
    for (std::size_t n = 1; n < rows.size(); ++n) {
      if (field(rows[n]) < field(rows[best])) best = n;
    }
    return best;
  };
  Report report("fig2", bits);
  std::size_t ln2_min = argmin([](const BoundComparisonRow& r) -> const Real& { return r.log_r_as_ln2; });
  std::size_t half_pi_min = argmin([](const BoundComparisonRow& r) -> const Real& { return r.log_r_as_half_pi; });
  report.holds("curves", "argmin R_as(ln 2)", "n in {9, 10}", Real(static_cast<long>(ln2_min), bits),
               ln2_min == 9 || ln2_min == 10);
  report.holds("curves", "argmin R_as(pi/2)", "n in 21..23", Real(static_cast<long>(half_pi_min), bits),
               half_pi_min >= 21 && half_pi_min <= 23);
  std::size_t first_rise = 0;
  for (std::size_t n = 5; n + 1 < rows.size(); ++n) {
    if (!(rows[n + 1].log_r_fact < rows[n].log_r_fact)) {
      first_rise = n + 1;
      break;
    }
  }
  report.holds("curves", "R_fact decreasing n>=5", "no increase (0)", Real(static_cast<long>(first_rise), bits),
               first_rise == 0);
  const auto& last = rows.back();
  Real gap = last.log_r_fact - last.log_r_as_ln2;
  report.holds("n=30", "log R_fact - log R_as(ln2)", "< 0", gap, gap < 0L);
  return report.finish();
}

ReproduceReport leastterm_psi(const PrecisionConfig& config) {
  const unsigned bits = config.mantissa_bits();
  FormalSeries f = psi_for(3 * 25 + 3, config);
  SummationResult r = least_term_sum_ramified(f, Real(2L, bits), real_point(12, bits), config);
  Report report("leastterm-psi", bits);
  const std::string label = "n=" + std::to_string(r.N / 3);
  report.digits(label, "estimate", "0.26256292290", r.estimate.real());
  report.factor_two(label, "heuristic error", "0.23e-9", *r.heuristic_error);
  report.at_most(label, "|estimate - table1 best|", abs(r.estimate.real() - Real::parse(kPsiReference, bits)),
                 Real(2.3e-10, bits), "published margin");
  return report.finish();
}

const std::vector<std::pair<std::string, std::function<ReproduceReport(const PrecisionConfig&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<ReproduceReport(const PrecisionConfig&)>>> targets{
      {"table1", table1}, {"table2", table2}, {"table3", table3},           {"table4", table4},
      {"table5", table5}, {"fig2", fig2},     {"leastterm-psi", leastterm_psi},
  };
  return targets;
}

}  // namespace

bool ReproduceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproduceCheck& c) { return c.pass; });
}

std::vector<std::string> reproduce_targets() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

ReproduceReport reproduce(std::string_view target, const PrecisionConfig& config) {
  for (const auto& [name, fn] : registry()) {
    if (name == target) return fn(config);
  }
  throw ParseError("unknown reproduction target '" + std::string(target) + "'");
}

}  // namespace borelsum::cli
