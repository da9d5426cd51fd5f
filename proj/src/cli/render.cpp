#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>

#include "borelsum/cli.hpp"
#include "borelsum/reproduce.hpp"

namespace borelsum::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kTextDigits = 25;

Json optional_real(const std::optional<Real>& value) {
  if (!value) return nullptr;
  return value->to_string();
}

std::string optional_text(const std::optional<Real>& value, int digits) {
  return value ? value->to_string(digits) : std::string("-");
}

Json result_json(const SummationResult& r) {
  Json j;
  j["N"] = r.N;
  j["estimate"] = {{"re", r.estimate.real().to_string()}, {"im", r.estimate.imag().to_string()}};
  j["heuristic_error"] = optional_real(r.heuristic_error);
  if (r.rigorous_bound) j["rigorous_bound"] = r.rigorous_bound->to_string();
  j["method"] = std::string(method_name(r.method));
  j["diagnostics"] = {{"coefficient_condition", r.diagnostics.coefficient_condition},
                      {"divergence_suspected", r.diagnostics.divergence_suspected},
                      {"warnings", r.diagnostics.warnings}};
  return j;
}

}  // namespace

void render_results(const std::vector<SummationResult>& results, Format format, unsigned bits, std::ostream& out) {
  const int digits = std::min(kTextDigits, static_cast<int>(bits * 0.30103));
  switch (format) {
    case Format::json: {
      Json array = Json::array();
      for (const auto& r : results) array.push_back(result_json(r));
      out << array.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "N,estimate_re,estimate_im,heuristic_error,rigorous_bound\n";
      for (const auto& r : results) {
        out << r.N << ',' << r.estimate.real().to_string() << ',' << r.estimate.imag().to_string() << ','
            << (r.heuristic_error ? r.heuristic_error->to_string() : "") << ','
            << (r.rigorous_bound ? r.rigorous_bound->to_string() : "") << '\n';
      }
      break;
    case Format::text: {
      const int width = digits + 8;
      out << std::left << std::setw(6) << "N" << std::setw(width) << "estimate_re" << std::setw(width)
          << "estimate_im" << std::setw(12) << "heuristic" << std::setw(12) << "bound" << "flags\n";
      for (const auto& r : results) {
        out << std::setw(6) << r.N << std::setw(width) << r.estimate.real().to_string(digits) << std::setw(width)
            << r.estimate.imag().to_string(digits) << std::setw(12) << optional_text(r.heuristic_error, 3)
            << std::setw(12) << optional_text(r.rigorous_bound, 3)
            << (r.diagnostics.divergence_suspected ? "divergence-suspected" : "") << '\n';
      }
      break;
    }
  }
}

void render_bounds(const std::vector<BoundComparisonRow>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      Json array = Json::array();
      for (const auto& row : rows) {
        array.push_back({{"n", row.n},
                         {"log_r_as_ln2", row.log_r_as_ln2.to_string()},
                         {"log_r_as_half_pi", row.log_r_as_half_pi.to_string()},
                         {"log_r_fact", row.log_r_fact.to_string()}});
      }
      out << array.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "n,log_r_as_ln2,log_r_as_half_pi,log_r_fact\n";
      for (const auto& row : rows) {
        out << row.n << ',' << row.log_r_as_ln2.to_string() << ',' << row.log_r_as_half_pi.to_string() << ','
            << row.log_r_fact.to_string() << '\n';
      }
      break;
    case Format::text:
      out << std::left << std::setw(6) << "n" << std::setw(16) << "log_r_as_ln2" << std::setw(16)
          << "log_r_as_half_pi" << "log_r_fact\n";
      for (const auto& row : rows) {
        out << std::setw(6) << row.n << std::setw(16) << row.log_r_as_ln2.to_string(8) << std::setw(16)
            << row.log_r_as_half_pi.to_string(8) << row.log_r_fact.to_string(8) << '\n';
      }
      break;
  }
}

void render_report(const ReproduceReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"row", c.row},
                        {"quantity", c.quantity},
                        {"expected", c.expected},
                        {"computed", c.computed.to_string()},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    Json j = {{"target", report.target}, {"passed", report.passed()}, {"checks", checks}};
    out << j.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "target,row,quantity,expected,computed,tolerance,pass\n";
    for (const auto& c : report.checks) {
      out << report.target << ',' << c.row << ',' << c.quantity << ',' << c.expected << ',' << c.computed.to_string()
          << ',' << c.tolerance << ',' << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    return;
  }
  out << "== " << report.target << " ==\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(8) << c.row << std::setw(22) << c.quantity
        << "expected " << std::setw(24) << c.expected << "computed " << std::setw(28) << c.computed.to_string(22)
        << c.tolerance << '\n';
  }
  out << report.target << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace borelsum::cli
