#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "borelsum/cli.hpp"

namespace borelsum::cli {

struct ReproduceCheck {
  std::string row;
  std::string quantity;
  // Published value or the asserted property.
  std::string expected;
  Real computed;
  std::string tolerance;
  bool pass = false;
};

struct ReproduceReport {
  std::string target;
  std::vector<ReproduceCheck> checks;
  bool passed() const;
};

// table1, table2, table3, table4, table5, fig2, leastterm-psi
std::vector<std::string> reproduce_targets();

// Runs the canned configuration of `target` and compares against the published values.
// Estimates must match to one unit in the last printed digit, error columns within a factor 2.
// Throws ParseError for unknown targets.
ReproduceReport reproduce(std::string_view target, const PrecisionConfig& config);

void render_report(const ReproduceReport& report, Format format, std::ostream& out);

}  // namespace borelsum::cli
