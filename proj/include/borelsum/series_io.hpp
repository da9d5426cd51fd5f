#pragma once

#include <string>
#include <string_view>

#include "borelsum/series.hpp"

namespace borelsum {

// {"m": int, "coefficients": [["re", "im"], ...]}; numbers may be decimal strings or JSON numbers.
// Throws ParseError on malformed input.
FormalSeries parse_series_json(std::string_view text, unsigned bits);
FormalSeries read_series_file(const std::string& path, unsigned bits);

std::string series_to_json(const FormalSeries& f);

}  // namespace borelsum
