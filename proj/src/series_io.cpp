#include "borelsum/series_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "borelsum/errors.hpp"

namespace borelsum {

namespace {

using nlohmann::json;

Real component(const json& value, unsigned bits) {
  if (value.is_string()) return Real::parse(value.get<std::string>(), bits);
  if (value.is_number_integer()) return Real(value.get<long>(), bits);
  if (value.is_number()) return Real(value.get<double>(), bits);
  throw ParseError("series coefficient component must be a decimal string or number");
}

}  // namespace

FormalSeries parse_series_json(std::string_view text, unsigned bits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("series JSON: top level must be an object");
  if (!doc.contains("m") || !doc["m"].is_number_integer() || doc["m"].get<long>() < 1) {
    throw ParseError("series JSON: \"m\" must be a positive integer");
  }
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array() || doc["coefficients"].empty()) {
    throw ParseError("series JSON: \"coefficients\" must be a non-empty array");
  }
  std::vector<Complex> coeffs;
  for (const auto& entry : doc["coefficients"]) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError("series JSON: each coefficient must be a [re, im] pair");
    }
    coeffs.emplace_back(component(entry[0], bits), component(entry[1], bits));
  }
  return FormalSeries(static_cast<unsigned>(doc["m"].get<long>()), std::move(coeffs));
}

FormalSeries read_series_file(const std::string& path, unsigned bits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open series file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_series_json(buf.str(), bits);
}

std::string series_to_json(const FormalSeries& f) {
  json doc;
  doc["m"] = f.m();
  doc["coefficients"] = json::array();
  for (const auto& c : f.coefficients()) {
    doc["coefficients"].push_back({c.real().to_string(), c.imag().to_string()});
  }
  return doc.dump();
}

}  // namespace borelsum
