#include <cctype>
#include <charconv>
#include <string>

#include "borelsum/cli.hpp"
#include "borelsum/errors.hpp"

namespace borelsum::cli {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, unsigned bits) : text_(text), bits_(bits) {}

  Real parse() {
    Real value = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Real sum() {
    Real value = product();
    while (true) {
      skip_space();
      if (accept('+')) value += product();
      else if (accept('-')) value -= product();
      else return value;
    }
  }

  Real product() {
    Real value = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Real divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Real unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Real primary() {
    skip_space();
    if (accept('(')) {
      Real value = sum();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return value;
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      return number();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "pi") return Real::pi(bits_);
    if (name == "ln2") return Real::ln2(bits_);
    if (name == "e") return exp(Real(1L, bits_));
    if (name.empty()) fail("expected a number");
    fail("unknown name '" + std::string(name) + "'");
  }

  Real number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    return Real::parse(text_.substr(start, pos_ - start), bits_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot evaluate '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  unsigned bits_;
  std::size_t pos_ = 0;
};

std::size_t parse_index(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ParseError("malformed index list '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ParseError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

Real parse_expression(std::string_view text, unsigned bits) { return ExpressionParser(text, bits).parse(); }

std::vector<std::size_t> parse_n_list(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t colon = text.find(':', start);
      parts.push_back(parse_index(text.substr(start, colon - start), text));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() > 3) throw ParseError("malformed range '" + std::string(text) + "' (expected a:b or a:b:step)");
    std::size_t step = parts.size() == 3 ? parts[2] : 1;
    if (step == 0 || parts[0] > parts[1]) throw ParseError("empty range '" + std::string(text) + "'");
    for (std::size_t n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_index(text.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void validate(const RunRequest& request) {
  if (request.series_path.empty() == request.builtin.empty()) {
    throw ParseError("exactly one of --series and --builtin is required");
  }
  if (!(request.z_modulus > 0L)) throw ParseError("--z-mod must be positive");
  if (!(request.lambda > 0L)) throw ParseError("--lambda must be positive");
  if (!(request.tol > 0L)) throw ParseError("--tol must be positive");
  switch (request.method) {
    case Method::least_term:
      if (!request.r) throw ParseError("least-term needs --r");
      if (!(*request.r > 0L)) throw ParseError("--r must be positive");
      break;
    case Method::oracle:
      if (request.builtin.empty()) throw ParseError("oracle needs --builtin (euler, example2 or const1)");
      break;
    default:
      if (request.N.empty()) throw ParseError("--N or --N-range is required for this method");
      break;
  }
  if ((request.A || request.C) && !request.B) throw ParseError("--A and --C need --B");
  if (request.A && !(*request.A > 0L)) throw ParseError("--A must be positive");
  if (request.C && !(*request.C > 0L)) throw ParseError("--C must be positive");
  if (request.B && !(*request.B > 0L)) throw ParseError("--B must be positive");
}

}  // namespace borelsum::cli
