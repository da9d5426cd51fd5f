#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "borelsum/cli.hpp"
#include "borelsum/errors.hpp"
#include "borelsum/oracle.hpp"
#include "borelsum/reproduce.hpp"

using namespace borelsum;
using namespace borelsum::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "borelsum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Real field(const nlohmann::json& j, const char* a, const char* b = nullptr) {
  const auto& v = b ? j.at(a).at(b) : j.at(a);
  return Real::parse(v.get<std::string>(), 512);
}

std::string temp_path(const char* name) { return std::string("/tmp/borelsum_test_") + name; }

Real euler_at_three(unsigned bits) {
  const PrecisionConfig cfg(bits);
  return laplace_quadrature(builtin_evaluator("euler", bits), Complex::zero(bits), Real(0L, bits),
                            Complex(3, 0, bits), Real(1e-25, bits), cfg)
      .real();
}

}  // namespace

TEST_CASE("parse_expression") {
  CHECK(abs(parse_expression("2/ln2", 256) - Real(2L, 256) / Real::ln2(256)) == 0);
  CHECK(abs(parse_expression("pi/3", 256) - Real::pi(256) / 3L) == 0);
  CHECK(parse_expression("-1.5e-3", 256) == Real::parse("-1.5e-3", 256));
  CHECK(abs(parse_expression(" (1 + 2) * pi ", 256) - Real::pi(256) * 3L) == 0);
  CHECK(parse_expression("2*e", 256) == exp(Real(1L, 256)) * 2L);
  CHECK(parse_expression("10", 256) == 10L);
  for (auto bad : {"", "2/0", "foo", "1+", "(1", "1)", "3pi", "1..2"}) {
    CHECK_THROWS_AS(parse_expression(bad, 256), ParseError);
  }
}

TEST_CASE("parse_n_list") {
  CHECK(parse_n_list("10,14,18") == std::vector<std::size_t>{10, 14, 18});
  CHECK(parse_n_list("10:13") == std::vector<std::size_t>{10, 11, 12, 13});
  CHECK(parse_n_list("10:40:10") == std::vector<std::size_t>{10, 20, 30, 40});
  CHECK(parse_n_list("7") == std::vector<std::size_t>{7});
  for (auto bad : {"", "a", "1,,2", "10:5", "1:2:3:4", "10:20:0", "-3", "1, 2"}) {
    CHECK_THROWS_AS(parse_n_list(bad), ParseError);
  }
}

TEST_CASE("parse_format") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("sum: Euler factorial series against the oracle") {
  // lambda = 1, N = 60 converges algebraically; the heuristic error tracks the true error
  auto o = invoke({"sum", "--builtin", "euler", "--method", "factorial", "--lambda", "1", "--z-mod", "3", "--N", "60",
                   "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 1);
  Real est = field(j[0], "estimate", "re");
  Real err = abs(est - euler_at_three(256));
  CHECK(err <= field(j[0], "heuristic_error") * 2L);
  CHECK(err < 1e-7);

  // an admissible larger lambda reaches 1e-10
  o = invoke({"sum", "--builtin", "euler", "--method", "factorial", "--lambda", "1.2", "--z-mod", "3", "--N", "300",
              "--precision-bits", "512", "--format", "json"});
  REQUIRE(o.code == 0);
  j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[0], "estimate", "re") - euler_at_three(512)) < 1e-10);
  CHECK(j[0]["diagnostics"]["warnings"].empty());
  CHECK(o.err.empty());
}

TEST_CASE("sum: oracle on example 2") {
  auto o = invoke({"sum", "--builtin", "example2", "--method", "oracle", "--z-mod", "5", "--tol", "1e-12",
                   "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[0], "estimate", "re") - Real::parse("0.2357006", 512)) <= 1e-7);
  CHECK(j[0]["method"] == "oracle");

  o = invoke({"sum", "--builtin", "psi", "--method", "oracle", "--z-mod", "5"});
  CHECK(o.code == 1);
}

TEST_CASE("sum: least-term on psi") {
  auto o = invoke({"sum", "--builtin", "psi", "--method", "least-term", "--r", "2", "--z-mod", "12", "--format",
                   "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j[0]["N"] == 72);
  CHECK(abs(field(j[0], "estimate", "re") - Real::parse("0.26256292290", 512)) <= 1e-11);
  CHECK(invoke({"sum", "--builtin", "psi", "--method", "least-term", "--z-mod", "12"}).code == 1);
}

TEST_CASE("sum: rigorous bound with an envelope") {
  auto o = invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--N", "20", "--A", "3.2", "--B", "0.1", "--format",
                   "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  REQUIRE(j[0].contains("rigorous_bound"));
  CHECK(abs(field(j[0], "estimate", "re") - euler_at_three(256)) <= field(j[0], "rigorous_bound"));
}

TEST_CASE("errors map to exit codes") {
  auto o = invoke({"sum", "--series", "/nonexistent.json", "--z-mod", "3", "--N", "5"});
  CHECK(o.code == 1);
  CHECK(o.err.find("error:") != std::string::npos);

  std::string bad = temp_path("malformed.json");
  std::ofstream(bad) << "{\"m\": 1, \"coefficients\": [[\"1\", \"0\"],";
  o = invoke({"sum", "--series", bad, "--method", "factorial", "--z-mod", "3", "--N", "5"});
  CHECK(o.code == 1);
  std::remove(bad.c_str());

  // truncation beyond the stored coefficients
  std::string small = temp_path("small.json");
  std::ofstream(small) << R"({"m": 1, "coefficients": [["0","0"], ["1","0"], ["1","0"]]})";
  o = invoke({"sum", "--series", small, "--z-mod", "3", "--N", "5"});
  CHECK(o.code == 2);
  std::remove(small.c_str());

  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "-3", "--N", "5"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--z-arg", "pi", "--N", "5"}).code == 2);
  CHECK(invoke({"sum", "--builtin", "euler", "--series", "x.json", "--z-mod", "3", "--N", "5"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "nope", "--z-mod", "3", "--N", "5"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "3"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--N", "5", "--method", "magic"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--N", "5", "--precision-bits", "20"}).code == 1);
  CHECK(invoke({"sum", "--builtin", "psi", "--method", "factorial", "--z-mod", "3", "--N", "5"}).code == 2);
  CHECK(invoke({"bogus"}).code == 1);
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("series file input") {
  std::string path = temp_path("inv_sq.json");
  {
    std::ofstream file(path);
    file << R"({"m": 1, "coefficients": [["0","0"], ["0","0"], ["1","0"])";
    for (int i = 0; i < 60; ++i) file << R"(, ["0", "0"])";
    file << "]}";
  }
  auto o = invoke({"sum", "--series", path, "--lambda", "8", "--z-mod", "3", "--N", "55", "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[0], "estimate", "re") - Real(1L, 512) / 9L) <= 1e-15);
  std::remove(path.c_str());
}

TEST_CASE("table: psi by branches") {
  auto o = invoke({"table", "--builtin", "psi", "--method", "branch", "--lambda", "2/ln2", "--z-mod", "12",
                   "--N-range", "10,14,18,25,33,40", "--format", "csv"});
  REQUIRE(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "N,estimate_re,estimate_im,heuristic_error,rigorous_bound");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rfind("10,", 0) == 0);
  CHECK(rows[5].rfind("40,", 0) == 0);
  Real r14 = Real::parse(rows[1].substr(3, rows[1].find(',', 3) - 3), 256);
  CHECK(abs(r14 - Real::parse("0.26256292301", 256)) <= 1e-11);
  CHECK(o.err.empty());
}

TEST_CASE("table: generalized psi and example 2") {
  auto o = invoke({"table", "--builtin", "psi", "--method", "generalized", "--lambda", "2/ln2", "--z-mod", "12",
                   "--N-range", "30,54,75", "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 3);
  CHECK(abs(field(j[1], "estimate", "re") - Real::parse("0.2625629228786", 512)) <= 1e-13);

  o = invoke({"table", "--builtin", "example2", "--method", "generalized", "--lambda", "1", "--z-mod", "5",
              "--N-range", "10,100", "--format", "json"});
  REQUIRE(o.code == 0);
  j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[0], "estimate", "re") - Real::parse("0.235584", 512)) <= 1e-6);
  CHECK(abs(field(j[1], "estimate", "re") - Real::parse("0.159338", 512)) <= 1e-5);
  CHECK(j[1]["diagnostics"]["divergence_suspected"] == true);
  CHECK(o.err.find("warning: lambda") != std::string::npos);

  o = invoke({"table", "--builtin", "example2", "--method", "generalized", "--lambda", "0.6", "--theta", "pi/3",
              "--z-mod", "5", "--N-range", "50,150", "--format", "json"});
  REQUIRE(o.code == 0);
  j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[1], "estimate", "re") - Real::parse("0.2357024", 512)) <= 1e-7);
  CHECK(abs(field(j[1], "estimate", "im") + Real::parse("0.25e-6", 512)) <= 1e-8);
  CHECK(o.err.empty());
}

TEST_CASE("lambda beyond the admissible range is accepted with a warning") {
  auto o = invoke({"table", "--builtin", "psi", "--method", "branch", "--lambda", "4", "--z-mod", "12", "--N-range",
                   "14,18", "--format", "json"});
  REQUIRE(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(abs(field(j[1], "estimate", "re") - Real::parse("0.26256292287739", 512)) <= 1e-14);
  CHECK(o.err.find("warning: lambda") != std::string::npos);
  CHECK(j[0]["diagnostics"]["warnings"].size() == 1);
}

TEST_CASE("JSON schema and determinism") {
  std::vector<std::string> args{"table", "--builtin", "euler", "--z-mod", "4", "--z-arg", "0.3",
                                "--N-range", "2:6:2", "--format", "json"};
  auto a = invoke(args);
  auto b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  REQUIRE(j.size() == 3);
  for (const auto& row : j) {
    CHECK(row.contains("N"));
    CHECK(row["estimate"].contains("re"));
    CHECK(row["estimate"].contains("im"));
    CHECK(row["heuristic_error"].is_string());
    CHECK_FALSE(row.contains("rigorous_bound"));
    CHECK(row["method"] == "factorial");
    CHECK(row["diagnostics"].contains("divergence_suspected"));
  }
  CHECK(j[2]["N"] == 6);
}

TEST_CASE("text output and --out") {
  std::string path = temp_path("out.txt");
  auto o = invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--N", "4", "--out", path});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream file(path);
  std::string header;
  std::getline(file, header);
  CHECK(header.rfind("N", 0) == 0);
  std::remove(path.c_str());
  CHECK(invoke({"sum", "--builtin", "euler", "--z-mod", "3", "--N", "4", "--out", "/nonexistent/x"}).code == 1);
}

TEST_CASE("compare-bounds") {
  auto o = invoke({"compare-bounds", "--format", "csv"});
  REQUIRE(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,log_r_as_ln2,log_r_as_half_pi,log_r_fact");
  std::vector<double> col1;
  while (std::getline(lines, line)) {
    std::size_t a = line.find(',');
    col1.push_back(std::stod(line.substr(a + 1, line.find(',', a + 1) - a - 1)));
  }
  REQUIRE(col1.size() == 31);
  std::size_t best = 0;
  for (std::size_t n = 1; n < col1.size(); ++n) {
    if (col1[n] < col1[best]) best = n;
  }
  CHECK((best == 9 || best == 10));

  CHECK(invoke({"compare-bounds", "--z-mod", "0.5", "--B", "1"}).code == 2);
  CHECK(invoke({"compare-bounds", "--n-max", "5", "--format", "json"}).code == 0);
}

TEST_CASE("reproduce") {
  auto o = invoke({"reproduce", "table2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("table2: PASS") != std::string::npos);
  o = invoke({"reproduce", "fig2", "--format", "json"});
  CHECK(o.code == 0);
  auto j = nlohmann::json::parse(o.out);
  CHECK(j["passed"] == true);
  CHECK(invoke({"reproduce", "table9"}).code == 1);
  CHECK(reproduce_targets().size() == 7);
}
