#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ajlab/cli.hpp"
#include "ajlab/parse.hpp"
#include "ajlab/qhg.hpp"

using namespace ajlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("jones") {
  auto r = run({"jones", "--knot", "figure8", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "1");
  r = run({"jones", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("n") == 2);
  CHECK(parse_rational_function(j[0].at("value").get<std::string>()) == parse_rational_function("q^2 - q + 1 - q^-1 + q^-2"));
  CHECK(run({"jones"}).code == 2);
  CHECK(run({"jones", "--n", "0"}).code == 1);
  CHECK(run({"jones", "--n", "x"}).code == 2);
}

TEST_CASE("eliminate prints the A-polynomial factor") {
  auto r = run({"eliminate", "--knot", "figure8"});
  CHECK(r.code == 0);
  CHECK(parse_poly(trim(r.out)) == parse_poly(figure8::kAPoly));
  CHECK(r.err.find("discarded (l -> -l branch)") != std::string::npos);
  // round trip: the emitted text re-parses to the same canonical text
  CHECK(parse_poly(trim(r.out)).to_string() == trim(r.out));
  auto s = run({"eliminate", "--source", "saddle", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(parse_poly(nlohmann::json::parse(s.out).at("poly").get<std::string>()) == parse_poly(figure8::kAPoly));
  CHECK(run({"eliminate", "--order", "y"}).code == 1);
  CHECK(run({"eliminate", "--order", "1y"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--knot", "figure8", "--n", "1..8", "--q", "2,3,5/2"});
  CHECK(r.code == 0);
  std::istringstream rows(r.out);
  std::string n, q, res;
  int count = 0;
  while (rows >> n >> q >> res) {
    CHECK(res == "0");
    ++count;
  }
  CHECK(count == 24);
  CHECK(run({"verify", "--operator", "cubic"}).code == 0);
  // P0 without the inhomogeneous term is not an annihilator
  auto bad = run({"verify", "--inhom", "0", "--n", "1..2", "--q", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("verification failed") != std::string::npos);
}

TEST_CASE("numeric commands") {
  auto v = run({"volume"});
  CHECK(v.code == 0);
  CHECK(std::abs(std::stod(v.out) - 2.029883212819307) < 1e-9);
  auto s = run({"saddle", "--alpha", "-1,0", "--format", "json"});
  CHECK(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(std::abs(std::stod(j.at("imPhi").get<std::string>()) - 2.029883212819307) < 1e-9);
  auto a = run({"asympt"});
  CHECK(a.code == 0);
  std::istringstream in(a.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 4);
  CHECK(run({"asympt", "--N", "1"}).code == 1);
  CHECK(run({"saddle", "--alpha", "a,b"}).code == 2);
}

TEST_CASE("checks") {
  CHECK(run({"propcheck"}).code == 0);
  auto lit = run({"propcheck", "--sign", "-", "--minus-form", "literal"});
  CHECK(lit.code == 1);
  CHECK(lit.out.find("FAIL") != std::string::npos);
  auto aj = run({"ajcheck", "--format", "json"});
  CHECK(aj.code == 0);
  CHECK(nlohmann::json::parse(aj.out).at("pass").get<bool>());
  CHECK(run({"ajcheck", "--operator", "cubic"}).code == 0);
  CHECK(run({"propcheck", "--sign", "x"}).code == 2);
  CHECK(run({"propcheck", "--regions", "1,2"}).code == 2);
}

TEST_CASE("ratio and system") {
  auto r = run({"ratio", "--index", "k1", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto f = parse_rational_function(j.at("k1").get<std::string>());
  CHECK(f == parse_rational_function("Q + Q^-1 - q*Qt1 - q^-1*Qt1^-1"));
  CHECK(parse_rational_function(j.at("k1").get<std::string>()).to_string() == j.at("k1").get<std::string>());
  auto spec = R"({"nu": 4, "crossings": [{"sign": 1, "regions": [1, 2, 3, 4]}]})";
  auto s = run({"system", "--knot", spec, "--format", "json"});
  CHECK(s.code == 0);
  auto sj = nlohmann::json::parse(s.out);
  CHECK(sj.at("equations").size() == 5);
  for (const auto& e : sj.at("equations")) {
    auto text = e.at("poly").get<std::string>();
    CHECK(parse_poly(text).to_string() == text);
  }
}

TEST_CASE("exit codes and malformed input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"jones", "--n", "1", "--bogus"}).code == 2);
  CHECK(run({"eliminate", "--knot", "/nonexistent/spec.json"}).code == 2);
  CHECK(run({"eliminate", "--knot", "{not json"}).code == 2);
  CHECK(run({"eliminate", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--operator", "E +"}).code == 2);
}

TEST_CASE("output files and idempotence") {
  auto path = temp_path("ajlab_cli_test_out.txt");
  std::filesystem::remove(path);
  auto r1 = run({"eliminate", "--format", "json", "--out", path.string()});
  CHECK(r1.code == 0);
  CHECK(r1.out.empty());
  std::ifstream in(path);
  std::stringstream a;
  a << in.rdbuf();
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eliminate", "--format", "json"},
           {"jones", "--n", "1..4"},
           {"ratio"},
           {"system", "--source", "saddle"},
           {"volume", "--format", "json"},
           {"propcheck", "--format", "json"},
           {"asympt", "--N", "100,200"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"eliminate", "--format", "json"}).out == a.str());
  std::filesystem::remove(path);
}

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("3") == std::vector<long>{3});
  CHECK(cli::parse_range("1..3,7") == std::vector<long>{1, 2, 3, 7});
  CHECK_THROWS_AS(cli::parse_range("3..1"), ParseError);
  CHECK_THROWS_AS(cli::parse_range("a"), ParseError);
}
