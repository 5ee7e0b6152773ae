#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbern/cli.hpp"
#include "qbern/detrep.hpp"
#include "qbern/io.hpp"
#include "qbern/series.hpp"

using namespace qbern;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("qbern_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("poly") {
  const Json one = run_json({"poly", "--kind", "1", "--n", "1"});
  CHECK(one["polynomials"][0]["coefficients"] == Json::array({"1"}));
  CHECK(one["polynomials"][1]["coefficients"] == Json::array({"-1/2", "1"}));
  CHECK(run_json({"poly", "--kind", "1", "--n", "0"})["polynomials"].size() == 1);
  for (const char* kind : {"1", "2", "3"})
    for (const char* q : {"1/16", "1/4", "9/16"})
      for (const char* alpha : {"-1/2", "0", "1/2", "1"}) {
        const Json j = run_json({"poly", "--kind", kind, "--q", q, "--alpha", alpha, "--n", "5", "--via", "both"});
        for (const Json& row : j["polynomials"]) CHECK(row["match"] == true);
      }
}

TEST_CASE("poly JSON round trip") {
  const auto ctx = QContext::from_q(Rational(9, 16), Rational(1));
  for (int k = 1; k <= 3; ++k) {
    const Json j = run_json({"poly", "--kind", std::to_string(k), "--q", "9/16", "--alpha", "1", "--n", "6"});
    const auto table = bernoulli_poly_det_table(ctx, kind_from_int(k), 6);
    for (long n = 0; n <= 6; ++n) CHECK(poly_from_json(j["polynomials"][n]["coefficients"]) == table[n]);
  }
}

TEST_CASE("numbers") {
  const Json j = run_json({"numbers", "--kind", "1", "--n", "8"});
  CHECK(j["numbers"][0]["value"] == "1");
  CHECK(j["numbers"][1]["value"] == "-1/2");
  const Json second = run_json({"numbers", "--kind", "2", "--n", "8"});
  for (long n = 0; n <= 8; ++n) CHECK(j["numbers"][n]["value"] == second["numbers"][n]["value"]);
  const Run csv = run({"numbers", "--kind", "3", "--n", "4", "--via", "both", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,value,match\n", 0) == 0);
  CHECK(csv.out.find("false") == std::string::npos);
}

TEST_CASE("golden files") {
  const std::filesystem::path dir = QBERN_GOLDEN_DIR;
  const std::vector<std::string> common{"--kind", "1", "--q", "1/4", "--alpha", "1/2", "--n", "6", "--format"};
  for (const char* cmd : {"poly", "numbers"})
    for (const char* fmt : {"json", "csv"}) {
      std::vector<std::string> args{cmd};
      args.insert(args.end(), common.begin(), common.end());
      args.push_back(fmt);
      const Run a = run(args);
      const Run b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      const auto file = dir / (std::string(cmd) + "_k1_q1-4_a1-2_n6." + fmt);
      CHECK(a.out == slurp(file));
    }
  // the golden polynomials are the generating-function ones
  const Json j = Json::parse(slurp(dir / "poly_k1_q1-4_a1-2_n6.json"));
  const auto oracle = oracle_bernoulli_table(QContext::from_q(Rational(1, 4), Rational(1, 2)), Kind::first, 6);
  for (long n = 0; n <= 6; ++n) CHECK(poly_from_json(j["polynomials"][n]["coefficients"]) == oracle[n]);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"poly", "--bogus"}).code == exit_usage);
  CHECK(run({"poly", "--kind", "4"}).code == exit_usage);
  CHECK(run({"poly", "--q", "1/4", "--q-quarter", "1/2"}).code == exit_usage);
  CHECK(run({"poly", "--alpha", "x"}).code == exit_usage);
  CHECK(run({"poly", "--format", "xml"}).code == exit_usage);
  CHECK(run({"zeros", "--kind", "1"}).code == exit_usage);
  const Run exact = run({"poly", "--kind", "3", "--q", "1/2", "--n", "3"});
  CHECK(exact.code == exit_failure);
  CHECK(exact.err.find("not rational") != std::string::npos);
  CHECK(run({"poly", "--q", "3/2"}).code == exit_failure);
  CHECK(run({"poly", "--help"}).code == exit_ok);
}

TEST_CASE("zeros") {
  for (const char* kind : {"2", "3"}) {
    const Json j = run_json({"zeros", "--kind", kind, "--q", "1/2", "--precision", "128"});
    CHECK(j["zeros"].size() == 3);
    for (const Json& z : j["zeros"]) CHECK(z["below_tolerance"] == true);
  }
  const Run csv = run({"zeros", "--q", "1/2", "--format", "csv"});
  CHECK(csv.out.find("zeta,4.694886166364046960741311316") != std::string::npos);
}

TEST_CASE("asympt") {
  const Json j = run_json({"asympt", "--format", "json", "--q", "1/2", "--n-max", "16"});
  CHECK(j["decreasing"] == true);
  // z = 0 rows are the Bernoulli numbers
  const Json zero = run_json({"asympt", "--format", "json", "--q", "1/2", "--z", "0", "--n-min", "1", "--n-max", "10"});
  const Json nums = run_json({"numbers", "--kind", "2", "--q", "1/2", "--n", "10"});
  for (long n = 1; n <= 10; ++n) CHECK(zero["rows"][n - 1]["exact_value"] == nums["numbers"][n]["value"]);
  const Run csv = run({"asympt", "--kind", "3", "--n-max", "8"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,exact_value,float_value,leading_term,abs_ratio_minus_1\n", 0) == 0);
  CHECK(csv.out.find("@128b") != std::string::npos);
  CHECK(csv.err.find("decreasing=") != std::string::npos);
  CHECK(run({"asympt", "--n-min", "0"}).code == exit_usage);
}

TEST_CASE("expand") {
  const auto z3 = write_temp("z3.json", R"({"coefficients": ["0", "0", "0", "1"], "tail": "finite"})");
  const Json j = run_json({"expand", "--input", z3.string(), "--q", "1/2", "--terms", "5", "--at", "1/3"});
  CHECK(j["L"][4] == "0");
  CHECK(j["L"][5] == "0");
  CHECK(j["reconstruction"]["exact_identity"] == true);

  const auto p1 = write_temp("p1.json", R"({"coefficients": ["1", "-1"], "tail": "finite"})");
  CHECK(run_json({"expand", "--input", p1.string(), "--q", "1/2", "--terms", "2"})["L"][0] == "1/2");

  const auto geo = write_temp("geo.json", R"({"coefficients": ["1", "1/4"], "tail": {"geometric": "1/4"}})");
  const Json g = run_json({"expand", "--input", geo.string(), "--q", "1/2", "--terms", "3", "--at", "1/5"});
  CHECK(g["tail_bounds"].size() == 4);
  CHECK_FALSE(g["reconstruction"].contains("exact_identity"));

  const auto wide = write_temp("wide.json", R"({"coefficients": ["1"], "tail": {"geometric": "5"}})");
  CHECK(run({"expand", "--input", wide.string(), "--q", "1/2"}).code == exit_failure);
  const auto bad = write_temp("bad.json", R"({"coefficients": 3})");
  CHECK(run({"expand", "--input", bad.string()}).code == exit_usage);
  CHECK(run({"expand", "--input", "/nonexistent/stream.json"}).code == exit_usage);
  CHECK(run({"expand"}).code == exit_usage);

  const Run csv = run({"expand", "--input", z3.string(), "--q", "1/2", "--terms", "4", "--at", "1/3", "--format", "csv"});
  CHECK(csv.out.find("z,value,exact_identity\n1/3,") != std::string::npos);
}

TEST_CASE("appell") {
  const Json j = run_json({"appell", "--kind", "3", "--q", "1/16", "--n-max", "6"});
  REQUIRE(j.size() == 6);
  for (const Json& e : j) {
    CHECK(e["kind"] == 3);
    CHECK(e["pass"] == true);
  }
}

TEST_CASE("stream JSON") {
  const auto s = CoefficientStream::geometric({Rational(1), Rational(-2, 3)}, Rational(1, 2));
  const Json j = stream_to_json(s);
  CHECK(j["tail"]["geometric"] == "1/2");
  const auto back = stream_from_json(j);
  CHECK(back.coefficients == s.coefficients);
  CHECK(back.geometric_ratio == s.geometric_ratio);
  CHECK(stream_from_json(Json::parse(R"({"coefficients": [1, "2"]})")).finite());
  CHECK_THROWS_AS(stream_from_json(Json::parse(R"({"coefficients": ["1"], "tail": "other"})")), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"("1")")), std::invalid_argument);
}
