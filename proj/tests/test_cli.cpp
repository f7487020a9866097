#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ahg/config.hpp"
#include "ahg/report.hpp"

#include "test_util.hpp"

#include <cstdio>
#include <fstream>
#include <unistd.h>

using namespace ahg;

namespace {

std::string write_temp(const std::string& text) {
  static int counter = 0;
  std::string path = "/tmp/ahg-test-cfg-" + std::to_string(getpid()) + "-" +
                     std::to_string(counter++) + ".cfg";
  std::ofstream out(path);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("config grammar round trip") {
  ProblemConfig cfg = load_config(tu::fixture_path("ex71.cfg"));
  CHECK(cfg.d() == 2);
  CHECK(cfg.n() == 4);
  CHECK(cfg.radius == 12);
  CHECK(cfg.weight_cap == Rat(8));
  CHECK(cfg.degree_cap == 8);
  REQUIRE(cfg.basis.has_value());
  CHECK(cfg.basis->rows() == 4);
  CHECK(cfg.basis->cols() == 2);
  ProblemConfig back = parse_config(serialize_config(cfg));
  CHECK(back == cfg);
  // A second round trip is byte identical.
  CHECK(serialize_config(back) == serialize_config(cfg));
}

TEST_CASE("config parser rejections") {
  CHECK_THROWS_AS(parse_config("not-a-config\n{}"), config_error);
  CHECK_THROWS_AS(parse_config("ahg-config 2\n{}"), config_error);
  CHECK_THROWS_AS(parse_config("ahg-config 1\n{"), config_error);
  // Missing keys.
  CHECK_THROWS_AS(parse_config("ahg-config 1\n{\"A\": [[1,1]]}"), config_error);
  // Unknown key.
  CHECK_THROWS_AS(
      parse_config("ahg-config 1\n{\"A\": [[1,1]], \"beta\": [\"0\"], "
                   "\"w\": [\"1\",\"0\"], \"bogus\": 1}"),
      config_error);
  // Dimension mismatch: beta shorter than the rows of A.
  CHECK_THROWS_AS(
      parse_config("ahg-config 1\n{\"A\": [[1,1],[0,1]], \"beta\": [\"0\"], "
                   "\"w\": [\"1\",\"0\"]}"),
      config_error);
  // config_error is an invalid_argument (drives the CLI exit code).
  CHECK_THROWS_AS(parse_config("garbage"), std::invalid_argument);
}

TEST_CASE("polynomial parser units") {
  Polynomial p = parse_poly("2*Dt1^2*Dt2 - 1/3*Dt3", VarFamily::DT, 3);
  CHECK(p.coeff(tu::mono({2, 1, 0})) == Rat(2));
  CHECK(p.coeff(tu::mono({0, 0, 1})) == Rat(-1, 3));
  CHECK(p.term_count() == 2);
  // Juxtaposition without '*' and leading sign.
  Polynomial q = parse_poly("-Ds1 + Ds2^3", VarFamily::DS, 2);
  CHECK(q.coeff(tu::mono({1, 0})) == Rat(-1));
  CHECK(q.coeff(tu::mono({0, 3})) == Rat(1));
  CHECK(parse_poly("0", VarFamily::DT, 2).is_zero());
  CHECK_THROWS_AS(parse_poly("Dt9", VarFamily::DT, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t1 + $", VarFamily::T, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("s1", VarFamily::DS, 2), std::invalid_argument);
}

TEST_CASE("cli: analyze succeeds and is byte-deterministic") {
  std::string args =
      "analyze " + tu::fixture_path("ex71.cfg") + " --output structured";
  tu::CliResult a = tu::run_cli(args);
  tu::CliResult b = tu::run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
  Json rep = Json::parse(a.out);
  CHECK(rep["command"] == "analyze");
  CHECK(rep["fake_exponents"].size() == 3);
  CHECK(rep["standard_pairs"].size() == 4);
}

TEST_CASE("cli: text output also deterministic and non-empty") {
  std::string args = "analyze " + tu::fixture_path("ex71.cfg");
  tu::CliResult a = tu::run_cli(args);
  tu::CliResult b = tu::run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("groebner_basis") != std::string::npos);
}

TEST_CASE("cli: solve and verify exit zero on the first fixture") {
  tu::CliResult s = tu::run_cli("solve " + tu::fixture_path("ex71.cfg") +
                                " --output structured");
  CHECK(s.exit_code == 0);
  Json rep = Json::parse(s.out);
  CHECK(rep["violations_total"].get<int>() == 0);
  tu::CliResult v = tu::run_cli("verify " + tu::fixture_path("ex71.cfg") +
                                " --output structured");
  CHECK(v.exit_code == 0);
  CHECK(Json::parse(v.out)["command"] == "verify");
}

TEST_CASE("cli: precondition failures exit 1") {
  // Missing file.
  CHECK(tu::run_cli("analyze /nonexistent.cfg").exit_code == 1);
  // Malformed config.
  std::string bad = write_temp("ahg-config 1\n{\"A\": [[1,1]]}");
  CHECK(tu::run_cli("analyze " + bad).exit_code == 1);
  std::remove(bad.c_str());
  // Bad header line.
  std::string hdr = write_temp("wrong 1\n{}");
  CHECK(tu::run_cli("analyze " + hdr).exit_code == 1);
  std::remove(hdr.c_str());
  // Region plot needs a rank-2 lattice; the second fixture has rank 3.
  CHECK(tu::run_cli("plot " + tu::fixture_path("ex72.cfg")).exit_code == 1);
  // Unparsable perturbation polynomial.
  CHECK(tu::run_cli("solve " + tu::fixture_path("ex71.cfg") + " --q '+++'")
            .exit_code == 1);
  // Bad support-family selector.
  CHECK(tu::run_cli("solve " + tu::fixture_path("ex71.cfg") +
                    " --nprime '9,9'")
            .exit_code == 1);
  // Exponent index out of range.
  CHECK(tu::run_cli("solve " + tu::fixture_path("ex71.cfg") + " --exponent 7")
            .exit_code == 1);
}

TEST_CASE("cli: argument errors are not internal errors") {
  CHECK(tu::run_cli("frobnicate").exit_code != 0);
  CHECK(tu::run_cli("").exit_code != 0);
  CHECK(tu::run_cli("analyze").exit_code != 0);
  CHECK(tu::run_cli("solve " + tu::fixture_path("ex71.cfg") +
                    " --method nosuch")
            .exit_code != 0);
}

TEST_CASE("cli: selftest passes") {
  tu::CliResult r = tu::run_cli("selftest --output structured --seed 5");
  CHECK(r.exit_code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["passed"].get<bool>());
  CHECK(!rep["suites"].empty());
}

TEST_CASE("cli: search is deterministic and finds no counterexample") {
  std::string args = "search --count 3 --seed 9 --output structured";
  tu::CliResult a = tu::run_cli(args);
  tu::CliResult b = tu::run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  Json rep = Json::parse(a.out);
  CHECK(rep["counterexamples"].empty());
  CHECK(rep["summary"].get<std::string>().find("no counterexample") !=
        std::string::npos);
  CHECK(rep["instances"].size() == 3);
}

TEST_CASE("cli: region plot emits one hyperplane line per coordinate") {
  tu::CliResult r = tu::run_cli("plot " + tu::fixture_path("ex71.cfg") +
                                " --exponent 2 --radius 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  size_t lines = 0, pos = 0;
  while ((pos = r.out.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 4);  // one hyperplane per coordinate of the ambient space
  // Region labels name negative-support sets.
  CHECK(r.out.find("{1,3}") != std::string::npos);
}

TEST_CASE("cli: global flags override the config knobs") {
  tu::CliResult a = tu::run_cli("analyze " + tu::fixture_path("ex71.cfg") +
                                " --radius 6 --output structured");
  CHECK(a.exit_code == 0);
  Json rep = Json::parse(a.out);
  CHECK(rep["config"]["radius"].get<int>() == 6);
}

TEST_CASE("cli: check-sufficiency verdict on the first fixture") {
  tu::CliResult r = tu::run_cli("check-sufficiency " +
                                tu::fixture_path("ex71.cfg") +
                                " --output structured");
  CHECK(r.exit_code == 0);
  Json rep = Json::parse(r.out);
  REQUIRE(!rep["results"].empty());
  CHECK(rep["results"][0]["suffices"].get<bool>());
}
