#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "vtwist/census/census.hpp"
#include "vtwist/census/report.hpp"
#include "vtwist/errors.hpp"

using namespace vtwist;
using namespace vtwist::census;

namespace {

CurveConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "vtwist_census_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

const std::string good = "label = x\na_invariants = [0, 1, 1, -3, 1]\nconductor = 37\nroot_number = 1\n";

}  // namespace

TEST_CASE("config parsing is strict") {
  auto c = parse(good + "precision_digits = 60  # more\n");
  CHECK(c.label == "x");
  CHECK(c.precision_digits == 60);
  CHECK(c.curve().conductor() == 37);
  CHECK(parse(good).precision_digits == 50);
  CHECK_THROWS_AS(parse(good + "rank = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse(good + "conductor = 37\n"), ConfigError);
  CHECK_THROWS_AS(parse("label = x\nconductor = 37\nroot_number = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse(good + "precision_digits = 5\n"), ConfigError);
  CHECK_THROWS_AS(parse("label = x\na_invariants = [0, 1, 1, -3]\nconductor = 37\nroot_number = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("label = x\na_invariants = [0, 1, 1, -3, 1]\nconductor = 37\nroot_number = 0\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("label = x\na_invariants = [0, 1, 1, -3, 1]\nconductor = abc\nroot_number = 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse("label = x\na_invariants = [0, 1/2, 1, -3, 1]\nconductor = 37\nroot_number = 1\n").curve(),
                  ConfigError);
  // singular: y^2 = x^3
  CHECK_THROWS_AS(parse("label = x\na_invariants = [0, 0, 0, 0, 0]\nconductor = 1\nroot_number = 1\n").curve(),
                  ConfigError);
  CHECK_THROWS_AS(builtin_config("99z"), ConfigError);
  CHECK(builtin_config("11a1").curve().conductor() == 11);
}

TEST_CASE("wrong root number is caught before the census") {
  auto c = parse("label = x\na_invariants = [0, 1, 1, -3, 1]\nconductor = 37\nroot_number = -1\n");
  CensusOptions o;
  o.X = 50;
  CHECK_THROWS_AS(run_census(c, o), TheoryAlarm);
}

TEST_CASE("census up to 7 has one orbit") {
  CensusOptions o;
  o.X = 7;
  auto r = run_census(builtin_config("37b"), o);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].conductor == 7);
  CHECK(r.rows[0].decision == lvalue::Decision::Vanishes);
}

TEST_CASE("determinism across worker counts and resume") {
  auto cfg = builtin_config("37b");
  CensusOptions o;
  o.X = 300;
  o.out_path = tmp("w1.csv");
  auto r1 = run_census(cfg, o);
  o.workers = 3;
  o.out_path = tmp("w3.csv");
  run_census(cfg, o);
  CHECK(slurp(tmp("w1.csv")) == slurp(tmp("w3.csv")));

  o.workers = 2;
  o.out_path = tmp("resumed.csv");
  std::filesystem::remove(o.out_path);
  o.max_new_orbits = 9;
  auto part = run_census(cfg, o);
  CHECK_FALSE(part.complete);
  CHECK_FALSE(std::filesystem::exists(o.out_path));
  o.max_new_orbits.reset();
  o.resume = true;
  auto rest = run_census(cfg, o);
  CHECK(rest.complete);
  CHECK(slurp(tmp("resumed.csv")) == slurp(tmp("w1.csv")));

  // the report reproduces the summary from the file
  auto rows = read_census_csv(tmp("w1.csv"));
  CHECK(rows.size() == r1.rows.size());
  CHECK(summarize(rows, 300).str() == summarize(r1.rows, 300).str());
  for (std::size_t i = 1; i < r1.summary.ladder.size(); ++i) {
    CHECK(r1.summary.ladder[i].orbits >= r1.summary.ladder[i - 1].orbits);
    CHECK(r1.summary.ladder[i].vanishes >= r1.summary.ladder[i - 1].vanishes);
  }
  CHECK(r1.summary.skipped_bad_conductor > 0);
}

TEST_CASE("undecided rate below 5 percent at X = 500") {
  CensusOptions o;
  o.X = 500;
  auto r = run_census(builtin_config("37b"), o);
  CHECK(r.summary.undecided * 20 < r.summary.orbits);
  CHECK(r.summary.undecided == 0);
}

TEST_CASE("congruence sweep and fault injection") {
  auto cfg = builtin_config("37b");
  auto ok = run_congruence_sweep(cfg, 3, 200);
  CHECK(ok.pairs > 0);
  CHECK(ok.passed == ok.pairs);
  CHECK(run_congruence_sweep(cfg, 3, 6).pairs == 0);
  CHECK(run_congruence_sweep(cfg, 3, 7).pairs == 2);  // trivial chi with both characters mod 7
  auto bad = run_congruence_sweep(cfg, 3, 200, {{13, 0}});
  CHECK(bad.passed < bad.pairs);
  CHECK(bad.str(false).find("FAIL") != std::string::npos);
}

TEST_CASE("family reports") {
  auto r = run_family(kummer::FamilyKind::SixTorsion, {1, 2, 0, mpq_class(-1, 2)});
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].pass);
  CHECK(r.rows[1].pass);
  CHECK(r.rows[2].excluded);
  CHECK(r.rows[3].pass);
  CHECK_FALSE(r.rows[0].cubic_fields.empty());
  auto f = run_family(kummer::FamilyKind::FourTwo, {2});
  CHECK(f.rows[0].pass);
}

TEST_CASE("e37b samples vanish") {
  auto r = run_e37b(100000, 30, {1e4, 1e5}, 1, 3);
  CHECK(r.samples.size() == 3);
  for (auto& s : r.samples) CHECK(s.ok);
  CHECK(r.census.ladder.size() == 2);
}
