#include <doctest.h>

#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "heosc/tables.hpp"

using namespace heosc;

TEST_CASE("sweep range: parsing and values") {
  const SweepRange def = parse_sweep_range("0.5:5:0.5");
  CHECK(def.values().size() == 10);
  CHECK(def.values().front() == 0.5);
  CHECK(def.values().back() == doctest::Approx(5.0).epsilon(1e-12));

  const SweepRange two = parse_sweep_range("0.5:1:0.5");
  CHECK(two.values().size() == 2);

  CHECK_THROWS_AS(parse_sweep_range("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_range("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_range("1:0.5:0.5").values(),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_range("1:2:0").values(), std::invalid_argument);
  CHECK_THROWS_AS(parse_sweep_range("1:2:0.5junk"), std::invalid_argument);
}

TEST_CASE("format_double: shortest round-trip representation") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.22725) == "-0.22725");

  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int k = 0; k < 500; ++k) {
    const double x = dist(rng) * std::pow(10.0, (k % 25) - 12);
    const std::string text = format_double(x);
    double back = 0.0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), back);
    REQUIRE(res.ec == std::errc());
    CHECK(back == x);
  }
}

TEST_CASE("sweep CSV: fixed header and deterministic bytes") {
  std::vector<SweepRecord> rows = {
      {1.0, 1.5, 1.5, -0.22725, 1.2635, 1.0481, -2.8827, 5.6e-7, true},
      {1.5, 0.5, 5.0, 0.9977, 2.1, 0.23, -8.8, 1.32, false},
  };
  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, rows);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n1,n2,n3,cos_theta,tan_alpha,r_bohr,energy_hartree,"
                      "residual,converged\n", 0) == 0);
  CHECK(a.str().find("1,1.5,1.5,-0.22725,1.2635,1.0481,-2.8827,5.6e-07,true\n") !=
        std::string::npos);
  CHECK(a.str().find("false\n") != std::string::npos);
}

TEST_CASE("fixtures: parser accepts the documented format") {
  std::istringstream in(
      "# comment line\n"
      "\n"
      "1,1.5,1.5,cos_theta,-0.22725,5e-4\n"
      "1,1.5,1.5,r,1.0481,5e-3   # trailing comment\n"
      "2,2,2,residual,2.7261e-06,10\n");
  const auto entries = parse_fixtures(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].quantity == FixtureEntry::Quantity::cos_theta);
  CHECK(entries[0].value == -0.22725);
  CHECK(entries[1].tolerance == 5e-3);
  CHECK(entries[2].quantity == FixtureEntry::Quantity::residual);
}

TEST_CASE("fixtures: malformed lines are reported with the line number") {
  std::istringstream missing("1,1.5,1.5,cos_theta,-0.22725\n");
  CHECK_THROWS_WITH_AS(parse_fixtures(missing),
                       doctest::Contains("line 1"), std::runtime_error);

  std::istringstream bad_quantity(
      "# header\n"
      "1,1,1,bogus,1.0,1e-3\n");
  CHECK_THROWS_WITH_AS(parse_fixtures(bad_quantity),
                       doctest::Contains("line 2"), std::runtime_error);

  std::istringstream bad_tolerance("1,1,1,r,1.0,-1\n");
  CHECK_THROWS_AS(parse_fixtures(bad_tolerance), std::runtime_error);

  std::istringstream bad_n("0.25,1,1,r,1.0,1e-3\n");
  CHECK_THROWS_AS(parse_fixtures(bad_n), std::runtime_error);
}

TEST_CASE("embedded fixtures: coverage of all tables and n1 blocks") {
  const auto& entries = embedded_fixtures();
  CHECK(entries.size() >= 40);

  std::set<std::string> quantities;
  std::set<double> n1_blocks;
  for (const FixtureEntry& e : entries) {
    quantities.insert(quantity_name(e.quantity));
    n1_blocks.insert(e.n1);
  }
  CHECK(quantities.size() == 5);
  CHECK(n1_blocks ==
        std::set<double>{0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0});

  // acceptance-named spot values present verbatim
  bool has_gs_cos = false, has_222_r = false;
  for (const FixtureEntry& e : entries) {
    if (e.n1 == 1 && e.n2 == 1.5 && e.n3 == 1.5 &&
        e.quantity == FixtureEntry::Quantity::cos_theta &&
        e.value == -0.22725) {
      has_gs_cos = true;
    }
    if (e.n1 == 2 && e.n2 == 2 && e.n3 == 2 &&
        e.quantity == FixtureEntry::Quantity::r && e.value == 3.152) {
      has_222_r = true;
    }
  }
  CHECK(has_gs_cos);
  CHECK(has_222_r);
}

TEST_CASE("run_sweep: tiny range emits the full cube in order") {
  SolverOptions opts;
  opts.resolution = 120;  // structure test only; values are not asserted
  const auto rows = run_sweep(parse_sweep_range("0.5:1:0.5"), opts);
  REQUIRE(rows.size() == 8);
  // lexicographic (n1, n2, n3) order
  const double want[8][3] = {
      {0.5, 0.5, 0.5}, {0.5, 0.5, 1.0}, {0.5, 1.0, 0.5}, {0.5, 1.0, 1.0},
      {1.0, 0.5, 0.5}, {1.0, 0.5, 1.0}, {1.0, 1.0, 0.5}, {1.0, 1.0, 1.0},
  };
  for (int i = 0; i < 8; ++i) {
    CHECK(rows[i].n1 == want[i][0]);
    CHECK(rows[i].n2 == want[i][1]);
    CHECK(rows[i].n3 == want[i][2]);
    CHECK(std::isfinite(rows[i].residual));
  }
}
