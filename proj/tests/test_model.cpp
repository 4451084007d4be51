#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "heosc/constants.hpp"
#include "heosc/model.hpp"

using namespace heosc;

TEST_CASE("quantum numbers: half-integers and integers are accepted") {
  const QuantumNumbers gs = validate_quantum_numbers(1.0, 1.5, 1.5);
  CHECK(gs.n1 == 1.0);
  CHECK(gs.n2 == 1.5);
  CHECK(gs.n3 == 1.5);
  CHECK_NOTHROW(validate_quantum_numbers(5.0, 5.0, 5.0));
  CHECK_NOTHROW(validate_quantum_numbers(0.5, 0.5, 0.5));

  // accepts exactly {k/2 : k integer, k >= 1}
  for (int k = 1; k <= 24; ++k) {
    CHECK_NOTHROW(validate_quantum_numbers(k / 2.0, 1.0, 1.0));
  }
}

TEST_CASE("quantum numbers: rejects non-half-integers and out-of-range") {
  CHECK_THROWS_AS(validate_quantum_numbers(0.25, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_quantum_numbers(1.0, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_quantum_numbers(1.0, 1.0, -1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_quantum_numbers(1.0, 1.0, 1.5 + 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      validate_quantum_numbers(std::nan(""), 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(validate_quantum_numbers(
                      std::numeric_limits<double>::infinity(), 1.0, 1.0),
                  std::invalid_argument);
  // within the 1e-12 snap tolerance the value is accepted as given
  CHECK_NOTHROW(validate_quantum_numbers(1.5 + 1e-13, 1.0, 1.0));
}

TEST_CASE("angular config: rho from the law of cosines") {
  // perpendicular equal radii
  const AngularConfig perp = make_config(0.0, 1.0);
  CHECK(perp.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  // published ground-state configuration (high-precision oracle value)
  const AngularConfig gs = make_config(-0.22725, 1.2635);
  CHECK(gs.rho == doctest::Approx(1.7806439846302798).epsilon(1e-12));

  // near-degenerate corner of the search domain
  const AngularConfig corner = make_config(0.99999, 1.00001);
  CHECK(corner.rho == doctest::Approx(4.4721694958934640e-3).epsilon(1e-10));
}

TEST_CASE("angular config: domain violations") {
  CHECK_THROWS_AS(make_config(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_config(-1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_config(1.2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_config(0.0, 0.999), std::invalid_argument);
  CHECK_THROWS_AS(make_config(std::nan(""), 1.5), std::invalid_argument);
}

TEST_CASE("angular config: invariant holds to machine precision") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> cos_dist(-0.99999, 0.99999);
  std::uniform_real_distribution<double> tan_dist(1.0, 10.0);
  for (int k = 0; k < 500; ++k) {
    const AngularConfig cfg = make_config(cos_dist(rng), tan_dist(rng));
    const double lhs = cfg.rho * cfg.rho;
    const double rhs = 1.0 + cfg.tan_alpha * cfg.tan_alpha -
                       2.0 * cfg.tan_alpha * cfg.cos_theta;
    CHECK(std::fabs(lhs - rhs) <= 1e-15 * std::max(1.0, rhs));
    CHECK(cfg.rho > 0.0);
    CHECK(cfg.sin_theta > 0.0);
  }
}

TEST_CASE("unit conversion: published ground-state energy in eV") {
  CHECK(convert(-2.8827, Unit::hartree, Unit::ev) ==
        doctest::Approx(-78.44).epsilon(0.01 / 78.44));
  CHECK(convert(0.0, Unit::hartree, Unit::ev) == 0.0);
  CHECK(convert(1.0, Unit::bohr, Unit::angstrom) ==
        doctest::Approx(0.529177).epsilon(1e-6));
}

TEST_CASE("unit conversion: invertible, unknown pairs rejected") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> val(-100.0, 100.0);
  for (int k = 0; k < 200; ++k) {
    const double x = val(rng);
    CHECK(convert(convert(x, Unit::hartree, Unit::ev), Unit::ev,
                  Unit::hartree) == doctest::Approx(x).epsilon(1e-15));
    CHECK(convert(convert(x, Unit::bohr, Unit::angstrom), Unit::angstrom,
                  Unit::bohr) == doctest::Approx(x).epsilon(1e-15));
  }
  CHECK_THROWS_AS(convert(1.0, Unit::hartree, Unit::angstrom),
                  std::invalid_argument);
  CHECK_THROWS_AS(convert(1.0, Unit::bohr, Unit::ev), std::invalid_argument);
  CHECK_THROWS_AS(convert(1.0, Unit::bohr, Unit::bohr), std::invalid_argument);
}

TEST_CASE("constants: exact normalization") {
  CHECK(2.0 * constants::e0_hartree == 1.0);
  CHECK(constants::bohr_radius_angstrom > 0.0);
  CHECK(constants::hartree_ev > 0.0);
}
