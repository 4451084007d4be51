#include <doctest.h>

#include <cmath>
#include <random>

#include "heosc/coupling.hpp"

using namespace heosc;

namespace {

AngularConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> cos_dist(-0.99999, 0.99999);
  std::uniform_real_distribution<double> tan_dist(1.0, 10.0);
  return make_config(cos_dist(rng), tan_dist(rng));
}

}  // namespace

TEST_CASE("coupling: trace at the perpendicular ridge configuration") {
  // Oracle: sum of the closed-form ridge eigenvalues at theta = pi/2,
  // -8 sqrt(2) + (2 beta + 4) with beta = -4 sqrt(2), i.e. 4 - 16 sqrt(2).
  const CouplingSystem sys = build_coupling(make_config(0.0, 1.0));
  CHECK(trace(sys.c2_matrix) ==
        doctest::Approx(4.0 - 16.0 * std::sqrt(2.0)).epsilon(1e-13));
  CHECK(trace(sys.c2_matrix) == doctest::Approx(-18.6274).epsilon(1e-5));
}

TEST_CASE("coupling: matrix is exactly symmetric") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const CouplingSystem sys = build_coupling(random_config(rng));
    CHECK(max_asymmetry(sys.c2_matrix) == 0.0);
  }
}

TEST_CASE("coupling: zero mode is annihilated and has no linear component") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const CouplingSystem sys = build_coupling(random_config(rng));
    const Vec4 e4 = zero_mode_vector(sys.config);
    const double fro = frobenius_norm(sys.c2_matrix);
    CHECK(norm(mat_vec(sys.c2_matrix, e4)) <= 1e-12 * fro);
    CHECK(std::fabs(dot(sys.c_vector, e4)) <= 1e-12);
  }
}

TEST_CASE("coupling: row sums expose the diagonal block") {
  // The rank-structured block cancels pairwise within every row, so
  // C^2 (1,1,1,1)^T = -4 rho^3 (tan^-3, 0, cos^2+cos sin, cos sin + sin^2).
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const AngularConfig cfg = random_config(rng);
    const CouplingSystem sys = build_coupling(cfg);
    const Vec4 sums = coupling_row_sums(sys);

    const double rho3 = cfg.rho * cfg.rho * cfg.rho;
    const double c = cfg.cos_theta;
    const double s = cfg.sin_theta;
    const Vec4 expected = {
        -4.0 * rho3 / (cfg.tan_alpha * cfg.tan_alpha * cfg.tan_alpha),
        0.0,
        -4.0 * rho3 * (c * c + c * s),
        -4.0 * rho3 * (c * s + s * s),
    };
    const double scale = frobenius_norm(sys.c2_matrix);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::fabs(sums[i] - expected[i]) <= 1e-13 * scale);
    }

    // definition: equals the matrix product with ones
    const Vec4 direct = mat_vec(sys.c2_matrix, Vec4{1, 1, 1, 1});
    for (int i = 0; i < 4; ++i) CHECK(sums[i] == direct[i]);
  }
}

TEST_CASE("coupling: diagonal-only degenerate matrix row sums") {
  CouplingSystem sys;
  sys.config = make_config(0.0, 2.0);
  sys.c2_matrix = Mat4{};
  sys.c2_matrix(0, 0) = -3.0;
  sys.c2_matrix(1, 1) = 0.0;
  sys.c2_matrix(2, 2) = 5.5;
  sys.c2_matrix(3, 3) = -1.25;
  const Vec4 sums = coupling_row_sums(sys);
  CHECK(sums[0] == -3.0);
  CHECK(sums[1] == 0.0);
  CHECK(sums[2] == 5.5);
  CHECK(sums[3] == -1.25);
}
