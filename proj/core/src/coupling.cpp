#include "heosc/coupling.hpp"

namespace heosc {

CouplingSystem build_coupling(const AngularConfig& config) {
  const double c = config.cos_theta;
  const double s = config.sin_theta;
  const double t = config.tan_alpha;
  const double rho = config.rho;
  const double rho3 = rho * rho * rho;
  const double A = t - c;  // tan(alpha) - cos(theta)

  const double f1 = -4.0 * rho3;
  const double f2 = -2.0 / (rho * rho);

  Mat4 m;
  // Upper triangle of f1 * diag-block + f2 * rank-structured block.
  m(0, 0) = f1 / (t * t * t) + f2 * (-A * A);
  m(0, 1) = f2 * (s * A);
  m(0, 2) = f2 * (A * A);
  m(0, 3) = f2 * (-s * A);
  m(1, 1) = f2 * (-s * s);
  m(1, 2) = f2 * (-s * A);
  m(1, 3) = f2 * (s * s);
  m(2, 2) = f1 * (c * c) + f2 * (-A * A);
  m(2, 3) = f1 * (c * s) + f2 * (s * A);
  m(3, 3) = f1 * (s * s) + f2 * (-s * s);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) m(i, j) = m(j, i);

  Vec4 cv = {
      2.0 * rho3 / (t * t) + A,
      -s,
      -2.0 * rho3 * c - A,
      -2.0 * rho3 * s + s,
  };

  return CouplingSystem{config, m, cv};
}

Vec4 coupling_row_sums(const CouplingSystem& system) {
  return mat_vec(system.c2_matrix, Vec4{1.0, 1.0, 1.0, 1.0});
}

Vec4 zero_mode_vector(const AngularConfig& config) {
  const double t = config.tan_alpha;
  return normalized(
      Vec4{0.0, 1.0, -config.sin_theta / t, config.cos_theta / t});
}

}  // namespace heosc
