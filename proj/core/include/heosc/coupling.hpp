#pragma once

#include "heosc/linalg.hpp"
#include "heosc/model.hpp"

namespace heosc {

/// The dimensionless coupled-oscillator system at an angular configuration:
/// the 4x4 symmetric matrix C^2 (hatted: lengths divided out by r) and the
/// linear vector c/r. Both depend only on (cos_theta, tan_alpha) through
/// rho = r12/r.
struct CouplingSystem {
  AngularConfig config;
  Mat4 c2_matrix;  // dimensionless C^2, exactly symmetric by construction
  Vec4 c_vector;   // dimensionless c / r
};

/// Assembles C^2 as the sum of the -4 rho^3 diagonal-block term and the
/// -2 / rho^2 rank-structured term, and c/r from its 4-component closed
/// form. Only the upper triangle is computed; the lower is mirrored.
CouplingSystem build_coupling(const AngularConfig& config);

/// C^2 * (1,1,1,1)^T. In the rank-structured block every row cancels
/// pairwise, so the row sums expose the diagonal-block structure alone;
/// used as a structural sanity check.
Vec4 coupling_row_sums(const CouplingSystem& system);

/// The analytic zero-mode direction e4 = (0, 1, -sin/tan, cos/tan), unit
/// norm. C^2 annihilates it at every configuration.
Vec4 zero_mode_vector(const AngularConfig& config);

}  // namespace heosc
