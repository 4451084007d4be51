#pragma once

#include <array>
#include <stdexcept>

#include "heosc/cubic.hpp"
#include "heosc/linalg.hpp"
#include "heosc/model.hpp"

namespace heosc {

/// A nonzero normal mode of the coupling matrix, in the gamma
/// parameterization: gamma1 = cos(theta) c + sin(theta) d and
/// gamma2 = sin(theta) c - cos(theta) d for eigenvector components
/// (1, gamma2/tan, c, d) before normalization.
struct Mode {
  double gamma1;
  double gamma2;
  double xi;          // tan - cos + (1 - tan cos) g1 - sin/tan (1 + tan^2) g2
  double lambda_hat;  // dimensionless eigenvalue of C^2
  Vec4 eigvec;        // unit norm
  double c_hat;       // projection of c/r onto the eigenvector
};

/// The three nonzero modes at a configuration, plus the zero mode.
/// Modes are stored in the solver's assignment order: mode 0 has the most
/// negative lambda_hat (the radial branch, continuing the ridge
/// lambda = -4 rho^3), modes 1 and 2 are the remaining pair by ascending
/// gamma2.
struct ModeSpectrum {
  AngularConfig config;
  std::array<Mode, 3> modes;
  Vec4 zero_mode_eigvec;
};

/// Closed-form spectrum on the Wannier ridge tan(alpha) = 1 (r1 = r2).
/// Modes are kept in the closed-form order: the radial mode
/// (gamma1 = -1, gamma2 = 0, lambda = -4 rho^3) first, then the
/// gamma_plus and gamma_minus branches (both with gamma1 = 1).
struct WannierSpectrum {
  double cos_theta;
  double beta;
  double gamma_plus;
  double gamma_minus;
  std::array<Mode, 3> modes;
};

/// gamma2 root coincides with the pole of the gamma1 expression.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |a3| vanished relative to the other cubic coefficients.
class DegenerateCubicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Below this |tan(alpha) - 1| the general-branch cubic degenerates and the
/// Wannier closed forms take over. The paper's grid starts at 1.00001, so
/// solver scans never enter the window; direct API callers may.
inline constexpr double wannier_branch_epsilon = 1e-7;

/// Coefficients {a3, a2, a1, a0} of the cubic in gamma2, transcribed
/// term-by-term. Throws DegenerateCubicError when
/// |a3| < 1e-14 * max |a_i|.
std::array<double, 4> cubic_coefficients(const AngularConfig& config);

/// gamma1 as the printed rational expression of gamma2. Throws PoleError
/// when the denominator vanishes against the numerator scale (root at the
/// expression's pole).
double gamma1_of(double gamma2, const AngularConfig& config);

/// Full closed-form spectrum on the general branch
/// (tan(alpha) > 1 + wannier_branch_epsilon). Propagates ComplexRootsError,
/// PoleError, DegenerateCubicError.
ModeSpectrum analytic_spectrum(const AngularConfig& config);

/// Closed-form ridge spectrum for cos_theta in (-1, 1).
WannierSpectrum wannier_spectrum(double cos_theta);

/// Repackages a ridge spectrum as a ModeSpectrum at tan(alpha) = 1 with the
/// solver's mode ordering applied, so the two branches can be compared and
/// consumed uniformly.
ModeSpectrum ridge_spectrum(const WannierSpectrum& w);

/// Residuals of the nine relation sums (in display order) and of the three
/// pairwise eigenvector-orthogonality identities. The quadratic form in the
/// denominators uses the eigenvector norm 1 + g1^2 + (1 + tan^-2) g2^2; the
/// variant with tan^+2 does not, in fact, make the sums close (checked
/// numerically, tested in the acceptance suite).
struct RelationReport {
  std::array<double, 9> relation;
  std::array<double, 3> orthogonality;
  double max_deviation() const;
};

RelationReport check_relations(const ModeSpectrum& spectrum);

}  // namespace heosc
