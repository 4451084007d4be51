#pragma once

#include <array>
#include <stdexcept>

#include "heosc/model.hpp"
#include "heosc/spectrum.hpp"

namespace heosc {

class ZeroEigenvalueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mode-sum evaluation of the total energy, kept next to the closed form it
/// must agree with. All energies in hartree, lengths in units of a; with
/// 2 E0 = 1 hartree the per-mode term is (2 / (rho^3 r)) c_hat_i^2 / lambda_i.
struct EnergyBreakdown {
  std::array<double, 3> per_mode;
  double total_sum_form;
  double total_closed_form;
  double agreement;  // |sum - closed|
};

/// E = (2/r) (-1 - 1/tan(alpha) + 1/(2 rho)), r in units of a.
/// Throws std::invalid_argument for r <= 0.
double energy_closed_form(double r, const AngularConfig& config);

/// Per-mode terms plus totals; throws ZeroEigenvalueError when a nonzero
/// mode carries |lambda_hat| < 1e-13.
EnergyBreakdown energy_sum_form(double r, const ModeSpectrum& spectrum);

struct WannierEnergyDiag {
  double r12;           // units of a
  bool r12_underflow;   // r12 < 1e-9, the printed formula is still returned
};

/// Ridge energy E = (2/r) (-2 + 1/(2 rho)) with rho = 2 sin(theta/2).
/// Identical to energy_closed_form at tan(alpha) = 1.
double wannier_energy(double r, double cos_theta,
                      WannierEnergyDiag* diag = nullptr);

}  // namespace heosc
