#include "heosc/energy.hpp"

#include <cmath>

namespace heosc {

double energy_closed_form(double r, const AngularConfig& config) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("r must be positive");
  }
  return (2.0 / r) *
         (-1.0 - 1.0 / config.tan_alpha + 1.0 / (2.0 * config.rho));
}

EnergyBreakdown energy_sum_form(double r, const ModeSpectrum& spectrum) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("r must be positive");
  }
  const double rho = spectrum.config.rho;
  const double pref = 2.0 / (rho * rho * rho * r);

  EnergyBreakdown out;
  out.total_sum_form = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Mode& m = spectrum.modes[i];
    if (std::fabs(m.lambda_hat) < 1e-13) {
      throw ZeroEigenvalueError("nonzero mode carries a vanishing eigenvalue");
    }
    out.per_mode[i] = pref * m.c_hat * m.c_hat / m.lambda_hat;
    out.total_sum_form += out.per_mode[i];
  }
  out.total_closed_form = energy_closed_form(r, spectrum.config);
  out.agreement = std::fabs(out.total_sum_form - out.total_closed_form);
  return out;
}

double wannier_energy(double r, double cos_theta, WannierEnergyDiag* diag) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("r must be positive");
  }
  const double rho = std::sqrt(2.0 - 2.0 * cos_theta);
  const double r12 = rho * r;
  if (diag != nullptr) {
    diag->r12 = r12;
    diag->r12_underflow = r12 < 1e-9;
  }
  return (2.0 / r) * (-2.0 + 1.0 / (2.0 * rho));
}

}  // namespace heosc
