#pragma once

#include <string>

namespace heosc {

/// Oscillator quantum-number magnitudes (n1, n2, n3). Each entry is a
/// positive multiple of 1/2; a mode with negative eigenvalue carries an
/// imaginary quantum number N = i*n, so only the magnitude is stored here
/// and the sign bookkeeping lives in the surface solver.
struct QuantumNumbers {
  double n1;
  double n2;
  double n3;
};

/// Validates (n1, n2, n3): finite, >= 1/2, and each 2*n an integer to
/// within 1e-12. Values are stored exactly as given.
/// Throws std::invalid_argument on violation.
QuantumNumbers validate_quantum_numbers(double n1, double n2, double n3);

/// Angular configuration of the two electrons, with tan(alpha) = r1/r2 >= 1
/// and theta in (0, pi) the interelectronic angle at the nucleus.
/// rho = r12/r is fixed by the law of cosines,
///   rho^2 = 1 + tan^2(alpha) - 2 tan(alpha) cos(theta),
/// and sin(theta) = +sqrt(1 - cos^2(theta)) since theta in (0, pi).
struct AngularConfig {
  double cos_theta;
  double tan_alpha;
  double sin_theta;
  double rho;
};

/// Builds a configuration, computing the cached sin(theta) and rho.
/// Requires |cos_theta| < 1 and tan_alpha >= 1; throws std::invalid_argument
/// otherwise.
AngularConfig make_config(double cos_theta, double tan_alpha);

enum class Unit { hartree, ev, bohr, angstrom };

/// Exact linear conversion between the supported unit pairs
/// hartree <-> eV and bohr <-> Angstrom. Throws std::invalid_argument for
/// any other pair.
double convert(double value, Unit from, Unit to);

/// Name used in CLI flags and error messages.
std::string unit_name(Unit u);

}  // namespace heosc
