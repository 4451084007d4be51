#pragma once

namespace heosc {

// Atomic-unit conversion factors (CODATA 2018). All internal lengths are
// multiples of the Bohr radius a and all internal energies are in hartree;
// conversions happen only at I/O boundaries.
namespace constants {

// a, the Bohr radius, in Angstrom.
inline constexpr double bohr_radius_angstrom = 0.529177210903;

// One hartree in eV.
inline constexpr double hartree_ev = 27.211386245988;

// E0 = hbar^2 / (2 m a^2) = 1 Ry, expressed in hartree.
inline constexpr double e0_hartree = 0.5;

static_assert(2.0 * e0_hartree == 1.0, "E0 must be exactly half a hartree");

}  // namespace constants

}  // namespace heosc
