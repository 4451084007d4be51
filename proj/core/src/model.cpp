#include "heosc/model.hpp"

#include <cmath>
#include <stdexcept>

#include "heosc/constants.hpp"

namespace heosc {

namespace {

constexpr double kHalfIntegerTol = 1e-12;

void check_quantum_number(double n, const char* name) {
  if (!std::isfinite(n)) {
    throw std::invalid_argument(std::string(name) + " is not finite");
  }
  if (n < 0.5) {
    throw std::invalid_argument(std::string(name) + " must be >= 1/2, got " +
                                std::to_string(n));
  }
  const double twice = 2.0 * n;
  if (std::fabs(twice - std::round(twice)) > kHalfIntegerTol) {
    throw std::invalid_argument(std::string(name) +
                                " must be a multiple of 1/2, got " +
                                std::to_string(n));
  }
}

}  // namespace

QuantumNumbers validate_quantum_numbers(double n1, double n2, double n3) {
  check_quantum_number(n1, "n1");
  check_quantum_number(n2, "n2");
  check_quantum_number(n3, "n3");
  return QuantumNumbers{n1, n2, n3};
}

AngularConfig make_config(double cos_theta, double tan_alpha) {
  if (!std::isfinite(cos_theta) || std::fabs(cos_theta) >= 1.0) {
    throw std::invalid_argument("cos_theta must lie in (-1, 1), got " +
                                std::to_string(cos_theta));
  }
  if (!std::isfinite(tan_alpha) || tan_alpha < 1.0) {
    throw std::invalid_argument("tan_alpha must be >= 1, got " +
                                std::to_string(tan_alpha));
  }
  AngularConfig cfg;
  cfg.cos_theta = cos_theta;
  cfg.tan_alpha = tan_alpha;
  cfg.sin_theta = std::sqrt((1.0 - cos_theta) * (1.0 + cos_theta));
  cfg.rho = std::sqrt(1.0 + tan_alpha * tan_alpha -
                      2.0 * tan_alpha * cos_theta);
  return cfg;
}

double convert(double value, Unit from, Unit to) {
  if (from == Unit::hartree && to == Unit::ev) {
    return value * constants::hartree_ev;
  }
  if (from == Unit::ev && to == Unit::hartree) {
    return value / constants::hartree_ev;
  }
  if (from == Unit::bohr && to == Unit::angstrom) {
    return value * constants::bohr_radius_angstrom;
  }
  if (from == Unit::angstrom && to == Unit::bohr) {
    return value / constants::bohr_radius_angstrom;
  }
  throw std::invalid_argument("unsupported unit pair " + unit_name(from) +
                              " -> " + unit_name(to));
}

std::string unit_name(Unit u) {
  switch (u) {
    case Unit::hartree:  return "hartree";
    case Unit::ev:       return "eV";
    case Unit::bohr:     return "bohr";
    case Unit::angstrom: return "angstrom";
  }
  return "?";
}

}  // namespace heosc
