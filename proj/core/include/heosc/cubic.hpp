#pragma once

#include <array>
#include <stdexcept>

namespace heosc {

/// The discriminant indicates fewer than three real roots beyond tolerance.
class ComplexRootsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real roots of a3 x^3 + a2 x^2 + a1 x + a0, coefficients passed
/// as {a3, a2, a1, a0} with a3 != 0.
///
/// Roots come from the eigenvalues of the 3x3 companion matrix (shifted QR),
/// then each gets one Newton step with a compensated Horner evaluation of the
/// residual; that polish is what keeps downstream spectral identities at the
/// 1e-12 level even when a root sits next to a pole of the gamma1 expression.
/// Returned unordered (deflation order). Throws ComplexRootsError when the
/// discriminant is negative beyond a 1e-10 scaled tolerance.
std::array<double, 3> solve_cubic(const std::array<double, 4>& coeffs);

/// Compensated (double-double accumulated) Horner evaluation of the cubic.
/// Exposed for tests; also used by the Newton polish.
double cubic_value(const std::array<double, 4>& coeffs, double x);

/// Plain Horner evaluation of the derivative.
double cubic_derivative(const std::array<double, 4>& coeffs, double x);

}  // namespace heosc
