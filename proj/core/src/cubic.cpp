#include "heosc/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace heosc {

namespace {

struct TwoSum {
  double value;
  double error;
};

TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

TwoSum two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Eigenvalues of a trailing/leading 2x2 block [[a, b], [c, d]]. A slightly
// negative discriminant (borderline double root) is clamped to zero; truly
// complex pairs are rejected upstream by the cubic discriminant.
void eigen_2x2(double a, double b, double c, double d, double* x1, double* x2) {
  const double tr = a + d;
  const double det = a * d - b * c;
  double disc = tr * tr - 4.0 * det;
  if (disc < 0.0) disc = 0.0;
  const double root = std::sqrt(disc);
  // Standard cancellation-free split.
  const double q = 0.5 * (tr + std::copysign(root, tr));
  if (q != 0.0) {
    *x1 = q;
    *x2 = det / q;
  } else {
    *x1 = 0.5 * (tr + root);
    *x2 = 0.5 * (tr - root);
  }
}

// Eigenvalues of the 3x3 companion matrix of x^3 + p x^2 + q x + r via
// Givens-based shifted QR on Hessenberg form. Deterministic; converges for
// the real-spectrum cubics admitted by the discriminant check.
std::array<double, 3> companion_eigenvalues(double p, double q, double r) {
  double h[3][3] = {
      {-p, -q, -r},
      {1.0, 0.0, 0.0},
      {0.0, 1.0, 0.0},
  };
  std::array<double, 3> roots{};
  int found = 0;
  int n = 3;  // active block is h[0..n-1][0..n-1]
  const double eps = 1e-15;

  for (int iter = 0; iter < 120 && n > 2; ++iter) {
    // Deflate converged subdiagonal entries.
    if (std::fabs(h[n - 1][n - 2]) <=
        eps * (std::fabs(h[n - 2][n - 2]) + std::fabs(h[n - 1][n - 1]))) {
      roots[found++] = h[n - 1][n - 1];
      --n;
      continue;
    }
    if (std::fabs(h[1][0]) <= eps * (std::fabs(h[0][0]) + std::fabs(h[1][1]))) {
      // Leading 1x1 decouples; the trailing 2x2 finishes below.
      roots[found++] = h[0][0];
      eigen_2x2(h[1][1], h[1][2], h[2][1], h[2][2], &roots[found],
                &roots[found + 1]);
      found += 2;
      n = 0;
      break;
    }

    // Wilkinson-style shift from the trailing 2x2 block; the eigenvalue
    // closer to h[n-1][n-1]. Every 12th iteration uses an exceptional shift.
    double shift;
    if ((iter + 1) % 12 == 0) {
      shift = h[n - 1][n - 1] + std::fabs(h[n - 1][n - 2]);
    } else {
      double m1, m2;
      eigen_2x2(h[n - 2][n - 2], h[n - 2][n - 1], h[n - 1][n - 2],
                h[n - 1][n - 1], &m1, &m2);
      shift = (std::fabs(m1 - h[n - 1][n - 1]) < std::fabs(m2 - h[n - 1][n - 1]))
                  ? m1
                  : m2;
    }

    for (int i = 0; i < n; ++i) h[i][i] -= shift;

    // QR step by two Givens rotations on rows/cols (0,1) and (1,2).
    double cs[2], sn[2];
    for (int k = 0; k + 1 < n; ++k) {
      const double x = h[k][k];
      const double y = h[k + 1][k];
      const double rr = std::hypot(x, y);
      const double c = (rr == 0.0) ? 1.0 : x / rr;
      const double s = (rr == 0.0) ? 0.0 : y / rr;
      cs[k] = c;
      sn[k] = s;
      for (int j = 0; j < n; ++j) {
        const double t1 = h[k][j];
        const double t2 = h[k + 1][j];
        h[k][j] = c * t1 + s * t2;
        h[k + 1][j] = -s * t1 + c * t2;
      }
    }
    for (int k = 0; k + 1 < n; ++k) {
      for (int i = 0; i < n; ++i) {
        const double t1 = h[i][k];
        const double t2 = h[i][k + 1];
        h[i][k] = cs[k] * t1 + sn[k] * t2;
        h[i][k + 1] = -sn[k] * t1 + cs[k] * t2;
      }
    }

    for (int i = 0; i < n; ++i) h[i][i] += shift;
  }

  if (n == 2) {
    eigen_2x2(h[0][0], h[0][1], h[1][0], h[1][1], &roots[found],
              &roots[found + 1]);
    found += 2;
    n = 0;
  } else if (n == 1) {
    roots[found++] = h[0][0];
  }
  return roots;
}

}  // namespace

double cubic_value(const std::array<double, 4>& coeffs, double x) {
  double value = coeffs[0];
  double correction = 0.0;
  for (int k = 1; k < 4; ++k) {
    const TwoSum prod = two_prod(value, x);
    const TwoSum sum = two_sum(prod.value, coeffs[k]);
    value = sum.value;
    correction = correction * x + (prod.error + sum.error);
  }
  return value + correction;
}

double cubic_derivative(const std::array<double, 4>& coeffs, double x) {
  return (3.0 * coeffs[0] * x + 2.0 * coeffs[1]) * x + coeffs[2];
}

std::array<double, 3> solve_cubic(const std::array<double, 4>& coeffs) {
  const double a3 = coeffs[0];
  if (a3 == 0.0) throw std::invalid_argument("cubic leading coefficient is zero");

  const double p = coeffs[1] / a3;
  const double q = coeffs[2] / a3;
  const double r = coeffs[3] / a3;

  // Depressed-cubic discriminant; >= 0 means three real roots.
  const double dp = q - p * p / 3.0;
  const double dq = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
  const double disc = -4.0 * dp * dp * dp - 27.0 * dq * dq;
  const double disc_scale =
      4.0 * std::fabs(dp * dp * dp) + 27.0 * dq * dq;
  if (disc < -1e-10 * std::max(1.0, disc_scale)) {
    throw ComplexRootsError("cubic has fewer than three real roots");
  }

  std::array<double, 3> roots = companion_eigenvalues(p, q, r);

  // One Newton step per root against the original (unnormalized)
  // coefficients; the compensated residual keeps the step meaningful below
  // the plain-Horner noise floor.
  for (double& x : roots) {
    const double d = cubic_derivative(coeffs, x);
    if (d != 0.0) {
      const double step = cubic_value(coeffs, x) / d;
      if (std::isfinite(step)) x -= step;
    }
  }
  return roots;
}

}  // namespace heosc
