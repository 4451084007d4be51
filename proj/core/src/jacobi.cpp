#include "heosc/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace heosc {

namespace {

double offdiagonal_norm(const Mat4& a) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) acc += a(i, j) * a(i, j);
  return std::sqrt(acc);
}

}  // namespace

NumericEigenResult symmetric_eigen_4x4(const Mat4& input) {
  const double fro = frobenius_norm(input);
  if (max_asymmetry(input) > 1e-12 * std::max(1.0, fro)) {
    throw NonSymmetricError("matrix is not symmetric within tolerance");
  }

  // Work on the exactly symmetrized copy.
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = 0.5 * (input(i, j) + input(j, i));

  Mat4 v;
  for (int i = 0; i < 4; ++i) v(i, i) = 1.0;

  const double target = 1e-14 * fro;
  int sweep = 0;
  for (; sweep < 50; ++sweep) {
    const double off = offdiagonal_norm(a);
    if (off <= target) break;
    // Rotations below the skip threshold are not worth applying early on.
    const double skip = (sweep < 3) ? 0.05 * off / 4.0 : 0.0;

    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= skip) continue;
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(
            1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0)), theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < 4; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
        for (int k = 0; k < 4; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  if (sweep == 50) {
    throw NoConvergenceError("Jacobi sweep cap reached");
  }

  std::array<int, 4> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (a(i, i) != a(j, j)) return a(i, i) < a(j, j);
    return i < j;
  });

  NumericEigenResult res;
  res.sweeps = sweep;
  for (int k = 0; k < 4; ++k) {
    const int src = order[k];
    res.eigenvalues[k] = a(src, src);
    Vec4 col = {v(0, src), v(1, src), v(2, src), v(3, src)};
    // Deterministic sign: largest-magnitude component positive.
    int big = 0;
    for (int i = 1; i < 4; ++i)
      if (std::fabs(col[i]) > std::fabs(col[big])) big = i;
    if (col[big] < 0.0) col = scale(col, -1.0);
    res.eigenvectors[k] = col;
  }
  return res;
}

SpectrumMatch match_spectra(const ModeSpectrum& analytic,
                            const NumericEigenResult& numeric) {
  std::array<Vec4, 4> avec;
  std::array<double, 4> aval;
  for (int i = 0; i < 3; ++i) {
    avec[i] = analytic.modes[i].eigvec;
    aval[i] = analytic.modes[i].lambda_hat;
  }
  avec[3] = analytic.zero_mode_eigvec;
  aval[3] = 0.0;

  double dots[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      dots[i][j] = std::fabs(dot(avec[i], numeric.eigenvectors[j]));

  // Greedy assignment on |dot|, ties broken by (analytic, numeric) index.
  SpectrumMatch match{};
  std::array<bool, 4> arow{}, ncol{};
  for (int step = 0; step < 4; ++step) {
    int bi = -1, bj = -1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
      if (arow[i]) continue;
      for (int j = 0; j < 4; ++j) {
        if (ncol[j]) continue;
        if (dots[i][j] > best) {
          best = dots[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    arow[bi] = true;
    ncol[bj] = true;
    match.pairing[bi] = bj;
  }

  const double spread =
      std::max(1.0, numeric.eigenvalues[3] - numeric.eigenvalues[0]);
  const double cluster_gap = 1e-6 * spread;

  match.max_eigenvalue_deviation = 0.0;
  match.max_angle_sine = 0.0;
  for (int i = 0; i < 4; ++i) {
    const int j = match.pairing[i];
    match.max_eigenvalue_deviation =
        std::max(match.max_eigenvalue_deviation,
                 std::fabs(aval[i] - numeric.eigenvalues[j]));

    // sin(angle) as the perpendicular-residual norm; sqrt(1 - dot^2) cannot
    // resolve angles below sqrt(eps).
    Vec4 perp = avec[i];
    auto project_out = [&perp](const Vec4& v) {
      const double coeff = dot(perp, v);
      perp = sub(perp, scale(v, coeff));
    };
    if (dots[i][j] >= 0.9) {
      project_out(numeric.eigenvectors[j]);
    } else {
      // Near-degenerate eigenvalues: individual numeric vectors are
      // arbitrary within the cluster; measure against the cluster subspace.
      double proj2 = 0.0;
      for (int k = 0; k < 4; ++k) {
        if (std::fabs(numeric.eigenvalues[k] - numeric.eigenvalues[j]) <=
            cluster_gap) {
          proj2 += dots[i][k] * dots[i][k];
          project_out(numeric.eigenvectors[k]);
        }
      }
      if (std::sqrt(std::min(1.0, proj2)) < 0.9) {
        throw AmbiguousPairingError(
            "eigenvector pairing ambiguous (near-degenerate spectrum)");
      }
    }
    match.max_angle_sine = std::max(match.max_angle_sine, norm(perp));
  }
  return match;
}

}  // namespace heosc
