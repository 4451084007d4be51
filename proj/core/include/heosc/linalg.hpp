#pragma once

#include <array>
#include <cmath>

namespace heosc {

using Vec4 = std::array<double, 4>;

/// Dense 4x4 matrix, row-major. The coupling system is fixed at dimension
/// four, so no general linear algebra is pulled in.
struct Mat4 {
  std::array<double, 16> m{};

  double& operator()(int i, int j) { return m[static_cast<size_t>(i) * 4 + j]; }
  double operator()(int i, int j) const {
    return m[static_cast<size_t>(i) * 4 + j];
  }
};

inline Vec4 mat_vec(const Mat4& a, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline Vec4 normalized(const Vec4& a) {
  const double n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n, a[3] / n};
}

inline Vec4 sub(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Vec4 scale(const Vec4& a, double s) {
  return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

inline double frobenius_norm(const Mat4& a) {
  double acc = 0.0;
  for (double v : a.m) acc += v * v;
  return std::sqrt(acc);
}

inline double max_asymmetry(const Mat4& a) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      worst = std::max(worst, std::fabs(a(i, j) - a(j, i)));
  return worst;
}

inline double trace(const Mat4& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

}  // namespace heosc
