#include "heosc/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace heosc {

namespace {

// Shared subexpressions of the gamma equations at one configuration.
struct Terms {
  double c, s, t;    // cos, sin, tan(alpha)
  double rho, rho3, rho5;
  double A;          // tan - cos
  double one_tc;     // 1 - tan cos
  double one_t3;     // 1 - tan^3
};

Terms terms_of(const AngularConfig& cfg) {
  Terms e;
  e.c = cfg.cos_theta;
  e.s = cfg.sin_theta;
  e.t = cfg.tan_alpha;
  e.rho = cfg.rho;
  e.rho3 = e.rho * e.rho * e.rho;
  e.rho5 = e.rho3 * e.rho * e.rho;
  e.A = e.t - e.c;
  e.one_tc = 1.0 - e.t * e.c;
  e.one_t3 = 1.0 - e.t * e.t * e.t;
  return e;
}

// gamma1 via the quadratic that is linear in gamma1 (the display carrying
// the 2 rho^5 term). Equivalent to gamma1_of at an exact root, but its pole
// sits elsewhere, which rescues roots that fall on the pole of the printed
// rational expression.
double gamma1_linear_form(double g2, const Terms& e) {
  const double bq = -2.0 * e.rho5 / std::pow(e.t, 4) + e.A * e.A / e.t -
                    e.s * e.s / e.t - e.s * e.s * e.t;
  const double num =
      -(e.s * e.A + bq * g2 - e.s * (1.0 / (e.t * e.t) + 1.0) * e.A * g2 * g2);
  const double den = e.one_tc * (e.s + (e.A / e.t) * g2);
  return num / den;
}

// Relative conditioning of the two gamma1 routes: |denominator| against the
// magnitudes of its constituents.
double kappa_printed(double g2, const Terms& e) {
  const double t5 = std::pow(e.t, 5);
  const double term1 = e.A * e.A * t5 * g2;
  const double term2 = e.t * e.t * e.t * e.s * e.one_t3 * e.A;
  return std::fabs(term1 - term2) /
         (std::fabs(term1) + std::fabs(term2) + 1e-300);
}

double kappa_linear(double g2, const Terms& e) {
  const double u = (e.A / e.t) * g2;
  return std::fabs(e.s + u) / (e.s + std::fabs(u) + 1e-300);
}

double gamma1_stable(double g2, const AngularConfig& cfg, const Terms& e) {
  if (kappa_printed(g2, e) >= kappa_linear(g2, e)) {
    return gamma1_of(g2, cfg);
  }
  return gamma1_linear_form(g2, e);
}

Mode assemble_mode(double g1, double g2, const Terms& e) {
  Mode m;
  m.gamma1 = g1;
  m.gamma2 = g2;
  m.xi = e.A + e.one_tc * g1 - e.s / e.t * (1.0 + e.t * e.t) * g2;
  m.lambda_hat = -(2.0 / (e.rho * e.rho)) * e.s * e.t * m.xi / g2;
  const double nrm =
      std::sqrt(1.0 + g2 * g2 * (1.0 + 1.0 / (e.t * e.t)) + g1 * g1);
  m.eigvec = {1.0 / nrm, g2 / (e.t * nrm), (e.c * g1 + e.s * g2) / nrm,
              (e.s * g1 - e.c * g2) / nrm};
  m.c_hat = (2.0 * e.rho3 * (1.0 / (e.t * e.t) - g1) + m.xi) / nrm;
  return m;
}

// Assignment order used throughout: slot 0 takes the most negative
// lambda_hat (radial branch); slots 1 and 2 take the remaining pair by
// ascending gamma2. Calibrated against the published asymmetric entries
// ((n2, n3) swaps flip cos_theta accordingly).
void apply_mode_ordering(std::array<Mode, 3>& modes) {
  int radial = 0;
  for (int i = 1; i < 3; ++i) {
    if (modes[i].lambda_hat < modes[radial].lambda_hat) radial = i;
  }
  std::swap(modes[0], modes[radial]);
  if (modes[1].gamma2 > modes[2].gamma2) std::swap(modes[1], modes[2]);
}

Vec4 zero_mode_of(double cos_theta, double sin_theta, double tan_alpha) {
  return normalized(
      Vec4{0.0, 1.0, -sin_theta / tan_alpha, cos_theta / tan_alpha});
}

}  // namespace

std::array<double, 4> cubic_coefficients(const AngularConfig& cfg) {
  const Terms e = terms_of(cfg);
  const double t = e.t;
  const double s = e.s;
  const double A = e.A;
  const double t3 = t * t * t;
  const double t5 = t3 * t * t;

  // Bracket shared by the gamma2 and gamma2^2 terms (the version with the
  // (1 - tan cos)^2 / tan^4 contribution folded in).
  const double B = -2.0 * e.rho5 / (t * t * t * t) + A * A / t - s * s / t -
                   s * s * t + e.one_tc * e.one_tc / (t * t * t * t);

  const double a0 = -s * s * e.one_t3 * t3 * A * A;
  const double a1 =
      (s / t * e.one_tc * e.one_tc + s * t5 * A * A) * A - t3 * s * e.one_t3 * B * A;
  const double a2 =
      t3 * s * s * e.one_t3 * (1.0 / (t * t) + 1.0) * A * A + t5 * B * A * A;
  const double a3 = -t5 * s * (1.0 / (t * t) + 1.0) * A * A * A;

  const double amax = std::max({std::fabs(a0), std::fabs(a1), std::fabs(a2),
                                std::fabs(a3)});
  if (std::fabs(a3) < 1e-14 * amax) {
    throw DegenerateCubicError("cubic leading coefficient degenerates");
  }
  return {a3, a2, a1, a0};
}

double gamma1_of(double gamma2, const AngularConfig& cfg) {
  const Terms e = terms_of(cfg);
  const double t3 = e.t * e.t * e.t;
  const double t5 = t3 * e.t * e.t;
  const double num = e.one_t3 * e.one_tc * e.s;
  const double den = e.A * e.A * t5 * gamma2 - t3 * e.s * e.one_t3 * e.A;
  if (std::fabs(den) < 1e-13 * std::max(1.0, std::fabs(num))) {
    throw PoleError("gamma2 coincides with the pole of the gamma1 expression");
  }
  return num / den + e.one_tc / (e.A * t3);
}

ModeSpectrum analytic_spectrum(const AngularConfig& cfg) {
  if (cfg.tan_alpha <= 1.0 + wannier_branch_epsilon) {
    throw std::invalid_argument(
        "analytic_spectrum requires tan_alpha > 1 + wannier_branch_epsilon; "
        "use wannier_spectrum on the ridge");
  }
  const Terms e = terms_of(cfg);
  const std::array<double, 3> roots = solve_cubic(cubic_coefficients(cfg));

  ModeSpectrum sp;
  sp.config = cfg;
  for (int i = 0; i < 3; ++i) {
    sp.modes[i] = assemble_mode(gamma1_stable(roots[i], cfg, e), roots[i], e);
  }
  apply_mode_ordering(sp.modes);
  sp.zero_mode_eigvec = zero_mode_of(e.c, e.s, e.t);
  return sp;
}

WannierSpectrum wannier_spectrum(double cos_theta) {
  if (!(std::fabs(cos_theta) < 1.0)) {
    throw std::invalid_argument("cos_theta must lie in (-1, 1)");
  }
  const double c = cos_theta;
  const double s = std::sqrt((1.0 - c) * (1.0 + c));
  const double rho = std::sqrt(2.0 - 2.0 * c);  // 2 sin(theta/2)
  const double rho3 = rho * rho * rho;

  WannierSpectrum w;
  w.cos_theta = c;
  w.beta = (2.0 * rho3 + 2.0 * c) / (-s);
  // Larger-magnitude root computed without cancellation; the partner is
  // pinned by the exact product gamma+ gamma- = -1.
  w.gamma_plus =
      0.5 * (w.beta + std::copysign(std::sqrt(w.beta * w.beta + 4.0), w.beta));
  w.gamma_minus = -1.0 / w.gamma_plus;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // The closed-form c_i are stored with the sign of e_i^T c for the
  // eigenvectors as printed (the printed c_i carry the opposite sign, which
  // only ever enters through c_i^2; the dot-product convention keeps the
  // ridge continuous with the general branch).
  Mode radial;
  radial.gamma1 = -1.0;
  radial.gamma2 = 0.0;
  radial.xi = 0.0;
  radial.lambda_hat = -4.0 * rho3;
  radial.eigvec = {inv_sqrt2, 0.0, -c * inv_sqrt2, -s * inv_sqrt2};
  radial.c_hat = 2.0 * std::sqrt(2.0) * rho3;
  w.modes[0] = radial;

  const double branch_gamma[2] = {w.gamma_plus, w.gamma_minus};
  for (int k = 0; k < 2; ++k) {
    const double g = branch_gamma[k];
    Mode m;
    m.gamma1 = 1.0;
    m.gamma2 = g;
    m.xi = 2.0 * (1.0 - c - s * g);
    m.lambda_hat = -4.0 / (rho * rho) * s * (1.0 - c - s * g) / g;
    const double nrm = std::sqrt(2.0) * std::sqrt(g * g + 1.0);
    m.eigvec = {1.0 / nrm, g / nrm, (c + s * g) / nrm, (s - c * g) / nrm};
    m.c_hat = std::sqrt(2.0) * (1.0 - c - s * g) / std::sqrt(g * g + 1.0);
    w.modes[1 + k] = m;
  }
  return w;
}

ModeSpectrum ridge_spectrum(const WannierSpectrum& w) {
  ModeSpectrum sp;
  sp.config = make_config(w.cos_theta, 1.0);
  sp.modes = w.modes;
  apply_mode_ordering(sp.modes);
  sp.zero_mode_eigvec = zero_mode_of(w.cos_theta, sp.config.sin_theta, 1.0);
  return sp;
}

double RelationReport::max_deviation() const {
  double worst = 0.0;
  for (double v : relation) worst = std::max(worst, std::fabs(v));
  for (double v : orthogonality) worst = std::max(worst, std::fabs(v));
  return worst;
}

RelationReport check_relations(const ModeSpectrum& sp) {
  const double t = sp.config.tan_alpha;
  const double s = sp.config.sin_theta;
  const double rho5 = std::pow(sp.config.rho, 5);
  const double w = 1.0 + 1.0 / (t * t);

  double d[3], g1[3], g2[3], xi[3];
  for (int i = 0; i < 3; ++i) {
    g1[i] = sp.modes[i].gamma1;
    g2[i] = sp.modes[i].gamma2;
    xi[i] = sp.modes[i].xi;
    d[i] = 1.0 + g1[i] * g1[i] + w * g2[i] * g2[i];
  }
  auto sum3 = [&](auto f) { return f(0) + f(1) + f(2); };

  RelationReport rep;
  rep.relation[0] = sum3([&](int i) { return 1.0 / d[i]; }) - 1.0;
  rep.relation[1] = sum3([&](int i) { return g1[i] / d[i]; });
  rep.relation[2] = sum3([&](int i) { return g2[i] / d[i]; });
  rep.relation[3] = sum3([&](int i) { return g1[i] * g1[i] / d[i]; }) - 1.0;
  rep.relation[4] = sum3([&](int i) { return g2[i] * g2[i] / d[i]; }) -
                    t * t / (1.0 + t * t);
  rep.relation[5] = sum3([&](int i) { return g1[i] * g2[i] / d[i]; });
  rep.relation[6] = sum3([&](int i) { return g1[i] * g2[i] / (xi[i] * d[i]); });
  rep.relation[7] = sum3([&](int i) { return g2[i] / (xi[i] * d[i]); }) -
                    s * std::pow(t, 4) / (2.0 * rho5);
  rep.relation[8] =
      sum3([&](int i) { return g1[i] * g1[i] * g2[i] / (xi[i] * d[i]); }) -
      s * t / (2.0 * rho5);

  int k = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      rep.orthogonality[k++] = 1.0 + g1[i] * g1[j] + w * g2[i] * g2[j];
    }
  }
  return rep;
}

}  // namespace heosc
