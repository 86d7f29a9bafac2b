#ifndef AOWENO_RECONSTRUCTION_HPP_
#define AOWENO_RECONSTRUCTION_HPP_

/// \file reconstruction.hpp
/// Adaptive-order WENO reconstruction kernels on a five-point window.
///
/// A window holds five consecutive point values of a split flux. The kernels
/// fit one quartic on the full stencil and three quadratics on the three-point
/// sub-stencils (matching sliding cell averages, which is the standard
/// finite-difference construction), measure their smoothness, and blend them
/// with data-dependent weights. Two combinations are provided:
///
///   * ao  — the classical adaptive-order hybridization, where the quartic
///           enters through a residual that subtracts the linear-weight share
///           of the quadratics;
///   * aoa — the strictly convex combination: every candidate polynomial is
///           weighted by a non-negative normalized weight.
///
/// All polynomials live on the reference cell xi in [-1/2, 1/2] in the scaled
/// Legendre basis {1, xi, xi^2-1/12, xi^3-3xi/20, xi^4-3xi^2/14+3/560}, so the
/// constant coefficient is the cell average and smoothness indicators reduce
/// to fixed quadratic forms in the coefficients.
///
/// Everything here is a pure function of its arguments; safe to call from any
/// number of threads.

#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace aoweno {

/// Five consecutive split-flux point values f_{i-2} .. f_{i+2}.
using ReconWindow = std::array<double, 5>;

/// Polynomial on the reference cell in the scaled Legendre basis.
/// Coefficients beyond `degree` are zero.
struct LegendreCoeffs {
  int degree = 0;
  std::array<double, 5> c{};
};

/// Smoothness indicators for the four candidate polynomials.
struct SmoothnessSet {
  double beta_opt = 0.0;                 // quartic on the full stencil
  std::array<double, 3> beta_sub{};      // quadratics, left / central / right
  double tau = 0.0;                      // global smoothness contrast
};

/// Linear, raw, and normalized weights. Index 0 is the quartic candidate,
/// 1..3 the left/central/right quadratics.
struct WeightSet {
  std::array<double, 4> gamma{};
  std::array<double, 4> raw{};
  std::array<double, 4> normalized{};
};

enum class ReconVariant { ao, aoa };

struct ReconConfig {
  double gamma_hi = 0.85;
  double gamma_lo = 0.85;
  double epsilon = 1e-40;
  ReconVariant variant = ReconVariant::aoa;

  /// Linear weights {quartic, left, central, right}; they sum to one.
  std::array<double, 4> linear_weights() const {
    const double g5 = gamma_hi;
    const double g13 = 0.5 * (1.0 - gamma_hi) * (1.0 - gamma_lo);
    const double g2 = (1.0 - gamma_hi) * gamma_lo;
    return {g5, g13, g2, g13};
  }

  void validate() const {
    if (!(gamma_hi > 0.0 && gamma_hi < 1.0))
      throw std::invalid_argument("ReconConfig: gamma_hi must be in (0,1)");
    if (!(gamma_lo > 0.0 && gamma_lo < 1.0))
      throw std::invalid_argument("ReconConfig: gamma_lo must be in (0,1)");
    if (!(epsilon > 0.0))
      throw std::invalid_argument("ReconConfig: epsilon must be positive");
  }
};

/// Candidate polynomials fitted to one window.
struct Projection {
  LegendreCoeffs optimal;                // degree 4
  std::array<LegendreCoeffs, 3> subs;    // degree 2 each
};

namespace detail {
inline double sq(double x) { return x * x; }
}  // namespace detail

/// Fit the quartic and the three sub-stencil quadratics whose cell averages
/// match the window. The arithmetic runs on first and second undivided
/// differences so that constant and linear windows produce exact zeros in the
/// curvature coefficients (and hence exactly equal smoothness indicators).
inline Projection project_to_legendre(const ReconWindow& f) {
  assert(std::isfinite(f[0]) && std::isfinite(f[1]) && std::isfinite(f[2]) &&
         std::isfinite(f[3]) && std::isfinite(f[4]));

  const double d1 = f[1] - f[0];
  const double d2 = f[2] - f[1];
  const double d3 = f[3] - f[2];
  const double d4 = f[4] - f[3];
  const double s1 = d2 - d1;  // second differences
  const double s2 = d3 - d2;
  const double s3 = d4 - d3;

  Projection p;
  p.optimal.degree = 4;
  p.optimal.c = {
      f[2],
      (71.0 * (d2 + d3) - 11.0 * (d1 + d4)) / 120.0,
      (-3.0 / 56.0) * (s1 + s3) + (17.0 / 28.0) * s2,
      (s3 - s1) / 12.0,
      ((s1 + s3) - 2.0 * s2) / 24.0,
  };

  p.subs[0].degree = 2;
  p.subs[0].c = {f[2], 0.5 * (3.0 * d2 - d1), 0.5 * s1, 0.0, 0.0};
  p.subs[1].degree = 2;
  p.subs[1].c = {f[2], 0.5 * (d2 + d3), 0.5 * s2, 0.0, 0.0};
  p.subs[2].degree = 2;
  p.subs[2].c = {f[2], 0.5 * (3.0 * d3 - d4), 0.5 * s3, 0.0, 0.0};
  return p;
}

/// Evaluate at a reference coordinate xi in [-1/2, 1/2].
inline double evaluate_at(const LegendreCoeffs& p, double xi) {
  assert(std::abs(xi) <= 0.5 + 1e-15);
  const double xi2 = xi * xi;
  const double b2 = xi2 - 1.0 / 12.0;
  const double b3 = xi * (xi2 - 3.0 / 20.0);
  const double b4 = xi2 * (xi2 - 3.0 / 14.0) + 3.0 / 560.0;
  return p.c[0] + p.c[1] * xi + p.c[2] * b2 + p.c[3] * b3 + p.c[4] * b4;
}

/// Integral of the squared derivatives over the reference cell, as a fixed
/// quadratic form in the Legendre coefficients. Zero iff the polynomial is
/// constant. Supports the degrees used by the scheme (2 and 4).
inline double smoothness_indicator(const LegendreCoeffs& p) {
  using detail::sq;
  assert(p.degree == 2 || p.degree == 4);
  if (p.degree == 2) return sq(p.c[1]) + (13.0 / 3.0) * sq(p.c[2]);
  return sq(p.c[1] + 0.1 * p.c[3]) +
         (13.0 / 3.0) * sq(p.c[2] + (123.0 / 455.0) * p.c[4]) +
         (781.0 / 20.0) * sq(p.c[3]) + (1421461.0 / 2275.0) * sq(p.c[4]);
}

/// Mean absolute gap between the quartic's indicator and each quadratic's.
/// Grouped so the result is invariant under left/right window reversal.
inline double global_smoothness_tau(double beta_opt,
                                    const std::array<double, 3>& beta_sub) {
  const double t1 = std::abs(beta_opt - beta_sub[0]);
  const double t2 = std::abs(beta_opt - beta_sub[1]);
  const double t3 = std::abs(beta_opt - beta_sub[2]);
  return ((t1 + t3) + t2) / 3.0;
}

namespace detail {

/// Shared weight machinery. The unit term keeps a candidate's raw weight at
/// or above its linear weight; which candidates carry it is what separates
/// the two variants (quartic only for aoa, all four for ao, so that the ao
/// normalized weights tend to the linear weights on smooth data as its
/// combination formula requires).
///
/// When the largest ratio tau/(beta+eps) exceeds 1e150 all ratios are rescaled
/// by it before squaring; the normalization is unchanged and no intermediate
/// can overflow.
inline WeightSet nonlinear_weights(const SmoothnessSet& s,
                                   const ReconConfig& cfg,
                                   bool unit_term_on_subs) {
  assert(s.tau >= 0.0 && s.beta_opt >= 0.0);

  WeightSet w;
  w.gamma = cfg.linear_weights();

  if (s.tau == 0.0) {
    // exact smooth limit: the normalization is trivial in real arithmetic,
    // so write the limit values directly instead of rounding through it
    if (unit_term_on_subs) {
      w.raw = w.gamma;
      w.normalized = w.gamma;
    } else {
      w.raw = {w.gamma[0], 0.0, 0.0, 0.0};
      w.normalized = {1.0, 0.0, 0.0, 0.0};
    }
    return w;
  }

  const double r0 = s.tau / (s.beta_opt + cfg.epsilon);
  const double r1 = s.tau / (s.beta_sub[0] + cfg.epsilon);
  const double r2 = s.tau / (s.beta_sub[1] + cfg.epsilon);
  const double r3 = s.tau / (s.beta_sub[2] + cfg.epsilon);

  const double rmax = std::max(std::max(r0, r2), std::max(r1, r3));
  double scale = 1.0;
  if (rmax > 1e150) scale = 1.0 / rmax;

  const double unit = unit_term_on_subs ? sq(scale) : 0.0;
  w.raw[0] = w.gamma[0] * (sq(scale) + sq(scale * r0));
  w.raw[1] = w.gamma[1] * (unit + sq(scale * r1));
  w.raw[2] = w.gamma[2] * (unit + sq(scale * r2));
  w.raw[3] = w.gamma[3] * (unit + sq(scale * r3));

  const double sum = (w.raw[0] + w.raw[2]) + (w.raw[1] + w.raw[3]);
  const double inv = 1.0 / sum;
  for (int k = 0; k < 4; ++k) w.normalized[k] = w.raw[k] * inv;
  return w;
}

}  // namespace detail

/// Weights of the strictly convex variant: only the quartic carries the unit
/// term, so on smooth data all weight migrates to it.
inline WeightSet aoa_weights(const SmoothnessSet& s, const ReconConfig& cfg) {
  return detail::nonlinear_weights(s, cfg, false);
}

/// Weights of the classical adaptive-order variant: every candidate carries
/// the unit term, so on smooth data the normalized weights approach the
/// linear weights and ao_combine recovers the quartic.
inline WeightSet ao_weights(const SmoothnessSet& s, const ReconConfig& cfg) {
  return detail::nonlinear_weights(s, cfg, true);
}

/// Strictly convex combination of the four candidates.
inline LegendreCoeffs aoa_combine(const LegendreCoeffs& optimal,
                                  const std::array<LegendreCoeffs, 3>& subs,
                                  const WeightSet& w) {
  if (w.normalized[0] == 1.0) return optimal;
  LegendreCoeffs out;
  out.degree = 4;
  for (int j = 0; j < 5; ++j) {
    out.c[j] = w.normalized[0] * optimal.c[j] +
               ((w.normalized[1] * subs[0].c[j] + w.normalized[3] * subs[2].c[j]) +
                w.normalized[2] * subs[1].c[j]);
  }
  return out;
}

/// Classical adaptive-order hybridization: the quartic enters through the
/// residual that removes the linear-weight share of the quadratics. Written
/// in the algebraically equivalent form
///   r*P_opt + sum_k (wbar_k - r*gamma_k) * P_k,   r = wbar_opt / gamma_opt,
/// which returns the quartic bitwise when the normalized weights equal the
/// linear ones.
inline LegendreCoeffs ao_combine(const LegendreCoeffs& optimal,
                                 const std::array<LegendreCoeffs, 3>& subs,
                                 const WeightSet& w) {
  if (w.normalized[0] == 1.0) return optimal;
  const double r = w.normalized[0] / w.gamma[0];
  const double c1 = w.normalized[1] - r * w.gamma[1];
  const double c2 = w.normalized[2] - r * w.gamma[2];
  const double c3 = w.normalized[3] - r * w.gamma[3];
  LegendreCoeffs out;
  out.degree = 4;
  for (int j = 0; j < 5; ++j) {
    out.c[j] = r * optimal.c[j] +
               ((c1 * subs[0].c[j] + c3 * subs[2].c[j]) + c2 * subs[1].c[j]);
  }
  return out;
}

/// Full pipeline returning the blended polynomial for one window.
inline LegendreCoeffs reconstruct_polynomial(const ReconWindow& f,
                                             const ReconConfig& cfg) {
  const Projection p = project_to_legendre(f);
  SmoothnessSet s;
  s.beta_opt = smoothness_indicator(p.optimal);
  for (int k = 0; k < 3; ++k) s.beta_sub[k] = smoothness_indicator(p.subs[k]);
  s.tau = global_smoothness_tau(s.beta_opt, s.beta_sub);
  if (cfg.variant == ReconVariant::ao)
    return ao_combine(p.optimal, p.subs, ao_weights(s, cfg));
  return aoa_combine(p.optimal, p.subs, aoa_weights(s, cfg));
}

/// Upwind interface value at xi = +1/2. The downwind value at the same
/// physical interface is obtained by calling this on the reversed window of
/// the five points shifted one to the right.
///
/// Fused form of evaluate_at(reconstruct_polynomial(f, cfg), 1/2): the
/// candidates are evaluated at the interface first and blended as scalars.
inline double reconstruct_interface(const ReconWindow& f,
                                    const ReconConfig& cfg) {
  const Projection p = project_to_legendre(f);
  SmoothnessSet s;
  s.beta_opt = smoothness_indicator(p.optimal);
  for (int k = 0; k < 3; ++k) s.beta_sub[k] = smoothness_indicator(p.subs[k]);
  s.tau = global_smoothness_tau(s.beta_opt, s.beta_sub);

  const auto& oc = p.optimal.c;
  const double v_opt = oc[0] + 0.5 * oc[1] + (1.0 / 6.0) * oc[2] +
                       (1.0 / 20.0) * oc[3] + (1.0 / 70.0) * oc[4];
  double v_sub[3];
  for (int k = 0; k < 3; ++k) {
    const auto& sc = p.subs[k].c;
    v_sub[k] = sc[0] + 0.5 * sc[1] + (1.0 / 6.0) * sc[2];
  }

  if (cfg.variant == ReconVariant::ao) {
    const WeightSet w = ao_weights(s, cfg);
    if (w.normalized[0] == 1.0) return v_opt;
    const double r = w.normalized[0] / w.gamma[0];
    const double c1 = w.normalized[1] - r * w.gamma[1];
    const double c2 = w.normalized[2] - r * w.gamma[2];
    const double c3 = w.normalized[3] - r * w.gamma[3];
    return r * v_opt + ((c1 * v_sub[0] + c3 * v_sub[2]) + c2 * v_sub[1]);
  }
  const WeightSet w = aoa_weights(s, cfg);
  if (w.normalized[0] == 1.0) return v_opt;
  return w.normalized[0] * v_opt +
         ((w.normalized[1] * v_sub[0] + w.normalized[3] * v_sub[2]) +
          w.normalized[2] * v_sub[1]);
}

}  // namespace aoweno

#endif  // AOWENO_RECONSTRUCTION_HPP_
