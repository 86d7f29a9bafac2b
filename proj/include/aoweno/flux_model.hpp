#ifndef AOWENO_FLUX_MODEL_HPP_
#define AOWENO_FLUX_MODEL_HPP_

/// \file flux_model.hpp
/// Physical flux models (linear advection, Burgers, 1D/2D compressible
/// Euler), global Lax-Friedrichs splitting, and the characteristic-space
/// transformation machinery used by the solver. Pure value types and free
/// functions; safe for concurrent use.

#include <array>
#include <cassert>
#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace aoweno {

enum class Axis { x, y };

/// Fixed-capacity vector of conserved components (m = 1, 3, or 4).
struct StateVec {
  int m = 1;
  std::array<double, 4> a{};

  double& operator[](int i) { return a[i]; }
  double operator[](int i) const { return a[i]; }
};

inline bool operator==(const StateVec& x, const StateVec& y) {
  if (x.m != y.m) return false;
  for (int i = 0; i < x.m; ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

using ConservedState = StateVec;

enum class ModelKind { advection, burgers, euler1d, euler2d };

struct FluxModel {
  ModelKind kind = ModelKind::advection;
  double speed = 1.0;        // advection only
  double gamma = 1.4;        // Euler only

  static FluxModel advection(double a) { return {ModelKind::advection, a, 0.0}; }
  static FluxModel burgers() { return {ModelKind::burgers, 0.0, 0.0}; }
  static FluxModel euler1d(double g = 1.4) {
    if (!(g > 1.0)) throw std::invalid_argument("euler1d: gamma must exceed 1");
    return {ModelKind::euler1d, 0.0, g};
  }
  static FluxModel euler2d(double g = 1.4) {
    if (!(g > 1.0)) throw std::invalid_argument("euler2d: gamma must exceed 1");
    return {ModelKind::euler2d, 0.0, g};
  }

  int components() const {
    switch (kind) {
      case ModelKind::euler1d: return 3;
      case ModelKind::euler2d: return 4;
      default: return 1;
    }
  }
  int space_dim() const { return kind == ModelKind::euler2d ? 2 : 1; }
  bool is_euler() const {
    return kind == ModelKind::euler1d || kind == ModelKind::euler2d;
  }
};

/// Thrown when an Euler state with non-positive density or pressure reaches
/// a flux evaluation or eigensystem.
struct AdmissibilityError : std::domain_error {
  explicit AdmissibilityError(const std::string& what)
      : std::domain_error(what) {}
};

inline double euler_pressure(const FluxModel& model, const StateVec& u) {
  double kinetic = u[1] * u[1];
  if (model.kind == ModelKind::euler2d) kinetic += u[2] * u[2];
  const double energy = u[model.components() - 1];
  return (model.gamma - 1.0) * (energy - 0.5 * kinetic / u[0]);
}

inline void require_admissible(const FluxModel& model, const StateVec& u,
                               const char* where) {
  if (!model.is_euler()) return;
  const double rho = u[0];
  const double p = rho > 0.0 ? euler_pressure(model, u) : -1.0;
  if (!(rho > 0.0) || !(p > 0.0)) {
    std::ostringstream msg;
    msg << where << ": non-admissible state, rho=" << rho << " p=" << p;
    throw AdmissibilityError(msg.str());
  }
}

/// (rho, u[, v], p)  <->  (rho, rho u[, rho v], E)
inline StateVec conserved_from_primitive(const FluxModel& model,
                                         const StateVec& w) {
  if (!model.is_euler()) return w;
  StateVec u;
  u.m = model.components();
  const double rho = w[0];
  if (model.kind == ModelKind::euler1d) {
    u[0] = rho;
    u[1] = rho * w[1];
    u[2] = w[2] / (model.gamma - 1.0) + 0.5 * rho * w[1] * w[1];
  } else {
    u[0] = rho;
    u[1] = rho * w[1];
    u[2] = rho * w[2];
    u[3] = w[3] / (model.gamma - 1.0) +
           0.5 * rho * (w[1] * w[1] + w[2] * w[2]);
  }
  return u;
}

inline StateVec primitive_from_conserved(const FluxModel& model,
                                         const StateVec& u) {
  if (!model.is_euler()) return u;
  StateVec w;
  w.m = model.components();
  const double rho = u[0];
  if (model.kind == ModelKind::euler1d) {
    w[0] = rho;
    w[1] = u[1] / rho;
    w[2] = euler_pressure(model, u);
  } else {
    w[0] = rho;
    w[1] = u[1] / rho;
    w[2] = u[2] / rho;
    w[3] = euler_pressure(model, u);
  }
  return w;
}

inline double sound_speed(const FluxModel& model, const StateVec& u) {
  return std::sqrt(model.gamma * euler_pressure(model, u) / u[0]);
}

/// Physical flux f(u) along the given axis.
inline StateVec physical_flux(const FluxModel& model, const StateVec& u,
                              Axis axis = Axis::x) {
  switch (model.kind) {
    case ModelKind::advection: {
      StateVec f;
      f[0] = model.speed * u[0];
      return f;
    }
    case ModelKind::burgers: {
      StateVec f;
      f[0] = 0.5 * u[0] * u[0];
      return f;
    }
    case ModelKind::euler1d: {
      require_admissible(model, u, "physical_flux");
      const double p = euler_pressure(model, u);
      const double vel = u[1] / u[0];
      StateVec f;
      f.m = 3;
      f[0] = u[1];
      f[1] = u[1] * vel + p;
      f[2] = vel * (u[2] + p);
      return f;
    }
    case ModelKind::euler2d: {
      require_admissible(model, u, "physical_flux");
      const double p = euler_pressure(model, u);
      StateVec f;
      f.m = 4;
      if (axis == Axis::x) {
        const double vel = u[1] / u[0];
        f[0] = u[1];
        f[1] = u[1] * vel + p;
        f[2] = u[2] * vel;
        f[3] = vel * (u[3] + p);
      } else {
        const double vel = u[2] / u[0];
        f[0] = u[2];
        f[1] = u[1] * vel;
        f[2] = u[2] * vel + p;
        f[3] = vel * (u[3] + p);
      }
      return f;
    }
  }
  return {};
}

/// Eigenvalues of the flux Jacobian at one state, ordered by family.
inline StateVec eigenvalues(const FluxModel& model, const StateVec& u,
                            Axis axis = Axis::x) {
  StateVec lam;
  switch (model.kind) {
    case ModelKind::advection:
      lam[0] = model.speed;
      return lam;
    case ModelKind::burgers:
      lam[0] = u[0];
      return lam;
    case ModelKind::euler1d: {
      const double c = sound_speed(model, u);
      const double vel = u[1] / u[0];
      lam.m = 3;
      lam[0] = vel - c;
      lam[1] = vel;
      lam[2] = vel + c;
      return lam;
    }
    case ModelKind::euler2d: {
      const double c = sound_speed(model, u);
      const double vel = (axis == Axis::x ? u[1] : u[2]) / u[0];
      lam.m = 4;
      lam[0] = vel - c;
      lam[1] = vel;
      lam[2] = vel;
      lam[3] = vel + c;
      return lam;
    }
  }
  return lam;
}

/// Per-family global splitting speeds (Lax-Friedrichs alpha).
struct SplitAlpha {
  StateVec alpha;
  double max() const {
    double v = 0.0;
    for (int k = 0; k < alpha.m; ++k) v = std::max(v, alpha.a[k]);
    return v;
  }
};

inline void accumulate_alpha(const FluxModel& model, const StateVec& u,
                             Axis axis, SplitAlpha& acc) {
  const StateVec lam = eigenvalues(model, u, axis);
  acc.alpha.m = lam.m;
  for (int k = 0; k < lam.m; ++k)
    acc.alpha[k] = std::max(acc.alpha[k], std::abs(lam[k]));
}

inline SplitAlpha global_alpha(const FluxModel& model,
                               std::span<const StateVec> states,
                               Axis axis = Axis::x) {
  if (states.empty())
    throw std::invalid_argument("global_alpha: empty state collection");
  SplitAlpha acc;
  acc.alpha.m = model.components();
  for (const StateVec& u : states) accumulate_alpha(model, u, axis, acc);
  return acc;
}

/// Lax-Friedrichs split of one flux component against its state component.
inline std::pair<double, double> lf_split(double flux, double q, double alpha) {
  return {0.5 * (flux + alpha * q), 0.5 * (flux - alpha * q)};
}

/// Eigensystem of the flux Jacobian at the arithmetic mean of two states.
struct EigenSystem {
  int m = 1;
  Axis axis = Axis::x;
  StateVec lambda;
  std::array<std::array<double, 4>, 4> left{};   // rows
  std::array<std::array<double, 4>, 4> right{};  // rows (columns are waves)
};

inline EigenSystem eigensystem(const FluxModel& model, const StateVec& sL,
                               const StateVec& sR, Axis axis = Axis::x) {
  EigenSystem es;
  es.m = model.components();
  es.axis = axis;

  StateVec mid;
  mid.m = es.m;
  for (int i = 0; i < es.m; ++i) mid[i] = 0.5 * (sL[i] + sR[i]);

  switch (model.kind) {
    case ModelKind::advection:
    case ModelKind::burgers:
      es.lambda = eigenvalues(model, mid, axis);
      es.left[0][0] = 1.0;
      es.right[0][0] = 1.0;
      return es;

    case ModelKind::euler1d: {
      require_admissible(model, mid, "eigensystem");
      const double rho = mid[0];
      const double vel = mid[1] / rho;
      const double p = euler_pressure(model, mid);
      const double c = std::sqrt(model.gamma * p / rho);
      const double H = (mid[2] + p) / rho;
      const double b1 = (model.gamma - 1.0) / (c * c);
      const double b2 = 0.5 * vel * vel * b1;

      es.lambda.m = 3;
      es.lambda[0] = vel - c;
      es.lambda[1] = vel;
      es.lambda[2] = vel + c;

      es.right = {{{1.0, 1.0, 1.0, 0.0},
                   {vel - c, vel, vel + c, 0.0},
                   {H - vel * c, 0.5 * vel * vel, H + vel * c, 0.0},
                   {}}};
      es.left = {{{0.5 * (b2 + vel / c), -0.5 * (b1 * vel + 1.0 / c), 0.5 * b1, 0.0},
                  {1.0 - b2, b1 * vel, -b1, 0.0},
                  {0.5 * (b2 - vel / c), -0.5 * (b1 * vel - 1.0 / c), 0.5 * b1, 0.0},
                  {}}};
      return es;
    }

    case ModelKind::euler2d: {
      require_admissible(model, mid, "eigensystem");
      const double rho = mid[0];
      const double vx = mid[1] / rho;
      const double vy = mid[2] / rho;
      const double p = euler_pressure(model, mid);
      const double c = std::sqrt(model.gamma * p / rho);
      const double H = (mid[3] + p) / rho;
      const double q2 = vx * vx + vy * vy;
      const double b1 = (model.gamma - 1.0) / (c * c);
      const double b2 = 0.5 * q2 * b1;
      const double un = axis == Axis::x ? vx : vy;   // normal velocity
      const double ut = axis == Axis::x ? vy : vx;   // transverse velocity

      es.lambda.m = 4;
      es.lambda[0] = un - c;
      es.lambda[1] = un;
      es.lambda[2] = un;
      es.lambda[3] = un + c;

      // component rows ordered (rho, rho vx, rho vy, E); the shear wave
      // carries the transverse momentum
      const int ni = axis == Axis::x ? 1 : 2;  // normal momentum row
      const int ti = axis == Axis::x ? 2 : 1;  // transverse momentum row

      es.right[0] = {1.0, 1.0, 0.0, 1.0};
      es.right[ni] = {un - c, un, 0.0, un + c};
      es.right[ti] = {ut, ut, 1.0, ut};
      es.right[3] = {H - un * c, 0.5 * q2, ut, H + un * c};

      es.left[0][0] = 0.5 * (b2 + un / c);
      es.left[0][ni] = -0.5 * (b1 * un + 1.0 / c);
      es.left[0][ti] = -0.5 * b1 * ut;
      es.left[0][3] = 0.5 * b1;

      es.left[1][0] = 1.0 - b2;
      es.left[1][ni] = b1 * un;
      es.left[1][ti] = b1 * ut;
      es.left[1][3] = -b1;

      es.left[2][0] = -ut;
      es.left[2][ni] = 0.0;
      es.left[2][ti] = 1.0;
      es.left[2][3] = 0.0;

      es.left[3][0] = 0.5 * (b2 - un / c);
      es.left[3][ni] = -0.5 * (b1 * un - 1.0 / c);
      es.left[3][ti] = -0.5 * b1 * ut;
      es.left[3][3] = 0.5 * b1;
      return es;
    }
  }
  return es;
}

inline StateVec to_characteristic(const EigenSystem& es, const StateVec& v) {
  StateVec out;
  out.m = es.m;
  for (int i = 0; i < es.m; ++i) {
    double acc = 0.0;
    for (int j = 0; j < es.m; ++j) acc += es.left[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

inline StateVec from_characteristic(const EigenSystem& es, const StateVec& v) {
  StateVec out;
  out.m = es.m;
  for (int i = 0; i < es.m; ++i) {
    double acc = 0.0;
    for (int j = 0; j < es.m; ++j) acc += es.right[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace aoweno

#endif  // AOWENO_FLUX_MODEL_HPP_
