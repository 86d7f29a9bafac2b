#ifndef AOWENO_BOUNDARY_HPP_
#define AOWENO_BOUNDARY_HPP_

#include <array>

#include "aoweno/field.hpp"
#include "aoweno/flux_model.hpp"
#include "aoweno/grid.hpp"

namespace aoweno {

enum class BcKind {
  periodic,
  zero_gradient_outflow,
  reflecting_wall,
  dirichlet,
  dmr_bottom,  // post-shock inflow left of the wall start, reflecting beyond
  dmr_top,     // pre/post-shock switch tracking the moving oblique shock
};

/// Planar shock of given speed through (x_at_wall, 0), making the configured
/// angle with the x axis and moving along its normal into the pre-shock gas.
struct ObliqueShock {
  StateVec pre;
  StateVec post;
  double x_at_wall = 1.0 / 6.0;
  double sin_angle = 0.0;
  double cos_angle = 0.0;
  double speed = 0.0;

  /// x coordinate of the shock trace at height y and time t.
  double shock_x(double y, double t) const {
    return x_at_wall + (y * cos_angle + speed * t) / sin_angle;
  }

  /// Post-shock state left of the trace, pre-shock state right of it.
  const StateVec& state_at(double x, double y, double t) const {
    return x < shock_x(y, t) ? post : pre;
  }
};

struct SideBc {
  BcKind kind = BcKind::periodic;
  StateVec value;  // dirichlet only
};

/// Per-side conditions, indexed x-lo, x-hi, y-lo, y-hi.
struct BoundarySpec {
  std::array<SideBc, 4> side{};
  ObliqueShock shock;  // consumed by the dmr kinds

  void validate(int dim) const;
};

/// Populate every ghost cell the sweeps will read. Time-dependent conditions
/// receive the current time.
void apply_boundaries(FieldArray& field, const BoundarySpec& bc,
                      const Grid& grid, double t);

}  // namespace aoweno

#endif  // AOWENO_BOUNDARY_HPP_
