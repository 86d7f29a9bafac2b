#ifndef AOWENO_SOLVER_HPP_
#define AOWENO_SOLVER_HPP_

/// \file solver.hpp
/// Conservative finite-difference right-hand side (dimension-by-dimension in
/// 2D), TVD RK3 time stepping, and the run loop.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aoweno/boundary.hpp"
#include "aoweno/cases.hpp"
#include "aoweno/field.hpp"
#include "aoweno/flux_model.hpp"
#include "aoweno/grid.hpp"
#include "aoweno/reconstruction.hpp"

namespace aoweno {

struct RunState {
  double t = 0.0;
  double dt = 0.0;
  long step_count = 0;
  double cfl = 0.5;
};

/// A run that produced NaN/Inf or a non-admissible state, with context.
struct BlowUpError : std::runtime_error {
  explicit BlowUpError(const std::string& what) : std::runtime_error(what) {}
};

/// Interface fluxes along one grid line. `line` holds the n interior states
/// of the line padded with `Grid::ghost` cells on both ends; `iface_out`
/// receives the n+1 interface fluxes. States and physical fluxes of the six
/// stencil points are projected into the characteristic space of each
/// interface's eigensystem, split with the per-family alphas, and
/// reconstructed upwind/downwind; scalar models skip the projection.
void numerical_flux_line(std::span<const StateVec> line, const FluxModel& model,
                         const SplitAlpha& alpha, const ReconConfig& rcfg,
                         Axis axis, std::span<StateVec> iface_out);

/// Conservative tendency L(u). Refreshes ghosts, recomputes the per-axis
/// global alphas, and accumulates flux differences from x sweeps (and y
/// sweeps in 2D). Grid lines are distributed across `workers` threads; the
/// result is identical for any worker count.
void rhs(FieldArray& field, const Grid& grid, const BoundarySpec& bc,
         const FluxModel& model, const ReconConfig& rcfg, double t,
         FieldArray& tendency, int workers = 1);

using RhsFn = std::function<void(FieldArray& field, double t, FieldArray& out)>;

struct RkScratch {
  FieldArray saved;
  FieldArray tendency;
};

/// One third-order TVD Runge-Kutta step with run.dt; advances run.t and the
/// step count. Throws BlowUpError if any stage produces a non-finite value.
void rk3_step(FieldArray& field, RunState& run, const RhsFn& rhs_fn,
              RkScratch& scratch);

/// CFL-limited step: cfl*dx/alpha in 1D, cfl/(ax/dx + ay/dy) in 2D, capped
/// at max_dt (which covers the zero-wave-speed case).
double stable_dt(const FieldArray& field, const Grid& grid,
                 const FluxModel& model, double cfl, double t_remaining);

struct RunOptions {
  int workers = 1;
  double snapshot_every = 0.0;  // 0 disables snapshots
  std::function<void(const FieldArray&, const RunState&)> observer;
};

struct RunResult {
  FieldArray field;
  RunState run;
};

/// Advance the case from its initial condition to t_final, shortening the
/// last step to land exactly on it. Blow-ups are rethrown with case context.
RunResult run_to_time(const CaseSpec& spec, const ReconConfig& rcfg,
                      const RunOptions& options = {});

/// Initial condition sampled on the case grid (interior cells).
FieldArray initialize_field(const CaseSpec& spec);

}  // namespace aoweno

#endif  // AOWENO_SOLVER_HPP_
