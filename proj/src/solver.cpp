#include "aoweno/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace aoweno {

namespace {

struct LineScratch {
  std::vector<StateVec> states;
  std::vector<StateVec> fluxes;
  std::vector<StateVec> iface;
};

// Characteristic-space splitting and reconstruction with the component
// count fixed at compile time, so the small matrix-vector loops unroll.
template <int M>
void flux_line_system(const std::vector<StateVec>& line,
                      const std::vector<StateVec>& point_flux,
                      const FluxModel& model, const SplitAlpha& alpha,
                      const ReconConfig& rcfg, Axis axis,
                      std::vector<StateVec>& iface) {
  const int g = Grid::ghost;
  const int n = static_cast<int>(line.size()) - 2 * g;

  for (int k = 0; k <= n; ++k) {
    const EigenSystem es = eigensystem(model, line[k + g - 1], line[k + g], axis);

    // characteristic states/fluxes of the six stencil points around the
    // interface between interior cells k-1 and k
    double wq[6][M], wf[6][M];
    for (int p = 0; p < 6; ++p) {
      const StateVec& u = line[k + p];
      const StateVec& fx = point_flux[k + p];
      for (int i = 0; i < M; ++i) {
        double aq = 0.0, af = 0.0;
        for (int j = 0; j < M; ++j) {
          aq += es.left[i][j] * u.a[j];
          af += es.left[i][j] * fx.a[j];
        }
        wq[p][i] = aq;
        wf[p][i] = af;
      }
    }

    double fchar[M];
    for (int f = 0; f < M; ++f) {
      const double a = alpha.alpha.a[f];
      ReconWindow up, down;
      for (int p = 0; p < 5; ++p) up[p] = 0.5 * (wf[p][f] + a * wq[p][f]);
      for (int p = 0; p < 5; ++p) down[p] = 0.5 * (wf[5 - p][f] - a * wq[5 - p][f]);
      fchar[f] = reconstruct_interface(up, rcfg) + reconstruct_interface(down, rcfg);
    }

    StateVec& out = iface[k];
    out.m = M;
    for (int i = 0; i < M; ++i) {
      double acc = 0.0;
      for (int j = 0; j < M; ++j) acc += es.right[i][j] * fchar[j];
      out.a[i] = acc;
    }
  }
}

void flux_line_into(const std::vector<StateVec>& line,
                    std::vector<StateVec>& point_flux, const FluxModel& model,
                    const SplitAlpha& alpha, const ReconConfig& rcfg, Axis axis,
                    std::vector<StateVec>& iface) {
  const int g = Grid::ghost;
  const int n = static_cast<int>(line.size()) - 2 * g;
  const int m = model.components();

  point_flux.resize(line.size());
  for (size_t l = 0; l < line.size(); ++l)
    point_flux[l] = physical_flux(model, line[l], axis);

  iface.resize(n + 1);

  if (m == 1) {
    for (int k = 0; k <= n; ++k) {
      const double a = alpha.alpha.a[0];
      ReconWindow up, down;
      for (int p = 0; p < 5; ++p)
        up[p] = 0.5 * (point_flux[k + p].a[0] + a * line[k + p].a[0]);
      for (int p = 0; p < 5; ++p)
        down[p] = 0.5 * (point_flux[k + 5 - p].a[0] - a * line[k + 5 - p].a[0]);
      iface[k].m = 1;
      iface[k].a[0] =
          reconstruct_interface(up, rcfg) + reconstruct_interface(down, rcfg);
    }
    return;
  }
  if (m == 3)
    flux_line_system<3>(line, point_flux, model, alpha, rcfg, axis, iface);
  else
    flux_line_system<4>(line, point_flux, model, alpha, rcfg, axis, iface);
}

void check_admissible_line(const std::vector<StateVec>& line,
                           const FluxModel& model, Axis axis, int line_index) {
  const int g = Grid::ghost;
  for (size_t l = 0; l < line.size(); ++l) {
    const StateVec& u = line[l];
    bool ok = true;
    for (int c = 0; c < u.m; ++c) ok = ok && std::isfinite(u[c]);
    if (ok && model.is_euler())
      ok = u[0] > 0.0 && euler_pressure(model, u) > 0.0;
    if (!ok) {
      std::ostringstream msg;
      msg << "rhs: non-admissible state at "
          << (axis == Axis::x ? "row j=" : "column i=") << line_index
          << ", line offset " << static_cast<int>(l) - g;
      if (model.is_euler())
        msg << " (rho=" << u[0] << ", p=" << euler_pressure(model, u) << ")";
      throw BlowUpError(msg.str());
    }
  }
}

// Static contiguous partition of [0, count) across workers; exceptions are
// captured and rethrown on the calling thread.
void parallel_lines(int count, int workers,
                    const std::function<void(int line, int worker)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int line = 0; line < count; ++line) fn(line, 0);
    return;
  }
  workers = std::min(workers, count);
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    const int begin = static_cast<int>(static_cast<long>(count) * w / workers);
    const int end = static_cast<int>(static_cast<long>(count) * (w + 1) / workers);
    pool.emplace_back([&, w, begin, end] {
      try {
        for (int line = begin; line < end; ++line) fn(line, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

SplitAlpha interior_alpha(const FieldArray& field, const Grid& grid,
                          const FluxModel& model, Axis axis) {
  SplitAlpha alpha;
  alpha.alpha.m = model.components();
  const int ny = grid.dim == 2 ? grid.n[1] : 1;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < grid.n[0]; ++i)
      accumulate_alpha(model, field.get(i, j), axis, alpha);
  return alpha;
}

}  // namespace

void numerical_flux_line(std::span<const StateVec> line, const FluxModel& model,
                         const SplitAlpha& alpha, const ReconConfig& rcfg,
                         Axis axis, std::span<StateVec> iface_out) {
  std::vector<StateVec> states(line.begin(), line.end());
  std::vector<StateVec> fluxes, iface;
  flux_line_into(states, fluxes, model, alpha, rcfg, axis, iface);
  std::copy(iface.begin(), iface.end(), iface_out.begin());
}

void rhs(FieldArray& field, const Grid& grid, const BoundarySpec& bc,
         const FluxModel& model, const ReconConfig& rcfg, double t,
         FieldArray& tendency, int workers) {
  apply_boundaries(field, bc, grid, t);

  const int g = Grid::ghost;
  const int nx = grid.n[0];
  const int ny = grid.dim == 2 ? grid.n[1] : 1;
  const int m = model.components();

  const SplitAlpha alpha_x = interior_alpha(field, grid, model, Axis::x);
  const double inv_dx = 1.0 / grid.dx(0);

  std::vector<LineScratch> scratch(std::max(1, workers));

  parallel_lines(ny, workers, [&](int j, int w) {
    LineScratch& ws = scratch[w];
    ws.states.resize(nx + 2 * g);
    for (int i = -g; i < nx + g; ++i) ws.states[i + g] = field.get(i, j);
    check_admissible_line(ws.states, model, Axis::x, j);
    flux_line_into(ws.states, ws.fluxes, model, alpha_x, rcfg, Axis::x, ws.iface);
    for (int i = 0; i < nx; ++i) {
      double* out = tendency.cell(i, j);
      for (int c = 0; c < m; ++c)
        out[c] = -(ws.iface[i + 1][c] - ws.iface[i][c]) * inv_dx;
    }
  });

  if (grid.dim == 1) return;

  const SplitAlpha alpha_y = interior_alpha(field, grid, model, Axis::y);
  const double inv_dy = 1.0 / grid.dx(1);

  parallel_lines(nx, workers, [&](int i, int w) {
    LineScratch& ws = scratch[w];
    ws.states.resize(ny + 2 * g);
    for (int j = -g; j < ny + g; ++j) ws.states[j + g] = field.get(i, j);
    check_admissible_line(ws.states, model, Axis::y, i);
    flux_line_into(ws.states, ws.fluxes, model, alpha_y, rcfg, Axis::y, ws.iface);
    for (int j = 0; j < ny; ++j) {
      double* out = tendency.cell(i, j);
      for (int c = 0; c < m; ++c)
        out[c] -= (ws.iface[j + 1][c] - ws.iface[j][c]) * inv_dy;
    }
  });
}

void rk3_step(FieldArray& field, RunState& run, const RhsFn& rhs_fn,
              RkScratch& scratch) {
  const double dt = run.dt;
  if (!(dt > 0.0)) throw std::invalid_argument("rk3_step: dt must be positive");

  const auto check_stage = [&](int stage) {
    if (!field.interior_finite()) {
      std::ostringstream msg;
      msg << "rk3_step: non-finite value after stage " << stage << " at step "
          << run.step_count << ", t=" << run.t;
      throw BlowUpError(msg.str());
    }
  };

  scratch.saved = field;
  FieldArray& u0 = scratch.saved;
  FieldArray& k = scratch.tendency;

  rhs_fn(field, run.t, k);
  field.interior_blend(u0, 1.0, dt, k);  // u1
  check_stage(1);

  rhs_fn(field, run.t + dt, k);
  field.interior_blend(u0, 0.25, dt, k);  // u2
  check_stage(2);

  rhs_fn(field, run.t + 0.5 * dt, k);
  field.interior_blend(u0, 2.0 / 3.0, dt, k);
  check_stage(3);

  run.t += dt;
  run.step_count += 1;
}

double stable_dt(const FieldArray& field, const Grid& grid,
                 const FluxModel& model, double cfl, double t_remaining) {
  const SplitAlpha ax = interior_alpha(field, grid, model, Axis::x);
  double rate = ax.max() / grid.dx(0);
  if (grid.dim == 2) {
    const SplitAlpha ay = interior_alpha(field, grid, model, Axis::y);
    rate += ay.max() / grid.dx(1);
  }
  if (rate <= 0.0) return t_remaining;
  return std::min(cfl / rate, t_remaining);
}

FieldArray initialize_field(const CaseSpec& spec) {
  FieldArray field(spec.grid, spec.model.components());
  const int ny = spec.grid.dim == 2 ? spec.grid.n[1] : 1;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < spec.grid.n[0]; ++i) {
      const double x = spec.grid.pos(0, i);
      const double y = spec.grid.dim == 2 ? spec.grid.pos(1, j) : 0.0;
      field.set(i, j, spec.initial(x, y));
    }
  return field;
}

RunResult run_to_time(const CaseSpec& spec, const ReconConfig& rcfg,
                      const RunOptions& options) {
  rcfg.validate();
  spec.grid.validate();
  spec.bc.validate(spec.grid.dim);

  RunResult result{initialize_field(spec), RunState{}};
  result.run.cfl = spec.cfl;

  const RhsFn rhs_fn = [&](FieldArray& f, double t, FieldArray& out) {
    rhs(f, spec.grid, spec.bc, spec.model, rcfg, t, out, options.workers);
  };

  RkScratch scratch;
  scratch.tendency = FieldArray(spec.grid, spec.model.components());

  const double fixed_dt = std::pow(spec.grid.dx(0), 5.0 / 3.0);
  double next_snapshot = options.snapshot_every;

  try {
    while (result.run.t < spec.t_final * (1.0 - 1e-14)) {
      const double remaining = spec.t_final - result.run.t;
      result.run.dt = spec.dt_rule == DtRule::fixed_power
                          ? std::min(fixed_dt, remaining)
                          : stable_dt(result.field, spec.grid, spec.model,
                                      spec.cfl, remaining);
      rk3_step(result.field, result.run, rhs_fn, scratch);

      if (options.observer && options.snapshot_every > 0.0 &&
          result.run.t >= next_snapshot * (1.0 - 1e-14)) {
        options.observer(result.field, result.run);
        next_snapshot += options.snapshot_every;
      }
    }
  } catch (const BlowUpError& err) {
    std::ostringstream msg;
    msg << "case '" << spec.name << "' blew up at step "
        << result.run.step_count << ", t=" << result.run.t << ": "
        << err.what();
    throw BlowUpError(msg.str());
  }
  return result;
}

}  // namespace aoweno
