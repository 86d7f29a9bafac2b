// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fail. The double Mach reflection runs take a few minutes; everything else
// finishes in seconds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aoweno/bench.hpp"
#include "aoweno/cases.hpp"
#include "aoweno/output.hpp"
#include "aoweno/run_config.hpp"
#include "aoweno/solver.hpp"
#include "oracle_jacobian.hpp"
#include "oracle_quadrature.hpp"
#include "oracle_rational.hpp"

using namespace aoweno;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, bool pass,
               const std::string& detail) {
  std::printf("[%s] criterion %2d: %s  --  %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

ReconConfig cfg_of(ReconVariant v) {
  ReconConfig cfg;
  cfg.variant = v;
  return cfg;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double loglog_slope(const std::vector<double>& dx,
                    const std::vector<double>& err) {
  const size_t n = dx.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double x = std::log(dx[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SmoothnessSet smoothness_of(const Projection& p) {
  SmoothnessSet s;
  s.beta_opt = smoothness_indicator(p.optimal);
  for (int k = 0; k < 3; ++k) s.beta_sub[k] = smoothness_indicator(p.subs[k]);
  s.tau = global_smoothness_tau(s.beta_opt, s.beta_sub);
  return s;
}

// ---------------------------------------------------------------------------
// criteria 1 & 2: sinusoidal advection convergence against the reference
// errors, dt = dx^(5/3), t = 2, meshes 1/25 .. 1/200
// ---------------------------------------------------------------------------
void table1(int id, ReconVariant variant, const std::vector<double>& ref_l1,
            double factor, double order_tol) {
  const auto start = std::chrono::steady_clock::now();
  const auto table = convergence_table("sine_advection", {50, 100, 200, 400},
                                       make_runner(cfg_of(variant), 1));
  bool pass = true;
  std::ostringstream detail;
  detail << std::scientific << std::setprecision(2);
  for (size_t level = 0; level < table.size(); ++level) {
    const double ratio = table[level].l1 / ref_l1[level];
    pass = pass && ratio < factor && ratio > 1.0 / factor;
    detail << (level ? " " : "") << "l1=" << table[level].l1;
  }
  for (size_t level = 2; level < table.size(); ++level) {
    const double order = table[level].order_l1.value_or(0.0);
    pass = pass && std::abs(order - 5.0) <= order_tol;
    detail << " ord=" << std::fixed << std::setprecision(3) << order
           << std::scientific << std::setprecision(2);
  }
  detail << "  (" << std::fixed << std::setprecision(1) << seconds_since(start)
         << "s)";
  criterion(id,
            variant == ReconVariant::aoa ? "Table-1 reproduction, aoa scheme"
                                         : "Table-1 reproduction, ao scheme",
            pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 3: convexity of the aoa weights over randomized windows
// ---------------------------------------------------------------------------
void convexity(int id) {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> logmag(-12.0, 12.0);
  std::uniform_int_distribution<int> shape(0, 3);
  const ReconConfig cfg = cfg_of(ReconVariant::aoa);

  const int trials = 200000;
  int bad = 0;
  double worst_sum_gap = 0.0;
  for (int trial = 0; trial < trials && bad < 8; ++trial) {
    const double mag = std::pow(10.0, logmag(rng));
    ReconWindow w;
    switch (shape(rng)) {
      case 0:
        for (auto& v : w) v = mag * unit(rng);
        break;
      case 1: {
        const int pos = 1 + (trial % 4);
        for (int i = 0; i < 5; ++i) w[i] = i < pos ? -0.25 * mag : mag;
        break;
      }
      case 2:
        w = {0, 0, mag, 0, 0};
        break;
      default:
        for (auto& v : w) v = mag;
        break;
    }
    const WeightSet ws = aoa_weights(smoothness_of(project_to_legendre(w)), cfg);
    double sum = 0.0;
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      ok = ok && std::isfinite(ws.normalized[k]) && ws.normalized[k] >= 0.0;
      sum += ws.normalized[k];
    }
    worst_sum_gap = std::max(worst_sum_gap, std::abs(sum - 1.0));
    ok = ok && std::abs(sum - 1.0) < 1e-14;
    if (!ok) ++bad;
  }
  std::ostringstream detail;
  detail << trials << " windows, magnitudes 1e-12..1e12, violations=" << bad
         << ", worst |sum-1|=" << std::scientific << std::setprecision(1)
         << worst_sum_gap;
  criterion(id, "strict convexity of aoa weights", bad == 0, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 4: deviation from the optimal polynomial under refinement
// ---------------------------------------------------------------------------
double smooth_f(double x) { return std::sin(M_PI * x); }
double valley_f(double x) { return std::exp(x) + std::exp(-2.0 * x); }

void deviation_order(int id) {
  const auto start = std::chrono::steady_clock::now();
  const ReconConfig cfg = cfg_of(ReconVariant::aoa);
  const std::vector<double> steps = {1.0 / 25, 1.0 / 50, 1.0 / 100, 1.0 / 200,
                                     1.0 / 400};

  const auto deviation_at = [&](double (*f)(double), double center, double dx) {
    ReconWindow w;
    for (int m = -2; m <= 2; ++m) w[m + 2] = f(center + m * dx);
    const Projection p = project_to_legendre(w);
    const WeightSet ws = aoa_weights(smoothness_of(p), cfg);
    const double v_opt = evaluate_at(p.optimal, 0.5);
    double dev = 0.0;
    for (int k = 0; k < 3; ++k)
      dev += ws.normalized[k + 1] * (evaluate_at(p.subs[k], 0.5) - v_opt);
    return std::abs(dev);
  };

  std::vector<double> generic, extremum;
  const double xstar = std::log(2.0) / 3.0;  // f'(xstar)=0, f'' and f''' != 0
  for (double dx : steps) {
    generic.push_back(deviation_at(smooth_f, 0.3, dx));
    extremum.push_back(deviation_at(valley_f, xstar, dx));
  }
  const double slope_generic = loglog_slope(steps, generic);
  const double slope_extremum = loglog_slope(steps, extremum);

  std::ostringstream detail;
  detail << std::fixed << std::setprecision(2)
         << "generic slope=" << slope_generic
         << " (>=6.5), extremum slope=" << slope_extremum << " (>=4.5)  ("
         << std::setprecision(2) << seconds_since(start) << "s)";
  criterion(id, "deviation order from the optimal polynomial",
            slope_generic >= 6.5 && slope_extremum >= 4.5, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 5: the smooth sub-stencil dominates across a step
// ---------------------------------------------------------------------------
void eno_property(int id) {
  const ReconWindow w = {0, 0, 0, 1, 1};
  const ReconConfig cfg = cfg_of(ReconVariant::aoa);
  const Projection p = project_to_legendre(w);
  const WeightSet ws = aoa_weights(smoothness_of(p), cfg);
  const double recon = reconstruct_interface(w, cfg);
  const double smooth_value = evaluate_at(p.subs[0], 0.5);  // identically 0

  std::ostringstream detail;
  detail << std::scientific << std::setprecision(1)
         << "smooth weight deficit=" << 1.0 - ws.normalized[1]
         << ", |recon - sub|=" << std::abs(recon - smooth_value);
  criterion(id, "step window selects the smooth sub-stencil",
            ws.normalized[1] > 1.0 - 1e-10 &&
                std::abs(recon - smooth_value) < 1e-8,
            detail.str());
}

// ---------------------------------------------------------------------------
// criterion 6: composite-wave advection, both schemes
// ---------------------------------------------------------------------------
void composite_wave(int id) {
  const auto start = std::chrono::steady_clock::now();
  const CaseSpec spec = make_case("jiang_shu_composite", {.nx = 400});

  const RunResult ao = run_to_time(spec, cfg_of(ReconVariant::ao));
  const RunResult aoa = run_to_time(spec, cfg_of(ReconVariant::aoa));
  const FieldScan scan_ao = scan_extrema_and_tv(ao.field);
  const FieldScan scan_aoa = scan_extrema_and_tv(aoa.field);

  double l1 = 0.0;
  for (int i = 0; i < 400; ++i)
    l1 += std::abs(ao.field.get(i)[0] - aoa.field.get(i)[0]);
  l1 /= 400.0;

  const bool bounds = scan_ao.min >= -0.05 && scan_ao.max <= 1.05 &&
                      scan_aoa.min >= -0.05 && scan_aoa.max <= 1.05;
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(4) << "ao range [" << scan_ao.min
         << ", " << scan_ao.max << "], aoa range [" << scan_aoa.min << ", "
         << scan_aoa.max << "], scheme distance l1=" << l1 << "  ("
         << std::setprecision(1) << seconds_since(start) << "s)";
  criterion(id, "composite wave at t=20, both schemes", bounds && l1 < 0.05,
            detail.str());
}

// ---------------------------------------------------------------------------
// criterion 7: double Mach reflection at desk scale, both schemes
// ---------------------------------------------------------------------------
void double_mach(int id) {
  const auto start = std::chrono::steady_clock::now();
  const CaseSpec spec = make_case("dmr", {.nx = 400, .ny = 100});

  bool pass = true;
  std::ostringstream detail;
  for (ReconVariant variant : {ReconVariant::ao, ReconVariant::aoa}) {
    const char* name = variant == ReconVariant::ao ? "ao" : "aoa";
    try {
      const RunResult result = run_to_time(spec, cfg_of(variant));
      double rho_min = 1e300, p_min = 1e300;
      for (int j = 0; j < 100; ++j)
        for (int i = 0; i < 400; ++i) {
          const StateVec u = result.field.get(i, j);
          rho_min = std::min(rho_min, u[0]);
          p_min = std::min(p_min, euler_pressure(spec.model, u));
        }
      pass = pass && rho_min > 0.0 && p_min > 0.0;
      detail << name << ": steps=" << result.run.step_count
             << " rho_min=" << std::scientific << std::setprecision(2)
             << rho_min << " p_min=" << p_min << "  ";
    } catch (const BlowUpError& err) {
      pass = false;
      detail << name << ": BLEW UP (" << err.what() << ")  ";
    }
  }
  detail << "(" << std::fixed << std::setprecision(0) << seconds_since(start)
         << "s)";
  criterion(id, "double Mach reflection 400x100 to t=0.28", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 8: oracle equivalence suites
// ---------------------------------------------------------------------------
void oracle_equivalence(int id) {
  std::mt19937_64 rng(99);
  bool pass = true;
  std::ostringstream detail;
  detail << std::scientific << std::setprecision(1);

  // (a) smoothness quadratic forms against numerical quadrature
  {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
      LegendreCoeffs quartic{4, {d(rng), d(rng), d(rng), d(rng), d(rng)}};
      LegendreCoeffs quadratic{2, {d(rng), d(rng), d(rng), 0, 0}};
      for (const LegendreCoeffs& p : {quartic, quadratic}) {
        const double form = smoothness_indicator(p);
        const double quad = oracle::beta_by_quadrature(p);
        worst = std::max(
            worst, std::abs(form - quad) / std::max(1e-300, std::abs(quad)));
      }
    }
    pass = pass && worst < 1e-12;
    detail << "beta rel=" << worst;
  }

  // (b) polynomial fits against the exact rational oracle
  {
    std::uniform_int_distribution<long long> d(-40, 40);
    double worst = 0.0;
    for (int trial = 0; trial < 400; ++trial) {
      ReconWindow w;
      std::vector<oracle::Rat> vals;
      for (int i = 0; i < 5; ++i) {
        const long long v = d(rng);
        w[i] = static_cast<double>(v);
        vals.emplace_back(v);
      }
      const Projection p = project_to_legendre(w);
      const auto exact = oracle::fit_cell_averages({-2, -1, 0, 1, 2}, vals);
      for (int j = 0; j < 5; ++j)
        worst = std::max(worst,
                         std::abs(p.optimal.c[j] - exact[j].to_double()) /
                             std::max(1.0, std::abs(exact[j].to_double())));
    }
    pass = pass && worst < 1e-13;
    detail << ", fit rel=" << worst;
  }

  // (c) Euler eigensystems against finite-difference Jacobians
  {
    std::uniform_real_distribution<double> rho_d(0.1, 10.0);
    std::uniform_real_distribution<double> vel_d(-5.0, 5.0);
    std::uniform_real_distribution<double> p_d(0.05, 20.0);
    double worst = 0.0;
    for (const FluxModel& model : {FluxModel::euler1d(), FluxModel::euler2d()}) {
      const int m = model.components();
      for (int trial = 0; trial < 200; ++trial) {
        StateVec w;
        w.m = m;
        w[0] = rho_d(rng);
        w[1] = vel_d(rng);
        if (m == 4) {
          w[2] = vel_d(rng);
          w[3] = p_d(rng);
        } else {
          w[2] = p_d(rng);
        }
        const StateVec u = conserved_from_primitive(model, w);
        for (Axis axis : {Axis::x, Axis::y}) {
          if (axis == Axis::y && m != 4) continue;
          const EigenSystem es = eigensystem(model, u, u, axis);
          const auto jac = oracle::fd_flux_jacobian(model, u, axis);
          const auto rdl = oracle::eigensystem_product(es);
          for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
              worst = std::max(worst, std::abs(rdl[r][c] - jac[r][c]));
        }
      }
    }
    pass = pass && worst < 1e-6;
    detail << ", jacobian abs=" << worst;
  }

  // (d) initial DMR shock against the jump-condition fluxes in the shock
  // frame
  {
    const CaseSpec dmr = make_case("dmr");
    const ObliqueShock& shock = dmr.bc.shock;
    const double nx = shock.sin_angle, ny = -shock.cos_angle;
    const auto fluxes = [&](const StateVec& cons) {
      const StateVec w = primitive_from_conserved(dmr.model, cons);
      const double un = w[1] * nx + w[2] * ny - shock.speed;
      const double ut = -w[1] * ny + w[2] * nx;
      const double e =
          w[3] / (dmr.model.gamma - 1.0) + 0.5 * w[0] * (un * un + ut * ut);
      return std::array<double, 4>{w[0] * un, w[0] * un * un + w[3],
                                   un * (e + w[3]), ut};
    };
    const auto pre = fluxes(shock.pre);
    const auto post = fluxes(shock.post);
    double worst = 0.0;
    for (int c = 0; c < 4; ++c)
      worst = std::max(worst, std::abs(pre[c] - post[c]));
    pass = pass && worst < 1e-10;
    detail << ", shock jump=" << worst;
  }

  criterion(id, "oracle equivalence suites", pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 9: conservation and free-stream preservation
// ---------------------------------------------------------------------------
void conservation(int id) {
  bool pass = true;
  std::ostringstream detail;
  detail << std::scientific << std::setprecision(1);

  // scalar: composite wave over a few hundred steps
  {
    const CaseSpec spec =
        make_case("jiang_shu_composite", {.nx = 400, .t_final = 0.5});
    const FieldArray init = initialize_field(spec);
    const double mass0 = init.component_sum(0);
    const RunResult result = run_to_time(spec, cfg_of(ReconVariant::aoa));
    const double drift = std::abs(result.field.component_sum(0) - mass0) /
                         std::max(1.0, std::abs(mass0));
    pass = pass && result.run.step_count >= 100 && drift <= 1e-12;
    detail << "scalar drift=" << drift << " (" << result.run.step_count
           << " steps)";
  }

  // Euler: periodic density wave
  {
    CaseSpec spec;
    spec.name = "euler_wave";
    spec.model = FluxModel::euler1d();
    spec.grid = Grid::make_1d(128, 0.0, 1.0);
    spec.bc.side[0].kind = BcKind::periodic;
    spec.bc.side[1].kind = BcKind::periodic;
    const FluxModel model = spec.model;
    spec.initial = [model](double x, double) {
      StateVec w;
      w.m = 3;
      w[0] = 2.0 + 0.5 * std::sin(2.0 * M_PI * x);
      w[1] = 1.0;
      w[2] = 1.0;
      return conserved_from_primitive(model, w);
    };
    spec.t_final = 1.0;
    spec.cfl = 0.5;

    const FieldArray init = initialize_field(spec);
    const RunResult result = run_to_time(spec, cfg_of(ReconVariant::aoa));
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double mass0 = init.component_sum(c);
      worst = std::max(worst, std::abs(result.field.component_sum(c) - mass0) /
                                  std::max(1.0, std::abs(mass0)));
    }
    pass = pass && result.run.step_count >= 100 && worst <= 1e-12;
    detail << ", euler drift=" << worst << " (" << result.run.step_count
           << " steps)";
  }

  // free-stream: constant fields give identically negligible tendencies
  {
    double worst = 0.0;
    {
      const Grid grid = Grid::make_1d(32, 0.0, 1.0);
      const FluxModel model = FluxModel::euler1d();
      StateVec w;
      w.m = 3;
      w[0] = 1.0;
      w[1] = 0.6;
      w[2] = 1.3;
      FieldArray field(grid, 3), tend(grid, 3);
      for (int i = 0; i < 32; ++i)
        field.set(i, conserved_from_primitive(model, w));
      BoundarySpec bc;
      bc.side[0].kind = BcKind::periodic;
      bc.side[1].kind = BcKind::periodic;
      rhs(field, grid, bc, model, cfg_of(ReconVariant::aoa), 0.0, tend);
      for (int i = 0; i < 32; ++i)
        for (int c = 0; c < 3; ++c)
          worst = std::max(worst, std::abs(tend.cell(i)[c]));
    }
    {
      const Grid grid = Grid::make_2d(24, 16, 0.0, 1.0, 0.0, 1.0);
      const FluxModel model = FluxModel::euler2d();
      StateVec w;
      w.m = 4;
      w[0] = 1.0;
      w[1] = 0.8;
      w[2] = -0.6;
      w[3] = 1.2;
      FieldArray field(grid, 4), tend(grid, 4);
      for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 24; ++i)
          field.set(i, j, conserved_from_primitive(model, w));
      BoundarySpec bc;
      for (int s = 0; s < 4; ++s) bc.side[s].kind = BcKind::periodic;
      rhs(field, grid, bc, model, cfg_of(ReconVariant::aoa), 0.0, tend);
      for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 24; ++i)
          for (int c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(tend.cell(i, j)[c]));
    }
    pass = pass && worst <= 1e-12;
    detail << ", free-stream tendency=" << worst;
  }

  criterion(id, "conservation and free-stream preservation", pass,
            detail.str());
}

// ---------------------------------------------------------------------------
// criterion 10: byte-identical artifacts across repeats and worker counts
// ---------------------------------------------------------------------------
void determinism(int id) {
  const fs::path base = fs::temp_directory_path() / "aoweno_acceptance_det";
  fs::remove_all(base);

  const auto run_with = [&](const std::string& tag, int workers,
                            const std::string& case_name, int nx, int ny,
                            double t_final) {
    RunConfig config;
    config.case_name = case_name;
    config.nx = nx;
    if (ny > 0) config.ny = ny;
    config.t_final = t_final;
    config.workers = workers;
    config.out_dir = (base / tag).string();
    return cmd_run(config);
  };

  bool pass = true;
  std::ostringstream detail;

  const RunArtifacts a = run_with("a", 1, "jiang_shu_composite", 200, 0, 1.0);
  const RunArtifacts b = run_with("b", 1, "jiang_shu_composite", 200, 0, 1.0);
  const RunArtifacts c = run_with("c", 4, "jiang_shu_composite", 200, 0, 1.0);
  const bool field_1d = slurp(a.field_file) == slurp(b.field_file) &&
                        slurp(a.field_file) == slurp(c.field_file);
  pass = pass && field_1d;
  detail << "1d fields " << (field_1d ? "identical" : "DIFFER");

  const RunArtifacts d = run_with("d", 1, "dmr", 80, 20, 0.02);
  const RunArtifacts e = run_with("e", 4, "dmr", 80, 20, 0.02);
  const bool field_2d = slurp(d.field_file) == slurp(e.field_file);
  pass = pass && field_2d;
  detail << ", 2d fields " << (field_2d ? "identical" : "DIFFER");

  // summaries identical apart from run metadata (wall time, requested
  // worker count); norms, extrema, and step counts must match bitwise
  const auto strip_metadata = [](std::string text) {
    for (const char* key : {"\"wall_time_ms\"", "\"workers\""}) {
      const size_t pos = text.find(key);
      if (pos == std::string::npos) continue;
      const size_t end = text.find('\n', pos);
      text.erase(pos, end - pos);
    }
    return text;
  };
  const bool summaries = strip_metadata(slurp(a.summary_file)) ==
                             strip_metadata(slurp(c.summary_file)) &&
                         strip_metadata(slurp(d.summary_file)) ==
                             strip_metadata(slurp(e.summary_file));
  pass = pass && summaries;
  detail << ", summaries " << (summaries ? "identical" : "DIFFER")
         << " (run metadata aside)";

  criterion(id, "determinism across repeats and worker counts", pass,
            detail.str());
  fs::remove_all(base);
}

}  // namespace

int main() {
  std::printf("adaptive-order WENO acceptance suite\n");
  std::printf("------------------------------------\n");

  table1(1, ReconVariant::aoa, {2.57e-6, 8.11e-8, 2.54e-9, 8.02e-11}, 1.5, 0.15);
  table1(2, ReconVariant::ao, {2.11e-6, 6.67e-8, 2.09e-9, 6.66e-11}, 2.0, 0.2);
  convexity(3);
  deviation_order(4);
  eno_property(5);
  composite_wave(6);
  double_mach(7);
  oracle_equivalence(8);
  conservation(9);
  determinism(10);

  std::printf("------------------------------------\n");
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILURE",
              failures);
  return failures == 0 ? 0 : 1;
}
