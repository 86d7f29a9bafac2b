#include "aoweno/cases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aoweno {

namespace {

double wrap_periodic(double x, double x0, double length) {
  double w = std::fmod(x - x0, length);
  if (w < 0.0) w += length;
  return x0 + w;
}

StateVec scalar_state(double v) {
  StateVec s;
  s[0] = v;
  return s;
}

// Four-feature advection profile on [-1, 1]: Gaussians, square wave, sharp
// triangle, half ellipse.
double composite_profile(double x) {
  const double a = 0.5;
  const double z = -0.7;
  const double delta = 0.005;
  const double alpha = 10.0;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  const auto gauss = [&](double center) {
    return std::exp(-beta * (x - center) * (x - center));
  };
  const auto ellipse = [&](double center) {
    const double arg = 1.0 - alpha * alpha * (x - center) * (x - center);
    return std::sqrt(std::max(arg, 0.0));
  };
  if (x >= -0.8 && x <= -0.6)
    return (gauss(z - delta) + gauss(z + delta) + 4.0 * gauss(z)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6)
    return (ellipse(a - delta) + ellipse(a + delta) + 4.0 * ellipse(a)) / 6.0;
  return 0.0;
}

CaseSpec advection_case(const std::string& name, double (*profile)(double),
                        int default_nx, double t_final, DtRule rule,
                        const CaseOverrides& ov) {
  CaseSpec spec;
  spec.name = name;
  spec.model = FluxModel::advection(1.0);
  spec.grid = Grid::make_1d(ov.nx.value_or(default_nx), -1.0, 1.0);
  spec.bc.side[0].kind = BcKind::periodic;
  spec.bc.side[1].kind = BcKind::periodic;
  spec.initial = [profile](double x, double) { return scalar_state(profile(x)); };
  spec.t_final = ov.t_final.value_or(t_final);
  spec.dt_rule = rule;
  spec.cfl = ov.cfl.value_or(0.5);
  spec.exact = [profile](double x, double, double t) {
    return scalar_state(profile(wrap_periodic(x - t, -1.0, 2.0)));
  };
  return spec;
}

double sine_profile(double x) { return std::sin(M_PI * x); }

}  // namespace

ObliqueShock make_oblique_shock(const FluxModel& model, const StateVec& pre_prim,
                                double mach, double angle_deg,
                                double x_at_wall) {
  const double g = model.gamma;
  const double rho1 = pre_prim[0];
  const double p1 = pre_prim[3];
  const double c1 = std::sqrt(g * p1 / rho1);
  const double ms2 = mach * mach;

  const double rho2 = rho1 * ((g + 1.0) * ms2) / ((g - 1.0) * ms2 + 2.0);
  const double p2 = p1 * (2.0 * g * ms2 - (g - 1.0)) / (g + 1.0);
  const double un2 = mach * c1 * (1.0 - rho1 / rho2);

  ObliqueShock shock;
  shock.x_at_wall = x_at_wall;
  shock.sin_angle = std::sin(angle_deg * M_PI / 180.0);
  shock.cos_angle = std::cos(angle_deg * M_PI / 180.0);
  shock.speed = mach * c1;

  shock.pre = conserved_from_primitive(model, pre_prim);
  StateVec post_prim;
  post_prim.m = 4;
  post_prim[0] = rho2;
  post_prim[1] = pre_prim[1] + un2 * shock.sin_angle;
  post_prim[2] = pre_prim[2] - un2 * shock.cos_angle;
  post_prim[3] = p2;
  shock.post = conserved_from_primitive(model, post_prim);
  return shock;
}

CaseSpec make_case(const std::string& name, const CaseOverrides& ov) {
  if (name == "sine_advection")
    return advection_case(name, sine_profile, 100, 2.0, DtRule::fixed_power, ov);

  if (name == "jiang_shu_composite")
    return advection_case(name, composite_profile, 400, 20.0, DtRule::cfl, ov);

  if (name == "sod") {
    CaseSpec spec;
    spec.name = name;
    spec.model = FluxModel::euler1d();
    spec.grid = Grid::make_1d(ov.nx.value_or(200), 0.0, 1.0);
    spec.bc.side[0].kind = BcKind::zero_gradient_outflow;
    spec.bc.side[1].kind = BcKind::zero_gradient_outflow;
    const FluxModel model = spec.model;
    spec.initial = [model](double x, double) {
      StateVec w;
      w.m = 3;
      if (x < 0.5) {
        w[0] = 1.0;
        w[1] = 0.0;
        w[2] = 1.0;
      } else {
        w[0] = 0.125;
        w[1] = 0.0;
        w[2] = 0.1;
      }
      return conserved_from_primitive(model, w);
    };
    spec.t_final = ov.t_final.value_or(0.2);
    spec.dt_rule = DtRule::cfl;
    spec.cfl = ov.cfl.value_or(0.5);
    return spec;
  }

  if (name == "dmr") {
    CaseSpec spec;
    spec.name = name;
    spec.model = FluxModel::euler2d();
    // the reference resolution is 1601x401 mesh points, i.e. 1600x400 cells
    spec.grid = Grid::make_2d(ov.nx.value_or(1600), ov.ny.value_or(400),
                              0.0, 4.0, 0.0, 1.0);

    StateVec pre_prim;
    pre_prim.m = 4;
    pre_prim[0] = 1.4;
    pre_prim[1] = 0.0;
    pre_prim[2] = 0.0;
    pre_prim[3] = 1.0;
    const ObliqueShock shock =
        make_oblique_shock(spec.model, pre_prim, 10.0, 60.0, 1.0 / 6.0);

    spec.bc.shock = shock;
    spec.bc.side[0] = {BcKind::dirichlet, shock.post};
    spec.bc.side[1] = {BcKind::zero_gradient_outflow, {}};
    spec.bc.side[2] = {BcKind::dmr_bottom, {}};
    spec.bc.side[3] = {BcKind::dmr_top, {}};

    spec.initial = [shock](double x, double y) { return shock.state_at(x, y, 0.0); };
    spec.t_final = ov.t_final.value_or(0.28);
    spec.dt_rule = DtRule::cfl;
    spec.cfl = ov.cfl.value_or(0.5);
    return spec;
  }

  throw std::invalid_argument("make_case: unknown case '" + name + "'");
}

std::vector<std::string> case_names() {
  return {"sine_advection", "jiang_shu_composite", "dmr", "sod"};
}

StateVec exact_solution(const CaseSpec& spec, double x, double y, double t) {
  if (!spec.exact)
    throw std::logic_error("exact_solution: case '" + spec.name +
                           "' has no exact solution");
  return spec.exact(x, y, t);
}

ErrorReport error_norms(const FieldArray& field, const CaseSpec& spec,
                        double t) {
  if (!spec.exact)
    throw std::logic_error("error_norms: case '" + spec.name +
                           "' has no exact solution");
  ErrorReport report;
  report.n = spec.grid.n[0];
  double sum = 0.0, peak = 0.0;
  for (int i = 0; i < spec.grid.n[0]; ++i) {
    const double x = spec.grid.pos(0, i);
    const double err = std::abs(field.get(i)[0] - spec.exact(x, 0.0, t)[0]);
    sum += err;
    peak = std::max(peak, err);
  }
  report.l1 = sum / spec.grid.n[0];
  report.linf = peak;
  return report;
}

std::vector<ErrorReport> convergence_table(const std::string& case_name,
                                           const std::vector<int>& cell_counts,
                                           const CaseRunner& run_case) {
  std::vector<ErrorReport> table;
  for (size_t level = 0; level < cell_counts.size(); ++level) {
    CaseOverrides ov;
    ov.nx = cell_counts[level];
    const CaseSpec spec = make_case(case_name, ov);
    const FieldArray final_field = run_case(spec);
    ErrorReport report = error_norms(final_field, spec, spec.t_final);
    if (level > 0 && cell_counts[level] == 2 * cell_counts[level - 1]) {
      const ErrorReport& prev = table.back();
      if (prev.l1 > 0.0 && report.l1 > 0.0 && prev.l1 != report.l1)
        report.order_l1 = std::log2(prev.l1 / report.l1);
      if (prev.linf > 0.0 && report.linf > 0.0 && prev.linf != report.linf)
        report.order_linf = std::log2(prev.linf / report.linf);
    }
    table.push_back(report);
  }
  return table;
}

FieldScan scan_extrema_and_tv(const FieldArray& field) {
  FieldScan scan;
  scan.min = field.get(0)[0];
  scan.max = scan.min;
  for (int i = 0; i < field.nx(); ++i) {
    const double v = field.get(i)[0];
    scan.min = std::min(scan.min, v);
    scan.max = std::max(scan.max, v);
    if (i > 0) scan.total_variation += std::abs(v - field.get(i - 1)[0]);
  }
  return scan;
}

}  // namespace aoweno
