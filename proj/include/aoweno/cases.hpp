#ifndef AOWENO_CASES_HPP_
#define AOWENO_CASES_HPP_

/// \file cases.hpp
/// Experiment definitions: initial conditions, boundary conditions, exact
/// solutions, and error norms for the benchmark cases.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aoweno/boundary.hpp"
#include "aoweno/field.hpp"
#include "aoweno/flux_model.hpp"
#include "aoweno/grid.hpp"

namespace aoweno {

enum class DtRule { cfl, fixed_power };

/// A fully resolved experiment.
struct CaseSpec {
  std::string name;
  FluxModel model;
  Grid grid;
  BoundarySpec bc;
  std::function<StateVec(double x, double y)> initial;
  double t_final = 0.0;
  DtRule dt_rule = DtRule::cfl;
  double cfl = 0.5;
  /// Present for the advection convergence cases.
  std::function<StateVec(double x, double y, double t)> exact;
};

struct CaseOverrides {
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> t_final;
  std::optional<double> cfl;
};

/// Known names: sine_advection, jiang_shu_composite, dmr, sod.
CaseSpec make_case(const std::string& name, const CaseOverrides& overrides = {});

/// Names accepted by make_case.
std::vector<std::string> case_names();

/// Exact state at (x, y, t); throws if the case has no exact solution.
StateVec exact_solution(const CaseSpec& spec, double x, double y, double t);

/// Mach-{mach} planar shock through (x_at_wall, 0) at angle_deg to the x
/// axis, moving into the given pre-shock primitive state. Post-shock state
/// from the normal-shock jump relations.
ObliqueShock make_oblique_shock(const FluxModel& model, const StateVec& pre_prim,
                                double mach, double angle_deg, double x_at_wall);

struct ErrorReport {
  double l1 = 0.0;
  double linf = 0.0;
  int n = 0;
  std::optional<double> order_l1;
  std::optional<double> order_linf;
};

/// Averaged L1 and max-norm error of component 0 against the exact solution.
ErrorReport error_norms(const FieldArray& field, const CaseSpec& spec, double t);

/// Runs one resolved case to its final time and returns the final field.
using CaseRunner = std::function<FieldArray(const CaseSpec&)>;

/// Run the case at each cell count and report norms; observed orders are
/// attached for consecutive mesh-doubling pairs.
std::vector<ErrorReport> convergence_table(const std::string& case_name,
                                           const std::vector<int>& cell_counts,
                                           const CaseRunner& run_case);

struct FieldScan {
  double min = 0.0;
  double max = 0.0;
  double total_variation = 0.0;
};

/// Interior min, max, and total variation of a 1D scalar field.
FieldScan scan_extrema_and_tv(const FieldArray& field);

}  // namespace aoweno

#endif  // AOWENO_CASES_HPP_
