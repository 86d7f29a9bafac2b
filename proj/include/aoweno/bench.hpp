#ifndef AOWENO_BENCH_HPP_
#define AOWENO_BENCH_HPP_

/// \file bench.hpp
/// Experiment orchestration behind the CLI: run one case and write its
/// artifacts, produce convergence tables, and compare two runs.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "aoweno/cases.hpp"
#include "aoweno/run_config.hpp"
#include "aoweno/solver.hpp"

namespace aoweno {

/// Stable exit codes: 0 success, 2 configuration error, 3 blow-up.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBlowUp = 3;

struct RunArtifacts {
  std::filesystem::path field_file;
  std::filesystem::path summary_file;
  RunResult result;
};

/// Execute the configured case. Writes the final field (CSV in 1D, VTK in
/// 2D) and a JSON run summary (norms when an exact solution exists, extrema
/// and total variation for 1D scalar fields, wall time, step count).
RunArtifacts cmd_run(const RunConfig& config);

/// Mesh-doubling convergence study from config.nx (or the case default)
/// over `levels` levels; writes a CSV table and returns the per-level
/// reports for each requested scheme ("ao", "aoa", or "both").
struct ConvergenceArtifacts {
  std::filesystem::path table_file;
  std::vector<std::pair<std::string, std::vector<ErrorReport>>> tables;
};
ConvergenceArtifacts cmd_converge(const RunConfig& config, int levels);

/// Difference report between two runs of the same case and resolution.
struct CompareReport {
  double field_l1 = 0.0;    // averaged L1 distance between final fields
  double field_linf = 0.0;  // max-norm distance
  bool has_norms = false;
  double norm_l1_a = 0.0, norm_l1_b = 0.0;
  double norm_linf_a = 0.0, norm_linf_b = 0.0;
  std::filesystem::path report_file;
};
CompareReport cmd_compare(const RunConfig& a, const RunConfig& b);

/// CaseRunner for convergence_table wired to this solver configuration.
CaseRunner make_runner(const ReconConfig& rcfg, int workers);

}  // namespace aoweno

#endif  // AOWENO_BENCH_HPP_
