#include "aoweno/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "aoweno/output.hpp"

namespace aoweno {

using nlohmann::json;

namespace {

std::string tag(const RunConfig& config) {
  return config.case_name + "_" + config.scheme;
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

CaseRunner make_runner(const ReconConfig& rcfg, int workers) {
  return [rcfg, workers](const CaseSpec& spec) {
    RunOptions options;
    options.workers = workers;
    return run_to_time(spec, rcfg, options).field;
  };
}

RunArtifacts cmd_run(const RunConfig& config) {
  const CaseSpec spec = config.resolve_case();
  const ReconConfig rcfg = config.recon_config();
  std::filesystem::create_directories(config.out_dir);

  RunOptions options;
  options.workers = config.workers;
  options.snapshot_every = config.snapshot_every;

  int snapshot_index = 0;
  if (config.snapshot_every > 0.0) {
    options.observer = [&, spec, rcfg](const FieldArray& f, const RunState& run) {
      char name[64];
      std::snprintf(name, sizeof(name), "snap_%s_%04d", tag(config).c_str(),
                    snapshot_index++);
      const std::filesystem::path base = std::filesystem::path(config.out_dir) / name;
      if (spec.grid.dim == 1)
        write_csv_1d(base.string() + ".csv", f, spec.grid);
      else
        write_vtk_2d(base.string() + ".vtk", f, spec.grid, spec.model,
                     spec.name + " t=" + std::to_string(run.t));
    };
  }

  const auto start = std::chrono::steady_clock::now();
  RunResult result = run_to_time(spec, rcfg, options);
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  RunArtifacts artifacts;
  artifacts.field_file = std::filesystem::path(config.out_dir) /
                         ("field_" + tag(config) +
                          (spec.grid.dim == 1 ? ".csv" : ".vtk"));
  if (spec.grid.dim == 1)
    write_csv_1d(artifacts.field_file, result.field, spec.grid);
  else
    write_vtk_2d(artifacts.field_file, result.field, spec.grid, spec.model,
                 spec.name);

  json summary;
  summary["case"] = spec.name;
  summary["scheme"] = config.scheme;
  summary["nx"] = spec.grid.n[0];
  if (spec.grid.dim == 2) summary["ny"] = spec.grid.n[1];
  summary["t_final"] = spec.t_final;
  summary["steps"] = result.run.step_count;
  summary["workers"] = config.workers;
  summary["wall_time_ms"] = wall_ms;
  if (spec.exact) {
    const ErrorReport norms = error_norms(result.field, spec, spec.t_final);
    summary["norms"] = {{"l1", norms.l1}, {"linf", norms.linf}};
  }
  if (spec.grid.dim == 1 && spec.model.components() == 1) {
    const FieldScan scan = scan_extrema_and_tv(result.field);
    summary["extrema"] = {{"min", scan.min}, {"max", scan.max}};
    summary["total_variation"] = scan.total_variation;
  }

  artifacts.summary_file =
      std::filesystem::path(config.out_dir) / ("summary_" + tag(config) + ".json");
  std::ofstream(artifacts.summary_file) << summary.dump(2) << "\n";
  artifacts.result = std::move(result);
  return artifacts;
}

ConvergenceArtifacts cmd_converge(const RunConfig& config, int levels) {
  if (levels < 1) throw std::invalid_argument("cmd_converge: levels must be >= 1");
  const CaseSpec base = config.resolve_case();
  if (!base.exact)
    throw std::invalid_argument("cmd_converge: case '" + base.name +
                                "' has no exact solution");
  std::filesystem::create_directories(config.out_dir);

  std::vector<int> counts;
  for (int level = 0; level < levels; ++level)
    counts.push_back(base.grid.n[0] << level);

  std::vector<std::string> schemes;
  if (config.scheme == "both")
    schemes = {"ao", "aoa"};
  else
    schemes = {config.scheme};

  ConvergenceArtifacts artifacts;
  for (const std::string& scheme : schemes) {
    RunConfig per = config;
    per.scheme = scheme;
    artifacts.tables.emplace_back(
        scheme, convergence_table(config.case_name, counts,
                                  make_runner(per.recon_config(), per.workers)));
  }

  artifacts.table_file = std::filesystem::path(config.out_dir) /
                         ("converge_" + config.case_name + ".csv");
  std::ofstream out(artifacts.table_file);
  out << "scheme,mesh_size,l1,order_l1,linf,order_linf\n";
  for (const auto& [scheme, table] : artifacts.tables) {
    for (const ErrorReport& row : table) {
      const double mesh = base.grid.extent[0] / row.n;
      out << scheme << "," << csv_number(mesh) << "," << csv_number(row.l1) << ",";
      if (row.order_l1) out << csv_number(*row.order_l1);
      out << "," << csv_number(row.linf) << ",";
      if (row.order_linf) out << csv_number(*row.order_linf);
      out << "\n";
    }
  }
  return artifacts;
}

CompareReport cmd_compare(const RunConfig& a, const RunConfig& b) {
  const CaseSpec spec_a = a.resolve_case();
  const CaseSpec spec_b = b.resolve_case();
  if (spec_a.name != spec_b.name || spec_a.grid.n != spec_b.grid.n ||
      spec_a.grid.dim != spec_b.grid.dim)
    throw std::invalid_argument("cmd_compare: mismatched cases or grids");

  const FieldArray fa = make_runner(a.recon_config(), a.workers)(spec_a);
  const FieldArray fb = make_runner(b.recon_config(), b.workers)(spec_b);

  CompareReport report;
  const int ny = spec_a.grid.dim == 2 ? spec_a.grid.n[1] : 1;
  long count = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < spec_a.grid.n[0]; ++i) {
      for (int c = 0; c < fa.ncomp(); ++c) {
        const double diff = std::abs(fa.cell(i, j)[c] - fb.cell(i, j)[c]);
        report.field_l1 += diff;
        report.field_linf = std::max(report.field_linf, diff);
      }
      ++count;
    }
  report.field_l1 /= static_cast<double>(count) * fa.ncomp();

  if (spec_a.exact) {
    const ErrorReport na = error_norms(fa, spec_a, spec_a.t_final);
    const ErrorReport nb = error_norms(fb, spec_b, spec_b.t_final);
    report.has_norms = true;
    report.norm_l1_a = na.l1;
    report.norm_l1_b = nb.l1;
    report.norm_linf_a = na.linf;
    report.norm_linf_b = nb.linf;
  }

  std::filesystem::create_directories(a.out_dir);
  report.report_file = std::filesystem::path(a.out_dir) /
                       ("compare_" + spec_a.name + "_" + a.scheme + "_vs_" +
                        b.scheme + ".json");
  json j;
  j["case"] = spec_a.name;
  j["scheme_a"] = a.scheme;
  j["scheme_b"] = b.scheme;
  j["field_l1"] = report.field_l1;
  j["field_linf"] = report.field_linf;
  if (report.has_norms) {
    j["norms_a"] = {{"l1", report.norm_l1_a}, {"linf", report.norm_linf_a}};
    j["norms_b"] = {{"l1", report.norm_l1_b}, {"linf", report.norm_linf_b}};
  }
  std::ofstream(report.report_file) << j.dump(2) << "\n";
  return report;
}

}  // namespace aoweno
