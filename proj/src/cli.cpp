#include "aoweno/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "aoweno/bench.hpp"
#include "aoweno/run_config.hpp"

namespace aoweno {

namespace {

struct CliFlags {
  std::string config_path;
  std::string case_name;
  std::string scheme;
  int nx = 0, ny = 0;
  double cfl = 0.0, t_final = 0.0, snapshot_every = 0.0;
  int workers = 0;
  int levels = 4;
  std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CliFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON configuration file");
  cmd->add_option("--case", flags.case_name,
                  "case name (sine_advection, jiang_shu_composite, dmr, sod)");
  cmd->add_option("--scheme", flags.scheme, "reconstruction scheme: ao | aoa")
      ->check(CLI::IsMember({"ao", "aoa", "both"}));
  cmd->add_option("--nx", flags.nx, "cells along x");
  cmd->add_option("--ny", flags.ny, "cells along y (2D cases)");
  cmd->add_option("--cfl", flags.cfl, "Courant number");
  cmd->add_option("--t-final", flags.t_final, "final time override");
  cmd->add_option("--workers", flags.workers, "worker threads for the sweeps");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--snapshot-every", flags.snapshot_every,
                  "snapshot interval in simulated time");
}

RunConfig build_config(const CLI::App* cmd, const CliFlags& flags) {
  RunConfig config;
  if (!flags.config_path.empty())
    config = RunConfig::from_json_file(flags.config_path);
  if (cmd->count("--case")) config.case_name = flags.case_name;
  if (cmd->count("--scheme")) config.scheme = flags.scheme;
  if (cmd->count("--nx")) config.nx = flags.nx;
  if (cmd->count("--ny")) config.ny = flags.ny;
  if (cmd->count("--cfl")) config.cfl = flags.cfl;
  if (cmd->count("--t-final")) config.t_final = flags.t_final;
  if (cmd->count("--workers")) config.workers = flags.workers;
  if (cmd->count("--out")) config.out_dir = flags.out_dir;
  if (cmd->count("--snapshot-every")) config.snapshot_every = flags.snapshot_every;
  return config;
}

void write_blowup_diagnostics(const RunConfig& config, const std::string& what) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) return;
  nlohmann::json j;
  j["case"] = config.case_name;
  j["scheme"] = config.scheme;
  j["error"] = what;
  std::ofstream(std::filesystem::path(config.out_dir) /
                ("blowup_" + config.case_name + "_" + config.scheme + ".json"))
      << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"adaptive-order WENO solver"};
  app.require_subcommand(1);

  CliFlags flags;
  CLI::App* run_cmd = app.add_subcommand("run", "run one case");
  CLI::App* conv_cmd =
      app.add_subcommand("converge", "mesh-refinement convergence table");
  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "compare the ao and aoa schemes");
  for (CLI::App* cmd : {run_cmd, conv_cmd, cmp_cmd}) add_common_flags(cmd, flags);
  conv_cmd->add_option("--levels", flags.levels, "number of refinement levels");

  // CLI11 wants argv-style reversed arguments without the program name
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  CLI::App* active = run_cmd->parsed() ? run_cmd
                     : conv_cmd->parsed() ? conv_cmd
                                          : cmp_cmd;
  RunConfig config;
  try {
    config = build_config(active, flags);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (run_cmd->parsed()) {
      const RunArtifacts artifacts = cmd_run(config);
      out << "wrote " << artifacts.field_file.string() << "\n"
          << "wrote " << artifacts.summary_file.string() << "\n"
          << "steps: " << artifacts.result.run.step_count << "\n";
      return kExitOk;
    }
    if (conv_cmd->parsed()) {
      const ConvergenceArtifacts artifacts = cmd_converge(config, flags.levels);
      out << "wrote " << artifacts.table_file.string() << "\n";
      for (const auto& [scheme, table] : artifacts.tables)
        for (const ErrorReport& row : table) {
          out << scheme << "  n=" << row.n << "  l1=" << row.l1;
          if (row.order_l1) out << "  order=" << *row.order_l1;
          out << "\n";
        }
      return kExitOk;
    }
    // compare: the base config against the other scheme
    RunConfig a = config;
    RunConfig b = config;
    if (a.scheme == "both" || a.scheme == b.scheme) {
      a.scheme = "ao";
      b.scheme = "aoa";
    }
    const CompareReport report = cmd_compare(a, b);
    out << "wrote " << report.report_file.string() << "\n"
        << "field distance: l1=" << report.field_l1
        << " linf=" << report.field_linf << "\n";
    return kExitOk;
  } catch (const BlowUpError& e) {
    write_blowup_diagnostics(config, e.what());
    err << "blow-up: " << e.what() << "\n";
    return kExitBlowUp;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace aoweno
