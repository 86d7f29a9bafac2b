#ifndef AOWENO_RUN_CONFIG_HPP_
#define AOWENO_RUN_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "aoweno/cases.hpp"
#include "aoweno/reconstruction.hpp"

namespace aoweno {

/// One resolved experiment request. Defaults mirror the benchmark settings
/// (gamma_hi = gamma_lo = 0.85, epsilon = 1e-40, CFL = 0.5 via the cases).
struct RunConfig {
  std::string case_name = "sine_advection";
  std::string scheme = "aoa";  // "ao" | "aoa"
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<double> cfl;
  std::optional<double> t_final;
  double gamma_hi = 0.85;
  double gamma_lo = 0.85;
  double epsilon = 1e-40;
  std::string out_dir = "out";
  double snapshot_every = 0.0;
  int workers = 1;

  bool operator==(const RunConfig&) const = default;

  ReconVariant variant() const;
  ReconConfig recon_config() const;
  CaseSpec resolve_case() const;

  std::string to_json_string() const;
  static RunConfig from_json_string(const std::string& text);
  static RunConfig from_json_file(const std::filesystem::path& path);
};

}  // namespace aoweno

#endif  // AOWENO_RUN_CONFIG_HPP_
