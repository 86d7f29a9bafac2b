#include "aoweno/run_config.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace aoweno {

using nlohmann::json;

ReconVariant RunConfig::variant() const {
  if (scheme == "ao") return ReconVariant::ao;
  if (scheme == "aoa") return ReconVariant::aoa;
  throw std::invalid_argument("RunConfig: scheme must be 'ao' or 'aoa'");
}

ReconConfig RunConfig::recon_config() const {
  ReconConfig cfg;
  cfg.gamma_hi = gamma_hi;
  cfg.gamma_lo = gamma_lo;
  cfg.epsilon = epsilon;
  cfg.variant = variant();
  cfg.validate();
  return cfg;
}

CaseSpec RunConfig::resolve_case() const {
  CaseOverrides ov;
  ov.nx = nx;
  ov.ny = ny;
  ov.cfl = cfl;
  ov.t_final = t_final;
  return make_case(case_name, ov);
}

std::string RunConfig::to_json_string() const {
  json j;
  j["case"] = case_name;
  j["scheme"] = scheme;
  if (nx) j["nx"] = *nx;
  if (ny) j["ny"] = *ny;
  if (cfl) j["cfl"] = *cfl;
  if (t_final) j["t_final"] = *t_final;
  j["gamma_hi"] = gamma_hi;
  j["gamma_lo"] = gamma_lo;
  j["epsilon"] = epsilon;
  j["out_dir"] = out_dir;
  j["snapshot_every"] = snapshot_every;
  j["workers"] = workers;
  return j.dump(2);
}

RunConfig RunConfig::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("RunConfig: bad JSON: ") + err.what());
  }
  RunConfig cfg;
  cfg.case_name = j.value("case", cfg.case_name);
  cfg.scheme = j.value("scheme", cfg.scheme);
  if (j.contains("nx")) cfg.nx = j["nx"].get<int>();
  if (j.contains("ny")) cfg.ny = j["ny"].get<int>();
  if (j.contains("cfl")) cfg.cfl = j["cfl"].get<double>();
  if (j.contains("t_final")) cfg.t_final = j["t_final"].get<double>();
  cfg.gamma_hi = j.value("gamma_hi", cfg.gamma_hi);
  cfg.gamma_lo = j.value("gamma_lo", cfg.gamma_lo);
  cfg.epsilon = j.value("epsilon", cfg.epsilon);
  cfg.out_dir = j.value("out_dir", cfg.out_dir);
  cfg.snapshot_every = j.value("snapshot_every", cfg.snapshot_every);
  cfg.workers = j.value("workers", cfg.workers);
  return cfg;
}

RunConfig RunConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("RunConfig: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_string(text);
}

}  // namespace aoweno
