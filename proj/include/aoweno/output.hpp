#ifndef AOWENO_OUTPUT_HPP_
#define AOWENO_OUTPUT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "aoweno/field.hpp"
#include "aoweno/flux_model.hpp"
#include "aoweno/grid.hpp"

namespace aoweno {

/// 1D field as CSV: header "x,u0[,u1,...]", one row per interior cell,
/// full round-trip precision.
void write_csv_1d(const std::filesystem::path& path, const FieldArray& field,
                  const Grid& grid);

struct Csv1d {
  std::vector<double> x;
  std::vector<std::vector<double>> components;  // [comp][cell]
};

Csv1d read_csv_1d(const std::filesystem::path& path);

/// 2D field as legacy-VTK structured points: one scalar block per conserved
/// component plus derived density and pressure for Euler models.
void write_vtk_2d(const std::filesystem::path& path, const FieldArray& field,
                  const Grid& grid, const FluxModel& model,
                  const std::string& title);

}  // namespace aoweno

#endif  // AOWENO_OUTPUT_HPP_
