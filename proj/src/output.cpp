#include "aoweno/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aoweno {

namespace {

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_csv_1d(const std::filesystem::path& path, const FieldArray& field,
                  const Grid& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv_1d: cannot open " + path.string());
  out << "x";
  for (int c = 0; c < field.ncomp(); ++c) out << ",u" << c;
  out << "\n";
  for (int i = 0; i < grid.n[0]; ++i) {
    out << full_precision(grid.pos(0, i));
    const double* cell = field.cell(i);
    for (int c = 0; c < field.ncomp(); ++c) out << "," << full_precision(cell[c]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write_csv_1d: write failed for " + path.string());
}

Csv1d read_csv_1d(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv_1d: cannot open " + path.string());
  std::string header;
  std::getline(in, header);
  int ncomp = 0;
  for (char ch : header)
    if (ch == ',') ++ncomp;
  if (ncomp < 1) throw std::runtime_error("read_csv_1d: malformed header");

  Csv1d data;
  data.components.resize(ncomp);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tok;
    std::getline(row, tok, ',');
    data.x.push_back(std::stod(tok));
    for (int c = 0; c < ncomp; ++c) {
      std::getline(row, tok, ',');
      data.components[c].push_back(std::stod(tok));
    }
  }
  return data;
}

void write_vtk_2d(const std::filesystem::path& path, const FieldArray& field,
                  const Grid& grid, const FluxModel& model,
                  const std::string& title) {
  if (grid.dim != 2)
    throw std::invalid_argument("write_vtk_2d: needs a 2D grid");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_vtk_2d: cannot open " + path.string());

  const int nx = grid.n[0];
  const int ny = grid.n[1];
  out << "# vtk DataFile Version 3.0\n"
      << title << "\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << nx << " " << ny << " 1\n"
      << "ORIGIN " << full_precision(grid.pos(0, 0)) << " "
      << full_precision(grid.pos(1, 0)) << " 0\n"
      << "SPACING " << full_precision(grid.dx(0)) << " "
      << full_precision(grid.dx(1)) << " 1\n"
      << "POINT_DATA " << static_cast<long>(nx) * ny << "\n";

  const auto scalar_block = [&](const std::string& name, auto&& value_at) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) out << full_precision(value_at(i, j)) << "\n";
  };

  for (int c = 0; c < field.ncomp(); ++c)
    scalar_block("u" + std::to_string(c),
                 [&](int i, int j) { return field.cell(i, j)[c]; });

  if (model.is_euler()) {
    scalar_block("density", [&](int i, int j) { return field.cell(i, j)[0]; });
    scalar_block("pressure", [&](int i, int j) {
      return euler_pressure(model, field.get(i, j));
    });
  }
  if (!out) throw std::runtime_error("write_vtk_2d: write failed for " + path.string());
}

}  // namespace aoweno
