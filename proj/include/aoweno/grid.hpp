#ifndef AOWENO_GRID_HPP_
#define AOWENO_GRID_HPP_

#include <array>
#include <stdexcept>

namespace aoweno {

/// Uniform structured grid, 1D or 2D. Values live at cell centers; three
/// ghost layers per side cover the five-point window on both splits.
struct Grid {
  int dim = 1;
  std::array<int, 2> n = {1, 1};
  std::array<double, 2> origin = {0.0, 0.0};
  std::array<double, 2> extent = {1.0, 1.0};

  static constexpr int ghost = 3;

  double dx(int axis) const { return extent[axis] / n[axis]; }

  /// Center of interior cell i along an axis (i in [0, n)).
  double pos(int axis, int i) const {
    return origin[axis] + (i + 0.5) * dx(axis);
  }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("Grid: dim must be 1 or 2");
    for (int a = 0; a < dim; ++a) {
      if (n[a] < ghost) throw std::invalid_argument("Grid: too few cells for the ghost width");
      if (!(extent[a] > 0.0)) throw std::invalid_argument("Grid: extent must be positive");
    }
  }

  static Grid make_1d(int nx, double x0, double x1) {
    Grid g;
    g.dim = 1;
    g.n = {nx, 1};
    g.origin = {x0, 0.0};
    g.extent = {x1 - x0, 1.0};
    g.validate();
    return g;
  }

  static Grid make_2d(int nx, int ny, double x0, double x1, double y0, double y1) {
    Grid g;
    g.dim = 2;
    g.n = {nx, ny};
    g.origin = {x0, y0};
    g.extent = {x1 - x0, y1 - y0};
    g.validate();
    return g;
  }
};

}  // namespace aoweno

#endif  // AOWENO_GRID_HPP_
