#include "aoweno/boundary.hpp"

#include <stdexcept>

namespace aoweno {

void BoundarySpec::validate(int dim) const {
  const int nsides = dim == 1 ? 2 : 4;
  for (int s = 0; s < nsides; ++s) {
    const int mate = s ^ 1;
    if ((side[s].kind == BcKind::periodic) !=
        (side[mate].kind == BcKind::periodic))
      throw std::invalid_argument(
          "BoundarySpec: periodic sides must be paired");
  }
  if (dim == 1)
    for (int s = 0; s < 2; ++s)
      if (side[s].kind == BcKind::dmr_bottom || side[s].kind == BcKind::dmr_top)
        throw std::invalid_argument("BoundarySpec: dmr conditions are 2D only");
}

namespace {

StateVec mirror_normal(StateVec s, int momentum_index) {
  s[momentum_index] = -s[momentum_index];
  return s;
}

}  // namespace

void apply_boundaries(FieldArray& field, const BoundarySpec& bc,
                      const Grid& grid, double t) {
  const int nx = grid.n[0];
  const int ny = grid.dim == 2 ? grid.n[1] : 1;
  const int g = Grid::ghost;

  // x-lo / x-hi ghosts for every interior row
  for (int j = 0; j < ny; ++j) {
    for (int k = 0; k < g; ++k) {
      const int gi = -1 - k;
      switch (bc.side[0].kind) {
        case BcKind::periodic:
          field.set(gi, j, field.get(nx - 1 - k, j));
          break;
        case BcKind::zero_gradient_outflow:
          field.set(gi, j, field.get(0, j));
          break;
        case BcKind::reflecting_wall:
          field.set(gi, j, mirror_normal(field.get(k, j), 1));
          break;
        case BcKind::dirichlet:
          field.set(gi, j, bc.side[0].value);
          break;
        default:
          throw std::invalid_argument("apply_boundaries: bad x-lo condition");
      }
    }
    for (int k = 0; k < g; ++k) {
      const int gi = nx + k;
      switch (bc.side[1].kind) {
        case BcKind::periodic:
          field.set(gi, j, field.get(k, j));
          break;
        case BcKind::zero_gradient_outflow:
          field.set(gi, j, field.get(nx - 1, j));
          break;
        case BcKind::reflecting_wall:
          field.set(gi, j, mirror_normal(field.get(nx - 1 - k, j), 1));
          break;
        case BcKind::dirichlet:
          field.set(gi, j, bc.side[1].value);
          break;
        default:
          throw std::invalid_argument("apply_boundaries: bad x-hi condition");
      }
    }
  }

  if (grid.dim == 1) return;

  // y-lo / y-hi ghosts for every interior column
  const double y_top = grid.origin[1] + grid.extent[1];
  for (int i = 0; i < nx; ++i) {
    const double x = grid.pos(0, i);
    for (int k = 0; k < g; ++k) {
      const int gj = -1 - k;
      switch (bc.side[2].kind) {
        case BcKind::periodic:
          field.set(i, gj, field.get(i, ny - 1 - k));
          break;
        case BcKind::zero_gradient_outflow:
          field.set(i, gj, field.get(i, 0));
          break;
        case BcKind::reflecting_wall:
          field.set(i, gj, mirror_normal(field.get(i, k), 2));
          break;
        case BcKind::dirichlet:
          field.set(i, gj, bc.side[2].value);
          break;
        case BcKind::dmr_bottom:
          if (x < bc.shock.x_at_wall)
            field.set(i, gj, bc.shock.post);
          else
            field.set(i, gj, mirror_normal(field.get(i, k), 2));
          break;
        default:
          throw std::invalid_argument("apply_boundaries: bad y-lo condition");
      }
    }
    for (int k = 0; k < g; ++k) {
      const int gj = ny + k;
      switch (bc.side[3].kind) {
        case BcKind::periodic:
          field.set(i, gj, field.get(i, k));
          break;
        case BcKind::zero_gradient_outflow:
          field.set(i, gj, field.get(i, ny - 1));
          break;
        case BcKind::reflecting_wall:
          field.set(i, gj, mirror_normal(field.get(i, ny - 1 - k), 2));
          break;
        case BcKind::dirichlet:
          field.set(i, gj, bc.side[3].value);
          break;
        case BcKind::dmr_top:
          field.set(i, gj, bc.shock.state_at(x, y_top, t));
          break;
        default:
          throw std::invalid_argument("apply_boundaries: bad y-hi condition");
      }
    }
  }
}

}  // namespace aoweno
