#ifndef AOWENO_FIELD_HPP_
#define AOWENO_FIELD_HPP_

#include <cmath>
#include <vector>

#include "aoweno/flux_model.hpp"
#include "aoweno/grid.hpp"

namespace aoweno {

/// Conserved-variable storage over interior plus ghost cells, row-major with
/// the component index fastest. Cell indices are interior-based: i in
/// [-ghost, n_x + ghost), and j likewise in 2D (j = 0 in 1D).
class FieldArray {
 public:
  FieldArray() = default;
  FieldArray(const Grid& grid, int ncomp)
      : ncomp_(ncomp),
        nx_(grid.n[0]),
        ny_(grid.dim == 2 ? grid.n[1] : 1),
        gx_(Grid::ghost),
        gy_(grid.dim == 2 ? Grid::ghost : 0),
        stride_((nx_ + 2 * gx_) * ncomp),
        data_((nx_ + 2 * gx_) * (ny_ + 2 * gy_) * ncomp, 0.0) {}

  int ncomp() const { return ncomp_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double* cell(int i, int j = 0) {
    return data_.data() + (j + gy_) * stride_ + (i + gx_) * ncomp_;
  }
  const double* cell(int i, int j = 0) const {
    return data_.data() + (j + gy_) * stride_ + (i + gx_) * ncomp_;
  }

  StateVec get(int i, int j = 0) const {
    StateVec s;
    s.m = ncomp_;
    const double* p = cell(i, j);
    for (int c = 0; c < ncomp_; ++c) s[c] = p[c];
    return s;
  }
  void set(int i, int j, const StateVec& s) {
    double* p = cell(i, j);
    for (int c = 0; c < ncomp_; ++c) p[c] = s[c];
  }
  void set(int i, const StateVec& s) { set(i, 0, s); }

  /// Fixed-order sum of one component over the interior.
  double component_sum(int c) const {
    double acc = 0.0;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) acc += cell(i, j)[c];
    return acc;
  }

  bool interior_finite() const {
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        const double* p = cell(i, j);
        for (int c = 0; c < ncomp_; ++c)
          if (!std::isfinite(p[c])) return false;
      }
    return true;
  }

  /// this = a*X + b*Y over the interior (shapes must match).
  void interior_lincomb(double a, const FieldArray& x, double b,
                        const FieldArray& y) {
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        double* out = cell(i, j);
        const double* px = x.cell(i, j);
        const double* py = y.cell(i, j);
        for (int c = 0; c < ncomp_; ++c) out[c] = a * px[c] + b * py[c];
      }
  }

  /// this = base + coeff*((this - base) + dt*k) over the interior: the
  /// incremental form of a Runge-Kutta convex combination, exact when both
  /// the increment and the tendency vanish.
  void interior_blend(const FieldArray& base, double coeff, double dt,
                      const FieldArray& k) {
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        double* out = cell(i, j);
        const double* pb = base.cell(i, j);
        const double* pk = k.cell(i, j);
        for (int c = 0; c < ncomp_; ++c)
          out[c] = pb[c] + coeff * ((out[c] - pb[c]) + dt * pk[c]);
      }
  }

 private:
  int ncomp_ = 1;
  int nx_ = 1, ny_ = 1;
  int gx_ = Grid::ghost, gy_ = 0;
  int stride_ = 0;
  std::vector<double> data_;
};

}  // namespace aoweno

#endif  // AOWENO_FIELD_HPP_
