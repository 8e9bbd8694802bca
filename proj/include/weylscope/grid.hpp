#pragma once

#include <cstddef>
#include <vector>

#include "weylscope/types.hpp"

namespace weylscope {

/// Uniform endpoint-excluded grid: nodes -L + k*(2L/N), k = 0..N-1 on each axis.
class RealGrid {
 public:
  RealGrid(int dim, double half_width, int points_per_axis);

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  int points_per_axis() const { return n_; }
  double spacing() const { return spacing_; }
  double node(int k) const { return -half_width_ + k * spacing_; }
  std::vector<double> axis_nodes() const;
  std::size_t size() const;
  double quad_weight() const;
  /// Fourier dual: nodes (k - N/2)*pi/L, so half-width pi*N/(2L).
  RealGrid dual() const;
  RealGrid with_dim(int d) const { return RealGrid(d, half_width_, n_); }
  /// Index of the node nearest to x on one axis, or -1 when outside [-L, L).
  int nearest(double x) const;

  bool operator==(const RealGrid& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && half_width_ == o.half_width_;
  }

 private:
  int dim_;
  double half_width_;
  int n_;
  double spacing_;
};

/// Grid over E = T*R^n with its own x-axis and xi-axis.
struct PhaseGrid {
  RealGrid x;
  RealGrid xi;

  static PhaseGrid square(const RealGrid& g) { return PhaseGrid{g, g}; }
  int n() const { return x.dim(); }
  std::size_t size() const { return x.size() * xi.size(); }
  double quad_weight() const { return x.quad_weight() * xi.quad_weight(); }
  bool operator==(const PhaseGrid& o) const { return x == o.x && xi == o.xi; }
};

struct SampledFunction {
  RealGrid grid;
  std::vector<cd> values;

  SampledFunction(RealGrid g, std::vector<cd> v);
  explicit SampledFunction(RealGrid g);
  double l2_norm() const;
  cd inner(const SampledFunction& other) const;  // (this, other), antilinear in other
};

/// Values are row-major: index (i, j) = i * N_xi + j with i on the x-axis (n = 1).
struct SampledSymbol {
  PhaseGrid grid;
  std::vector<cd> values;

  SampledSymbol(PhaseGrid g, std::vector<cd> v);
  explicit SampledSymbol(PhaseGrid g);
  int nx() const { return grid.x.points_per_axis(); }
  int nxi() const { return grid.xi.points_per_axis(); }
  cd& at(int i, int j) { return values[static_cast<std::size_t>(i) * nxi() + j]; }
  const cd& at(int i, int j) const { return values[static_cast<std::size_t>(i) * nxi() + j]; }
  SampledSymbol scaled(cd lambda) const;
  SampledSymbol conj() const;
  double max_abs() const;
};

/// Box in C^n spanned by (Re x, Im x); n = 1 in every grid operation.
struct ComplexBox {
  RealGrid re;
  RealGrid im;

  static ComplexBox square(double half_width, int points) {
    return ComplexBox{RealGrid(1, half_width, points), RealGrid(1, half_width, points)};
  }
  std::size_t size() const { return re.size() * im.size(); }
  double area_weight() const { return re.quad_weight() * im.quad_weight(); }
  cd point(std::size_t idx) const {
    const int ni = im.points_per_axis();
    return {re.node(static_cast<int>(idx / ni)), im.node(static_cast<int>(idx % ni))};
  }
  std::vector<cd> points() const;
  bool operator==(const ComplexBox& o) const { return re == o.re && im == o.im; }
};

struct ComplexGridFunction {
  ComplexBox box;
  std::vector<cd> values;  // index = i_re * N_im + i_im

  ComplexGridFunction(ComplexBox b, std::vector<cd> v);
  explicit ComplexGridFunction(ComplexBox b);
};

void require_finite(const std::vector<cd>& v, const char* what);

}  // namespace weylscope
