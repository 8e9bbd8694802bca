#pragma once

#include "weylscope/grid.hpp"
#include "weylscope/symplectic.hpp"

namespace weylscope {

enum class WindowKind { gaussian, f0, bump };

/// gaussian: amplitude * exp(-|X-c|^2 / scale^2)
/// f0:       amplitude * 2^{dim/2} exp(-|X-c|^2)
/// bump:     amplitude * exp(1 - 1/(1 - r^2)), r = |X-c|/scale < 1
struct WindowSpec {
  WindowKind kind = WindowKind::gaussian;
  Vec center;
  double scale = 1.0;
  double amplitude = 1.0;

  double operator()(const Vec& X) const;
  /// Radius beyond which the window is below eps * amplitude (exactly zero for bumps).
  double support_radius(double eps = 1e-18) const;
  static WindowSpec f0(int dim);
};

struct Lattice {
  Eigen::MatrixXd basis;  // columns are the generators
  WindowSpec window;

  Lattice(Eigen::MatrixXd basis, WindowSpec window);
  int dim() const { return static_cast<int>(basis.rows()); }
  /// Gaussian window with the normalization |det B| / (pi s^2)^{dim/2} for the cubic lattice step*Z^dim.
  static Lattice gaussian_partition(int dim, double step, double scale);
};

/// max over grid nodes (+ shift) of |sum_gamma chi(X - gamma) - 1|.
double partition_check(const Lattice& lattice, const RealGrid& grid, const Vec& shift = Vec());

}  // namespace weylscope
