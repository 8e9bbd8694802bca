#pragma once

#include "weylscope/grid.hpp"
#include "weylscope/order.hpp"

namespace weylscope {

/// Symbol grid paired with a function grid (N, L): x-axis (L, 2N) so that every midpoint
/// (x_j + x_k)/2 is a node, tau-axis (pi N/(2L), 2N) with spacing pi/(2L).
PhaseGrid weyl_phase_grid(const RealGrid& function_grid);
/// Inverse of weyl_phase_grid; throws InputError for any other grid.
RealGrid function_grid_of(const PhaseGrid& g);

struct KernelMatrix {
  RealGrid grid;
  CMat entries;
  double quad_weight;

  explicit KernelMatrix(RealGrid g);
  KernelMatrix(RealGrid g, CMat k);
  SampledFunction apply(const SampledFunction& u) const;
  KernelMatrix adjoint() const;
  /// Composition K1 K2 (quadrature over the inner variable).
  KernelMatrix operator*(const KernelMatrix& o) const;
};

/// Cut-off of the y-integral in kernel_to_symbol: 0.5 erfc((|s| - (s_max - delta))/rho).
struct Taper {
  double rho;
  double delta;
};
Taper taper_for(const PhaseGrid& g);

KernelMatrix symbol_to_kernel(const SampledSymbol& a, Diagnostics* diag = nullptr);
SampledSymbol kernel_to_symbol(const KernelMatrix& K, Diagnostics* diag = nullptr);
SampledFunction apply_weyl(const SampledSymbol& a, const SampledFunction& u, Diagnostics* diag = nullptr);
SampledSymbol moyal_compose(const SampledSymbol& a1, const SampledSymbol& a2, Diagnostics* diag = nullptr);

enum class PNorm { one, two, inf };
std::string to_string(PNorm p);
PNorm pnorm_from_string(const std::string& s);
double pnorm_value(PNorm p);

struct SchurBounds {
  double row_sup = 0.0;
  double col_sup = 0.0;
  bool row_divergent = false;
  bool col_divergent = false;
  PNorm p = PNorm::inf;
  double p_norm_estimate = 0.0;
  /// Relative change of the sups when the y-box is doubled.
  double doubling_change = 0.0;
};

/// Row/column sups of M(x, y) = m(q(x, y)) over a grid on E (dim 2n).
SchurBounds schur_bounds(const OrderFunction& m, const RealGrid& grid, PNorm p);

struct ComposedOrder {
  OrderFunction m3;
  bool divergent = false;
  double doubling_change = 0.0;
  /// Certification pair for the tabulated m3.
  CertifyResult certificate;
};

/// m3(q(x, y)) = int m1(q(x, z)) m2(q(z, y)) dz with the z-box centered at (x + y)/2.
/// Translation-invariant inputs give a Xi-table on `grid`, otherwise an (x, y) table on
/// [-L/2, L/2]^{4n} with `table_points` per axis, so the z-box covers both x and y.
ComposedOrder compose_order_functions(const OrderFunction& m1, const OrderFunction& m2, const RealGrid& grid,
                                      int table_points = 8, Diagnostics* diag = nullptr);

}  // namespace weylscope
