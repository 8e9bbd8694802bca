#pragma once

#include <functional>

#include "weylscope/bargmann.hpp"
#include "weylscope/order.hpp"

namespace weylscope {

/// l(x, xi) = lx.x + lxi.xi (n = 1 components stored as scalars).
struct LinearFormEll {
  cd lx = 0.0;
  cd lxi = 0.0;

  /// -lx = (2/i) dPhi(lxi)
  bool real_on(const Weight& W, double tol = 1e-12) const;
  /// Form with exp(-i l(x, D)) = exp(i sigma((x, D), Y)), Y above the base point y.
  static LinearFormEll from_point(cd y, const Weight& W);
  /// k = l o kappa^{-1}.
  LinearFormEll pushed(const QuadraticPhase& phase) const;
};

/// exp(-i lx x/2) tau_{lxi} exp(-i lx x/2): shift of V e^{-Phi} by FFT, box-periodic.
/// Throws InputError when a component of lxi reaches the box half-width.
ComplexGridFunction magnetic_translate(const ComplexGridFunction& V, const LinearFormEll& l, const Weight& W);
/// Same formula with V evaluated exactly at the shifted points.
ComplexGridFunction magnetic_translate(const std::function<cd(cd)>& V, const ComplexBox& box, const LinearFormEll& l);
/// Real-side translation exp(-i l(x, D)) for real l, shift by FFT.
SampledFunction magnetic_translate_real(const SampledFunction& u, double lx, double lxi);

struct CoherentState {
  cd y;
  ComplexGridFunction values;
};
/// V_Y(x) = exp(-i eta x - i eta y / 2) V0(x + y), eta = (2/i) dPhi(y).
cd coherent_value(const QuadraticPhase& phase, const Weight& W, cd y, cd x);
CoherentState coherent_state(cd y, const QuadraticPhase& phase, const ComplexBox& box);

/// (Tu, V_T) (V_Y, Tv)
cd rank_one_element(cd Y, cd T, const ComplexGridFunction& Tu, const ComplexGridFunction& Tv,
                    const QuadraticPhase& phase);

/// Tensor trapezoid (endpoint nodes) on [-R, R]^2 in base coordinates, truncated to the disc |y| <= R.
struct RankOneQuadrature {
  double radius = 5.0;
  int M = 16;
  std::vector<cd> nodes;
  std::vector<double> weights;  // include the chart Jacobian

  static RankOneQuadrature make(double radius, int M, double jacobian = 1.0);
  /// Per-cell increment of the phase e^{i sigma/2}, R^2/M, above pi/2.
  bool phase_flag() const;
};

struct RankOneResult {
  cd value;
  bool tail_flag = false;
  double tail_fraction = 0.0;
  bool phase_flag = false;
};

/// Fourier coefficient c(Y, T) of the rank-one expansion, with the quadrature weights.
CMat rank_one_coefficients(const SampledSymbol& a, const std::vector<Vec>& real_nodes,
                           const std::vector<double>& weights);

/// Approximates (a^w u, v); a may live on any n = 1 phase grid.
RankOneResult rank_one_reconstruct(const SampledSymbol& a, const SampledFunction& u, const SampledFunction& v,
                                   const RankOneQuadrature& quad, const QuadraticPhase& phase,
                                   const ComplexBox& box = default_box());

/// e^{-Phi(x)} K(x, conj z) e^{-Phi(z)} on box x box, rows x, columns z.
struct EffectiveKernel {
  ComplexBox box;
  CMat values;
};
/// Rank-one route over the (Y, T) quadrature. a must live on a Weyl phase grid.
EffectiveKernel effective_kernel_rank_one(const SampledSymbol& a, const QuadraticPhase& phase, const ComplexBox& box,
                                          const RankOneQuadrature& quad);
/// Direct route (T x T~) K_{a^w}.
EffectiveKernel effective_kernel_direct(const SampledSymbol& a, const QuadraticPhase& phase, const ComplexBox& box);

/// ||T(e^{-i l(x,D)} u) - e^{-i k(x,D)} T u||_{H^2_Phi}, k = l o kappa^{-1}, l real.
double egorov_check(const SampledFunction& u, double lx, double lxi, const QuadraticPhase& phase,
                    const ComplexBox& box = default_box());

/// F(T) = |(Tu, V_{-T})|, H(Y) = sum_T m(q(Y', T')) F(T) w_T on the quadrature nodes.
struct SchurChain {
  double H_norm = 0.0;
  double F_norm = 0.0;
};
SchurChain schur_chain(const OrderFunction& m, const SampledFunction& u, const QuadraticPhase& phase,
                       const RankOneQuadrature& quad, PNorm p, const ComplexBox& box = default_box());

}  // namespace weylscope
