#pragma once

#include <string>
#include <vector>

#include "weylscope/grid.hpp"
#include "weylscope/symplectic.hpp"
#include "weylscope/weyl.hpp"

namespace weylscope {

/// phi(x, y) = x.Ax/2 + x.By + y.Cy/2 with det B != 0 and Im C > 0.
struct QuadraticPhase {
  std::string name;
  int n = 1;
  CMat A, B, C;
  /// Normalization making T unitary, calibrated on a reference grid.
  double c_phi = 1.0;

  /// Validates and calibrates.
  static QuadraticPhase make(const std::string& name, CMat A, CMat B, CMat C);
  cd operator()(cd x, cd y) const;  // n = 1
  /// Matrix of kappa on C^{2n}: (x, xi) = K (y, eta).
  CMat kappa() const;
  CMat kappa_inverse() const;
  QuadraticPhase scaled(double lambda) const;
};

/// radial (weight |x|^2/4), difference (i(x-y)^2, weight (Im x)^2), asym.
std::vector<std::string> phase_names();
const QuadraticPhase& phase_by_name(const std::string& name);

/// Phi(x) = x^* H x + Re(x.Sx); Psi(x, y) = x.Sx/2 + y.conj(S)y/2 + y.Hx.
struct Weight {
  int n = 1;
  Eigen::MatrixXd Q;  // Phi = v.Qv/2 on v = (Re x, Im x)
  CMat H;             // Levi form
  CMat S;
  double a_phi = 0.0;  // reproducing-kernel constant, calibrated

  double operator()(cd x) const;
  double operator()(const CVec& x) const;
  cd Psi(cd x, cd y) const;
  /// (2/i) dPhi/dx, the fiber of Lambda_Phi above x.
  CVec fiber(const CVec& x) const;
  cd fiber(cd x) const;
  Eigen::VectorXd levi_eigenvalues() const;
};

Weight phi_weight(const QuadraticPhase& phase);

/// f(w, y) = w.Pw/2 + w.Qy + y.Ry/2.
struct QuadForm {
  CMat P, Q, R;
};
struct CriticalValue {
  CMat hessian;    // vc = w.hessian w / 2
  CMat point_map;  // y(w) = point_map w
};
CriticalValue critical_value(const QuadForm& f);

/// g(x) = vc_y(phi(x, y) + i y^2/2) as a symmetric matrix (g = x.Gx/2).
CMat ground_state_exponent(const QuadraticPhase& phase);
/// V0 = T e0 = C exp(i g), closed form.
cd ground_state_constant(const QuadraticPhase& phase);
cd ground_state(const QuadraticPhase& phase, cd x);

/// (y, eta) -> (x, xi).
CVec kappa_apply(const QuadraticPhase& phase, const CVec& point);
CVec kappa_inverse_apply(const QuadraticPhase& phase, const CVec& point);
/// Real point kappa^{-1}(x, (2/i) dPhi(x)) above a base point.
Vec real_point_of(const QuadraticPhase& phase, const Weight& W, cd x);
/// |det| of the map base point -> real point (symplectic volume in base coordinates).
double chart_jacobian(const QuadraticPhase& phase, const Weight& W);

ComplexBox default_box();

ComplexGridFunction bargmann_transform(const SampledFunction& u, const QuadraticPhase& phase, const ComplexBox& box,
                                       Diagnostics* diag = nullptr);
std::vector<cd> transform_at(const SampledFunction& u, const QuadraticPhase& phase, const std::vector<cd>& points);
SampledFunction bargmann_adjoint(const ComplexGridFunction& V, const QuadraticPhase& phase, const RealGrid& grid,
                                 Diagnostics* diag = nullptr);

/// (U, V) in H_Phi^2.
cd h2_inner(const ComplexGridFunction& U, const ComplexGridFunction& V, const Weight& W);
/// p < inf: quadrature; p = inf: sup of the band-limited interpolant of V e^{-Phi}, refined locally.
double hp_norm(const ComplexGridFunction& V, const Weight& W, PNorm p, Diagnostics* diag = nullptr);
double mod_norm(const SampledFunction& u, PNorm p, const QuadraticPhase& phase, const ComplexBox& box,
                Diagnostics* diag = nullptr);

/// Unitary Fourier transform (2 pi)^{-1/2} int e^{-ix xi} u by direct quadrature, same grid.
SampledFunction fourier0(const SampledFunction& u);

ComplexGridFunction reproducing_projection(const ComplexGridFunction& g, const Weight& W,
                                           Diagnostics* diag = nullptr);

/// T2 T1^* V through exp(2 q(x, conj w)), q(x, z) = (i/2) vc_y(phi2(x, y) - phi1^*(z, y)).
struct ChangeKernel {
  CMat q;        // q(x, z) = (x, z).q(x, z)/2
  cd constant;   // C_{phi2} C_{phi1} times the Gaussian integral
  CMat y_map;    // critical point y(x, z)
};
ChangeKernel change_kernel(const QuadraticPhase& p1, const QuadraticPhase& p2);
ComplexGridFunction change_of_transform(const ComplexGridFunction& V, const QuadraticPhase& p1,
                                        const QuadraticPhase& p2, Diagnostics* diag = nullptr);
/// chi(w) = pi_x kappa2 kappa1^{-1}(w, fiber1(w)).
cd chi_map(const QuadraticPhase& p1, const QuadraticPhase& p2, cd w);

/// Weighted modulus |V| e^{-Phi} at every node.
std::vector<double> weighted_modulus(const ComplexGridFunction& V, const Weight& W);

}  // namespace weylscope
