#include "weylscope/magnetic.hpp"

#include <algorithm>
#include <cmath>

#include "weylscope/fft.hpp"

namespace weylscope {
namespace {

void require_n1(const QuadraticPhase& p) {
  if (p.n != 1) throw InputError("magnetic translations support n = 1 only");
}

// Multiplier exp(-i w s) of a shift by s for DFT index k; the Nyquist mode keeps its real part.
cd shift_factor(int k, int N, double h, double s) {
  const int kk = k < N / 2 ? k : k - N;
  const double w = 2.0 * kPi * kk / (N * h);
  if (2 * k == N) return std::cos(w * s);
  return std::exp(-kI * (w * s));
}

// f(x - s) on a periodic grid, every axis of dims at once.
void fft_shift(std::vector<cd>& f, const std::vector<int>& dims, const std::vector<double>& h,
               const std::vector<double>& s) {
  fft::dft(f, dims, -1);
  std::size_t total = f.size();
  if (dims.size() == 1) {
    for (int k = 0; k < dims[0]; ++k) f[k] *= shift_factor(k, dims[0], h[0], s[0]);
  } else {
    const int n0 = dims[0], n1 = dims[1];
    std::vector<cd> f1(n1);
    for (int l = 0; l < n1; ++l) f1[l] = shift_factor(l, n1, h[1], s[1]);
    for (int k = 0; k < n0; ++k) {
      const cd f0 = shift_factor(k, n0, h[0], s[0]);
      for (int l = 0; l < n1; ++l) f[static_cast<std::size_t>(k) * n1 + l] *= f0 * f1[l];
    }
  }
  for (auto& v : f) v /= static_cast<double>(total);
  fft::dft(f, dims, 1);
}

struct Ground {
  cd g;  // V0(x) = c exp(i g x^2 / 2)
  cd c;
  explicit Ground(const QuadraticPhase& p) : g(ground_state_exponent(p)(0, 0)), c(ground_state_constant(p)) {}
  cd coherent(const Weight& W, cd y, cd x) const {
    const cd eta = W.fiber(y);
    const cd z = x + y;
    return c * std::exp(-kI * eta * x - 0.5 * kI * eta * y + 0.5 * kI * g * z * z);
  }
};

cd prefactor(const LinearFormEll& l, cd x) { return std::exp(-kI * l.lx * x + 0.5 * kI * l.lx * l.lxi); }

std::vector<Vec> real_nodes(const RankOneQuadrature& quad, const QuadraticPhase& phase, const Weight& W) {
  std::vector<Vec> out;
  out.reserve(quad.nodes.size());
  for (cd y : quad.nodes) out.push_back(real_point_of(phase, W, y));
  return out;
}

// Values of V_y on the box for every node, column-wise.
CMat coherent_matrix(const QuadraticPhase& phase, const Weight& W, const std::vector<cd>& nodes,
                     const ComplexBox& box) {
  const auto pts = box.points();
  const Ground V0(phase);
  CMat V(static_cast<long>(pts.size()), static_cast<long>(nodes.size()));
#pragma omp parallel for schedule(static)
  for (long j = 0; j < static_cast<long>(nodes.size()); ++j)
    for (std::size_t k = 0; k < pts.size(); ++k) V(static_cast<long>(k), j) = V0.coherent(W, nodes[j], pts[k]);
  return V;
}

// (U, V_y) for every node y: weighted sums against the coherent matrix.
CVec pair_with(const ComplexGridFunction& U, const CMat& V, const Weight& W) {
  const auto pts = U.box.points();
  CVec wu(static_cast<long>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k)
    wu(static_cast<long>(k)) = U.values[k] * std::exp(-2.0 * W(pts[k])) * U.box.area_weight();
  return V.adjoint() * wu;  // conj(V)^T wu
}

}  // namespace

bool LinearFormEll::real_on(const Weight& W, double tol) const {
  return std::abs(-lx - W.fiber(lxi)) <= tol * std::max(1.0, std::abs(lx));
}

LinearFormEll LinearFormEll::from_point(cd y, const Weight& W) { return {W.fiber(y), -y}; }

LinearFormEll LinearFormEll::pushed(const QuadraticPhase& phase) const {
  require_n1(phase);
  CVec l(2);
  l << lx, lxi;
  const CVec k = phase.kappa_inverse().transpose() * l;
  return {k(0), k(1)};
}

ComplexGridFunction magnetic_translate(const ComplexGridFunction& V, const LinearFormEll& l, const Weight& W) {
  const ComplexBox& box = V.box;
  const double sr = l.lxi.real(), si = l.lxi.imag();
  if (std::abs(sr) >= box.re.half_width() || std::abs(si) >= box.im.half_width())
    throw InputError("magnetic_translate: shift leaves the box");
  const auto pts = box.points();
  std::vector<cd> f(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) f[k] = V.values[k] * std::exp(-W(pts[k]));
  fft_shift(f, {box.re.points_per_axis(), box.im.points_per_axis()}, {box.re.spacing(), box.im.spacing()},
            {sr, si});
  ComplexGridFunction out(box);
  for (std::size_t k = 0; k < pts.size(); ++k)
    out.values[k] = prefactor(l, pts[k]) * f[k] * std::exp(W(pts[k] - l.lxi));
  return out;
}

ComplexGridFunction magnetic_translate(const std::function<cd(cd)>& V, const ComplexBox& box,
                                       const LinearFormEll& l) {
  ComplexGridFunction out(box);
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const cd x = box.point(k);
    out.values[k] = prefactor(l, x) * V(x - l.lxi);
  }
  return out;
}

SampledFunction magnetic_translate_real(const SampledFunction& u, double lx, double lxi) {
  const RealGrid& g = u.grid;
  if (g.dim() != 1) throw InputError("magnetic_translate_real: n = 1 only");
  if (std::abs(lxi) >= g.half_width()) throw InputError("magnetic_translate_real: shift leaves the grid");
  std::vector<cd> f = u.values;
  fft_shift(f, {g.points_per_axis()}, {g.spacing()}, {lxi});
  SampledFunction out(g, f);
  for (int k = 0; k < g.points_per_axis(); ++k) {
    const double x = g.node(k);
    out.values[k] *= std::exp(-kI * (lx * x) + 0.5 * kI * (lx * lxi));
  }
  return out;
}

cd coherent_value(const QuadraticPhase& phase, const Weight& W, cd y, cd x) { return Ground(phase).coherent(W, y, x); }

CoherentState coherent_state(cd y, const QuadraticPhase& phase, const ComplexBox& box) {
  require_n1(phase);
  if (std::abs(y.real()) >= box.re.half_width() || std::abs(y.imag()) >= box.im.half_width())
    throw InputError("coherent_state: base point outside the box");
  const Weight W = phi_weight(phase);
  const Ground V0(phase);
  ComplexGridFunction V(box);
  for (std::size_t k = 0; k < V.values.size(); ++k) V.values[k] = V0.coherent(W, y, box.point(k));
  return {y, std::move(V)};
}

cd rank_one_element(cd Y, cd T, const ComplexGridFunction& Tu, const ComplexGridFunction& Tv,
                    const QuadraticPhase& phase) {
  const Weight W = phi_weight(phase);
  const auto VT = coherent_state(T, phase, Tu.box);
  const auto VY = coherent_state(Y, phase, Tv.box);
  return h2_inner(Tu, VT.values, W) * h2_inner(VY.values, Tv, W);
}

RankOneQuadrature RankOneQuadrature::make(double radius, int M, double jacobian) {
  if (M < 2 || radius <= 0.0) throw InputError("RankOneQuadrature: need M >= 2 and R > 0");
  RankOneQuadrature q;
  q.radius = radius;
  q.M = M;
  const double hq = 2.0 * radius / (M - 1);
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b) {
      const cd y{-radius + a * hq, -radius + b * hq};
      if (std::abs(y) > radius + 1e-12) continue;
      const double wa = (a == 0 || a == M - 1) ? 0.5 : 1.0;
      const double wb = (b == 0 || b == M - 1) ? 0.5 : 1.0;
      q.nodes.push_back(y);
      q.weights.push_back(wa * wb * hq * hq * jacobian);
    }
  return q;
}

bool RankOneQuadrature::phase_flag() const { return radius * radius / M > kPi / 2.0; }

CMat rank_one_coefficients(const SampledSymbol& a, const std::vector<Vec>& nodes, const std::vector<double>& weights) {
  if (a.grid.n() != 1) throw InputError("rank_one_coefficients: n = 1 only");
  const int nx = a.nx(), nxi = a.nxi();
  const double hx = a.grid.x.spacing(), hxi = a.grid.xi.spacing();
  CMat A(nx, nxi);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nxi; ++j) A(i, j) = a.at(i, j);
  const long n = static_cast<long>(nodes.size());
  const double scale = 2.0 * hx * hxi / kPi / (2.0 * std::pow(2.0 * kPi, 2));
  CMat C(n, n);
#pragma omp parallel
  {
    CVec al(nx), be(nxi);
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const Vec& Y = nodes[i];
        const Vec& T = nodes[j];
        const double S1 = -0.5 * (Y(0) + T(0)), S2 = -0.5 * (Y(1) + T(1));
        const double X1 = -(Y(1) - T(1)), X2 = Y(0) - T(0);  // J^{-1}(Y - T)
        for (int k = 0; k < nx; ++k) {
          const double s = a.grid.x.node(k);
          al(k) = std::exp(cd{-(s - S1) * (s - S1), -X1 * s});
        }
        for (int l = 0; l < nxi; ++l) {
          const double s = a.grid.xi.node(l);
          be(l) = std::exp(cd{-(s - S2) * (s - S2), -X2 * s});
        }
        const cd fs = al.transpose() * (A * be);
        const double sig = Y(1) * T(0) - Y(0) * T(1);
        C(i, j) = weights[i] * weights[j] * std::exp(0.5 * kI * sig) * fs * scale;
      }
  }
  return C;
}

RankOneResult rank_one_reconstruct(const SampledSymbol& a, const SampledFunction& u, const SampledFunction& v,
                                   const RankOneQuadrature& quad, const QuadraticPhase& phase,
                                   const ComplexBox& box) {
  require_n1(phase);
  const Weight W = phi_weight(phase);
  const auto nodes = real_nodes(quad, phase, W);
  const CMat Vm = coherent_matrix(phase, W, quad.nodes, box);
  const CVec F = pair_with(bargmann_transform(u, phase, box), Vm, W);  // (Tu, V_T)
  const CVec G = pair_with(bargmann_transform(v, phase, box), Vm, W).conjugate();  // (V_Y, Tv)
  const CMat C = rank_one_coefficients(a, nodes, quad.weights);

  const double hq = 2.0 * quad.radius / (quad.M - 1);
  std::vector<char> shell(quad.nodes.size());
  for (std::size_t k = 0; k < shell.size(); ++k) shell[k] = std::abs(quad.nodes[k]) > quad.radius - hq;
  cd value = 0.0;
  double all = 0.0, outer = 0.0;
  for (long i = 0; i < C.rows(); ++i)
    for (long j = 0; j < C.cols(); ++j) {
      const cd t = G(i) * C(i, j) * F(j);
      value += t;
      all += std::abs(t);
      if (shell[i] || shell[j]) outer += std::abs(t);
    }
  RankOneResult r;
  r.value = value;
  r.tail_fraction = all > 0.0 ? outer / all : 0.0;
  r.tail_flag = r.tail_fraction >= 0.01;
  r.phase_flag = quad.phase_flag();
  return r;
}

namespace {

void apply_weights(CMat& K, const ComplexBox& box, const Weight& W) {
  const auto pts = box.points();
  Eigen::VectorXd e(static_cast<long>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k) e(static_cast<long>(k)) = std::exp(-W(pts[k]));
  K = e.asDiagonal() * K * e.asDiagonal();
}

}  // namespace

EffectiveKernel effective_kernel_rank_one(const SampledSymbol& a, const QuadraticPhase& phase,
                                          const ComplexBox& box, const RankOneQuadrature& quad) {
  require_n1(phase);
  const Weight W = phi_weight(phase);
  const CMat V = coherent_matrix(phase, W, quad.nodes, box);
  const CMat C = rank_one_coefficients(a, real_nodes(quad, phase, W), quad.weights);
  CMat K = V * C * V.adjoint();
  apply_weights(K, box, W);
  return {box, std::move(K)};
}

EffectiveKernel effective_kernel_direct(const SampledSymbol& a, const QuadraticPhase& phase, const ComplexBox& box) {
  require_n1(phase);
  const Weight W = phi_weight(phase);
  const KernelMatrix Ka = symbol_to_kernel(a);
  const RealGrid& g = Ka.grid;
  const auto pts = box.points();
  CMat T(static_cast<long>(pts.size()), g.points_per_axis());
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (int j = 0; j < g.points_per_axis(); ++j)
      T(static_cast<long>(k), j) = phase.c_phi * std::exp(kI * phase(pts[k], g.node(j))) * g.spacing();
  CMat K = T * Ka.entries * T.adjoint();
  apply_weights(K, box, W);
  return {box, std::move(K)};
}

double egorov_check(const SampledFunction& u, double lx, double lxi, const QuadraticPhase& phase,
                    const ComplexBox& box) {
  require_n1(phase);
  const Weight W = phi_weight(phase);
  const auto lhs = bargmann_transform(magnetic_translate_real(u, lx, lxi), phase, box);
  const LinearFormEll k = LinearFormEll{lx, lxi}.pushed(phase);
  auto pts = box.points();
  for (auto& x : pts) x -= k.lxi;
  const auto shifted = transform_at(u, phase, pts);
  ComplexGridFunction diff(box);
  for (std::size_t i = 0; i < diff.values.size(); ++i)
    diff.values[i] = lhs.values[i] - prefactor(k, box.point(i)) * shifted[i];
  return std::sqrt(std::max(0.0, h2_inner(diff, diff, W).real()));
}

SchurChain schur_chain(const OrderFunction& m, const SampledFunction& u, const QuadraticPhase& phase,
                       const RankOneQuadrature& quad, PNorm p, const ComplexBox& box) {
  require_n1(phase);
  const Weight W = phi_weight(phase);
  std::vector<cd> neg(quad.nodes.size());
  for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -quad.nodes[k];
  const CMat Vm = coherent_matrix(phase, W, neg, box);
  const CVec F = pair_with(bargmann_transform(u, phase, box), Vm, W).cwiseAbs().cast<cd>();
  const auto nodes = real_nodes(quad, phase, W);
  const std::size_t n = nodes.size();
  std::vector<double> H(n, 0.0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += m(q_map(nodes[i], nodes[j])) * F(static_cast<long>(j)).real() * quad.weights[j];
    H[i] = acc;
  }
  auto norm = [&](auto value_of) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double v = value_of(k);
      switch (p) {
        case PNorm::one: s += v * quad.weights[k]; break;
        case PNorm::two: s += v * v * quad.weights[k]; break;
        case PNorm::inf: s = std::max(s, v); break;
      }
    }
    return p == PNorm::two ? std::sqrt(s) : s;
  };
  SchurChain out;
  out.H_norm = norm([&](std::size_t k) { return H[k]; });
  out.F_norm = norm([&](std::size_t k) { return F(static_cast<long>(k)).real(); });
  return out;
}

}  // namespace weylscope
