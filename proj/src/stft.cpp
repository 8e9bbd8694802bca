#include "weylscope/stft.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "weylscope/fft.hpp"
#include "weylscope/weyl.hpp"

namespace weylscope {
namespace {

// Distance x - c folded into [-L, L).
double wrap(double d, double L) {
  const double P = 2.0 * L;
  d = std::fmod(d + L, P);
  if (d < 0) d += P;
  return d - L;
}

std::vector<double> wrapped_gauss(const RealGrid& g, double c) {
  std::vector<double> w(g.points_per_axis());
  for (int i = 0; i < g.points_per_axis(); ++i) {
    const double d = wrap(g.node(i) - c, g.half_width());
    w[i] = std::exp(-d * d);
  }
  return w;
}

RealGrid decimate(const RealGrid& g, int stride) {
  const int N = g.points_per_axis();
  if (stride < 1 || N % stride != 0 || (N / stride) % 2 != 0)
    throw InputError("stft: stride must divide the axis size into an even count");
  return RealGrid(1, g.half_width(), N / stride);
}

bool edge_mass(const SampledSymbol& a) {
  const double mx = a.max_abs();
  if (mx == 0.0) return false;
  double e = 0.0;
  for (int i = 0; i < a.nx(); ++i) e = std::max({e, std::abs(a.at(i, 0)), std::abs(a.at(i, a.nxi() - 1))});
  for (int j = 0; j < a.nxi(); ++j) e = std::max({e, std::abs(a.at(0, j)), std::abs(a.at(a.nx() - 1, j))});
  return e > 1e-8 * mx;
}

// Calls f(iT, jT, slab) with slab = F(f_T a) on the dual grid, row-major.
template <class F>
void for_each_slab(const SampledSymbol& a, int stride, F&& f) {
  if (a.grid.n() != 1) throw InputError("stft: only n = 1 is supported");
  const RealGrid tx = decimate(a.grid.x, stride), txi = decimate(a.grid.xi, stride);
  const int nx = a.nx(), nxi = a.nxi();
  const double w = a.grid.quad_weight() * 2.0;
  std::vector<cd> slab(a.values.size());
  for (int iT = 0; iT < tx.points_per_axis(); ++iT) {
    const auto wx = wrapped_gauss(a.grid.x, tx.node(iT));
    for (int jT = 0; jT < txi.points_per_axis(); ++jT) {
      const auto wxi = wrapped_gauss(a.grid.xi, txi.node(jT));
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nxi; ++j) slab[static_cast<std::size_t>(i) * nxi + j] = a.at(i, j) * (wx[i] * wxi[j] * w);
      fft::centered_forward(slab, {nx, nxi});
      f(iT, jT, slab);
    }
  }
}

}  // namespace

SampledSymbol gaussian_window_f(const Vec& T, const PhaseGrid& g) {
  if (T.size() != 2 * g.n()) throw InputError("gaussian_window_f: T must have dimension 2n");
  if (g.n() != 1) throw InputError("gaussian_window_f: only n = 1 is supported");
  SampledSymbol f(g);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nxi(); ++j) {
      const double dx = g.x.node(i) - T[0], dxi = g.xi.node(j) - T[1];
      f.at(i, j) = 2.0 * std::exp(-(dx * dx + dxi * dxi));
    }
  return f;
}

cd STFTTable::at(int iT, int jT, int k, int l) const {
  const std::size_t nTxi = T_grid.xi.points_per_axis();
  const std::size_t nXx = Xi_grid.x.points_per_axis(), nXxi = Xi_grid.xi.points_per_axis();
  return values[((iT * nTxi + jT) * nXx + k) * nXxi + l];
}

Vec STFTTable::T(int iT, int jT) const { return Vec{{T_grid.x.node(iT), T_grid.xi.node(jT)}}; }
Vec STFTTable::Xi(int k, int l) const { return Vec{{Xi_grid.x.node(k), Xi_grid.xi.node(l)}}; }

STFTTable stft(const SampledSymbol& a, int stride, Diagnostics* diag) {
  STFTTable t{PhaseGrid{decimate(a.grid.x, stride), decimate(a.grid.xi, stride)},
              PhaseGrid{a.grid.x.dual(), a.grid.xi.dual()},
              {}};
  t.values.reserve(t.T_grid.size() * a.values.size());
  for_each_slab(a, stride, [&](int, int, const std::vector<cd>& s) { t.values.insert(t.values.end(), s.begin(), s.end()); });
  if (diag && edge_mass(a)) diag->flag_boundary("stft: symbol mass at the grid edge");
  return t;
}

namespace {

struct MTable {
  const OrderFunction& m;
  bool inv;
  std::vector<double> xi_vals;  // for translation-invariant m
  PhaseGrid dual;

  MTable(const OrderFunction& mm, const PhaseGrid& d) : m(mm), inv(mm.translation_invariant()), dual(d) {
    if (inv) {
      xi_vals.resize(dual.size());
      for (int k = 0; k < dual.x.points_per_axis(); ++k)
        for (int l = 0; l < dual.xi.points_per_axis(); ++l)
          xi_vals[static_cast<std::size_t>(k) * dual.xi.points_per_axis() + l] =
              m(Vec{{0.0, 0.0, dual.x.node(k), dual.xi.node(l)}});
    }
  }
  double operator()(double t1, double t2, int k, int l) const {
    if (inv) return xi_vals[static_cast<std::size_t>(k) * dual.xi.points_per_axis() + l];
    return m(Vec{{t1, t2, dual.x.node(k), dual.xi.node(l)}});
  }
};

}  // namespace

NormResult stilde_norm(const SampledSymbol& a, const OrderFunction& m, int stride, Diagnostics* diag) {
  if (m.n() != a.grid.n()) throw InputError("stilde_norm: dimension mismatch");
  const PhaseGrid dual{a.grid.x.dual(), a.grid.xi.dual()};
  const MTable mt(m, dual);
  const RealGrid tx = decimate(a.grid.x, stride), txi = decimate(a.grid.xi, stride);
  const int nd = dual.xi.points_per_axis();
  NormResult r;
  r.T = Vec::Zero(2);
  r.Xi = Vec::Zero(2);
  for_each_slab(a, stride, [&](int iT, int jT, const std::vector<cd>& s) {
    const double t1 = tx.node(iT), t2 = txi.node(jT);
    for (std::size_t c = 0; c < s.size(); ++c) {
      const int k = static_cast<int>(c / nd), l = static_cast<int>(c % nd);
      const double v = std::abs(s[c]) / mt(t1, t2, k, l);
      if (v > r.value) {
        r.value = v;
        r.T = Vec{{t1, t2}};
        r.Xi = Vec{{dual.x.node(k), dual.xi.node(l)}};
      }
    }
  });
  if (diag && edge_mass(a)) diag->flag_boundary("stilde_norm: symbol mass at the grid edge");
  return r;
}

NormResult stilde_norm(const STFTTable& t, const OrderFunction& m) {
  const MTable mt(m, t.Xi_grid);
  NormResult r;
  r.T = Vec::Zero(2);
  r.Xi = Vec::Zero(2);
  const int nTx = t.T_grid.x.points_per_axis(), nTxi = t.T_grid.xi.points_per_axis();
  const int nx = t.Xi_grid.x.points_per_axis(), nxi = t.Xi_grid.xi.points_per_axis();
  for (int iT = 0; iT < nTx; ++iT)
    for (int jT = 0; jT < nTxi; ++jT)
      for (int k = 0; k < nx; ++k)
        for (int l = 0; l < nxi; ++l) {
          const double v = std::abs(t.at(iT, jT, k, l)) / mt(t.T_grid.x.node(iT), t.T_grid.xi.node(jT), k, l);
          if (v > r.value) {
            r.value = v;
            r.T = t.T(iT, jT);
            r.Xi = t.Xi(k, l);
          }
        }
  return r;
}

NormResult lattice_stilde_norm(const SampledSymbol& a, const Lattice& lattice, const OrderFunction& m, double R,
                               Diagnostics* diag) {
  if (a.grid.n() != 1 || lattice.dim() != 4) throw InputError("lattice_stilde_norm: n = 1 and a lattice on R^4 required");
  const Eigen::MatrixXd& B = lattice.basis;
  if ((B - Eigen::MatrixXd(B.diagonal().asDiagonal())).cwiseAbs().maxCoeff() > 0.0)
    throw InputError("lattice_stilde_norm: only diagonal lattices are supported");
  const WindowSpec& W = lattice.window;
  double amp_axis, inv_s2;
  switch (W.kind) {
    case WindowKind::gaussian:
      amp_axis = std::pow(W.amplitude, 0.25);
      inv_s2 = 1.0 / (W.scale * W.scale);
      break;
    case WindowKind::f0:
      amp_axis = std::pow(W.amplitude * 4.0, 0.25);
      inv_s2 = 1.0;
      break;
    default:
      throw InputError("lattice_stilde_norm: the window must be separable (gaussian or f0)");
  }
  Vec c = W.center.size() ? W.center : Vec::Zero(4);

  // One-dimensional kernels of g(t - g1) g(theta - g3), cached by the integer pair.
  const RealGrid gx = a.grid.x, gxi = a.grid.xi;
  auto kernel1d = [&](const RealGrid& fg, double gt, double gth) {
    const PhaseGrid pg = weyl_phase_grid(fg);
    SampledSymbol s(pg);
    for (int p = 0; p < s.nx(); ++p)
      for (int q = 0; q < s.nxi(); ++q) {
        const double dt = pg.x.node(p) - gt, dth = pg.xi.node(q) - gth;
        s.at(p, q) = amp_axis * amp_axis * std::exp(-(dt * dt + dth * dth) * inv_s2);
      }
    return symbol_to_kernel(s).entries;
  };
  std::map<std::pair<long, long>, CMat> cache1, cache2;

  const Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> A(
      a.values.data(), a.nx(), a.nxi());
  const double hx = gx.spacing(), hxi = gxi.spacing();

  std::vector<long> kmax(4);
  for (int d = 0; d < 4; ++d) kmax[d] = static_cast<long>(std::ceil(R / std::abs(B(d, d)))) + 1;
  const double step_max = B.diagonal().cwiseAbs().maxCoeff();
  NormResult r;
  r.T = Vec::Zero(2);
  r.Xi = Vec::Zero(2);
  double shell = 0.0;
  for (long k0 = -kmax[0]; k0 <= kmax[0]; ++k0)
    for (long k1 = -kmax[1]; k1 <= kmax[1]; ++k1)
      for (long k2 = -kmax[2]; k2 <= kmax[2]; ++k2)
        for (long k3 = -kmax[3]; k3 <= kmax[3]; ++k3) {
          Vec g{{k0 * B(0, 0) + c[0], k1 * B(1, 1) + c[1], k2 * B(2, 2) + c[2], k3 * B(3, 3) + c[3]}};
          const double br = std::sqrt(1.0 + g.squaredNorm());
          if (br > R) continue;
          auto& K1 = cache1[{k0, k2}];
          if (K1.size() == 0) K1 = kernel1d(RealGrid(1, gx.half_width(), gx.points_per_axis()), g[0], g[2]);
          auto& K2 = cache2[{k1, k3}];
          if (K2.size() == 0) K2 = kernel1d(RealGrid(1, gxi.half_width(), gxi.points_per_axis()), g[1], g[3]);
          const CMat out = K1 * A * K2.transpose() * (hx * hxi);
          const double nrm = std::sqrt(out.squaredNorm() * hx * hxi);
          const double v = nrm / m(g);
          if (br > R - step_max) shell = std::max(shell, v);
          if (v > r.value) {
            r.value = v;
            r.T = g.head(2);
            r.Xi = g.tail(2);
          }
        }
  if (diag && r.value > 0.0 && shell > 0.01 * r.value) {
    diag->tail = true;
    diag->notes.push_back("lattice_stilde_norm: outer lattice shell above 1% of the maximum");
  }
  return r;
}

double MollifierSpec::psi(const Vec& X) const { return std::exp(-0.5 * X.squaredNorm()); }

namespace {
// Mass of the untruncated unit Gaussian density inside the box, per axis.
double box_mass(double box) { return std::erf(box / std::sqrt(2.0)); }
}  // namespace

double MollifierSpec::phi_mass(int points) const {
  const RealGrid g(1, box, points);
  double s = 0.0;
  for (int k = 0; k <= points; ++k) {
    const double x = -box + k * g.spacing();
    const double wk = (k == 0 || k == points) ? 0.5 : 1.0;
    s += wk * std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
  }
  const double axis = s * g.spacing() / box_mass(box);
  return axis * axis;
}

SampledSymbol mollify(const SampledSymbol& u, const MollifierSpec& spec) {
  if (spec.nu < 1) throw InputError("mollify: nu must be >= 1");
  const int nx = u.nx(), nxi = u.nxi();
  std::vector<cd> d = u.values;
  fft::centered_forward(d, {nx, nxi});
  const RealGrid dx = u.grid.x.dual(), dxi = u.grid.xi.dual();
  const double nu = spec.nu;
  const double z = box_mass(spec.box);
  for (int k = 0; k < nx; ++k)
    for (int l = 0; l < nxi; ++l) {
      const double r2 = dx.node(k) * dx.node(k) + dxi.node(l) * dxi.node(l);
      d[static_cast<std::size_t>(k) * nxi + l] *= std::exp(-r2 / (2.0 * nu * nu)) / (z * z);
    }
  fft::centered_inverse(d, {nx, nxi});
  SampledSymbol out(u.grid);
  const double inv = 1.0 / (static_cast<double>(nx) * nxi);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nxi; ++j) {
      const double X2 = u.grid.x.node(i) * u.grid.x.node(i) + u.grid.xi.node(j) * u.grid.xi.node(j);
      out.at(i, j) = d[static_cast<std::size_t>(i) * nxi + j] * inv * std::exp(-X2 / (2.0 * nu * nu));
    }
  return out;
}

SampledSymbol symplectic_fourier(const SampledSymbol& b, Diagnostics* diag) {
  if (b.grid.n() != 1) throw InputError("symplectic_fourier: only n = 1 is supported");
  if (diag && edge_mass(b)) diag->flag_boundary("symplectic_fourier: symbol mass at the grid edge");
  const int nx = b.nx(), nxi = b.nxi();
  // F(i, j) = pi^{-1} h^2 sum_{k,l} exp(2 i xi_j y_k) exp(-2 i x_i eta_l) b(k, l)
  CMat P(nxi, nx), Q(nx, nxi);
  for (int j = 0; j < nxi; ++j)
    for (int k = 0; k < nx; ++k) P(j, k) = std::exp(kI * (2.0 * b.grid.xi.node(j) * b.grid.x.node(k)));
  for (int i = 0; i < nx; ++i)
    for (int l = 0; l < nxi; ++l) Q(i, l) = std::exp(-kI * (2.0 * b.grid.x.node(i) * b.grid.xi.node(l)));
  const Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> Bm(b.values.data(), nx,
                                                                                                 nxi);
  const CMat F = Q * Bm.transpose() * P.transpose() * (b.grid.quad_weight() / kPi);
  SampledSymbol out(b.grid);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nxi; ++j) out.at(i, j) = F(i, j);
  return out;
}

}  // namespace weylscope
