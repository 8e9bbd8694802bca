#include "weylscope/weyl.hpp"

#include <algorithm>
#include <cmath>

#include "weylscope/fft.hpp"

namespace weylscope {
namespace {

double edge_ratio(const CMat& K) {
  const Eigen::Index n = K.rows();
  double edge = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    edge = std::max({edge, std::abs(K(0, i)), std::abs(K(n - 1, i)), std::abs(K(i, 0)), std::abs(K(i, n - 1))});
  }
  const double mx = K.cwiseAbs().maxCoeff();
  return mx > 0.0 ? edge / mx : 0.0;
}

double symbol_edge_ratio(const SampledSymbol& a) {
  const int nx = a.nx(), nxi = a.nxi();
  double edge = 0.0;
  for (int i = 0; i < nx; ++i) edge = std::max({edge, std::abs(a.at(i, 0)), std::abs(a.at(i, nxi - 1))});
  for (int j = 0; j < nxi; ++j) edge = std::max({edge, std::abs(a.at(0, j)), std::abs(a.at(nx - 1, j))});
  const double mx = a.max_abs();
  return mx > 0.0 ? edge / mx : 0.0;
}

// Barycentric Lagrange value at x0 from equispaced-or-not abscissae xs.
cd lagrange(const double* xs, const cd* ys, int n, double x0) {
  cd num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    double w = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != i) w *= xs[i] - xs[j];
    const double c = 1.0 / (w * (x0 - xs[i]));
    num += c * ys[i];
    den += c;
  }
  return num / den;
}

constexpr int kLagrangeHalf = 6;

}  // namespace

PhaseGrid weyl_phase_grid(const RealGrid& f) {
  if (f.dim() != 1) throw InputError("weyl_phase_grid: only n = 1 function grids are supported");
  const int N = f.points_per_axis();
  const double L = f.half_width();
  return PhaseGrid{RealGrid(1, L, 2 * N), RealGrid(1, kPi * N / (2.0 * L), 2 * N)};
}

RealGrid function_grid_of(const PhaseGrid& g) {
  if (g.n() != 1) throw InputError("function_grid_of: only n = 1 is supported");
  const int M = g.x.points_per_axis();
  if (M % 4 != 0) throw InputError("function_grid_of: x-axis size must be twice an even N");
  RealGrid f(1, g.x.half_width(), M / 2);
  if (!(weyl_phase_grid(f) == g)) {
    const PhaseGrid w = weyl_phase_grid(f);
    if (w.xi.points_per_axis() != g.xi.points_per_axis() ||
        std::abs(w.xi.half_width() - g.xi.half_width()) > 1e-12 * w.xi.half_width())
      throw InputError("symbol grid is not the Weyl phase grid of a function grid");
  }
  return f;
}

KernelMatrix::KernelMatrix(RealGrid g) : grid(g), entries(CMat::Zero(g.size(), g.size())), quad_weight(g.quad_weight()) {}

KernelMatrix::KernelMatrix(RealGrid g, CMat k) : grid(g), entries(std::move(k)), quad_weight(g.quad_weight()) {
  if (entries.rows() != static_cast<Eigen::Index>(g.size()) || entries.cols() != entries.rows())
    throw InputError("KernelMatrix: shape does not match grid");
}

SampledFunction KernelMatrix::apply(const SampledFunction& u) const {
  if (!(u.grid == grid)) throw InputError("KernelMatrix::apply: grid mismatch");
  Eigen::Map<const CVec> uv(u.values.data(), static_cast<Eigen::Index>(u.values.size()));
  CVec r = entries * uv * quad_weight;
  return SampledFunction(grid, std::vector<cd>(r.data(), r.data() + r.size()));
}

KernelMatrix KernelMatrix::adjoint() const { return KernelMatrix(grid, entries.adjoint()); }

KernelMatrix KernelMatrix::operator*(const KernelMatrix& o) const {
  if (!(o.grid == grid)) throw InputError("KernelMatrix composition: grid mismatch");
  return KernelMatrix(grid, entries * o.entries * quad_weight);
}

Taper taper_for(const PhaseGrid& g) {
  const double rho = std::clamp(17.5 / g.xi.half_width(), 0.7, 1.0);
  return Taper{rho, 4.3 * rho};
}

KernelMatrix symbol_to_kernel(const SampledSymbol& a, Diagnostics* diag) {
  const RealGrid f = function_grid_of(a.grid);
  const int N = f.points_per_axis();
  const int M = 2 * N;
  const double dtau = kPi / (2.0 * f.half_width());
  require_finite(a.values, "symbol_to_kernel");

  if (diag) {
    const double mx = a.max_abs();
    double edge = 0.0;
    const double cut = 0.9 * a.grid.xi.half_width();
    for (int p = 0; p < M; ++p)
      for (int m = 0; m < M; ++m)
        if (std::abs(a.grid.xi.node(m)) >= cut) edge = std::max(edge, std::abs(a.at(p, m)));
    if (mx > 0.0 && edge > 1e-8 * mx) {
      diag->aliasing = true;
      diag->notes.push_back("symbol_to_kernel: symbol mass near the tau boundary");
    }
  }

  std::vector<cd> G = a.values;
  fft::dft_axis(G, {M, M}, 1, +1);
  const double scale = dtau / (2.0 * kPi);
  CMat K(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      const int d = ((j - k) % M + M) % M;
      const double sgn = (d % 2 == 0) ? 1.0 : -1.0;
      K(j, k) = sgn * scale * G[static_cast<std::size_t>(j + k) * M + d];
    }
  return KernelMatrix(f, std::move(K));
}

SampledSymbol kernel_to_symbol(const KernelMatrix& K, Diagnostics* diag) {
  const RealGrid& f = K.grid;
  if (f.dim() != 1) throw InputError("kernel_to_symbol: only n = 1 is supported");
  const int N = f.points_per_axis();
  const int M = 2 * N;
  const int D = 2 * N - 1;  // d = -(N-1)..N-1 stored at d + N - 1
  const double h = f.spacing();
  const PhaseGrid pg = weyl_phase_grid(f);
  const Taper tp = taper_for(pg);

  if (diag && edge_ratio(K.entries) > 1e-8) diag->flag_boundary("kernel_to_symbol: kernel mass at the grid edge");

  // G(p, d) = K((p+d)/2, (p-d)/2) on the even sublattice, Lagrange fill on the odd one.
  std::vector<cd> G(static_cast<std::size_t>(M) * D, cd{});
  std::vector<char> have(static_cast<std::size_t>(M) * D, 0);
  std::vector<double> xs;
  std::vector<cd> ys;
  for (int d = -(N - 1); d <= N - 1; ++d) {
    const int ad = std::abs(d);
    const int col = d + N - 1;
    xs.clear();
    ys.clear();
    for (int p = ad; p <= 2 * N - 2 - ad; p += 2) {
      const cd v = K.entries((p + d) / 2, (p - d) / 2);
      G[static_cast<std::size_t>(p) * D + col] = v;
      have[static_cast<std::size_t>(p) * D + col] = 1;
      xs.push_back(p);
      ys.push_back(v);
    }
    const int len = static_cast<int>(xs.size());
    for (int p = ad + 1; p <= 2 * N - 3 - ad; p += 2) {
      const int i = (p - ad) / 2;
      const int lo = std::max(0, i - kLagrangeHalf + 1);
      const int hi = std::min(len, i + kLagrangeHalf + 1);
      G[static_cast<std::size_t>(p) * D + col] = lagrange(xs.data() + lo, ys.data() + lo, hi - lo, p);
      have[static_cast<std::size_t>(p) * D + col] = 1;
    }
  }

  SampledSymbol a(pg);
  std::vector<cd> row(M);
  for (int p = 0; p < M; ++p) {
    int dmax = -1;
    for (int col = 0; col < D; ++col)
      if (have[static_cast<std::size_t>(p) * D + col]) dmax = std::max(dmax, std::abs(col - (N - 1)));
    if (dmax < 0) continue;
    const double smax = dmax * h;
    std::fill(row.begin(), row.end(), cd{});
    for (int col = 0; col < D; ++col) {
      if (!have[static_cast<std::size_t>(p) * D + col]) continue;
      const int d = col - (N - 1);
      const double s = std::abs(d) * h;
      const double w = 0.5 * std::erfc((s - (smax - tp.delta)) / tp.rho);
      const double sgn = (std::abs(d) % 2 == 0) ? 1.0 : -1.0;
      row[((d % M) + M) % M] = sgn * w * G[static_cast<std::size_t>(p) * D + col];
    }
    fft::dft_axis(row, {M}, 0, -1);
    for (int m = 0; m < M; ++m) a.at(p, m) = h * row[m];
  }
  return a;
}

SampledFunction apply_weyl(const SampledSymbol& a, const SampledFunction& u, Diagnostics* diag) {
  return symbol_to_kernel(a, diag).apply(u);
}

SampledSymbol moyal_compose(const SampledSymbol& a1, const SampledSymbol& a2, Diagnostics* diag) {
  if (!(a1.grid == a2.grid)) throw InputError("moyal_compose: symbols live on different grids");
  const KernelMatrix K = symbol_to_kernel(a1, diag) * symbol_to_kernel(a2, diag);
  if (diag) {
    const bool unbounded = symbol_edge_ratio(a1) > 1e-8 || symbol_edge_ratio(a2) > 1e-8;
    if (unbounded && edge_ratio(K.entries) > 1e-8) {
      diag->growth = true;
      diag->notes.push_back("moyal_compose: non-decaying symbol with kernel mass at the edge");
    }
  }
  return kernel_to_symbol(K, diag);
}

std::string to_string(PNorm p) {
  switch (p) {
    case PNorm::one: return "1";
    case PNorm::two: return "2";
    case PNorm::inf: return "inf";
  }
  return "?";
}

PNorm pnorm_from_string(const std::string& s) {
  if (s == "1") return PNorm::one;
  if (s == "2") return PNorm::two;
  if (s == "inf" || s == "infinity") return PNorm::inf;
  throw InputError("p must be one of 1, 2, inf (got '" + s + "')");
}

double pnorm_value(PNorm p) {
  switch (p) {
    case PNorm::one: return 1.0;
    case PNorm::two: return 2.0;
    case PNorm::inf: return INFINITY;
  }
  return 0.0;
}

namespace {

std::vector<Vec> grid_points(const RealGrid& g, const Vec& center) {
  const int D = g.dim();
  const int N = g.points_per_axis();
  std::vector<Vec> pts;
  pts.reserve(g.size());
  std::vector<int> idx(D, 0);
  for (std::size_t c = 0; c < g.size(); ++c) {
    Vec p(D);
    std::size_t r = c;
    for (int a = D - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(r % N);
      r /= N;
    }
    for (int a = 0; a < D; ++a) p[a] = g.node(idx[a]) + (center.size() ? center[a] : 0.0);
    pts.push_back(std::move(p));
  }
  return pts;
}

double kernel_value(const OrderFunction& m, const Vec& x, const Vec& y) { return m(q_map(x, y)); }

}  // namespace

SchurBounds schur_bounds(const OrderFunction& m, const RealGrid& grid, PNorm p) {
  if (grid.dim() != 2 * m.n()) throw InputError("schur_bounds: grid must live on E (dimension 2n)");
  const auto pts = grid_points(grid, Vec());
  const auto n = static_cast<Eigen::Index>(pts.size());
  const double w = grid.quad_weight();
  Eigen::MatrixXd Mx(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) Mx(i, j) = kernel_value(m, pts[i], pts[j]) * w;

  SchurBounds b;
  b.p = p;
  b.row_sup = Mx.rowwise().sum().maxCoeff();
  b.col_sup = Mx.colwise().sum().maxCoeff();

  // Doubled y-box with the same spacing, rows/columns restricted to the original nodes.
  const RealGrid big(grid.dim(), 2.0 * grid.half_width(), 2 * grid.points_per_axis());
  const auto bpts = grid_points(big, Vec());
  double row2 = 0.0, col2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double r = 0.0, c = 0.0;
    for (const auto& y : bpts) {
      r += kernel_value(m, pts[i], y);
      c += kernel_value(m, y, pts[i]);
    }
    row2 = std::max(row2, r * w);
    col2 = std::max(col2, c * w);
  }
  const double dr = std::abs(row2 - b.row_sup) / b.row_sup;
  const double dc = std::abs(col2 - b.col_sup) / b.col_sup;
  b.row_divergent = dr > 0.1;
  b.col_divergent = dc > 0.1;
  b.doubling_change = std::max(dr, dc);

  switch (p) {
    case PNorm::one: b.p_norm_estimate = b.col_sup; break;
    case PNorm::inf: b.p_norm_estimate = b.row_sup; break;
    case PNorm::two: {
      Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
      double lam = 0.0;
      for (int it = 0; it < 50; ++it) {
        Eigen::VectorXd wv = Mx.transpose() * (Mx * v);
        const double nl = wv.norm();
        if (nl == 0.0) break;
        v = wv / nl;
        const bool done = std::abs(nl - lam) <= 1e-8 * nl;
        lam = nl;
        if (done) break;
      }
      b.p_norm_estimate = std::sqrt(lam);
      break;
    }
  }
  return b;
}

namespace {

double compose_at(const OrderFunction& m1, const OrderFunction& m2, const Vec& x, const Vec& y,
                  const std::vector<Vec>& zbox, double w) {
  const Vec c = 0.5 * (x + y);
  double acc = 0.0;
  for (const auto& dz : zbox) {
    const Vec z = c + dz;
    acc += m1(q_map(x, z)) * m2(q_map(z, y));
  }
  return acc * w;
}

}  // namespace

ComposedOrder compose_order_functions(const OrderFunction& m1, const OrderFunction& m2, const RealGrid& grid,
                                      int table_points, Diagnostics* diag) {
  const int n = m1.n();
  if (m2.n() != n) throw InputError("compose_order_functions: dimension mismatch");
  if (grid.dim() != 2 * n) throw InputError("compose_order_functions: grid must live on E (dimension 2n)");
  const auto zbox = grid_points(grid, Vec());
  const RealGrid big(grid.dim(), 2.0 * grid.half_width(), 2 * grid.points_per_axis());
  const auto zbig = grid_points(big, Vec());
  const double w = grid.quad_weight();

  const bool xi_only = m1.translation_invariant() && m2.translation_invariant();
  OrderTable table{xi_only ? OrderTable::Coords::xi : OrderTable::Coords::xy,
                   xi_only ? grid : RealGrid(4 * n, 0.5 * grid.half_width(), table_points), {}};
  std::vector<std::pair<Vec, Vec>> xy;
  if (xi_only) {
    for (const auto& Xi : grid_points(grid, Vec())) {
      Vec TXi(4 * n);
      TXi << Vec::Zero(2 * n), Xi;
      xy.push_back(q_inverse(TXi));
    }
  } else {
    for (const auto& p : grid_points(table.grid, Vec())) xy.emplace_back(p.head(2 * n), p.tail(2 * n));
  }

  table.log_values.resize(xy.size());
  for (std::size_t k = 0; k < xy.size(); ++k) {
    const double v = compose_at(m1, m2, xy[k].first, xy[k].second, zbox, w);
    if (!(v > 0.0) || !std::isfinite(v))
      throw CertificationError("compose_order_functions: non-positive or non-finite m3",
                               std::vector<double>(xy[k].first.data(), xy[k].first.data() + xy[k].first.size()));
    table.log_values[k] = std::log(v);
  }

  ComposedOrder out;
  // L-doubling on a node subset.
  const std::size_t stride = std::max<std::size_t>(1, xy.size() / 16);
  for (std::size_t k = 0; k < xy.size(); k += stride) {
    const double v1 = std::exp(table.log_values[k]);
    const double v2 = compose_at(m1, m2, xy[k].first, xy[k].second, zbig, w);
    out.doubling_change = std::max(out.doubling_change, std::abs(v2 - v1) / v1);
  }
  out.divergent = out.doubling_change > 0.1;
  if (diag && out.divergent) {
    diag->divergence = true;
    diag->notes.push_back("compose_order_functions: integral unstable under box doubling");
  }

  const double N0 = m1.N0() + m2.N0();
  const double table_half_width = table.grid.half_width();
  OrderFunction m3 = OrderFunction::tabulated(n, std::move(table), 1.0, N0);
  const RealGrid cert(4 * n, table_half_width, 10);
  out.certificate = certify_order_function(m3, cert, N0);
  out.m3 = m3.with_certificate(out.certificate.C0, N0);
  return out;
}

}  // namespace weylscope
