#include "weylscope/lattice.hpp"

#include <cmath>

namespace weylscope {

double WindowSpec::operator()(const Vec& X) const {
  const double r2 = center.size() == 0 ? X.squaredNorm() : (X - center).squaredNorm();
  switch (kind) {
    case WindowKind::gaussian:
      return amplitude * std::exp(-r2 / (scale * scale));
    case WindowKind::f0:
      return amplitude * std::pow(2.0, 0.5 * static_cast<double>(X.size())) * std::exp(-r2);
    case WindowKind::bump: {
      const double t = r2 / (scale * scale);
      if (t >= 1.0) return 0.0;
      return amplitude * std::exp(1.0 - 1.0 / (1.0 - t));
    }
  }
  return 0.0;
}

double WindowSpec::support_radius(double eps) const {
  switch (kind) {
    case WindowKind::gaussian: return scale * std::sqrt(-std::log(eps));
    case WindowKind::f0: return std::sqrt(-std::log(eps));
    case WindowKind::bump: return scale;
  }
  return scale;
}

WindowSpec WindowSpec::f0(int dim) { return WindowSpec{WindowKind::f0, Vec::Zero(dim), 1.0, 1.0}; }

Lattice::Lattice(Eigen::MatrixXd b, WindowSpec w) : basis(std::move(b)), window(std::move(w)) {
  if (basis.rows() != basis.cols() || basis.rows() == 0) throw InputError("Lattice: basis must be square");
  const double det = basis.determinant();
  if (!(std::abs(det) > 1e-300) || !std::isfinite(det)) throw InputError("Lattice: basis is not invertible");
  if (window.center.size() == 0) window.center = Vec::Zero(basis.rows());
  if (window.center.size() != basis.rows()) throw InputError("Lattice: window center dimension mismatch");
}

Lattice Lattice::gaussian_partition(int dim, double step, double scale) {
  Eigen::MatrixXd B = step * Eigen::MatrixXd::Identity(dim, dim);
  WindowSpec w{WindowKind::gaussian, Vec::Zero(dim), scale,
               std::pow(step, dim) / std::pow(kPi * scale * scale, 0.5 * dim)};
  return Lattice(B, w);
}

double partition_check(const Lattice& lattice, const RealGrid& grid, const Vec& shift) {
  const int D = lattice.dim();
  if (grid.dim() != D) throw InputError("partition_check: grid dimension must match the lattice");
  const Eigen::MatrixXd Binv = lattice.basis.inverse();
  const double rho = lattice.window.support_radius() + lattice.window.center.norm();
  const double reach = Binv.norm() * rho;  // Frobenius norm bounds the operator norm
  const int N = grid.points_per_axis();
  double worst = 0.0;
  Vec X(D), g(D);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    std::size_t r = idx;
    for (int a = D - 1; a >= 0; --a) {
      X[a] = grid.node(static_cast<int>(r % N));
      r /= N;
    }
    if (shift.size() == D) X += shift;
    const Vec c = Binv * X;
    std::vector<int> lo(D), hi(D), k(D);
    for (int a = 0; a < D; ++a) {
      lo[a] = static_cast<int>(std::floor(c[a] - reach));
      hi[a] = static_cast<int>(std::ceil(c[a] + reach));
      k[a] = lo[a];
    }
    double sum = 0.0;
    while (true) {
      for (int a = 0; a < D; ++a) g[a] = k[a];
      const Vec gamma = lattice.basis * g;
      if ((X - gamma).norm() <= rho) sum += lattice.window(X - gamma);
      int a = D - 1;
      for (; a >= 0; --a) {
        if (++k[a] <= hi[a]) break;
        k[a] = lo[a];
      }
      if (a < 0) break;
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

}  // namespace weylscope
