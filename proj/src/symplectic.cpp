#include "weylscope/symplectic.hpp"

#include <cmath>

namespace weylscope {

SymplecticStructure SymplecticStructure::standard(int n) {
  if (n <= 0) throw InputError("SymplecticStructure: n must be positive");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  J.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return {n, J};
}

double symplectic_form(const Vec& X, const Vec& Y, const SymplecticStructure& S) {
  if (X.size() != 2 * S.n || Y.size() != 2 * S.n) throw InputError("symplectic_form: dimension mismatch");
  // (J X).Y = xi_X . y_Y - x_X . eta_Y, evaluated term by term so that antisymmetry is exact.
  double s = 0.0;
  for (int k = 0; k < S.n; ++k) s += X[S.n + k] * Y[k] - X[k] * Y[S.n + k];
  return s;
}

cd symplectic_form(const CVec& X, const CVec& Y, const SymplecticStructure& S) {
  if (X.size() != 2 * S.n || Y.size() != 2 * S.n) throw InputError("symplectic_form: dimension mismatch");
  cd s{};
  for (int k = 0; k < S.n; ++k) s += X[S.n + k] * Y[k] - X[k] * Y[S.n + k];
  return s;
}

Vec q_map(const Vec& x, const Vec& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw InputError("q_map: dimension mismatch");
  const int d = static_cast<int>(x.size());
  const auto S = SymplecticStructure::standard(d / 2);
  Vec out(2 * d);
  out.head(d) = 0.5 * (x + y);
  out.tail(d) = S.J_inverse() * (y - x);
  return out;
}

std::pair<Vec, Vec> q_inverse(const Vec& TXi) {
  if (TXi.size() % 4 != 0) throw InputError("q_inverse: dimension must be a multiple of 4");
  const int d = static_cast<int>(TXi.size() / 2);
  const auto S = SymplecticStructure::standard(d / 2);
  const Vec T = TXi.head(d);
  const Vec diff = S.J * TXi.tail(d);  // y - x
  return {T - 0.5 * diff, T + 0.5 * diff};
}

double japanese_bracket(const Vec& X) { return std::sqrt(1.0 + X.squaredNorm()); }

}  // namespace weylscope
