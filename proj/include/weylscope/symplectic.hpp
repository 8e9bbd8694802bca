#pragma once

#include <Eigen/Dense>
#include <utility>

#include "weylscope/types.hpp"

namespace weylscope {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// J = [[0, I], [-I, 0]] on R^{2n}.
struct SymplecticStructure {
  int n;
  Eigen::MatrixXd J;

  static SymplecticStructure standard(int n);
  Eigen::MatrixXd J_inverse() const { return -J; }
};

/// sigma(X, Y) = (J X) . Y
double symplectic_form(const Vec& X, const Vec& Y, const SymplecticStructure& S);
/// Bilinear (no conjugation) extension to complex points.
cd symplectic_form(const CVec& X, const CVec& Y, const SymplecticStructure& S);

/// q(x, y) = ((x + y)/2, J^{-1}(y - x)) as one vector of length 2 dim(x).
Vec q_map(const Vec& x, const Vec& y);
std::pair<Vec, Vec> q_inverse(const Vec& TXi);

/// <X> = sqrt(1 + |X|^2)
double japanese_bracket(const Vec& X);

}  // namespace weylscope
