#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "weylscope/symplectic.hpp"

namespace wt {

inline double max_diff(const std::vector<weylscope::cd>& a, const std::vector<weylscope::cd>& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, std::abs(a[k] - b[k]));
  return e;
}

inline weylscope::Vec random_vec(std::mt19937& gen, int d, double s = 2.0) {
  std::normal_distribution<double> nd(0.0, s);
  weylscope::Vec v(d);
  for (int k = 0; k < d; ++k) v[k] = nd(gen);
  return v;
}

}  // namespace wt
