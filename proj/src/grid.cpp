#include "weylscope/grid.hpp"

#include <cmath>
#include <string>

namespace weylscope {

RealGrid::RealGrid(int dim, double half_width, int points_per_axis)
    : dim_(dim), half_width_(half_width), n_(points_per_axis), spacing_(0.0) {
  if (dim <= 0) throw InputError("RealGrid: dim must be positive, got " + std::to_string(dim));
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw InputError("RealGrid: half_width must be positive and finite");
  if (points_per_axis <= 0 || points_per_axis % 2 != 0)
    throw InputError("RealGrid: points_per_axis must be even and positive, got " +
                     std::to_string(points_per_axis));
  spacing_ = 2.0 * half_width / points_per_axis;
}

std::vector<double> RealGrid::axis_nodes() const {
  std::vector<double> out(n_);
  for (int k = 0; k < n_; ++k) out[k] = node(k);
  return out;
}

std::size_t RealGrid::size() const {
  std::size_t s = 1;
  for (int d = 0; d < dim_; ++d) s *= static_cast<std::size_t>(n_);
  return s;
}

double RealGrid::quad_weight() const { return std::pow(spacing_, dim_); }

RealGrid RealGrid::dual() const { return RealGrid(dim_, kPi * n_ / (2.0 * half_width_), n_); }

int RealGrid::nearest(double x) const {
  const double k = std::round((x + half_width_) / spacing_);
  if (k < 0 || k >= n_) return -1;
  return static_cast<int>(k);
}

void require_finite(const std::vector<cd>& v, const char* what) {
  for (const cd& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError(std::string(what) + ": non-finite entry");
}

SampledFunction::SampledFunction(RealGrid g, std::vector<cd> v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) throw InputError("SampledFunction: length does not match grid");
  require_finite(values, "SampledFunction");
}

SampledFunction::SampledFunction(RealGrid g) : grid(g), values(g.size(), cd{}) {}

double SampledFunction::l2_norm() const {
  double s = 0.0;
  for (const cd& z : values) s += std::norm(z);
  return std::sqrt(s * grid.quad_weight());
}

cd SampledFunction::inner(const SampledFunction& other) const {
  if (!(grid == other.grid)) throw InputError("inner: grids differ");
  cd s{};
  for (std::size_t k = 0; k < values.size(); ++k) s += values[k] * std::conj(other.values[k]);
  return s * grid.quad_weight();
}

SampledSymbol::SampledSymbol(PhaseGrid g, std::vector<cd> v) : grid(g), values(std::move(v)) {
  if (grid.x.dim() != grid.xi.dim()) throw InputError("SampledSymbol: axis dimensions differ");
  if (values.size() != grid.size()) throw InputError("SampledSymbol: length does not match grid");
  require_finite(values, "SampledSymbol");
}

SampledSymbol::SampledSymbol(PhaseGrid g) : grid(g), values(g.size(), cd{}) {}

SampledSymbol SampledSymbol::scaled(cd lambda) const {
  SampledSymbol out = *this;
  for (cd& z : out.values) z *= lambda;
  return out;
}

SampledSymbol SampledSymbol::conj() const {
  SampledSymbol out = *this;
  for (cd& z : out.values) z = std::conj(z);
  return out;
}

double SampledSymbol::max_abs() const {
  double m = 0.0;
  for (const cd& z : values) m = std::max(m, std::abs(z));
  return m;
}

std::vector<cd> ComplexBox::points() const {
  std::vector<cd> out(size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = point(k);
  return out;
}

ComplexGridFunction::ComplexGridFunction(ComplexBox b, std::vector<cd> v) : box(b), values(std::move(v)) {
  if (box.re.dim() != 1 || box.im.dim() != 1)
    throw InputError("ComplexGridFunction: only n = 1 boxes are supported");
  if (values.size() != box.size()) throw InputError("ComplexGridFunction: length does not match box");
  require_finite(values, "ComplexGridFunction");
}

ComplexGridFunction::ComplexGridFunction(ComplexBox b) : box(b), values(b.size(), cd{}) {}

}  // namespace weylscope
