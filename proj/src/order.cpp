#include "weylscope/order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace weylscope {

std::string to_string(OrderFamily f) {
  switch (f) {
    case OrderFamily::constant: return "constant";
    case OrderFamily::bracket: return "bracket";
    case OrderFamily::anisotropic: return "anisotropic";
    case OrderFamily::product: return "product";
    case OrderFamily::tabulated: return "tabulated";
  }
  return "?";
}

OrderFamily order_family_from_string(const std::string& s) {
  if (s == "constant") return OrderFamily::constant;
  if (s == "bracket") return OrderFamily::bracket;
  if (s == "anisotropic") return OrderFamily::anisotropic;
  if (s == "product") return OrderFamily::product;
  if (s == "tabulated") return OrderFamily::tabulated;
  throw InputError("unknown order-function family '" + s + "'");
}

double OrderTable::eval(const Vec& TXi) const {
  const int D = grid.dim();
  Vec c;
  if (coords == Coords::xi) {
    c = TXi.tail(TXi.size() / 2);
  } else {
    auto [x, y] = q_inverse(TXi);
    c.resize(x.size() + y.size());
    c << x, y;
  }
  if (c.size() != D) throw InputError("OrderTable: coordinate dimension mismatch");
  const int N = grid.points_per_axis();
  const double h = grid.spacing();
  const double lo = grid.node(0), hi = grid.node(N - 1);
  std::vector<int> cell(D);
  std::vector<double> frac(D);
  for (int a = 0; a < D; ++a) {
    const double v = std::clamp(c[a], lo, hi);
    int i = static_cast<int>(std::floor((v - lo) / h));
    i = std::clamp(i, 0, N - 2);
    cell[a] = i;
    frac[a] = std::clamp((v - grid.node(i)) / h, 0.0, 1.0);
  }
  double acc = 0.0;
  for (int corner = 0; corner < (1 << D); ++corner) {
    double w = 1.0;
    std::size_t idx = 0;
    for (int a = 0; a < D; ++a) {
      const int bit = (corner >> a) & 1;
      w *= bit ? frac[a] : 1.0 - frac[a];
      idx = idx * N + static_cast<std::size_t>(cell[a] + bit);
    }
    if (w != 0.0) acc += w * log_values[idx];
  }
  return acc;
}

OrderFunction OrderFunction::constant(int n, double c) {
  if (!(c > 0.0)) throw InputError("constant order function must be positive");
  OrderFunction m;
  m.family_ = OrderFamily::constant;
  m.params_ = {c};
  m.ambient_ = 4 * n;
  return m;
}

OrderFunction OrderFunction::bracket(int n, double s) {
  OrderFunction m;
  m.family_ = OrderFamily::bracket;
  m.params_ = {s};
  m.ambient_ = 4 * n;
  m.N0_ = std::abs(s);
  m.C0_ = std::pow(2.0, std::abs(s) / 2.0);
  return m;
}

OrderFunction OrderFunction::anisotropic(int n, double s1, double s2, const Vec& t0) {
  OrderFunction m;
  m.family_ = OrderFamily::anisotropic;
  m.params_ = {s1, s2};
  if (t0.size() != 0) {
    if (t0.size() != 2 * n) throw InputError("anisotropic: shift must have dimension 2n");
    for (int k = 0; k < t0.size(); ++k) m.params_.push_back(t0[k]);
  }
  m.ambient_ = 4 * n;
  m.N0_ = std::abs(s1) + std::abs(s2);
  m.C0_ = std::pow(2.0, (std::abs(s1) + std::abs(s2)) / 2.0);
  return m;
}

OrderFunction OrderFunction::product(const OrderFunction& a, const OrderFunction& b) {
  if (a.ambient_ != b.ambient_) throw InputError("product: ambient dimensions differ");
  OrderFunction m;
  m.family_ = OrderFamily::product;
  m.ambient_ = a.ambient_;
  m.factors_ = {a, b};
  m.C0_ = a.C0_ * b.C0_;
  m.N0_ = a.N0_ + b.N0_;
  return m;
}

OrderFunction OrderFunction::tabulated(int n, OrderTable table, double C0, double N0) {
  const int want = table.coords == OrderTable::Coords::xy ? 4 * n : 2 * n;
  if (table.grid.dim() != want) throw InputError("tabulated: table grid has the wrong dimension");
  if (table.log_values.size() != table.grid.size()) throw InputError("tabulated: table length mismatch");
  for (double v : table.log_values)
    if (!std::isfinite(v)) throw CertificationError("tabulated order function has a non-finite entry", {});
  OrderFunction m;
  m.family_ = OrderFamily::tabulated;
  m.ambient_ = 4 * n;
  m.table_ = std::make_shared<const OrderTable>(std::move(table));
  m.C0_ = C0;
  m.N0_ = N0;
  return m;
}

OrderFunction OrderFunction::from_spec(const std::string& family, const std::vector<double>& params, int n,
                                       double C0, double N0) {
  OrderFunction m;
  switch (order_family_from_string(family)) {
    case OrderFamily::constant:
      m = constant(n, params.empty() ? 1.0 : params[0]);
      break;
    case OrderFamily::bracket:
      if (params.size() != 1) throw InputError("bracket family takes params [s]");
      m = bracket(n, params[0]);
      break;
    case OrderFamily::anisotropic: {
      if (params.size() != 2 && params.size() != 2 + 2 * static_cast<std::size_t>(n))
        throw InputError("anisotropic family takes params [s1, s2] or [s1, s2, t0...]");
      Vec t0;
      if (params.size() > 2) {
        t0.resize(2 * n);
        for (int k = 0; k < 2 * n; ++k) t0[k] = params[2 + k];
      }
      m = anisotropic(n, params[0], params[1], t0);
      break;
    }
    default:
      throw InputError("family '" + family + "' cannot be built from a config entry");
  }
  if (C0 > 0.0) m = m.with_certificate(C0, N0 >= 0.0 ? N0 : m.N0_);
  return m;
}

double OrderFunction::eval_log(const Vec& TXi) const {
  if (TXi.size() != ambient_) throw InputError("OrderFunction: point has the wrong dimension");
  const int d = ambient_ / 2;
  switch (family_) {
    case OrderFamily::constant:
      return std::log(params_[0]);
    case OrderFamily::bracket:
      return 0.5 * params_[0] * std::log1p(TXi.squaredNorm());
    case OrderFamily::anisotropic: {
      Vec T = TXi.head(d);
      if (params_.size() > 2)
        for (int k = 0; k < d; ++k) T[k] -= params_[2 + k];
      const double t2 = T.squaredNorm();
      const double x2 = TXi.tail(d).squaredNorm();
      double v = 0.0;
      if (params_[0] != 0.0) v += 0.5 * params_[0] * std::log1p(t2);
      if (params_[1] != 0.0) v += 0.5 * params_[1] * std::log1p(x2);
      return v;
    }
    case OrderFamily::product:
      return factors_[0].eval_log(TXi) + factors_[1].eval_log(TXi);
    case OrderFamily::tabulated:
      return table_->eval(TXi);
  }
  return 0.0;
}

double OrderFunction::operator()(const Vec& TXi) const { return std::exp(eval_log(TXi)); }

bool OrderFunction::translation_invariant() const {
  switch (family_) {
    case OrderFamily::constant: return true;
    case OrderFamily::bracket: return params_[0] == 0.0;
    case OrderFamily::anisotropic: return params_[0] == 0.0;
    case OrderFamily::product: return factors_[0].translation_invariant() && factors_[1].translation_invariant();
    case OrderFamily::tabulated: return table_->coords == OrderTable::Coords::xi;
  }
  return false;
}

OrderFunction OrderFunction::with_certificate(double C0, double N0) const {
  OrderFunction m = *this;
  m.C0_ = C0;
  m.N0_ = N0;
  return m;
}

std::string OrderFunction::describe() const {
  std::ostringstream os;
  os << to_string(family_);
  switch (family_) {
    case OrderFamily::product:
      os << "(" << factors_[0].describe() << "," << factors_[1].describe() << ")";
      break;
    case OrderFamily::tabulated:
      os << (table_->coords == OrderTable::Coords::xi ? "[xi]" : "[xy]");
      break;
    default:
      os << "[";
      for (std::size_t k = 0; k < params_.size(); ++k) os << (k ? "," : "") << params_[k];
      os << "]";
  }
  return os.str();
}

namespace {

Vec grid_point(const RealGrid& g, std::size_t idx) {
  const int D = g.dim(), N = g.points_per_axis();
  Vec X(D);
  for (int a = D - 1; a >= 0; --a) {
    X[a] = g.node(static_cast<int>(idx % N));
    idx /= N;
  }
  return X;
}

}  // namespace

CertifyResult certify_order_function(const OrderFunction& m, const RealGrid& grid, double N0) {
  if (grid.dim() != m.ambient_dim()) throw InputError("certify: grid dimension must equal the ambient dimension");
  if (N0 < 0.0) throw InputError("certify: N0 must be non-negative");
  const std::size_t P = grid.size();
  const int D = grid.dim(), N = grid.points_per_axis();
  std::vector<double> lm(P);
  for (std::size_t k = 0; k < P; ++k) {
    const Vec X = grid_point(grid, k);
    const double l = m.eval_log(X);
    if (!std::isfinite(l)) {
      throw CertificationError("order function is not positive and finite at a grid point",
                               std::vector<double>(X.data(), X.data() + X.size()));
    }
    lm[k] = l;
  }
  // log<X - Y> depends only on the index difference.
  const int W = 2 * N - 1;
  std::size_t nd = 1;
  for (int a = 0; a < D; ++a) nd *= W;
  std::vector<double> lb(nd);
  for (std::size_t k = 0; k < nd; ++k) {
    std::size_t r = k;
    double s2 = 0.0;
    for (int a = 0; a < D; ++a) {
      const int dd = static_cast<int>(r % W) - (N - 1);
      r /= W;
      s2 += (dd * grid.spacing()) * (dd * grid.spacing());
    }
    lb[k] = 0.5 * std::log1p(s2);
  }
  std::vector<int> ix(P * D);
  for (std::size_t k = 0; k < P; ++k) {
    std::size_t r = k;
    for (int a = D - 1; a >= 0; --a) {
      ix[k * D + a] = static_cast<int>(r % N);
      r /= N;
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  std::size_t bx = 0, by = 0;
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < P; ++j) {
      std::size_t di = 0;
      for (int a = D - 1; a >= 0; --a) di = di * W + static_cast<std::size_t>(ix[i * D + a] - ix[j * D + a] + N - 1);
      const double v = lm[i] - lm[j] - N0 * lb[di];
      if (v > best) {
        best = v;
        bx = i;
        by = j;
      }
    }
  }
  CertifyResult r;
  r.C0 = std::exp(best);
  if (!std::isfinite(r.C0)) throw CertificationError("certification overflow", {});
  const Vec X = grid_point(grid, bx), Y = grid_point(grid, by);
  r.X.assign(X.data(), X.data() + X.size());
  r.Y.assign(Y.data(), Y.data() + Y.size());
  return r;
}

bool check_certificate(const OrderFunction& m, const RealGrid& grid, double slack) {
  const CertifyResult r = certify_order_function(m, grid, m.N0());
  return r.C0 <= m.C0() * (1.0 + slack);
}

OrderFunction gaussian_surrogate(int n, const RealGrid& xi_grid) {
  if (xi_grid.dim() != 2 * n) throw InputError("gaussian_surrogate: grid must have dimension 2n");
  OrderTable t{OrderTable::Coords::xi, xi_grid, std::vector<double>(xi_grid.size())};
  for (std::size_t k = 0; k < t.log_values.size(); ++k) {
    const Vec X = grid_point(xi_grid, k);
    t.log_values[k] = -0.25 * X.squaredNorm();
  }
  // Clamping outside the table keeps the ratio bounded. The worst pair has equal T, Y at the
  // table corner b and X on the segment towards the center; interpolating the concave log
  // only lowers m(X), so the scan below bounds every pair.
  const double N0 = 2.0;
  OrderFunction m = OrderFunction::tabulated(n, std::move(t), 1.0, N0);
  const double b = std::sqrt(2.0 * n) * xi_grid.half_width();
  double best = 0.0;
  for (int k = 0; k <= 20000; ++k) {
    const double s = b * k / 20000.0;
    best = std::max(best, (2.0 * b * s - s * s) / 4.0 - 0.5 * N0 * std::log1p(s * s));
  }
  const double C0 = std::exp(best);
  return m.with_certificate(C0 * 1.05, N0);
}

std::vector<NamedOrder> order_registry() {
  const int n = 1;
  std::vector<NamedOrder> r;
  r.push_back({"one", OrderFunction::constant(n)});
  r.push_back({"bracket+1", OrderFunction::bracket(n, 1.0)});
  r.push_back({"bracket-2", OrderFunction::bracket(n, -2.0)});
  r.push_back({"xi-5", OrderFunction::anisotropic(n, 0.0, -5.0)});
  r.push_back({"t1-xi-5", OrderFunction::anisotropic(n, 1.0, -5.0)});
  r.push_back({"gauss-surrogate", gaussian_surrogate(n, RealGrid(2, 6.0, 24))});
  return r;
}

OrderFunction order_by_name(const std::string& name) {
  for (auto& e : order_registry())
    if (e.name == name) return e.m;
  throw InputError("unknown order function '" + name + "'");
}

}  // namespace weylscope
