#include "weylscope/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <cstdio>
#include <mutex>

#include "weylscope/catalog.hpp"

namespace weylscope {
namespace {

CMat sym(const CMat& M) { return 0.5 * (M + M.transpose()); }

void require_phase(const QuadraticPhase& p) {
  if (p.n != 1) throw InputError("grid operations support n = 1 only");
}

double box_edge_ratio(const ComplexBox& box, const std::vector<double>& w) {
  const int nr = box.re.points_per_axis(), ni = box.im.points_per_axis();
  double edge = 0.0, mx = 0.0;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ni; ++j) {
      const double v = w[static_cast<std::size_t>(i) * ni + j];
      mx = std::max(mx, v);
      if (i == 0 || j == 0 || i == nr - 1 || j == ni - 1) edge = std::max(edge, v);
    }
  return mx > 0.0 ? edge / mx : 0.0;
}

RealGrid reference_grid() { return RealGrid(1, 8.0, 128); }

}  // namespace

QuadraticPhase QuadraticPhase::make(const std::string& name, CMat A, CMat B, CMat C) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || B.rows() != n || B.cols() != n || C.rows() != n || C.cols() != n || n < 1)
    throw InputError("QuadraticPhase: blocks must be square of equal size");
  if ((A - A.transpose()).norm() > 1e-14 || (C - C.transpose()).norm() > 1e-14)
    throw InputError("QuadraticPhase: A and C must be symmetric");
  if (std::abs(B.determinant()) < 1e-12) throw InputError("QuadraticPhase: det B = 0");
  Eigen::MatrixXd ImC = C.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (ImC + ImC.transpose()));
  if (es.eigenvalues().minCoeff() <= 0.0) throw InputError("QuadraticPhase: Im C must be positive definite");
  QuadraticPhase p;
  p.name = name;
  p.n = static_cast<int>(n);
  p.A = std::move(A);
  p.B = std::move(B);
  p.C = std::move(C);
  p.c_phi = 1.0;
  if (p.n == 1) {
    // ||T e0||_{H^2_Phi} = 1 on the reference grids.
    const RealGrid g = reference_grid();
    const auto e0 = FunctionSpec::parse("e0").sample(g);
    const Weight W = phi_weight(p);
    const auto V = bargmann_transform(e0, p, default_box());
    p.c_phi = 1.0 / std::sqrt(std::real(h2_inner(V, V, W)));
  }
  return p;
}

cd QuadraticPhase::operator()(cd x, cd y) const {
  return 0.5 * A(0, 0) * x * x + B(0, 0) * x * y + 0.5 * C(0, 0) * y * y;
}

CMat QuadraticPhase::kappa() const {
  const CMat BiT = B.transpose().inverse();
  CMat K(2 * n, 2 * n);
  K.topLeftCorner(n, n) = -BiT * C;
  K.topRightCorner(n, n) = -BiT;
  K.bottomLeftCorner(n, n) = -A * BiT * C + B;
  K.bottomRightCorner(n, n) = -A * BiT;
  return K;
}

CMat QuadraticPhase::kappa_inverse() const {
  const CMat Bi = B.inverse();
  CMat K(2 * n, 2 * n);
  K.topLeftCorner(n, n) = -Bi * A;
  K.topRightCorner(n, n) = Bi;
  K.bottomLeftCorner(n, n) = -B.transpose() + C * Bi * A;
  K.bottomRightCorner(n, n) = -C * Bi;
  return K;
}

QuadraticPhase QuadraticPhase::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw InputError("QuadraticPhase::scaled: lambda must be positive");
  return make(name + "*" + std::to_string(lambda), lambda * A, lambda * B, lambda * C);
}

std::vector<std::string> phase_names() { return {"radial", "difference", "asym"}; }

const QuadraticPhase& phase_by_name(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, QuadraticPhase> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto m1 = [](cd v) { return CMat::Constant(1, 1, v); };
  QuadraticPhase p;
  if (name == "radial") {
    p = QuadraticPhase::make(name, m1({0.0, 0.5}), m1({0.0, -1.0}), m1({0.0, 1.0}));
  } else if (name == "difference") {
    p = QuadraticPhase::make(name, m1({0.0, 2.0}), m1({0.0, -2.0}), m1({0.0, 2.0}));
  } else if (name == "asym") {
    p = QuadraticPhase::make(name, m1({0.2, 0.4}), m1({0.3, -1.0}), m1({0.1, 1.0}));
  } else {
    throw InputError("unknown phase '" + name + "'");
  }
  return cache.emplace(name, std::move(p)).first->second;
}

double Weight::operator()(cd x) const {
  const double u = x.real(), v = x.imag();
  return 0.5 * (Q(0, 0) * u * u + 2.0 * Q(0, 1) * u * v + Q(1, 1) * v * v);
}

double Weight::operator()(const CVec& x) const {
  Eigen::VectorXd v(2 * n);
  v << x.real(), x.imag();
  return 0.5 * v.dot(Q * v);
}

cd Weight::Psi(cd x, cd y) const {
  return 0.5 * S(0, 0) * x * x + 0.5 * std::conj(S(0, 0)) * y * y + y * H(0, 0) * x;
}

CVec Weight::fiber(const CVec& x) const { return -2.0 * kI * (H.transpose() * x.conjugate() + S * x); }

cd Weight::fiber(cd x) const { return -2.0 * kI * (H(0, 0) * std::conj(x) + S(0, 0) * x); }

Eigen::VectorXd Weight::levi_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (H + H.adjoint()));
  return es.eigenvalues();
}

namespace {

Weight compute_weight(const QuadraticPhase& p) {
  const int n = p.n;
  Eigen::MatrixXd ImC = p.C.imag();
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (ImC + ImC.transpose()));
  if (llt.info() != Eigen::Success) throw NumericalError("phi_weight: Im C is not positive definite");
  auto Phi = [&](const CVec& x) {
    const double t1 = -(0.5 * x.transpose() * p.A * x).value().imag();
    const Eigen::VectorXd b = (p.B.transpose() * x).imag();
    return t1 + 0.5 * b.dot(llt.solve(b));
  };
  Weight W;
  W.n = n;
  W.Q.resize(2 * n, 2 * n);
  auto basis = [&](int a) {
    CVec x = CVec::Zero(n);
    if (a < n) x[a] = 1.0;
    else x[a - n] = kI;
    return x;
  };
  for (int a = 0; a < 2 * n; ++a) W.Q(a, a) = 2.0 * Phi(basis(a));
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      const double v = Phi(basis(a) + basis(b)) - 0.5 * W.Q(a, a) - 0.5 * W.Q(b, b);
      W.Q(a, b) = W.Q(b, a) = v;
    }
  const Eigen::MatrixXd Quu = W.Q.topLeftCorner(n, n), Qvv = W.Q.bottomRightCorner(n, n);
  const Eigen::MatrixXd Quv = W.Q.topRightCorner(n, n);
  const Eigen::MatrixXd Hr = 0.25 * (Quu + Qvv), Sr = 0.25 * (Quu - Qvv);
  const Eigen::MatrixXd Si = -0.25 * (Quv + Quv.transpose()), Hi = -0.25 * (Quv - Quv.transpose());
  W.H = Hr.cast<cd>() + kI * Hi.cast<cd>();
  W.S = Sr.cast<cd>() + kI * Si.cast<cd>();
  if (W.levi_eigenvalues().minCoeff() <= 1e-10) throw NumericalError("phi_weight: Levi form is not positive");
  W.a_phi = std::pow(2.0 / kPi, n) * std::real(W.H.determinant());
  if (n == 1) {
    // Least-squares calibration of a_Phi from Pi(V0) = V0 on a coarse box.
    const ComplexBox box = ComplexBox::square(8.0, 48);
    ComplexGridFunction V0(box);
    for (std::size_t k = 0; k < box.size(); ++k) V0.values[k] = ground_state(p, box.point(k));
    Weight W1 = W;
    W1.a_phi = 1.0;
    const auto P = reproducing_projection(V0, W1);
    cd num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < box.size(); ++k) {
      const double w = std::exp(-2.0 * W(box.point(k)));
      num += std::conj(P.values[k]) * V0.values[k] * w;
      den += std::norm(P.values[k]) * w;
    }
    W.a_phi = num.real() / den;
  }
  return W;
}

std::string phase_key(const QuadraticPhase& p) {
  std::string k;
  char buf[64];
  for (const CMat* M : {&p.A, &p.B, &p.C})
    for (Eigen::Index i = 0; i < M->size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g;", (*M)(i).real(), (*M)(i).imag());
      k += buf;
    }
  return k;
}

}  // namespace

Weight phi_weight(const QuadraticPhase& p) {
  static std::mutex mu;
  static std::map<std::string, Weight> cache;
  const std::string key = phase_key(p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Weight W = compute_weight(p);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(W)).first->second;
}

CriticalValue critical_value(const QuadForm& f) {
  const Eigen::Index ny = f.R.rows();
  if (f.R.cols() != ny || f.Q.cols() != ny || f.P.rows() != f.Q.rows() || f.P.cols() != f.P.rows())
    throw InputError("critical_value: inconsistent block shapes");
  Eigen::FullPivLU<CMat> lu(f.R);
  if (!lu.isInvertible() || std::abs(f.R.determinant()) < 1e-14)
    throw NumericalError("critical_value: singular y-Hessian");
  const CMat RiQt = lu.solve(f.Q.transpose());
  return CriticalValue{f.P - f.Q * RiQt, -RiQt};
}

CMat ground_state_exponent(const QuadraticPhase& p) {
  const CMat I = CMat::Identity(p.n, p.n);
  return sym(critical_value(QuadForm{p.A, p.B, p.C + kI * I}).hessian);
}

cd ground_state_constant(const QuadraticPhase& p) {
  const CMat R = p.C + kI * CMat::Identity(p.n, p.n);
  const cd det = (-kI * R).determinant();
  return p.c_phi * std::pow(kPi, -0.25 * p.n) * std::pow(2.0 * kPi, 0.5 * p.n) / std::sqrt(det);
}

cd ground_state(const QuadraticPhase& p, cd x) {
  require_phase(p);
  const cd g = 0.5 * ground_state_exponent(p)(0, 0) * x * x;
  return ground_state_constant(p) * std::exp(kI * g);
}

CVec kappa_apply(const QuadraticPhase& p, const CVec& point) {
  if (point.size() != 2 * p.n) throw InputError("kappa_apply: point must have dimension 2n");
  return p.kappa() * point;
}

CVec kappa_inverse_apply(const QuadraticPhase& p, const CVec& point) {
  if (point.size() != 2 * p.n) throw InputError("kappa_inverse_apply: point must have dimension 2n");
  return p.kappa_inverse() * point;
}

Vec real_point_of(const QuadraticPhase& p, const Weight& W, cd x) {
  require_phase(p);
  CVec X(2);
  X << x, W.fiber(x);
  return kappa_inverse_apply(p, X).real();
}

double chart_jacobian(const QuadraticPhase& p, const Weight& W) {
  Eigen::Matrix2d M;
  M.col(0) = real_point_of(p, W, cd{1.0, 0.0});
  M.col(1) = real_point_of(p, W, cd{0.0, 1.0});
  return std::abs(M.determinant());
}

ComplexBox default_box() { return ComplexBox::square(10.0, 80); }

std::vector<cd> transform_at(const SampledFunction& u, const QuadraticPhase& p, const std::vector<cd>& points) {
  require_phase(p);
  const RealGrid& g = u.grid;
  const int N = g.points_per_axis();
  std::vector<cd> pre(N);
  std::vector<double> y(N);
  for (int k = 0; k < N; ++k) {
    y[k] = g.node(k);
    pre[k] = u.values[k] * std::exp(kI * (0.5 * p.C(0, 0) * y[k] * y[k])) * g.spacing();
  }
  const cd a = p.A(0, 0), b = p.B(0, 0);
  std::vector<cd> out(points.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(points.size()); ++i) {
    const cd x = points[i];
    cd acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::exp(kI * (0.5 * a * x * x + b * x * y[k])) * pre[k];
    out[i] = p.c_phi * acc;
  }
  return out;
}

ComplexGridFunction bargmann_transform(const SampledFunction& u, const QuadraticPhase& p, const ComplexBox& box,
                                       Diagnostics* diag) {
  require_finite(u.values, "bargmann_transform");
  if (diag) {
    const int N = u.grid.points_per_axis();
    double mx = 0.0;
    for (const auto& v : u.values) mx = std::max(mx, std::abs(v));
    const double edge = std::max(std::abs(u.values[0]), std::abs(u.values[N - 1]));
    if (mx > 0.0 && edge > 1e-10 * mx) diag->flag_boundary("bargmann_transform: input mass at the grid edge");
  }
  return ComplexGridFunction(box, transform_at(u, p, box.points()));
}

SampledFunction bargmann_adjoint(const ComplexGridFunction& V, const QuadraticPhase& p, const RealGrid& grid,
                                 Diagnostics* diag) {
  require_phase(p);
  const Weight W = phi_weight(p);
  const ComplexBox& box = V.box;
  const auto pts = box.points();
  std::vector<cd> wv(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) wv[k] = V.values[k] * std::exp(-2.0 * W(pts[k])) * box.area_weight();
  if (diag && box_edge_ratio(box, weighted_modulus(V, W)) > 1e-10)
    diag->flag_boundary("bargmann_adjoint: weighted mass at the box edge");
  SampledFunction out(grid);
  const int N = grid.points_per_axis();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < N; ++j) {
    const double y = grid.node(j);
    cd acc = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) acc += std::conj(std::exp(kI * p(pts[k], y))) * wv[k];
    out.values[j] = p.c_phi * acc;
  }
  return out;
}

cd h2_inner(const ComplexGridFunction& U, const ComplexGridFunction& V, const Weight& W) {
  if (!(U.box == V.box)) throw InputError("h2_inner: boxes differ");
  cd acc = 0.0;
  for (std::size_t k = 0; k < U.values.size(); ++k)
    acc += U.values[k] * std::conj(V.values[k]) * std::exp(-2.0 * W(U.box.point(k)));
  return acc * U.box.area_weight();
}

std::vector<double> weighted_modulus(const ComplexGridFunction& V, const Weight& W) {
  std::vector<double> w(V.values.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = std::abs(V.values[k]) * std::exp(-W(V.box.point(k)));
  return w;
}

namespace {

// Periodic band-limited cardinal function for an even number of nodes.
double cardinal(double t, double L, int N) {
  const double h = 2.0 * L / N;
  const double s = std::sin(kPi * t / (2.0 * L));
  if (std::abs(s) < 1e-14) return std::cos(kPi * t / (2.0 * L)) > 0 ? 1.0 : (N % 2 == 0 ? 1.0 : -1.0);
  return std::sin(kPi * t / h) / (N * std::tan(kPi * t / (2.0 * L)));
}

double interp_abs(const ComplexBox& box, const std::vector<cd>& F, double a, double b) {
  const int nr = box.re.points_per_axis(), ni = box.im.points_per_axis();
  std::vector<double> wa(nr), wb(ni);
  for (int k = 0; k < nr; ++k) wa[k] = cardinal(a - box.re.node(k), box.re.half_width(), nr);
  for (int l = 0; l < ni; ++l) wb[l] = cardinal(b - box.im.node(l), box.im.half_width(), ni);
  cd acc = 0.0;
  for (int k = 0; k < nr; ++k) {
    if (wa[k] == 0.0) continue;
    cd row = 0.0;
    for (int l = 0; l < ni; ++l) row += wb[l] * F[static_cast<std::size_t>(k) * ni + l];
    acc += wa[k] * row;
  }
  return std::abs(acc);
}

}  // namespace

double hp_norm(const ComplexGridFunction& V, const Weight& W, PNorm p, Diagnostics* diag) {
  const auto wm = weighted_modulus(V, W);
  const double dA = V.box.area_weight();
  if (diag && p != PNorm::inf) {
    const double r = box_edge_ratio(V.box, wm);
    if (std::pow(r, pnorm_value(p)) > 1e-10) diag->flag_boundary("hp_norm: weighted integrand at the box edge");
  }
  switch (p) {
    case PNorm::one: {
      double s = 0.0;
      for (double v : wm) s += v;
      return s * dA;
    }
    case PNorm::two: {
      double s = 0.0;
      for (double v : wm) s += v * v;
      return std::sqrt(s * dA);
    }
    case PNorm::inf: {
      const auto it = std::max_element(wm.begin(), wm.end());
      if (it == wm.end() || *it == 0.0) return 0.0;
      std::vector<cd> F(V.values.size());
      for (std::size_t k = 0; k < F.size(); ++k) F[k] = V.values[k] * std::exp(-W(V.box.point(k)));
      const cd x0 = V.box.point(static_cast<std::size_t>(it - wm.begin()));
      double a = x0.real(), b = x0.imag(), best = *it;
      double step = 0.5 * V.box.re.spacing();
      const double stop = 1e-9 * V.box.re.spacing();
      while (step > stop) {
        bool moved = false;
        for (int da = -1; da <= 1; ++da)
          for (int db = -1; db <= 1; ++db) {
            if (!da && !db) continue;
            const double v = interp_abs(V.box, F, a + da * step, b + db * step);
            if (v > best) {
              best = v;
              a += da * step;
              b += db * step;
              moved = true;
            }
          }
        if (!moved) step *= 0.5;
      }
      return best;
    }
  }
  return 0.0;
}

double mod_norm(const SampledFunction& u, PNorm p, const QuadraticPhase& phase, const ComplexBox& box,
                Diagnostics* diag) {
  return hp_norm(bargmann_transform(u, phase, box, diag), phi_weight(phase), p, diag);
}

SampledFunction fourier0(const SampledFunction& u) {
  const RealGrid& g = u.grid;
  if (g.dim() != 1) throw InputError("fourier0: only n = 1 is supported");
  const int N = g.points_per_axis();
  SampledFunction out(g);
  const double c = g.spacing() / std::sqrt(2.0 * kPi);
  for (int m = 0; m < N; ++m) {
    cd acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::exp(-kI * (g.node(k) * g.node(m))) * u.values[k];
    out.values[m] = c * acc;
  }
  return out;
}

ComplexGridFunction reproducing_projection(const ComplexGridFunction& g, const Weight& W, Diagnostics* diag) {
  if (W.n != 1) throw InputError("reproducing_projection: only n = 1 is supported");
  const ComplexBox& box = g.box;
  const auto pts = box.points();
  if (diag && box_edge_ratio(box, weighted_modulus(g, W)) > 1e-10)
    diag->flag_boundary("reproducing_projection: weighted mass at the box edge");
  const cd S = W.S(0, 0), H = W.H(0, 0);
  std::vector<cd> coef(pts.size()), ybar(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    ybar[k] = std::conj(pts[k]);
    coef[k] = g.values[k] * std::exp(std::conj(S * pts[k] * pts[k]) - 2.0 * W(pts[k])) * box.area_weight();
  }
  ComplexGridFunction out(box);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(pts.size()); ++i) {
    const cd x = pts[i];
    const cd hx = 2.0 * H * x;
    cd acc = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) acc += std::exp(hx * ybar[k]) * coef[k];
    out.values[i] = W.a_phi * std::exp(S * x * x) * acc;
  }
  return out;
}

ChangeKernel change_kernel(const QuadraticPhase& p1, const QuadraticPhase& p2) {
  require_phase(p1);
  require_phase(p2);
  QuadForm f;
  f.P = CMat::Zero(2, 2);
  f.P(0, 0) = p2.A(0, 0);
  f.P(1, 1) = -std::conj(p1.A(0, 0));
  f.Q = CMat(2, 1);
  f.Q(0, 0) = p2.B(0, 0);
  f.Q(1, 0) = -std::conj(p1.B(0, 0));
  f.R = CMat::Constant(1, 1, p2.C(0, 0) - std::conj(p1.C(0, 0)));
  const CriticalValue cv = critical_value(f);
  ChangeKernel k;
  k.q = 0.5 * kI * sym(cv.hessian);
  k.y_map = cv.point_map;
  k.constant = p2.c_phi * p1.c_phi * std::sqrt(2.0 * kPi / (-kI * f.R(0, 0)));
  return k;
}

ComplexGridFunction change_of_transform(const ComplexGridFunction& V, const QuadraticPhase& p1,
                                        const QuadraticPhase& p2, Diagnostics* diag) {
  const ChangeKernel K = change_kernel(p1, p2);
  const Weight W1 = phi_weight(p1);
  const ComplexBox& box = V.box;
  const auto pts = box.points();
  if (diag && box_edge_ratio(box, weighted_modulus(V, W1)) > 1e-10)
    diag->flag_boundary("change_of_transform: weighted mass at the box edge");
  const cd qxx = K.q(0, 0), qxz = K.q(0, 1), qzz = K.q(1, 1);
  std::vector<cd> coef(pts.size()), zb(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    zb[k] = std::conj(pts[k]);
    coef[k] = V.values[k] * std::exp(qzz * zb[k] * zb[k] - 2.0 * W1(pts[k])) * box.area_weight();
  }
  ComplexGridFunction out(box);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(pts.size()); ++i) {
    const cd x = pts[i];
    cd acc = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) acc += std::exp(2.0 * qxz * x * zb[k]) * coef[k];
    out.values[i] = K.constant * std::exp(qxx * x * x) * acc;
  }
  return out;
}

cd chi_map(const QuadraticPhase& p1, const QuadraticPhase& p2, cd w) {
  const Weight W1 = phi_weight(p1);
  CVec X(2);
  X << w, W1.fiber(w);
  return (p2.kappa() * (p1.kappa_inverse() * X))(0);
}

}  // namespace weylscope
