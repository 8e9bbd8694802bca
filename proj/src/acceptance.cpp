#include "weylscope/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "weylscope/bargmann.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/fft.hpp"
#include "weylscope/magnetic.hpp"
#include "weylscope/stft.hpp"
#include "weylscope/weyl.hpp"

namespace weylscope {
namespace {

CriterionResult start(int id, const char* title, const char* key) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.anchor_key = key;
  return r;
}

double seconds_now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, std::abs(a[k] - b[k]));
  return e;
}

const PNorm kNorms[] = {PNorm::one, PNorm::two, PNorm::inf};

CriterionResult weyl_exactness() {
  auto r = start(1, "Weyl calculus exactness", "weyl-kernel");
  r.budget_s = 5.0;
  const RealGrid g(1, 8.0, 128);
  const PhaseGrid pg = weyl_phase_grid(g);
  double e_id = 0.0;
  const auto one = SymbolSpec::parse("one").sample(pg);
  for (const auto& u : hermite_batch(g)) e_id = std::max(e_id, max_diff(apply_weyl(one, u).values, u.values));
  const auto u = FunctionSpec::parse("packet:0.3,1,1").sample(g);
  const double e_xi = max_diff(apply_weyl(SymbolSpec::parse("xi").sample(pg), u).values, spectral_derivative(u).values);
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  const double e_h = max_diff(apply_weyl(SymbolSpec::parse("harmonic").sample(pg), e0).values, e0.values);
  r.values = {{"identity_error", e_id}, {"derivative_error", e_xi}, {"oscillator_error", e_h}};
  r.pass = e_id <= 1e-8 && e_xi <= 1e-6 && e_h <= 1e-6;
  r.detail = fmt("identity %.2e", e_id) + fmt(", derivative %.2e", e_xi) + fmt(", oscillator %.2e", e_h);
  return r;
}

CriterionResult projection_symbol() {
  auto r = start(2, "Projection symbol", "projection-symbol");
  r.budget_s = 5.0;
  const RealGrid g(1, 8.0, 128);
  const PhaseGrid pg = weyl_phase_grid(g);
  const auto f0 = SymbolSpec::parse("f0").sample(pg);
  const auto K = symbol_to_kernel(f0);
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  double ek = 0.0;
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) ek = std::max(ek, std::abs(K.entries(i, j) - e0.values[i] * e0.values[j]));
  const double er = max_diff(kernel_to_symbol(K).values, f0.values);
  r.values = {{"kernel_error", ek}, {"round_trip_error", er}};
  r.pass = ek <= 1e-8 && er <= 1e-6;
  r.detail = fmt("kernel %.2e", ek) + fmt(", round trip %.2e", er);
  return r;
}

CriterionResult moyal_commutator() {
  auto r = start(3, "Moyal commutator", "weyl-product");
  r.budget_s = 10.0;
  const RealGrid g(1, 8.0, 128);
  const PhaseGrid pg = weyl_phase_grid(g);
  const auto sx = SymbolSpec::parse("x").sample(pg), sxi = SymbolSpec::parse("xi").sample(pg);
  const auto c1 = moyal_compose(sx, sxi), c2 = moyal_compose(sxi, sx);
  // Matrix route: multiplication by x and DFT differentiation, composed directly.
  const int N = g.points_per_axis();
  const double h = g.spacing();
  KernelMatrix X(g), D(g);
  X.entries.setZero();
  for (int j = 0; j < N; ++j) X.entries(j, j) = g.node(j) / h;
  for (int k = 0; k < N; ++k) {
    SampledFunction e(g);
    e.values[k] = 1.0;
    const auto d = spectral_derivative(e);
    for (int j = 0; j < N; ++j) D.entries(j, k) = d.values[j] / h;
  }
  KernelMatrix C(g, (X * D).entries - (D * X).entries);
  const auto oracle = kernel_to_symbol(C);
  double e_route = 0.0, e_oracle = 0.0, e_agree = 0.0;
  for (int i = 0; i < c1.nx(); ++i)
    for (int j = 0; j < c1.nxi(); ++j) {
      if (std::abs(pg.x.node(i)) > 0.5 * pg.x.half_width() || std::abs(pg.xi.node(j)) > 0.5 * pg.xi.half_width())
        continue;
      const cd v = c1.at(i, j) - c2.at(i, j);
      e_route = std::max(e_route, std::abs(v - kI));
      e_oracle = std::max(e_oracle, std::abs(oracle.at(i, j) - kI));
      e_agree = std::max(e_agree, std::abs(v - oracle.at(i, j)));
    }
  r.values = {{"kernel_route_error", e_route}, {"matrix_route_error", e_oracle}, {"route_difference", e_agree}};
  r.pass = e_route <= 1e-4 && e_oracle <= 1e-4 && e_agree <= 1e-4;
  r.detail = fmt("kernel route %.2e", e_route) + fmt(", matrix route %.2e", e_oracle) + fmt(", difference %.2e", e_agree);
  return r;
}

CriterionResult reconstruction() {
  auto r = start(4, "Rank-one reconstruction", "rank-one-theorem");
  r.budget_s = 180.0 * reconstruction_triples().size();
  const RealGrid g(1, 8.0, 128);
  const PhaseGrid pg = weyl_phase_grid(g);
  const PhaseGrid sg = PhaseGrid::square(RealGrid(1, 6.0, 64));
  const auto& phase = phase_by_name("radial");
  const double jac = chart_jacobian(phase, phi_weight(phase));
  const auto q16 = RankOneQuadrature::make(5.0, 16, jac), q24 = RankOneQuadrature::make(5.0, 24, jac);
  bool ok = true;
  int k = 0, bad = 0;
  double worst16 = 0.0, slowest = 0.0;
  for (const auto& t : reconstruction_triples()) {
    const double t0 = seconds_now();
    const auto a = SymbolSpec::parse(t.symbol);
    const auto u = FunctionSpec::parse(t.u).sample(g), v = FunctionSpec::parse(t.v).sample(g);
    const cd exact = apply_weyl(a.sample(pg), u).inner(v);
    const auto as = a.sample(sg);
    const double e16 = std::abs(rank_one_reconstruct(as, u, v, q16, phase).value - exact) / std::abs(exact);
    const double e24 = std::abs(rank_one_reconstruct(as, u, v, q24, phase).value - exact) / std::abs(exact);
    const double dt = seconds_now() - t0;
    slowest = std::max(slowest, dt);
    const bool tok = e16 <= 0.02 && e24 < e16 && dt < 180.0;
    if (!tok) ++bad;
    ok = ok && tok;
    worst16 = std::max(worst16, e16);
    r.values.push_back({"triple" + std::to_string(k) + "_M16", e16});
    r.values.push_back({"triple" + std::to_string(k) + "_M24", e24});
    ++k;
  }
  r.pass = ok;
  r.detail = fmt("worst M=16 error %.2e", worst16) + ", " + std::to_string(bad) + " triple(s) failing" +
             fmt(", slowest %.1f s", slowest);
  return r;
}

CriterionResult unitarity() {
  auto r = start(5, "Bargmann unitarity and ground state", "unitarity");
  r.budget_s = 30.0;
  const RealGrid g(1, 8.0, 128);
  const auto batch = hermite_batch(g);
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  const ComplexBox box = default_box();
  double eu = 0.0, eg = 0.0, ec = 0.0;
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    for (const auto& u : batch) eu = std::max(eu, std::abs(hp_norm(bargmann_transform(u, p, box), W, PNorm::two) - u.l2_norm()));
    const auto V = bargmann_transform(e0, p, box);
    const cd G = ground_state_exponent(p)(0, 0);
    // Ratio at the origin node, then the weighted deviation from that constant.
    std::size_t origin = 0;
    for (std::size_t k = 0; k < V.values.size(); ++k)
      if (std::abs(box.point(k)) < std::abs(box.point(origin))) origin = k;
    const cd r0 = V.values[origin] / std::exp(0.5 * kI * G * box.point(origin) * box.point(origin));
    for (std::size_t k = 0; k < V.values.size(); ++k) {
      const cd x = box.point(k);
      eg = std::max(eg, std::abs(V.values[k] - r0 * std::exp(0.5 * kI * G * x * x)) * std::exp(-W(x)));
    }
    ec = std::max(ec, std::abs(r0 - ground_state_constant(p)));
  }
  r.values = {{"unitarity_error", eu}, {"ground_ratio_error", eg}, {"closed_form_constant_error", ec}};
  r.pass = eu <= 1e-6 && eg <= 1e-6;
  r.detail = fmt("unitarity %.2e", eu) + fmt(", ratio constancy %.2e", eg);
  return r;
}

CriterionResult independence() {
  auto r = start(6, "Transform independence", "transform-independence");
  r.budget_s = 120.0;
  const RealGrid g(1, 8.0, 128);
  const auto batch = hermite_batch(g);
  const std::pair<const char*, const char*> pairs[] = {{"radial", "asym"}, {"radial", "difference"}};
  double worst = 0.0;
  for (const auto& [p1, p2] : pairs)
    for (PNorm p : kNorms) {
      double lo[2], hi[2];
      int b = 0;
      for (const auto& box : {ComplexBox::square(10.0, 40), ComplexBox::square(10.0, 80)}) {
        lo[b] = std::numeric_limits<double>::infinity();
        hi[b] = 0.0;
        for (const auto& u : batch) {
          const double q = mod_norm(u, p, phase_by_name(p2), box) / mod_norm(u, p, phase_by_name(p1), box);
          lo[b] = std::min(lo[b], q);
          hi[b] = std::max(hi[b], q);
        }
        ++b;
      }
      const double change = std::max(std::abs(lo[1] / lo[0] - 1.0), std::abs(hi[1] / hi[0] - 1.0));
      worst = std::max(worst, change);
      const std::string tag = std::string(p2) + "_" + p1 + "_p" + to_string(p);
      r.values.push_back({tag + "_lo", lo[1]});
      r.values.push_back({tag + "_hi", hi[1]});
      r.values.push_back({tag + "_change", change});
    }
  r.pass = worst <= 0.1;
  r.detail = fmt("largest bracket change under doubling %.2e", worst);
  return r;
}

CriterionResult fourier_invariance() {
  auto r = start(7, "Fourier invariance", "fourier-invariance");
  r.budget_s = 30.0;
  const RealGrid g(1, 8.0, 128);
  const auto& p = phase_by_name("radial");
  const ComplexBox box = ComplexBox::square(12.0, 96);
  double worst = 0.0;
  for (const auto& u : hermite_batch(g)) {
    const auto fu = fourier0(u);
    for (PNorm q : kNorms) {
      const double a = mod_norm(u, q, p, box), b = mod_norm(fu, q, p, box);
      worst = std::max(worst, std::abs(a - b) / a);
    }
  }
  r.values = {{"relative_error", worst}};
  r.pass = worst <= 1e-5;
  r.detail = fmt("relative error %.2e", worst);
  return r;
}

CriterionResult magnetic_identities() {
  auto r = start(8, "Magnetic translation identities", "magnetic");
  r.budget_s = 60.0;
  const RealGrid g(1, 8.0, 128);
  const ComplexBox box = ComplexBox::square(12.0, 96);
  const cd ys[] = {{1.5, -0.7}, {-2.0, 1.0}, {0.5, 2.0}};
  double em = 0.0, ei = 0.0, ee = 0.0;
  const auto u1 = FunctionSpec::parse("hermite:2").sample(g), u2 = FunctionSpec::parse("packet:0.5,-1,0.8").sample(g);
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    const auto V0 = coherent_state(0.0, p, box).values;
    for (cd y : ys) {
      const auto T = magnetic_translate(V0, LinearFormEll::from_point(y, W), W);
      for (std::size_t k = 0; k < T.values.size(); ++k) {
        const cd x = box.point(k);
        const double lhs = std::abs(T.values[k]) * std::exp(-W(x));
        const double rhs = std::exp(-W(x + y)) * std::abs(ground_state(p, x + y));
        em = std::max(em, std::abs(lhs - rhs));
      }
      for (PNorm q : kNorms) {
        const double a = hp_norm(V0, W, q), b = hp_norm(T, W, q);
        ei = std::max(ei, std::abs(a - b) / a);
      }
    }
    for (const auto* u : {&u1, &u2}) {
      ee = std::max(ee, egorov_check(*u, 0.0, 1.3, p, box));
      ee = std::max(ee, egorov_check(*u, 0.0, -2.0, p, box));
      ee = std::max(ee, egorov_check(*u, 0.9, 0.0, p, box));
      ee = std::max(ee, egorov_check(*u, -1.5, 0.0, p, box));
    }
  }
  r.values = {{"modulus_identity_error", em}, {"isometry_error", ei}, {"egorov_discrepancy", ee}};
  r.pass = em <= 1e-6 && ei <= 1e-6 && ee <= 1e-5;
  r.detail = fmt("modulus %.2e", em) + fmt(", isometry %.2e", ei) + fmt(", Egorov %.2e", ee);
  return r;
}

double operator_constant(int Nf, int Ns) {
  const RealGrid g(1, 8.0, Nf);
  const PhaseGrid pg = weyl_phase_grid(g), sg = PhaseGrid::square(RealGrid(1, 6.0, Ns));
  const auto m = order_by_name("xi-5");
  const auto& p = phase_by_name("radial");
  const ComplexBox box = default_box();
  const auto batch = hermite_batch(g);
  double est[3];
  for (int k = 0; k < 3; ++k) est[k] = schur_bounds(m, RealGrid(2, 8.0, 32), kNorms[k]).p_norm_estimate;
  std::vector<std::array<double, 3>> un(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i)
    for (int k = 0; k < 3; ++k) un[i][k] = mod_norm(batch[i], kNorms[k], p, box);
  double C = 0.0;
  for (const auto& s : corpus_symbols()) {
    const auto spec = SymbolSpec::parse(s);
    const double sn = stilde_norm(spec.sample(sg), m).value;
    const auto a = spec.sample(pg);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto au = apply_weyl(a, batch[i]);
      for (int k = 0; k < 3; ++k) C = std::max(C, mod_norm(au, kNorms[k], p, box) / (sn * est[k] * un[i][k]));
    }
  }
  return C;
}

CriterionResult operator_bound() {
  auto r = start(9, "Operator bound constant", "operator-bound");
  r.budget_s = 600.0;
  const double c1 = operator_constant(64, 64), c2 = operator_constant(96, 96);
  const double change = std::abs(c2 / c1 - 1.0);
  r.values = {{"C_coarse", c1}, {"C_fine", c2}, {"relative_change", change}};
  r.pass = std::isfinite(c1) && std::isfinite(c2) && change <= 0.2;
  r.detail = fmt("C = %.4e", c2) + fmt(" (coarse %.4e)", c1) + fmt(", change %.2e", change);
  return r;
}

CriterionResult composition_bound() {
  auto r = start(10, "Composition bound constant", "weyl-product");
  r.budget_s = 600.0;
  const auto m = order_by_name("xi-5");
  const auto co = compose_order_functions(m, m, RealGrid(2, 12.0, 48));
  const bool certified = !co.divergent && check_certificate(co.m3, RealGrid(4, co.m3.table()->grid.half_width(), 10));
  const auto syms = corpus_symbols();
  double C[2];
  int b = 0;
  for (int Nf : {64, 96}) {
    const PhaseGrid pg = weyl_phase_grid(RealGrid(1, 8.0, Nf));
    C[b] = 0.0;
    for (std::size_t i = 0; i < syms.size(); ++i) {
      const auto a1 = SymbolSpec::parse(syms[i]).sample(pg);
      const auto a2 = SymbolSpec::parse(syms[(i + 3) % syms.size()]).sample(pg);
      const double n3 = stilde_norm(moyal_compose(a1, a2), co.m3).value;
      C[b] = std::max(C[b], n3 / (stilde_norm(a1, m).value * stilde_norm(a2, m).value));
    }
    ++b;
  }
  const double change = std::abs(C[1] / C[0] - 1.0);
  r.values = {{"C_coarse", C[0]}, {"C_fine", C[1]}, {"relative_change", change}, {"m3_C0", co.certificate.C0},
              {"m3_N0", co.m3.N0()}};
  r.pass = certified && std::isfinite(C[0]) && std::isfinite(C[1]) && change <= 0.2;
  r.detail = fmt("C = %.4e", C[1]) + fmt(" (coarse %.4e)", C[0]) + fmt(", change %.2e", change) +
             (certified ? ", m3 certified" : ", m3 NOT certified");
  return r;
}

double kernel_constant(int Nf, int bN) {
  const auto m = order_by_name("xi-5");
  const PhaseGrid pg = weyl_phase_grid(RealGrid(1, 8.0, Nf));
  const auto& p = phase_by_name("radial");
  const Weight W = phi_weight(p);
  const ComplexBox box = ComplexBox::square(4.0, bN);
  std::vector<Vec> rp;
  for (cd x : box.points()) rp.push_back(real_point_of(p, W, x));
  double C = 0.0;
  for (const char* s : {"f0", "gauss:0,0,1", "gauss:0.5,-0.3,1.2", "gauss:1,0,1.5", "gauss:-0.5,0.5,0.8", "wave:0,0,1.5,1,0"}) {
    const auto a = SymbolSpec::parse(s).sample(pg);
    const double sn = stilde_norm(a, m).value;
    const auto K = effective_kernel_direct(a, p, box);
    for (long i = 0; i < K.values.rows(); ++i)
      for (long j = 0; j < K.values.cols(); ++j)
        C = std::max(C, std::abs(K.values(i, j)) / (sn * m(q_map(rp[i], rp[j]))));
  }
  return C;
}

// Off-diagonal envelope slopes of log E against log <r> on the inner and outer halves of the range.
std::pair<double, double> envelope_slopes(const char* symbol) {
  const PhaseGrid pg = weyl_phase_grid(RealGrid(1, 8.0, 64));
  const ComplexBox box = ComplexBox::square(6.0, 36);
  const auto K = effective_kernel_direct(SymbolSpec::parse(symbol).sample(pg), phase_by_name("radial"), box);
  const int nb = 30;
  const double rmax = std::sqrt(8.0) * box.re.half_width();
  std::vector<double> E(nb, 0.0);
  for (long i = 0; i < K.values.rows(); ++i)
    for (long j = 0; j < K.values.cols(); ++j) {
      const double rr = std::abs(box.point(i) - box.point(j));
      const int b = std::min(nb - 1, static_cast<int>(rr / rmax * nb));
      E[b] = std::max(E[b], std::abs(K.values(i, j)));
    }
  const double Em = *std::max_element(E.begin(), E.end());
  std::vector<double> x, y;
  for (int b = 0; b < nb; ++b) {
    const double rr = (b + 0.5) * rmax / nb;
    if (rr < 2.0 || E[b] < 1e-10 * Em) continue;
    x.push_back(std::log(std::sqrt(1.0 + rr * rr)));
    y.push_back(std::log(E[b]));
  }
  const std::size_t h = x.size() / 2;
  const std::vector<double> xi(x.begin(), x.begin() + h), yi(y.begin(), y.begin() + h);
  const std::vector<double> xo(x.begin() + h, x.end()), yo(y.begin() + h, y.end());
  return {fitted_slope(xi, yi), fitted_slope(xo, yo)};
}

CriterionResult kernel_bounds() {
  auto r = start(11, "Effective-kernel bounds", "effective-bound");
  r.budget_s = 300.0;
  const double c1 = kernel_constant(64, 24), c2 = kernel_constant(96, 32);
  const double change = std::abs(c2 / c1 - 1.0);
  bool slopes_ok = true;
  r.values = {{"C_coarse", c1}, {"C_fine", c2}, {"relative_change", change}};
  std::string sd;
  for (const char* s : {"compact:0,0,1", "compact:0,0,2"}) {
    const auto [inner, outer] = envelope_slopes(s);
    slopes_ok = slopes_ok && inner < 0.0 && outer < inner;
    r.values.push_back({std::string(s) + "_inner_slope", inner});
    r.values.push_back({std::string(s) + "_outer_slope", outer});
    sd += fmt(", slopes %.2f", inner) + fmt("/%.2f", outer);
  }
  r.pass = std::isfinite(c1) && change <= 0.2 && slopes_ok;
  r.detail = fmt("C = %.4e", c2) + fmt(", change %.2e", change) + sd;
  return r;
}

CriterionResult density() {
  auto r = start(12, "Mollification density", "density");
  r.budget_s = 120.0;
  const PhaseGrid sg = PhaseGrid::square(RealGrid(1, 6.0, 64));
  double C = 0.0, d64 = 0.0;
  for (const char* mn : {"one", "xi-5"}) {
    const auto m = order_by_name(mn);
    for (const char* s : {"f0", "gauss:0.5,-0.3,1.2", "wave:0,0,1.5,1,0", "compact:0,0,2"}) {
      const auto u = SymbolSpec::parse(s).sample(sg);
      const double n0 = stilde_norm(u, m).value;
      for (int nu : {1, 2, 4, 8, 16}) C = std::max(C, stilde_norm(mollify(u, MollifierSpec{nu}), m).value / n0);
      d64 = std::max(d64, max_diff(mollify(u, MollifierSpec{64}).values, u.values));
    }
  }
  r.values = {{"ratio_bound", C}, {"sup_distance_nu64", d64}};
  r.pass = std::isfinite(C) && d64 <= 1e-3;
  r.detail = fmt("ratio bound %.4f", C) + fmt(", sup distance at nu = 64 %.2e", d64);
  return r;
}

}  // namespace

std::vector<std::string> corpus_symbols() {
  return {"f0",
          "gauss:0,0,1",
          "gauss:0.5,-0.3,1.2",
          "gauss:1,0,1.5",
          "gauss:-0.5,0.5,0.8",
          "aniso:0,0,2,0.7",
          "wave:0,0,1.5,1,0",
          "wave:0.5,0,1,0,2",
          "compact:0,0,2",
          "compact:0.5,-0.5,1.5"};
}

std::vector<ReconstructionTriple> reconstruction_triples() {
  return {{"gauss:0,0,1", "hermite:0", "hermite:0"},     {"gauss:0.5,-0.3,1.2", "hermite:1", "hermite:1"},
          {"gauss:0,0.5,0.8", "hermite:2", "hermite:0"}, {"gauss:1,0,1.5", "hermite:3", "hermite:1"},
          {"gauss:-0.5,0.5,1", "hermite:4", "hermite:2"}, {"gauss:0.3,0.2,2", "hermite:2", "hermite:2"}};
}

SampledFunction spectral_derivative(const SampledFunction& u) {
  const int N = u.grid.points_per_axis();
  std::vector<cd> d = u.values;
  fft::dft(d, {N}, -1);
  for (int k = 0; k < N; ++k) {
    const int kk = k < N / 2 ? k : k - N;
    const double w = 2.0 * kPi * kk / (N * u.grid.spacing());
    d[k] *= (2 * k == N) ? 0.0 : w / static_cast<double>(N);  // -i (i w) = w
  }
  fft::dft(d, {N}, 1);
  return SampledFunction(u.grid, d);
}

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}; }

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult run_criterion(int id) {
  const double t0 = seconds_now();
  CriterionResult r;
  switch (id) {
    case 1: r = weyl_exactness(); break;
    case 2: r = projection_symbol(); break;
    case 3: r = moyal_commutator(); break;
    case 4: r = reconstruction(); break;
    case 5: r = unitarity(); break;
    case 6: r = independence(); break;
    case 7: r = fourier_invariance(); break;
    case 8: r = magnetic_identities(); break;
    case 9: r = operator_bound(); break;
    case 10: r = composition_bound(); break;
    case 11: r = kernel_bounds(); break;
    case 12: r = density(); break;
    default: throw InputError("unknown criterion " + std::to_string(id));
  }
  r.runtime_s = seconds_now() - t0;
  if (r.runtime_s > r.budget_s) {
    r.pass = false;
    r.detail += fmt(", over the %.0f s budget", r.budget_s);
  }
  return r;
}

}  // namespace weylscope
