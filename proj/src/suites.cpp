#include "weylscope/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "weylscope/acceptance.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/lattice.hpp"
#include "weylscope/magnetic.hpp"
#include "weylscope/symplectic.hpp"

namespace weylscope {
namespace {

const PNorm kNorms[] = {PNorm::one, PNorm::two, PNorm::inf};

double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, std::abs(a[k] - b[k]));
  return e;
}

RealGrid function_grid(const SuiteConfig& c) { return RealGrid(1, c.grid_L, c.grid_N); }
PhaseGrid symbol_grid(const SuiteConfig& c) { return PhaseGrid::square(RealGrid(1, c.symbol_L, c.symbol_N)); }

std::vector<std::string> symbols(const SuiteConfig& c) {
  auto s = corpus_symbols();
  if (c.corpus == "small") s.resize(3);
  return s;
}

std::vector<ReconstructionTriple> triples(const SuiteConfig& c) {
  auto t = reconstruction_triples();
  if (c.corpus == "small") t.resize(2);
  return t;
}

// Interior half of the grid in both directions.
double interior_diff(const SampledSymbol& a, const SampledSymbol& b) {
  double e = 0.0;
  for (int i = 0; i < a.nx(); ++i)
    for (int j = 0; j < a.nxi(); ++j)
      if (std::abs(a.grid.x.node(i)) <= 0.5 * a.grid.x.half_width() &&
          std::abs(a.grid.xi.node(j)) <= 0.5 * a.grid.xi.half_width())
        e = std::max(e, std::abs(a.at(i, j) - b.at(i, j)));
  return e;
}

}  // namespace

void run_phase_core(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "phase-core", cfg.tolerance_scale);
  const auto S = SymplecticStructure::standard(1);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2, 2);
  rec.error("J squared is minus identity", "j-matrix", (S.J * S.J + I).cwiseAbs().maxCoeff(), 0.0);
  rec.error("J transpose is minus J", "j-matrix", (S.J.transpose() + S.J).cwiseAbs().maxCoeff(), 0.0);

  std::mt19937 gen(7);
  std::normal_distribution<double> nd(0.0, 2.0);
  auto rv = [&](int d) {
    Vec v(d);
    for (int k = 0; k < d; ++k) v[k] = nd(gen);
    return v;
  };
  double anti = 0.0, bij = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Vec X = rv(2), Y = rv(2);
    anti = std::max(anti, std::abs(symplectic_form(X, Y, S) + symplectic_form(Y, X, S)));
    const Vec x = rv(2), y = rv(2);
    const auto [x2, y2] = q_inverse(q_map(x, y));
    const Vec Z = rv(4);
    bij = std::max({bij, (x2 - x).cwiseAbs().maxCoeff(), (y2 - y).cwiseAbs().maxCoeff(),
                    (q_map(q_inverse(Z).first, q_inverse(Z).second) - Z).cwiseAbs().maxCoeff()});
  }
  rec.error("symplectic form antisymmetry", "symplectic-form", anti, 0.0);
  rec.error("q map bijection", "q-map", bij, 1e-12);

  const RealGrid cert_grid(4, 3.0, 6);
  const auto reg = order_registry();
  for (const auto& e : reg) {
    const bool ok = check_certificate(e.m, cert_grid);
    rec.holds("certificate " + e.name, "order-function", ok, {{"C0", e.m.C0()}, {"N0", e.m.N0()}}, {}, 0.0);
  }
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = i + 1; j < reg.size(); ++j) {
      if (reg[i].m.table() || reg[j].m.table()) continue;
      const auto p = OrderFunction::product(reg[i].m, reg[j].m);
      const double N0 = reg[i].m.N0() + reg[j].m.N0();
      const double C0 = certify_order_function(p, cert_grid, N0).C0;
      const double bound = reg[i].m.C0() * reg[j].m.C0();
      rec.holds("product " + reg[i].name + " * " + reg[j].name, "order-function", C0 <= bound * (1 + 1e-12),
                {{"C0", C0}}, {{"C0_bound", bound}}, 0.0);
    }
  const auto lat = Lattice::gaussian_partition(2, 1.0, 1.5);
  rec.error("Gaussian partition of unity", "lattice-partition", partition_check(lat, RealGrid(2, 4.0, 32)), 1e-8);
  if (cfg.order) {
    const bool ok = check_certificate(*cfg.order, cert_grid);
    rec.holds("certificate config order", "order-function", ok, {{"C0", cfg.order->C0()}, {"N0", cfg.order->N0()}},
              {}, 0.0);
  }
}

void run_stft_suite(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "stft", cfg.tolerance_scale);
  const PhaseGrid sg = symbol_grid(cfg);
  const auto m = order_by_name("xi-5");
  const auto one = order_by_name("one");
  const auto syms = symbols(cfg);

  for (std::size_t i = 0; i + 1 < syms.size(); i += 2) {
    const auto a = SymbolSpec::parse(syms[i]).sample(sg), b = SymbolSpec::parse(syms[i + 1]).sample(sg);
    SampledSymbol s = a;
    for (std::size_t k = 0; k < s.values.size(); ++k) s.values[k] += b.values[k];
    Diagnostics d;
    const double ns = stilde_norm(s, m, 4, &d).value, na = stilde_norm(a, m).value, nb = stilde_norm(b, m).value;
    rec.holds("triangle " + syms[i] + " + " + syms[i + 1], "stft-criterion", ns <= na + nb + 1e-12,
              {{"norm_sum", ns}}, {{"sum_of_norms", na + nb}}, 1e-12, &d);
  }
  {
    const auto a = SymbolSpec::parse("gauss:0.5,-0.3,1.2").sample(sg);
    const auto big = OrderFunction::bracket(1, 2.0);
    const double n1 = stilde_norm(a, one).value, n2 = stilde_norm(a, big).value;
    rec.holds("monotone in the order function", "stft-criterion", n2 <= n1 * (1 + 1e-12), {{"norm_larger_m", n2}},
              {{"norm_smaller_m", n1}}, 0.0);
  }
  {
    const auto t = stft(SymbolSpec::parse("f0").sample(sg));
    const int a = t.T_grid.x.points_per_axis(), b = t.T_grid.xi.points_per_axis();
    const int c = t.Xi_grid.x.points_per_axis(), d = t.Xi_grid.xi.points_per_axis();
    double e = 0.0;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        for (int k = 0; k < c; ++k)
          for (int l = 0; l < d; ++l)
            e = std::max(e, std::abs(std::abs(t.at(i, j, k, l)) -
                                     std::abs(t.at((a - i) % a, (b - j) % b, (c - k) % c, (d - l) % d))));
    rec.error("reflection symmetry of a real even symbol", "stft-criterion", e, 1e-10);
  }
  {
    Diagnostics d;
    const auto a = SymbolSpec::parse("f0").sample(sg);
    const double ns = stilde_norm(a, one, 4, &d).value;
    Diagnostics dl;
    const double nl =
        lattice_stilde_norm(a, Lattice(Eigen::MatrixXd::Identity(4, 4), WindowSpec::f0(4)), one, 7.0, &dl).value;
    d.merge(dl);
    rec.holds("lattice and window norms comparable", "stilde-lattice", nl / ns >= 0.1 && nl / ns <= 10.0,
              {{"lattice_norm", nl}, {"window_norm", ns}, {"ratio", nl / ns}}, {}, 0.0, &d);
  }
  {
    const auto a = SymbolSpec::parse("wave:0,0,1.5,1,0").sample(sg);
    const double n0 = stilde_norm(a, m).value;
    double C = 0.0;
    std::vector<Quantity> q;
    for (int nu : {1, 2, 4, 8, 16}) {
      const double ratio = stilde_norm(mollify(a, MollifierSpec{nu}), m).value / n0;
      C = std::max(C, ratio);
      q.push_back({"ratio_nu" + std::to_string(nu), ratio});
    }
    q.push_back({"C", C});
    rec.holds("mollification ratios bounded", "mollification", std::isfinite(C), q, {}, 0.0);
    const double dist = max_diff(mollify(a, MollifierSpec{64}).values, a.values);
    rec.error("mollification converges at nu = 64", "density", dist, 1e-3);
  }
  {
    const auto b = SymbolSpec::parse("gauss:0.5,-0.3,1.2").sample(sg);
    Diagnostics d;
    const auto fb = symplectic_fourier(b, &d);
    double n0 = 0.0, n1 = 0.0;
    for (std::size_t k = 0; k < b.values.size(); ++k) {
      n0 += std::norm(b.values[k]);
      n1 += std::norm(fb.values[k]);
    }
    rec.close("symplectic Fourier Parseval", "symplectic-fourier", std::sqrt(n1 / n0), 1.0, 1e-8, &d);
  }
}

void run_weyl_suite(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "weyl", cfg.tolerance_scale);
  const RealGrid g = function_grid(cfg);
  const PhaseGrid pg = weyl_phase_grid(g);
  {
    Diagnostics d;
    double e = 0.0;
    const auto one = SymbolSpec::parse("one").sample(pg);
    for (const auto& u : hermite_batch(g)) e = std::max(e, max_diff(apply_weyl(one, u, &d).values, u.values));
    rec.error("identity symbol", "weyl-kernel", e, 1e-8);
  }
  {
    const auto u = FunctionSpec::parse("packet:0.3,1,1").sample(g);
    const double e = max_diff(apply_weyl(SymbolSpec::parse("xi").sample(pg), u).values, spectral_derivative(u).values);
    rec.error("momentum symbol is the spectral derivative", "weyl-kernel", e, 1e-6);
    const auto e0 = FunctionSpec::parse("e0").sample(g);
    const double eh = max_diff(apply_weyl(SymbolSpec::parse("harmonic").sample(pg), e0).values, e0.values);
    rec.error("oscillator ground eigenvalue", "weyl-kernel", eh, 1e-6);
  }
  {
    const auto f0 = SymbolSpec::parse("f0").sample(pg);
    Diagnostics d;
    const auto K = symbol_to_kernel(f0, &d);
    const auto e0 = FunctionSpec::parse("e0").sample(g);
    double ek = 0.0;
    for (int i = 0; i < g.points_per_axis(); ++i)
      for (int j = 0; j < g.points_per_axis(); ++j)
        ek = std::max(ek, std::abs(K.entries(i, j) - e0.values[i] * e0.values[j]));
    rec.error("projection kernel", "projection-symbol", ek, 1e-8, &d);
    rec.error("kernel to symbol round trip", "kernel-map", max_diff(kernel_to_symbol(K).values, f0.values), 1e-6);
  }
  {
    const auto sx = SymbolSpec::parse("x").sample(pg), sxi = SymbolSpec::parse("xi").sample(pg);
    const auto c1 = moyal_compose(sx, sxi), c2 = moyal_compose(sxi, sx);
    SampledSymbol c = c1, ic(pg, std::vector<cd>(pg.size(), kI));
    for (std::size_t k = 0; k < c.values.size(); ++k) c.values[k] -= c2.values[k];
    rec.error("commutator of x and xi", "weyl-product", interior_diff(c, ic), 1e-4);
  }
  {
    const auto a1 = SymbolSpec::parse("gauss:0,0,1").sample(pg), a2 = SymbolSpec::parse("gauss:0.5,-0.3,1.2").sample(pg);
    const auto a3 = SymbolSpec::parse("wave:0,0,1.5,1,0").sample(pg);
    const double e = interior_diff(moyal_compose(moyal_compose(a1, a2), a3), moyal_compose(a1, moyal_compose(a2, a3)));
    rec.error("associativity", "kernel-composition", e, 1e-4);
    const auto a = SymbolSpec::parse("wave:0.5,0,1,0,2").sample(pg);
    const auto K = symbol_to_kernel(a), Kc = symbol_to_kernel(a.conj());
    rec.error("conjugate symbol gives the adjoint kernel", "weyl-kernel",
              (Kc.entries - K.entries.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
  }
  {
    const auto m = order_by_name("xi-5");
    const RealGrid sgrid(2, 8.0, 32);
    double est[3];
    for (int k = 0; k < 3; ++k) est[k] = schur_bounds(m, sgrid, kNorms[k]).p_norm_estimate;
    // Interpolation bounds the p = 2 estimate from above only.
    const bool ok = est[1] <= std::sqrt(est[0] * est[2]) * (1 + 1e-12);
    rec.holds("Schur p = 2 below the p = 1, p = inf interpolant", "schur-theorem", ok,
              {{"p1", est[0]}, {"p2", est[1]}, {"pinf", est[2]}}, {}, 0.0);
    const auto sb = schur_bounds(order_by_name("one"), sgrid, PNorm::inf);
    rec.holds("Schur divergence detected for m = 1", "schur-operator", sb.row_divergent && sb.col_divergent,
              {{"doubling_change", sb.doubling_change}}, {}, 0.0);
  }
  {
    const auto one = order_by_name("one");
    const auto co = compose_order_functions(one, one, RealGrid(2, 12.0, 48));
    rec.holds("composed order divergence detected for m = 1", "composed-order", co.divergent,
              {{"doubling_change", co.doubling_change}}, {}, 0.0);
    const auto m = order_by_name("xi-5");
    const auto c5 = compose_order_functions(m, m, RealGrid(2, 12.0, 48));
    const bool ok = !c5.divergent && check_certificate(c5.m3, RealGrid(4, c5.m3.table()->grid.half_width(), 10));
    rec.holds("composed order is an order function", "composed-order", ok,
              {{"C0", c5.certificate.C0}, {"N0", c5.m3.N0()}, {"doubling_change", c5.doubling_change}}, {}, 0.0);
  }
}

void run_bargmann_suite(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "bargmann", cfg.tolerance_scale);
  const RealGrid g = function_grid(cfg);
  const ComplexBox box = default_box();
  const auto batch = hermite_batch(g);
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  for (const auto& name : cfg.phase_list()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    double eu = 0.0, e2 = 0.0;
    Diagnostics d;
    for (const auto& u : batch) {
      const auto V = bargmann_transform(u, p, box, &d);
      eu = std::max(eu, std::abs(hp_norm(V, W, PNorm::two) - u.l2_norm()));
      e2 = std::max(e2, std::abs(mod_norm(u, PNorm::two, p, box) - u.l2_norm()));
    }
    rec.error(name + " unitarity", "unitarity", eu, 1e-6, &d);
    rec.error(name + " M2 equals L2", "mp-norm", e2, 1e-6);
    const auto ev = W.levi_eigenvalues();
    rec.holds(name + " Levi form positive", "weight", ev.minCoeff() > 1e-10, {{"min_eigenvalue", ev.minCoeff()}}, {},
              1e-10);
    const auto V0 = bargmann_transform(e0, p, box);
    double eg = 0.0;
    for (std::size_t k = 0; k < V0.values.size(); ++k)
      eg = std::max(eg, std::abs(V0.values[k] - ground_state(p, box.point(k))) * std::exp(-W(box.point(k))));
    rec.error(name + " ground state closed form", "ground-state", eg, 1e-6);
    const auto P = reproducing_projection(V0, W);
    double ep = 0.0;
    for (std::size_t k = 0; k < V0.values.size(); ++k)
      ep = std::max(ep, std::abs(P.values[k] - V0.values[k]) * std::exp(-W(box.point(k))));
    rec.error(name + " reproducing projection fixes the ground state", "projection-phi", ep, 1e-6);
  }
  const auto names = cfg.phase_list();
  for (std::size_t i = 0; i + 1 < names.size(); ++i) {
    const auto &p1 = phase_by_name(names[i]), &p2 = phase_by_name(names[i + 1]);
    const Weight W2 = phi_weight(p2);
    double e = 0.0;
    for (const auto& u : batch) {
      const auto V2 = change_of_transform(bargmann_transform(u, p1, box), p1, p2);
      const auto R2 = bargmann_transform(u, p2, box);
      for (std::size_t k = 0; k < R2.values.size(); ++k) {
        const cd x = box.point(k);
        if (std::abs(x.real()) > 5.0 || std::abs(x.imag()) > 5.0) continue;
        e = std::max(e, std::abs(V2.values[k] - R2.values[k]) * std::exp(-W2(x)));
      }
    }
    rec.error("change of transform " + names[i] + " to " + names[i + 1], "change-transform", e, 1e-6);

    // Lower bound Phi2(x) + Phi1(w) - 2 Re q(x, conj w) >= c |x - chi(w)|^2.
    const auto ck = change_kernel(p1, p2);
    const Weight W1 = phi_weight(p1);
    double c = std::numeric_limits<double>::infinity();
    for (double a = -3; a <= 3; a += 0.5)
      for (double b = -3; b <= 3; b += 0.5)
        for (double s = -3; s <= 3; s += 0.75)
          for (double t = -3; t <= 3; t += 0.75) {
            const cd x(a, b), w(s, t);
            CVec v(2);
            v << x, std::conj(w);
            const cd q = 0.5 * (v.transpose() * ck.q * v)(0);
            const double d2 = std::norm(x - chi_map(p1, p2, w));
            if (d2 < 1e-6) continue;
            c = std::min(c, (W2(x) + W1(w) - 2.0 * q.real()) / d2);
          }
    rec.holds("quadratic lower bound " + names[i] + " to " + names[i + 1], "change-estimate", c > 0.0, {{"c", c}}, {},
              0.0);
  }
  {
    const auto cr = run_criterion(6);
    rec.holds(cr.title, cr.anchor_key, cr.pass, cr.values, {}, 0.1);
    const auto fr = run_criterion(7);
    rec.holds(fr.title, fr.anchor_key, fr.pass, fr.values, {}, 1e-5);
  }
}

void run_rankone_suite(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "rankone", cfg.tolerance_scale);
  const RealGrid g = function_grid(cfg);
  const PhaseGrid pg = weyl_phase_grid(g);
  const PhaseGrid sg = symbol_grid(cfg);
  const ComplexBox box = ComplexBox::square(12.0, 96);
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> ud(-2.5, 2.5);
  for (const auto& name : cfg.phase_list()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    const auto V0 = coherent_state(0.0, p, box).values;
    const double n0 = hp_norm(V0, W, PNorm::two);
    double e = 0.0, em = 0.0;
    bool real = true;
    for (int t = 0; t < 20; ++t) {
      const cd y(ud(gen), ud(gen));
      const auto l = LinearFormEll::from_point(y, W);
      real = real && l.real_on(W);
      const auto T = magnetic_translate(V0, l, W);
      e = std::max(e, std::abs(hp_norm(T, W, PNorm::two) - n0) / n0);
      for (std::size_t k = 0; k < T.values.size(); ++k) {
        const cd x = box.point(k);
        em = std::max(em, std::abs(std::abs(T.values[k]) * std::exp(-W(x)) -
                                   std::exp(-W(x + y)) * std::abs(ground_state(p, x + y))));
      }
    }
    rec.holds(name + " random forms are real", "reality", real, {}, {}, 1e-12);
    rec.error(name + " magnetic translation unitarity", "magnetic", e, 1e-6);
    rec.error(name + " modulus identity", "modulus-identity", em, 1e-6);
    const auto u = FunctionSpec::parse("hermite:2").sample(g);
    double ee = 0.0;
    for (auto [lx, lxi] : {std::pair{0.0, 1.3}, {0.0, -2.0}, {0.9, 0.0}, {-1.5, 0.0}})
      ee = std::max(ee, egorov_check(u, lx, lxi, p, box));
    rec.error(name + " Egorov discrepancy", "egorov", ee, 1e-5);
  }

  const auto& p = phase_by_name("radial");
  const double jac = chart_jacobian(p, phi_weight(p));
  const auto q12 = RankOneQuadrature::make(5.0, 12, jac), q16 = RankOneQuadrature::make(5.0, 16, jac),
             q24 = RankOneQuadrature::make(5.0, 24, jac);
  for (const auto& t : triples(cfg)) {
    const auto a = SymbolSpec::parse(t.symbol);
    const auto u = FunctionSpec::parse(t.u).sample(g), v = FunctionSpec::parse(t.v).sample(g);
    const cd exact = apply_weyl(a.sample(pg), u).inner(v);
    const auto as = a.sample(sg);
    const auto r12 = rank_one_reconstruct(as, u, v, q12, p), r16 = rank_one_reconstruct(as, u, v, q16, p),
               r24 = rank_one_reconstruct(as, u, v, q24, p);
    const double e12 = std::abs(r12.value - exact) / std::abs(exact), e16 = std::abs(r16.value - exact) / std::abs(exact),
                 e24 = std::abs(r24.value - exact) / std::abs(exact);
    Diagnostics d;
    d.tail = r16.tail_flag;
    const std::string tag = t.symbol + " " + t.u + " " + t.v;
    rec.error("reconstruction " + tag, "rank-one-theorem", e16, 0.02, &d);
    rec.holds("refinement reduces error " + tag, "rank-one-operator", e24 < e12,
              {{"error_M12", e12}, {"error_M24", e24}}, {}, 0.0);
  }
  {
    const auto q8 = RankOneQuadrature::make(5.0, 8, jac);
    const auto a1 = SymbolSpec::parse("gauss:0,0,1").sample(sg), a2 = SymbolSpec::parse("wave:0,0,1.5,1,0").sample(sg);
    const auto u1 = FunctionSpec::parse("hermite:0").sample(g), u2 = FunctionSpec::parse("hermite:1").sample(g);
    const auto v = FunctionSpec::parse("hermite:2").sample(g);
    const cd lam(0.7, -1.1);
    SampledSymbol a12 = a1;
    for (std::size_t k = 0; k < a12.values.size(); ++k) a12.values[k] += lam * a2.values[k];
    SampledFunction u12 = u1;
    for (std::size_t k = 0; k < u12.values.size(); ++k) u12.values[k] += lam * u2.values[k];
    auto val = [&](const SampledSymbol& a, const SampledFunction& uu, const SampledFunction& vv) {
      return rank_one_reconstruct(a, uu, vv, q8, p).value;
    };
    const cd base = val(a1, u1, v);
    const double ea = std::abs(val(a12, u1, v) - base - lam * val(a2, u1, v));
    const double eu = std::abs(val(a1, u12, v) - base - lam * val(a1, u2, v));
    const double ev = std::abs(val(a1, v, u12) - val(a1, v, u1) - std::conj(lam) * val(a1, v, u2));
    rec.error("linear in the symbol", "rank-one-operator", ea, 1e-10);
    rec.error("linear in u", "rank-one-operator", eu, 1e-10);
    rec.error("antilinear in v", "rank-one-operator", ev, 1e-10);
  }
  {
    const auto m = order_by_name("xi-5");
    for (PNorm pn : kNorms) {
      const double est = schur_bounds(m, RealGrid(2, 8.0, 32), pn).p_norm_estimate;
      double worst = 0.0;
      for (const auto& u : hermite_batch(g, cfg.corpus == "small" ? 2 : 5)) {
        const auto sc = schur_chain(m, u, p, q16, pn);
        worst = std::max(worst, sc.H_norm / (est * sc.F_norm));
      }
      rec.upper("Schur chain p = " + to_string(pn), "schur-chain", worst, 1.05);
    }
  }
  {
    const auto wg = weyl_phase_grid(RealGrid(1, 8.0, 64));
    const ComplexBox kb = ComplexBox::square(4.0, 24);
    const auto a = SymbolSpec::parse("gauss:0,0,1").sample(wg);
    const auto A = effective_kernel_direct(a, p, kb), B = effective_kernel_rank_one(a, p, kb, q16);
    double diff = 0.0, mx = 0.0;
    for (long i = 0; i < A.values.rows(); ++i)
      for (long j = 0; j < A.values.cols(); ++j) {
        const cd x = kb.point(i), z = kb.point(j);
        if (std::max({std::abs(x.real()), std::abs(x.imag()), std::abs(z.real()), std::abs(z.imag())}) > 2.0) continue;
        diff = std::max(diff, std::abs(A.values(i, j) - B.values(i, j)));
        mx = std::max(mx, std::abs(A.values(i, j)));
      }
    rec.error("effective kernel routes agree", "effective-kernel", diff / mx, 0.02);
  }
}

void run_theorems_suite(const SuiteConfig& cfg, Report& r) {
  Recorder rec(r, "theorems", cfg.tolerance_scale);
  for (int id : {9, 10, 11, 12}) {
    const auto c = run_criterion(id);
    rec.holds(c.title, c.anchor_key, c.pass, c.values, {}, 0.2);
  }
}

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Report r;
  r.config_echo = cfg.echo();
  for (const auto& s : suite_names()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) continue;
    if (s == "phase-core") run_phase_core(cfg, r);
    else if (s == "stft") run_stft_suite(cfg, r);
    else if (s == "weyl") run_weyl_suite(cfg, r);
    else if (s == "bargmann") run_bargmann_suite(cfg, r);
    else if (s == "rankone") run_rankone_suite(cfg, r);
    else if (s == "theorems") run_theorems_suite(cfg, r);
  }
  return r;
}

}  // namespace weylscope
