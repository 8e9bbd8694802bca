#include <doctest.h>

#include "helpers.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/magnetic.hpp"

using namespace weylscope;

namespace {
const RealGrid g(1, 8.0, 128);
const PhaseGrid sg = PhaseGrid::square(RealGrid(1, 6.0, 64));
}  // namespace

TEST_CASE("forms built from points are real on Lambda") {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> ud(-3.0, 3.0);
  for (const auto& name : phase_names()) {
    const Weight W = phi_weight(phase_by_name(name));
    for (int t = 0; t < 20; ++t) CHECK(LinearFormEll::from_point({ud(gen), ud(gen)}, W).real_on(W));
    CHECK_FALSE((LinearFormEll{cd(1.0, 0.3), cd(0.2, 0.0)}).real_on(W));
  }
}

TEST_CASE("magnetic translations are isometries and satisfy the modulus identity") {
  std::mt19937 gen(6);
  std::uniform_real_distribution<double> ud(-2.5, 2.5);
  const ComplexBox box = ComplexBox::square(12.0, 96);
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    const auto V0 = coherent_state(0.0, p, box).values;
    for (int t = 0; t < 20; ++t) {
      const cd y(ud(gen), ud(gen));
      const auto T = magnetic_translate(V0, LinearFormEll::from_point(y, W), W);
      for (PNorm q : {PNorm::one, PNorm::two, PNorm::inf})
        CHECK(hp_norm(T, W, q) == doctest::Approx(hp_norm(V0, W, q)).epsilon(1e-6));
      double e = 0.0;
      for (std::size_t k = 0; k < T.values.size(); ++k) {
        const cd x = box.point(k);
        e = std::max(e, std::abs(std::abs(T.values[k]) * std::exp(-W(x)) -
                                 std::exp(-W(x + y)) * std::abs(ground_state(p, x + y))));
      }
      CHECK(e < 1e-6);
    }
  }
}

TEST_CASE("grid translation agrees with exact evaluation") {
  const auto& p = phase_by_name("asym");
  const Weight W = phi_weight(p);
  const ComplexBox box = ComplexBox::square(12.0, 96);
  const auto l = LinearFormEll::from_point({1.0, -0.5}, W);
  const auto A = magnetic_translate(coherent_state(0.0, p, box).values, l, W);
  const auto B = magnetic_translate([&](cd x) { return ground_state(p, x); }, box, l);
  double e = 0.0;
  for (std::size_t k = 0; k < A.values.size(); ++k)
    e = std::max(e, std::abs(A.values[k] - B.values[k]) * std::exp(-W(box.point(k))));
  CHECK(e < 1e-8);
}

TEST_CASE("shifts reaching the box edge are rejected") {
  const auto& p = phase_by_name("radial");
  const Weight W = phi_weight(p);
  const auto V0 = coherent_state(0.0, p, default_box()).values;
  CHECK_THROWS_AS(magnetic_translate(V0, LinearFormEll{0.0, cd(20.0, 0.0)}, W), InputError);
}

TEST_CASE("coherent states have unit norm") {
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    for (cd y : {cd(0.0, 0.0), cd(1.5, -0.7), cd(-2.0, 1.0)})
      CHECK(hp_norm(coherent_state(y, p, ComplexBox::square(12.0, 96)).values, W, PNorm::two) ==
            doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("Egorov property for translations and modulations") {
  const auto u = FunctionSpec::parse("packet:0.5,-1,0.8").sample(g);
  for (const auto& name : phase_names())
    for (auto [lx, lxi] : {std::pair{0.0, 1.3}, {0.9, 0.0}, {0.6, -0.8}})
      CHECK(egorov_check(u, lx, lxi, phase_by_name(name), ComplexBox::square(12.0, 96)) < 1e-5);
}

TEST_CASE("quadrature covers the disc") {
  const auto q = RankOneQuadrature::make(5.0, 16, 2.0);
  double area = 0.0;
  for (double w : q.weights) area += w;
  CHECK(area == doctest::Approx(2.0 * kPi * 25.0).epsilon(0.05));
  for (cd y : q.nodes) CHECK(std::abs(y) <= 5.0 + 1e-12);
  CHECK(RankOneQuadrature::make(5.0, 12).phase_flag());
  CHECK_FALSE(RankOneQuadrature::make(5.0, 24).phase_flag());
}

TEST_CASE("reconstruction of a projection-type pairing") {
  // (a^w e0, e0) = (2 pi)^{-1} int a f0 = 1/2 for a = exp(-|X|^2).
  const auto& p = phase_by_name("radial");
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  const auto q = RankOneQuadrature::make(5.0, 16, chart_jacobian(p, phi_weight(p)));
  const auto r = rank_one_reconstruct(SymbolSpec::parse("gauss:0,0,1").sample(sg), e0, e0, q, p);
  CHECK(std::abs(r.value - 0.5) < 1e-4);
  CHECK(r.value.real() == doctest::Approx(0.49999492520827021).epsilon(1e-10));
  CHECK_FALSE(r.tail_flag);
}

TEST_CASE("reconstruction is linear in the symbol and sesquilinear in the functions") {
  const auto& p = phase_by_name("difference");
  const auto q = RankOneQuadrature::make(5.0, 8, chart_jacobian(p, phi_weight(p)));
  const auto a1 = SymbolSpec::parse("gauss:0,0,1").sample(sg), a2 = SymbolSpec::parse("compact:0,0,2").sample(sg);
  const auto u1 = FunctionSpec::parse("hermite:0").sample(g), u2 = FunctionSpec::parse("packet:1,0,1").sample(g);
  const cd lam(-0.4, 0.9);
  SampledSymbol a = a1;
  SampledFunction u = u1;
  for (std::size_t k = 0; k < a.values.size(); ++k) a.values[k] += lam * a2.values[k];
  for (std::size_t k = 0; k < u.values.size(); ++k) u.values[k] += lam * u2.values[k];
  auto R = [&](const SampledSymbol& s, const SampledFunction& x, const SampledFunction& y) {
    return rank_one_reconstruct(s, x, y, q, p).value;
  };
  CHECK(std::abs(R(a, u1, u2) - R(a1, u1, u2) - lam * R(a2, u1, u2)) < 1e-10);
  CHECK(std::abs(R(a1, u, u1) - R(a1, u1, u1) - lam * R(a1, u2, u1)) < 1e-10);
  CHECK(std::abs(R(a1, u1, u) - R(a1, u1, u1) - std::conj(lam) * R(a1, u1, u2)) < 1e-10);
}

TEST_CASE("effective kernel routes agree") {
  const auto& p = phase_by_name("radial");
  const auto wg = weyl_phase_grid(RealGrid(1, 8.0, 64));
  const ComplexBox box = ComplexBox::square(4.0, 24);
  const auto q = RankOneQuadrature::make(5.0, 16, chart_jacobian(p, phi_weight(p)));
  const auto a = SymbolSpec::parse("gauss:0.5,-0.3,1.2").sample(wg);
  const auto A = effective_kernel_direct(a, p, box), B = effective_kernel_rank_one(a, p, box, q);
  double diff = 0.0, mx = 0.0;
  for (long i = 0; i < A.values.rows(); ++i)
    for (long j = 0; j < A.values.cols(); ++j) {
      const cd x = box.point(i), z = box.point(j);
      if (std::max({std::abs(x.real()), std::abs(x.imag()), std::abs(z.real()), std::abs(z.imag())}) > 2.0) continue;
      diff = std::max(diff, std::abs(A.values(i, j) - B.values(i, j)));
      mx = std::max(mx, std::abs(A.values(i, j)));
    }
  CHECK(diff <= 0.02 * mx);
}

TEST_CASE("Schur chain stays below the operator estimate") {
  const auto& p = phase_by_name("radial");
  const auto q = RankOneQuadrature::make(5.0, 16, chart_jacobian(p, phi_weight(p)));
  const auto m = order_by_name("xi-5");
  for (PNorm pn : {PNorm::one, PNorm::two, PNorm::inf}) {
    const double est = schur_bounds(m, RealGrid(2, 8.0, 32), pn).p_norm_estimate;
    const auto sc = schur_chain(m, FunctionSpec::parse("hermite:1").sample(g), p, q, pn);
    CHECK(sc.H_norm <= 1.05 * est * sc.F_norm);
  }
}
