#include <doctest.h>

#include "helpers.hpp"
#include "weylscope/acceptance.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/weyl.hpp"

using namespace weylscope;

namespace {
const RealGrid g(1, 8.0, 128);
const PhaseGrid pg = weyl_phase_grid(g);

double interior(const SampledSymbol& a, const SampledSymbol& b) {
  double e = 0.0;
  for (int i = 0; i < a.nx(); ++i)
    for (int j = 0; j < a.nxi(); ++j)
      if (std::abs(a.grid.x.node(i)) <= 0.5 * a.grid.x.half_width() &&
          std::abs(a.grid.xi.node(j)) <= 0.5 * a.grid.xi.half_width())
        e = std::max(e, std::abs(a.at(i, j) - b.at(i, j)));
  return e;
}
}  // namespace

TEST_CASE("phase grid paired with the function grid") {
  CHECK(pg.x.points_per_axis() == 256);
  CHECK(pg.x.half_width() == 8.0);
  CHECK(pg.xi.spacing() == doctest::Approx(kPi / 16.0));
  CHECK(function_grid_of(pg).points_per_axis() == 128);
  CHECK_THROWS_AS(function_grid_of(PhaseGrid::square(RealGrid(1, 6.0, 64))), InputError);
}

TEST_CASE("kernel of a Gaussian symbol in closed form") {
  const double x0 = 0.4, xi0 = -0.7, s = 1.3;
  const auto K = symbol_to_kernel(SymbolSpec::parse("gauss:0.4,-0.7,1.3").sample(pg));
  double e = 0.0;
  for (int i = 0; i < 128; ++i)
    for (int j = 0; j < 128; ++j) {
      const double x = g.node(i), y = g.node(j), c = 0.5 * (x + y) - x0;
      const cd ref = s * std::sqrt(kPi) / (2.0 * kPi) * std::exp(-c * c / (s * s) - s * s * (x - y) * (x - y) / 4.0) *
                     std::exp(kI * xi0 * (x - y));
      e = std::max(e, std::abs(K.entries(i, j) - ref));
    }
  CHECK(e < 1e-10);
}

TEST_CASE("projection symbol and round trip") {
  const auto f0 = SymbolSpec::parse("f0").sample(pg);
  const auto K = symbol_to_kernel(f0);
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  for (int i = 0; i < 128; i += 7)
    for (int j = 0; j < 128; j += 5) CHECK(std::abs(K.entries(i, j) - e0.values[i] * e0.values[j]) < 1e-8);
  CHECK(wt::max_diff(kernel_to_symbol(K).values, f0.values) < 1e-6);
}

TEST_CASE("harmonic oscillator eigenvalues on the Hermite batch") {
  const auto h = SymbolSpec::parse("harmonic").sample(pg);
  int k = 0;
  for (const auto& u : hermite_batch(g)) {
    const auto au = apply_weyl(h, u);
    double e = 0.0;
    for (int i = 0; i < 128; ++i)
      if (std::abs(g.node(i)) <= 4.0) e = std::max(e, std::abs(au.values[i] - (2.0 * k + 1.0) * u.values[i]));
    CAPTURE(k);
    CHECK(e < 1e-6);
    ++k;
  }
}

TEST_CASE("momentum symbol differentiates") {
  const auto u = FunctionSpec::parse("packet:-0.5,2,0.9").sample(g);
  CHECK(wt::max_diff(apply_weyl(SymbolSpec::parse("xi").sample(pg), u).values, spectral_derivative(u).values) < 1e-6);
}

TEST_CASE("commutator of x and xi is i") {
  const auto sx = SymbolSpec::parse("x").sample(pg), sxi = SymbolSpec::parse("xi").sample(pg);
  SampledSymbol c = moyal_compose(sx, sxi);
  const auto c2 = moyal_compose(sxi, sx);
  for (std::size_t k = 0; k < c.values.size(); ++k) c.values[k] -= c2.values[k];
  CHECK(interior(c, SampledSymbol(pg, std::vector<cd>(pg.size(), kI))) < 1e-4);
}

TEST_CASE("Weyl product is associative") {
  const auto a1 = SymbolSpec::parse("gauss:0,0,1").sample(pg), a2 = SymbolSpec::parse("wave:0.5,0,1,0,2").sample(pg);
  const auto a3 = SymbolSpec::parse("aniso:0,0,2,0.7").sample(pg);
  CHECK(interior(moyal_compose(moyal_compose(a1, a2), a3), moyal_compose(a1, moyal_compose(a2, a3))) < 1e-4);
}

TEST_CASE("product of Gaussians composes like operators") {
  const auto a1 = SymbolSpec::parse("gauss:0.3,0,1").sample(pg), a2 = SymbolSpec::parse("gauss:0,-0.4,1.4").sample(pg);
  const auto u = FunctionSpec::parse("hermite:1").sample(g);
  const auto lhs = apply_weyl(moyal_compose(a1, a2), u);
  const auto rhs = apply_weyl(a1, apply_weyl(a2, u));
  CHECK(wt::max_diff(lhs.values, rhs.values) < 1e-8);
}

TEST_CASE("conjugate symbol gives the adjoint kernel") {
  const auto a = SymbolSpec::parse("wave:0.5,0,1,0,2").sample(pg);
  const auto K = symbol_to_kernel(a), Kc = symbol_to_kernel(a.conj());
  CHECK((Kc.entries - K.entries.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("Schur estimates frozen values") {
  const auto m = order_by_name("xi-5");
  const RealGrid sg(2, 8.0, 32);
  const auto b1 = schur_bounds(m, sg, PNorm::one), b2 = schur_bounds(m, sg, PNorm::two);
  CHECK(b1.p_norm_estimate == doctest::Approx(2.091773975597148).epsilon(1e-9));
  CHECK(b2.p_norm_estimate == doctest::Approx(2.0383681401984264).epsilon(1e-9));
  CHECK(b2.p_norm_estimate <= std::sqrt(b1.p_norm_estimate * schur_bounds(m, sg, PNorm::inf).p_norm_estimate));
  CHECK_FALSE(b1.row_divergent);
}

TEST_CASE("constant weight fails the Schur test") {
  const auto b = schur_bounds(order_by_name("one"), RealGrid(2, 8.0, 32), PNorm::inf);
  CHECK(b.row_divergent);
  CHECK(b.col_divergent);
}

TEST_CASE("composed order functions") {
  const auto one = order_by_name("one");
  CHECK(compose_order_functions(one, one, RealGrid(2, 12.0, 48)).divergent);
  const auto m = order_by_name("xi-5");
  const auto co = compose_order_functions(m, m, RealGrid(2, 12.0, 48));
  REQUIRE_FALSE(co.divergent);
  CHECK(co.m3.N0() == doctest::Approx(10.0));
  CHECK(check_certificate(co.m3, RealGrid(4, co.m3.table()->grid.half_width(), 10)));
}
