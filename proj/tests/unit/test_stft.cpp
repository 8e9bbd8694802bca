#include <doctest.h>

#include "helpers.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/lattice.hpp"
#include "weylscope/stft.hpp"

using namespace weylscope;

namespace {
const PhaseGrid sg = PhaseGrid::square(RealGrid(1, 6.0, 64));
}

TEST_CASE("windowed spectrum of f0 in closed form") {
  // F(f_T f0)(Xi) = 2 pi exp(-|T|^2/2 - |Xi|^2/8) up to a phase. Away from the edge the
  // periodic images of the window do not contribute.
  const auto t = stft(SymbolSpec::parse("f0").sample(sg));
  double e = 0.0;
  for (int i = 0; i < t.T_grid.x.points_per_axis(); ++i)
    for (int j = 0; j < t.T_grid.xi.points_per_axis(); ++j)
      for (int k = 0; k < t.Xi_grid.x.points_per_axis(); ++k)
        for (int l = 0; l < t.Xi_grid.xi.points_per_axis(); ++l) {
          const Vec T = t.T(i, j), Xi = t.Xi(k, l);
          if (T.cwiseAbs().maxCoeff() > 4.0) continue;
          const double ref = 2.0 * kPi * std::exp(-T.squaredNorm() / 2.0 - Xi.squaredNorm() / 8.0);
          e = std::max(e, std::abs(std::abs(t.at(i, j, k, l)) - ref));
        }
  CHECK(e < 1e-10);
}

TEST_CASE("norm of the constant symbol is the window mass") {
  CHECK(stilde_norm(SymbolSpec::parse("one").sample(sg), order_by_name("one")).value ==
        doctest::Approx(2.0 * kPi).epsilon(1e-12));
  const auto r = stilde_norm(SymbolSpec::parse("f0").sample(sg), order_by_name("one"));
  CHECK(r.value == doctest::Approx(2.0 * kPi).epsilon(1e-10));
  CHECK(r.T.norm() < 1e-12);
}

TEST_CASE("triangle inequality on random combinations") {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> ud(-1.5, 1.5);
  const auto m = order_by_name("xi-5");
  for (int t = 0; t < 4; ++t) {
    const auto a = SymbolSpec::parse("gauss:" + std::to_string(ud(gen)) + "," + std::to_string(ud(gen)) + ",1").sample(sg);
    const auto b = SymbolSpec::parse("wave:0,0,1.2," + std::to_string(ud(gen)) + ",0.5").sample(sg);
    SampledSymbol s = a;
    for (std::size_t k = 0; k < s.values.size(); ++k) s.values[k] += b.values[k];
    CHECK(stilde_norm(s, m).value <= stilde_norm(a, m).value + stilde_norm(b, m).value + 1e-12);
  }
}

TEST_CASE("larger order function gives a smaller norm") {
  const auto a = SymbolSpec::parse("gauss:0.5,-0.3,1.2").sample(sg);
  CHECK(stilde_norm(a, OrderFunction::bracket(1, 2.0)).value <= stilde_norm(a, order_by_name("one")).value);
}

TEST_CASE("reflection symmetry for a real even symbol") {
  const auto t = stft(SymbolSpec::parse("aniso:0,0,1.5,0.8").sample(sg));
  const int a = t.T_grid.x.points_per_axis(), b = t.T_grid.xi.points_per_axis();
  const int c = t.Xi_grid.x.points_per_axis(), d = t.Xi_grid.xi.points_per_axis();
  double e = 0.0;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < d; ++l)
          e = std::max(e, std::abs(std::abs(t.at(i, j, k, l)) -
                                   std::abs(t.at((a - i) % a, (b - j) % b, (c - k) % c, (d - l) % d))));
  CHECK(e < 1e-10);
}

TEST_CASE("symplectic Fourier transform fixes the standard Gaussian") {
  const auto b = SymbolSpec::parse("gauss:0,0,1").sample(sg);
  CHECK(wt::max_diff(symplectic_fourier(b).values, b.values) < 1e-8);
}

TEST_CASE("symplectic Fourier transform preserves the grid norm") {
  const auto b = SymbolSpec::parse("wave:0.5,0,1,0,2").sample(sg);
  const auto f = symplectic_fourier(b);
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t k = 0; k < b.values.size(); ++k) {
    n0 += std::norm(b.values[k]);
    n1 += std::norm(f.values[k]);
  }
  CHECK(std::sqrt(n1 / n0) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("mollification converges and stays bounded") {
  const auto m = order_by_name("xi-5");
  for (const char* s : {"f0", "wave:0,0,1.5,1,0", "compact:0,0,2"}) {
    CAPTURE(s);
    const auto u = SymbolSpec::parse(s).sample(sg);
    const double n0 = stilde_norm(u, m).value;
    for (int nu : {1, 4, 16}) CHECK(stilde_norm(mollify(u, MollifierSpec{nu}), m).value / n0 <= 1.0);
    CHECK(wt::max_diff(mollify(u, MollifierSpec{64}).values, u.values) < 1e-3);
  }
}

TEST_CASE("lattice norm frozen value") {
  const auto a = SymbolSpec::parse("f0").sample(sg);
  Diagnostics d;
  const auto r = lattice_stilde_norm(a, Lattice(Eigen::MatrixXd::Identity(4, 4), WindowSpec::f0(4)),
                                     order_by_name("one"), 7.0, &d);
  CHECK(r.value == doctest::Approx(2.3632718012073513).epsilon(1e-9));
  CHECK_FALSE(d.tail);
}
