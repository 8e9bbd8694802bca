#include <doctest.h>

#include "helpers.hpp"
#include "weylscope/grid.hpp"
#include "weylscope/lattice.hpp"
#include "weylscope/order.hpp"
#include "weylscope/symplectic.hpp"

using namespace weylscope;

TEST_CASE("grid nodes exclude the right endpoint") {
  const RealGrid g(1, 8.0, 128);
  CHECK(g.node(0) == -8.0);
  CHECK(g.spacing() == doctest::Approx(0.125));
  CHECK(g.node(127) == doctest::Approx(7.875));
  CHECK(g.quad_weight() == doctest::Approx(0.125));
  CHECK(g.dual().spacing() == doctest::Approx(kPi / 8.0));
}

TEST_CASE("degenerate grids are rejected at construction") {
  CHECK_THROWS_AS(RealGrid(1, 8.0, 127), InputError);
  CHECK_THROWS_AS(RealGrid(1, 8.0, 0), InputError);
  CHECK_THROWS_AS(RealGrid(1, -1.0, 16), InputError);
}

TEST_CASE("J is a symplectic matrix") {
  for (int n : {1, 2}) {
    const auto S = SymplecticStructure::standard(n);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    CHECK((S.J * S.J + I).cwiseAbs().maxCoeff() == 0.0);
    CHECK((S.J.transpose() + S.J).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("sigma is antisymmetric and matches (JX).Y") {
  const auto S = SymplecticStructure::standard(1);
  std::mt19937 gen(1);
  for (int t = 0; t < 500; ++t) {
    const Vec X = wt::random_vec(gen, 2), Y = wt::random_vec(gen, 2);
    CHECK(symplectic_form(X, Y, S) == -symplectic_form(Y, X, S));
    // (JX).Y with J = [[0, 1], [-1, 0]]
    CHECK(symplectic_form(X, Y, S) == doctest::Approx(X[1] * Y[0] - X[0] * Y[1]));
  }
}

TEST_CASE("q map is a bijection") {
  std::mt19937 gen(2);
  for (int t = 0; t < 500; ++t) {
    const Vec x = wt::random_vec(gen, 2), y = wt::random_vec(gen, 2);
    const auto [x2, y2] = q_inverse(q_map(x, y));
    CHECK((x2 - x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((y2 - y).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("q map midpoint and rotated difference") {
  Vec x(2), y(2);
  x << 1.0, 2.0;
  y << 3.0, -1.0;
  const Vec q = q_map(x, y);
  // ((x + y)/2, J^{-1}(y - x)) with J^{-1}(a, b) = (-b, a)
  CHECK(q[0] == doctest::Approx(2.0));
  CHECK(q[1] == doctest::Approx(0.5));
  CHECK(q[2] == doctest::Approx(3.0));
  CHECK(q[3] == doctest::Approx(2.0));
}

TEST_CASE("every registered order function passes its certificate") {
  for (const auto& e : order_registry()) {
    CAPTURE(e.name);
    CHECK(check_certificate(e.m, RealGrid(4, 3.0, 6)));
  }
}

TEST_CASE("products of order functions are order functions") {
  const auto reg = order_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = i; j < reg.size(); ++j) {
      if (reg[i].m.table() || reg[j].m.table()) continue;
      CAPTURE(reg[i].name);
      CAPTURE(reg[j].name);
      const auto p = OrderFunction::product(reg[i].m, reg[j].m);
      const double C0 = certify_order_function(p, RealGrid(4, 3.0, 6), reg[i].m.N0() + reg[j].m.N0()).C0;
      CHECK(C0 <= reg[i].m.C0() * reg[j].m.C0() * (1 + 1e-12));
    }
}

TEST_CASE("bracket certificate frozen value") {
  // Peetre constant 2^{|s|/2} = 2 bounds the empirical value.
  const auto c = certify_order_function(order_by_name("bracket-2"), RealGrid(4, 3.0, 10), 2.0);
  CHECK(c.C0 == doctest::Approx(1.3192041522491356).epsilon(1e-12));
  CHECK(c.C0 <= 2.0);
}

TEST_CASE("non-positive constant weights are rejected") {
  CHECK_THROWS_AS(OrderFunction::constant(1, 0.0), InputError);
}

TEST_CASE("Gaussian partition of unity against the Poisson estimate") {
  // Deviation of sum_gamma chi(X - gamma) from 1 is dominated by 2 dim exp(-pi^2 s^2) for step 1.
  const RealGrid g(2, 4.0, 32);
  const double d1 = partition_check(Lattice::gaussian_partition(2, 1.0, 1.0), g);
  CHECK(d1 == doctest::Approx(4.0 * std::exp(-kPi * kPi)).epsilon(0.05));
  CHECK(partition_check(Lattice::gaussian_partition(2, 1.0, 1.5), g) < 1e-8);
}

TEST_CASE("japanese bracket") {
  Vec X(4);
  X << 1.0, 2.0, 0.0, -2.0;
  CHECK(japanese_bracket(X) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("config order functions from family and params") {
  const auto m = OrderFunction::from_spec("bracket", {1.0}, 1, 2.0, 1.0);
  Vec X = Vec::Zero(4);
  X[0] = 3.0;
  CHECK(m(X) == doctest::Approx(std::sqrt(10.0)));
  CHECK_THROWS_AS(OrderFunction::from_spec("lambda", {}, 1, 1.0, 0.0), InputError);
}
