#include <doctest.h>

#include "helpers.hpp"
#include "weylscope/bargmann.hpp"
#include "weylscope/catalog.hpp"

using namespace weylscope;

namespace {
const RealGrid g(1, 8.0, 128);
}

TEST_CASE("calibrated constants frozen values") {
  CHECK(phase_by_name("radial").c_phi == doctest::Approx(0.29965573757661107).epsilon(1e-10));
  CHECK(phase_by_name("difference").c_phi == doctest::Approx(0.50395887107676107).epsilon(1e-10));
  CHECK(phase_by_name("asym").c_phi == doctest::Approx(0.31284977474534936).epsilon(1e-10));
  // Radial phase: reproducing constant 1/(2 pi) and ground constant (2 pi)^{-1/2}.
  CHECK(phi_weight(phase_by_name("radial")).a_phi == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-10));
  CHECK(std::abs(ground_state_constant(phase_by_name("radial")) - 1.0 / std::sqrt(2.0 * kPi)) < 1e-10);
}

TEST_CASE("transform against an independent fine quadrature") {
  const RealGrid fine(1, 12.0, 1024);
  const auto u = FunctionSpec::parse("hermite:3");
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const std::vector<cd> pts = {{0.3, -0.2}, {1.5, 1.0}, {-2.0, 0.5}};
    const auto V = transform_at(u.sample(g), p, pts);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      cd ref = 0.0;
      for (int j = 0; j < fine.points_per_axis(); ++j) ref += std::exp(kI * p(pts[k], fine.node(j))) * u(fine.node(j));
      ref *= p.c_phi * fine.spacing();
      CAPTURE(name);
      CHECK(std::abs(V[k] - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("unitarity and M2 = L2 on the Hermite batch") {
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    for (const auto& u : hermite_batch(g)) {
      CAPTURE(name);
      CHECK(hp_norm(bargmann_transform(u, p, default_box()), W, PNorm::two) == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(mod_norm(u, PNorm::two, p, default_box()) == doctest::Approx(u.l2_norm()).epsilon(1e-6));
    }
  }
}

TEST_CASE("Levi forms are positive definite") {
  for (const auto& name : phase_names()) CHECK(phi_weight(phase_by_name(name)).levi_eigenvalues().minCoeff() > 1e-10);
}

TEST_CASE("ground state of the radial phase in closed form") {
  // |T e0| e^{-Phi} = (2 pi)^{-1/2} exp(-|x|^2/4), so the M^1 and M^inf norms follow.
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  const auto& p = phase_by_name("radial");
  CHECK(mod_norm(e0, PNorm::one, p, default_box()) == doctest::Approx(2.0 * std::sqrt(2.0 * kPi)).epsilon(1e-8));
  CHECK(mod_norm(e0, PNorm::inf, p, default_box()) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-8));
  const auto V = bargmann_transform(e0, p, default_box());
  const Weight W = phi_weight(p);
  double e = 0.0;
  for (std::size_t k = 0; k < V.values.size(); ++k) {
    const cd x = V.box.point(k);
    e = std::max(e, std::abs(std::abs(V.values[k]) * std::exp(-W(x)) - std::exp(-std::norm(x) / 4.0) / std::sqrt(2.0 * kPi)));
  }
  CHECK(e < 1e-12);
}

TEST_CASE("Fourier transform leaves modulation norms unchanged") {
  const auto& p = phase_by_name("radial");
  const ComplexBox box = ComplexBox::square(12.0, 96);
  for (const auto& u : hermite_batch(g))
    for (PNorm q : {PNorm::one, PNorm::two, PNorm::inf})
      CHECK(mod_norm(fourier0(u), q, p, box) == doctest::Approx(mod_norm(u, q, p, box)).epsilon(1e-5));
}

TEST_CASE("Fourier transform of the ground state") {
  const auto e0 = FunctionSpec::parse("e0").sample(g);
  CHECK(wt::max_diff(fourier0(e0).values, e0.values) < 1e-12);
}

TEST_CASE("reproducing projection fixes transformed functions") {
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const Weight W = phi_weight(p);
    const auto V = bargmann_transform(FunctionSpec::parse("hermite:1").sample(g), p, default_box());
    const auto P = reproducing_projection(V, W);
    double e = 0.0;
    for (std::size_t k = 0; k < V.values.size(); ++k)
      e = std::max(e, std::abs(P.values[k] - V.values[k]) * std::exp(-W(V.box.point(k))));
    CAPTURE(name);
    CHECK(e < 1e-6);
  }
}

TEST_CASE("adjoint inverts the transform") {
  const auto u = FunctionSpec::parse("packet:0.5,-1,0.8").sample(g);
  for (const auto& name : phase_names()) {
    const auto& p = phase_by_name(name);
    const auto back = bargmann_adjoint(bargmann_transform(u, p, ComplexBox::square(12.0, 96)), p, g);
    CAPTURE(name);
    CHECK(wt::max_diff(back.values, u.values) < 1e-6);
  }
}

TEST_CASE("change of transform maps one transform to another") {
  const auto u = FunctionSpec::parse("hermite:2").sample(g);
  const auto& p1 = phase_by_name("radial");
  const auto& p2 = phase_by_name("asym");
  const auto V2 = change_of_transform(bargmann_transform(u, p1, default_box()), p1, p2);
  const auto R2 = bargmann_transform(u, p2, default_box());
  const Weight W2 = phi_weight(p2);
  double e = 0.0;
  for (std::size_t k = 0; k < R2.values.size(); ++k) {
    const cd x = R2.box.point(k);
    if (std::abs(x.real()) <= 5.0 && std::abs(x.imag()) <= 5.0)
      e = std::max(e, std::abs(V2.values[k] - R2.values[k]) * std::exp(-W2(x)));
  }
  CHECK(e < 1e-6);
}

TEST_CASE("critical value of a one-variable quadratic form") {
  // f = w^2/2 + 2 w y + 3 y^2/2: y = -2w/3, value (1 - 4/3) w^2/2.
  QuadForm f{CMat::Constant(1, 1, 1.0), CMat::Constant(1, 1, 2.0), CMat::Constant(1, 1, 3.0)};
  const auto cv = critical_value(f);
  CHECK(std::abs(cv.hessian(0, 0) - cd(-1.0 / 3.0)) < 1e-14);
  CHECK(std::abs(cv.point_map(0, 0) - cd(-2.0 / 3.0)) < 1e-14);
}
