#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dtheta/contact.hpp"
#include "dtheta/frame_calculus.hpp"
#include "dtheta/s3_geometry.hpp"
#include "test_support.hpp"

using namespace dtheta;

namespace {
const Model model;
}

TEST_CASE("PointS3 rejects non-unit quaternions") {
  CHECK_THROWS_AS(PointS3(Quat{1.0, 1e-5, 0, 0}), std::domain_error);
  CHECK_NOTHROW(PointS3(Quat{1.0, 0, 0, 0}));
  CHECK_THROWS_AS(frame_at(model, Quat{2.0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("frame at the identity") {
  const Frame f = frame_at(model, Quat{1, 0, 0, 0});
  // ξ is the Hopf direction q·i; it has unit length in g.
  CHECK(f.e[0].v.w == doctest::Approx(0.0));
  CHECK(f.e[0].v.x > 0.0);
  CHECK(f.e[0].v.y == doctest::Approx(0.0));
  CHECK(f.e[0].v.z == doctest::Approx(0.0));
  const Components c = model.components(f.e[0]);
  CHECK(model.g(c, c) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("frame is g-orthonormal and E spans Ker theta") {
  for (const PointS3& p : random_points(50, 3)) {
    const Frame f = frame_at(model, p);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(f.e[i].v.dot(p.q())) < 1e-12);
      for (int j = 0; j < 3; ++j) {
        const double gij = model.g(model.components(f.e[i]), model.components(f.e[j]));
        CHECK(std::abs(gij - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
    CHECK(std::abs(model.theta(model.components(f.e[1]))) < 1e-15);
    CHECK(std::abs(model.theta(model.components(f.e[2]))) < 1e-15);
  }
}

TEST_CASE("frame brackets by finite differences") {
  SUBCASE("unit-speed quaternion frame: [e_i, e_j] = 2 eps_ijk e_k") {
    const Model round(Conventions::calibrated(), {1.0, 1.0, 1.0});
    for (const PointS3& p : random_points(10, 5)) {
      const Components b12 = frame_bracket_fd(round, p, 0, 1);
      const Components b23 = frame_bracket_fd(round, p, 1, 2);
      const Components b31 = frame_bracket_fd(round, p, 2, 0);
      CHECK(max_abs(b12 - Components{0, 0, 2}) < 1e-10);
      CHECK(max_abs(b23 - Components{2, 0, 0}) < 1e-10);
      CHECK(max_abs(b31 - Components{0, 2, 0}) < 1e-10);
    }
  }
  SUBCASE("model frame matches its structure constants") {
    for (const PointS3& p : random_points(10, 6)) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const Components b = frame_bracket_fd(model, p, i, j);
          for (int k = 0; k < 3; ++k) CHECK(std::abs(b[k] - model.structure(i, j, k)) < 1e-10);
        }
    }
    CHECK(model.structure(1, 2, 0) == doctest::Approx(1.0));
  }
}

TEST_CASE("contact_data") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  for (const PointS3& p : random_points(20, 8)) {
    const Frame fr = frame_at(model, p);
    const TangentVector X = model.vector(p, {g(rng), g(rng), g(rng)});
    const TangentVector Y = model.vector(p, {g(rng), g(rng), g(rng)});
    CHECK(std::abs(contact_data(model, fr.e[0], Y).dtheta_XY) < 1e-14);
    CHECK(std::abs(contact_data(model, X, X).dtheta_XY) < 1e-14);
    Components u{0.0, g(rng), g(rng)};
    u = (1.0 / std::sqrt(model.g(u, u))) * u;
    const TangentVector U = model.vector(p, u);
    const ContactData cd = contact_data(model, U, U);
    CHECK(contact_data(model, cd.phi_X, U).dtheta_XY == doctest::Approx(1.0).epsilon(1e-13));
    // bilinearity in X
    const double a = contact_data(model, X, Y).dtheta_XY;
    const TangentVector X2{p, X.v * 3.0};
    CHECK(contact_data(model, X2, Y).dtheta_XY == doctest::Approx(3.0 * a));
  }
  const auto pts = random_points(2, 9);
  const TangentVector A = frame_at(model, pts[0]).e[1];
  const TangentVector B = frame_at(model, pts[1]).e[1];
  CHECK_THROWS_AS(contact_data(model, A, B), std::domain_error);
}

TEST_CASE("axiom suite passes at 1000 random points") {
  const AxiomReport rep = verify_axioms(model, random_points(1000, 1), 1e-10);
  REQUIRE(rep.properties.size() == 14);
  for (const auto& r : rep.properties) {
    INFO("property " << r.id << " residual " << r.max_residual);
    CHECK(r.pass);
  }
}

TEST_CASE("axiom suite fails for the half d-convention") {
  const Model half(Conventions{0.5, -1, 1});
  const AxiomReport rep = verify_axioms(half, random_points(20, 1), 1e-10);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.properties[2].pass);  // dθ(X,Y) = g(X, φY)
}

TEST_CASE("calibration singles out one convention") {
  const Calibration cal = calibrate_conventions(random_points(50, 2), 1e-10);
  CHECK(cal.chosen == Conventions::calibrated());
  CHECK(cal.candidates.size() == 8);
  int accepted = 0;
  for (const auto& c : cal.candidates) accepted += c.accepted;
  CHECK(accepted == 1);
}

TEST_CASE("hopf projection and lifts") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    Vec3 x{g(rng), g(rng), g(rng)};
    x = x * (1.0 / x.norm());
    const Vec3 y = hopf(lift(x));
    CHECK((y - x).norm() < 1e-14);
  }
  for (const Vec3 x : {Vec3{-1, 0, 0}, Vec3{-1, 1e-9, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}}) {
    const Vec3 xn = x * (1.0 / x.norm());
    CHECK((hopf(lift(xn)) - xn).norm() < 1e-14);
  }
}

TEST_CASE("frame_derivative") {
  std::mt19937_64 rng(21);
  const SpectralFunction f = testing::random_function(rng, 4, 4);
  const ScalarField F = as_field(f);
  for (const PointS3& p : random_points(20, 12)) {
    CHECK(std::abs(frame_derivative(model, F, 0, p)) < 1e-10);
    const auto c = [](const PointS3&) { return 2.5; };
    for (int i = 0; i < 3; ++i) CHECK(std::abs(frame_derivative(model, c, i, p)) < 1e-14);
  }
  // Two differentiation routes agree on a degree-1 pullback.
  const SpectralFunction u = SpectralFunction::mode(1, 1, 1);
  const ScalarField U = as_field(u);
  for (const PointS3& p : random_points(50, 13)) {
    const Components spectral = frame_gradient(model, u, p);
    for (int i = 1; i < 3; ++i) CHECK(std::abs(frame_derivative(model, U, i, p) - spectral[i]) < 1e-8);
  }
}

TEST_CASE("contact_field") {
  std::mt19937_64 rng(31);
  const auto pts = random_points(40, 14);
  const FrameField one = contact_field(model, SpectralFunction::constant(4, 1.0));
  const FrameField zero = contact_field(model, SpectralFunction(4));
  const SpectralFunction f = testing::random_function(rng, 6, 6);
  const SpectralFunction h = testing::random_function(rng, 6, 6);
  const FrameField Xf = contact_field(model, f);
  const FrameField Xh = contact_field(model, h);
  const FrameField Xc = contact_field(model, 2.0 * f - 0.5 * h);
  for (const PointS3& p : pts) {
    CHECK(max_abs(one(p) - Components{1, 0, 0}) < 1e-13);
    CHECK(max_abs(zero(p)) == 0.0);
    CHECK(std::abs(model.theta(Xf(p)) - pullback(f, p)) < 1e-10);
    CHECK(max_abs(Xc(p) - (2.0 * Xf(p) - 0.5 * Xh(p))) < 1e-12);
  }
}

TEST_CASE("contact fields preserve theta: L_X theta = d(theta(X)) + i_X dtheta = 0") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g(0.0, 1.0);
  const SpectralFunction f = testing::random_function(rng, 5, 5);
  const FrameField Xf = contact_field(model, f);
  const ScalarField F = as_field(f);
  for (const PointS3& p : random_points(50, 15)) {
    const Components Y{g(rng), g(rng), g(rng)};
    const Components df = gradient_at(model, F, p);
    const double residual = model.g(df, Y) + model.dtheta(Xf(p), Y);
    CHECK(std::abs(residual) < 1e-8);
  }
}

TEST_CASE("K-contact commutation of xi with grad f and phi grad f") {
  std::mt19937_64 rng(51);
  const SpectralFunction f = testing::random_function(rng, 5, 5);
  const FrameField xi = [](const PointS3&) { return Components{1, 0, 0}; };
  const FrameField grad = gradient_field(model, f);
  const FrameField pgrad = phi_gradient_field(model, f);
  for (const PointS3& p : random_points(30, 16)) {
    CHECK(max_abs(lie_bracket_at(model, xi, grad, p)) < 1e-8);
    CHECK(max_abs(lie_bracket_at(model, xi, pgrad, p)) < 1e-8);
  }
}

TEST_CASE("QuadratureS3") {
  const QuadratureS3 q = QuadratureS3::hopf_product(model, Grid::exact_for(6), 8);
  double wsum = 0.0;
  for (double w : q.weights) {
    CHECK(w > 0.0);
    wsum += w;
  }
  CHECK(wsum == doctest::Approx(model.volume()).epsilon(1e-13));
  CHECK(model.volume() == doctest::Approx(std::numbers::pi * std::numbers::pi));
  // Mean-zero functions that are not ξ-invariant.
  CHECK(std::abs(q.integrate([](const PointS3& p) { return p.q().w * p.q().x; })) < 1e-10);
  CHECK(std::abs(q.integrate([](const PointS3& p) { return p.q().y; })) < 1e-10);
  CHECK(std::abs(q.integrate([](const PointS3& p) { return p.q().w * p.q().w - 0.25; })) < 1e-10);
  // Mean-zero pullbacks.
  for (int l = 1; l <= 3; ++l)
    for (int m = -l; m <= l; ++m) {
      const ScalarField Y = as_field(SpectralFunction::mode(3, l, m));
      CHECK(std::abs(q.integrate(Y)) < 1e-10);
    }
}
