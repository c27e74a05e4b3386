#include <doctest.h>

#include <cmath>
#include <random>

#include "dtheta/metrics.hpp"
#include "dtheta/rot3d.hpp"
#include "test_support.hpp"

using namespace dtheta;

namespace {
const Model model;
const Spectrum spectrum = Spectrum::measure(model, 8);
const auto pts = random_points(100, 61);

double residual(const FrameField& a, const FrameField& b) {
  double r = 0.0;
  for (const PointS3& p : pts) r = std::max(r, max_abs(a(p) - b(p)));
  return r;
}
}  // namespace

TEST_CASE("curl of the Reeb field") {
  const FrameField xi = [](const PointS3&) { return Components{1.0, 0.0, 0.0}; };
  CHECK(residual(curl(model, xi), xi) < 1e-8);
  // ξ written through its contact Hamiltonian
  CHECK(residual(curl(model, contact_field(model, SpectralFunction::constant(2, 1.0))), xi) < 1e-8);
}

TEST_CASE("curl of contact fields and gradients") {
  std::mt19937_64 rng(62);
  for (int L : {2, 5, 8}) {
    const SpectralFunction f = testing::random_function(rng, L, L);
    CHECK(residual(curl(model, contact_field(model, f)), curl_of_contact_closed_form(model, spectrum, f)) < 1e-6);
    CHECK(residual(curl(model, gradient_field(model, f)), [](const PointS3&) { return Components{}; }) < 1e-6);
  }
}

TEST_CASE("curl is linear") {
  std::mt19937_64 rng(63);
  const FrameField X = contact_field(model, testing::random_function(rng, 3, 3));
  const FrameField Y = gradient_field(model, testing::random_function(rng, 3, 3));
  const FrameField Z = [&](const PointS3& p) { return 2.0 * X(p) - Y(p); };
  const FrameField cX = curl(model, X), cY = curl(model, Y);
  CHECK(residual(curl(model, Z), [&](const PointS3& p) { return 2.0 * cX(p) - cY(p); }) < 1e-9);
}

TEST_CASE("inverse curl on contact fields") {
  std::mt19937_64 rng(64);
  for (int L : {3, 8}) {
    const SpectralFunction f = testing::random_function(rng, L, L, 1);
    const FrameField inv = curl_inverse_contact(model, spectrum, f);
    CHECK(residual(curl(model, inv), contact_field(model, f)) < 1e-6);
    for (const PointS3& p : pts) CHECK(std::abs(divergence_at(model, inv, p)) < 1e-6);
  }
  const FrameField zero = curl_inverse_contact(model, spectrum, SpectralFunction(4));
  CHECK(residual(zero, [](const PointS3&) { return Components{}; }) == 0.0);
  CHECK_THROWS_AS(curl_inverse_contact(model, spectrum, SpectralFunction::constant(4, 1.0)), std::domain_error);
}

TEST_CASE("divergence against integration by parts") {
  // A field whose components depend on the fibre coordinate.
  const FrameField X = [](const PointS3& p) {
    const Quat& q = p.q();
    return Components{q.w * q.x + q.y, q.z * q.z - q.w, q.x * q.y};
  };
  std::mt19937_64 rng(65);
  const SpectralFunction G = testing::random_function(rng, 3, 3);
  const QuadratureS3 quad = QuadratureS3::hopf_product(model, Grid::exact_for(10), 8);
  const double lhs = quad.integrate([&](const PointS3& p) { return divergence_at(model, X, p) * pullback(G, p); });
  const double rhs = -quad.integrate([&](const PointS3& p) { return model.g(X(p), frame_gradient(model, G, p)); });
  CHECK(std::abs(lhs - rhs) < 1e-9);
  CHECK(std::abs(quad.integrate([&](const PointS3& p) { return divergence_at(model, X, p); })) < 1e-10);
}

TEST_CASE("bi-invariant pairing of divergence-free fields") {
  std::mt19937_64 rng(66);
  for (int t = 0; t < 10; ++t) {
    const SpectralFunction f = testing::random_function(rng, 4, 4, 1);
    const SpectralFunction h = testing::random_function(rng, 4, 4, 1);
    const double theta = inner(model, spectrum, MetricKind::biinvariant_hamiltonian, f, h);
    CHECK(std::abs(dmu_inner(model, spectrum, f, h) / theta + 3.0) < 1e-8);
    CHECK(std::abs(dmu_inner(model, spectrum, f, f) + 3.0 * inner(model, spectrum, MetricKind::biinvariant_hamiltonian, f, f)) < 1e-8);
  }
  const SpectralFunction one = SpectralFunction::constant(4, 1.0);
  CHECK(std::abs(dmu_inner(model, spectrum, one, one) - model.volume()) < 1e-8);
  const SpectralFunction h = testing::random_function(rng, 4, 4, 1);
  CHECK(std::abs(dmu_inner(model, spectrum, one, h)) < 1e-8);
}

TEST_CASE("report") {
  RotSuiteConfig cfg;
  cfg.L = 4;
  cfg.n_points = 50;
  cfg.n_pairs = 10;
  const RotReport rep = rot_suite(model, cfg);
  CHECK(rep.checks.size() == 9);
  CHECK(rep.all_pass());
  const RotReport again = rot_suite(model, cfg);
  for (std::size_t i = 0; i < rep.checks.size(); ++i) CHECK(rep.checks[i].max_residual == again.checks[i].max_residual);
}
