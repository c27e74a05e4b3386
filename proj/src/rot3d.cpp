#include "dtheta/rot3d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dtheta/metrics.hpp"

namespace dtheta {

FrameField curl(const Model& model, FrameField X) {
  return [&model, X = std::move(X)](const PointS3& p) { return curl_at(model, X, p); };
}

FrameField curl_of_contact_closed_form(const Model& model, const Spectrum& spectrum, const SpectralFunction& f) {
  SpectralFunction a = f - laplacian(spectrum, f);
  return [&model, a = std::move(a), f](const PointS3& p) {
    return Components{pullback(a, p), 0.0, 0.0} + model.phi(frame_gradient(model, f, p));
  };
}

FrameField curl_inverse_contact(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
                                double tol) {
  if (!f.mean_zero(tol)) throw std::domain_error("curl_inverse_contact: Hamiltonian has nonzero mean");
  SpectralFunction u = 2.0 * inverse_laplacian(spectrum, f, tol);
  return [&model, f, u = std::move(u)](const PointS3& p) {
    return Components{-pullback(f, p), 0.0, 0.0} + model.phi(frame_gradient(model, u, p));
  };
}

double dmu_inner(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
                 const SpectralFunction& h) {
  // value of the constant part of f
  const double c = f[0] / std::sqrt(4.0 * std::numbers::pi);
  SpectralFunction f0 = f;
  f0[0] = 0.0;
  const FrameField inv = curl_inverse_contact(model, spectrum, f0);
  const FrameField Xh = contact_field(model, h);
  const Grid grid = Grid::exact_for(f.L() + h.L() + 2);
  return integrate_invariant(model, grid, [&](const PointS3& p) {
    Components a = inv(p);
    a[0] += c;
    return model.g(a, Xh(p));
  });
}

bool RotReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RotCheck& c) { return c.pass; });
}

namespace {

SpectralFunction random_band(std::mt19937_64& rng, int L, bool mean_zero) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpectralFunction f(L);
  for (int i = mean_zero ? 1 : 0; i < f.size(); ++i) f[i] = u(rng);
  return f;
}

double field_residual(const FrameField& a, const FrameField& b, const std::vector<PointS3>& pts) {
  std::vector<double> r(pts.size());
#pragma omp parallel for
  for (std::size_t n = 0; n < pts.size(); ++n) r[n] = max_abs(a(pts[n]) - b(pts[n]));
  return pts.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

}  // namespace

RotReport rot_suite(const Model& model, const RotSuiteConfig& cfg) {
  RotReport rep;
  rep.L = cfg.L;
  rep.seed = cfg.seed;
  const Spectrum spectrum = Spectrum::measure(model, cfg.L);
  std::mt19937_64 rng(cfg.seed);
  const auto pts = random_points(cfg.n_points, cfg.seed + 1);
  auto add = [&](std::string id, std::string statement, double r, double tol) {
    rep.checks.push_back({std::move(id), std::move(statement), r, tol, r < tol});
  };

  const FrameField xi = [](const PointS3&) { return Components{1.0, 0.0, 0.0}; };
  add("curl_xi", "rot xi = xi", field_residual(curl(model, xi), xi, pts), cfg.exact_tol);

  const SpectralFunction f = random_band(rng, cfg.L, false);
  add("curl_contact", "rot X_f = (f - Lap f) xi + phi grad f",
      field_residual(curl(model, contact_field(model, f)), curl_of_contact_closed_form(model, spectrum, f), pts),
      cfg.fd_tol);

  const FrameField zero = [](const PointS3&) { return Components{0.0, 0.0, 0.0}; };
  add("curl_gradient", "rot grad f = 0", field_residual(curl(model, gradient_field(model, f)), zero, pts), cfg.fd_tol);

  const SpectralFunction f0 = random_band(rng, cfg.L, true);
  const FrameField inv = curl_inverse_contact(model, spectrum, f0);
  add("curl_inverse_roundtrip", "rot(-f xi + 2 phi grad Lap^-1 f) = X_f",
      field_residual(curl(model, inv), contact_field(model, f0), pts), cfg.fd_tol);
  {
    std::vector<double> d(pts.size());
#pragma omp parallel for
    for (std::size_t n = 0; n < pts.size(); ++n) d[n] = std::abs(divergence_at(model, inv, pts[n]));
    add("curl_inverse_divergence", "div rot^-1 X_f = 0", *std::max_element(d.begin(), d.end()), cfg.fd_tol);
  }

  double ratio_dev = 0.0;
  for (int t = 0; t < cfg.n_pairs; ++t) {
    const SpectralFunction a = random_band(rng, cfg.L, true), b = random_band(rng, cfg.L, true);
    const double den = inner(model, spectrum, MetricKind::biinvariant_hamiltonian, a, b);
    if (std::abs(den) <= 1e-8) continue;
    ratio_dev = std::max(ratio_dev, std::abs(dmu_inner(model, spectrum, a, b) / den + 3.0));
  }
  add("metric_ratio", "<X_f, X_h>^mu / <X_f, X_h>^theta = -3", ratio_dev, cfg.exact_tol);

  const SpectralFunction one = SpectralFunction::constant(cfg.L, 1.0);
  const double vol = model.volume();
  add("xi_norm_mu", "<xi, xi>^mu = vol(M)", std::abs(dmu_inner(model, spectrum, one, one) - vol), cfg.exact_tol);
  add("xi_norm_theta", "<xi, xi>^theta = vol(M)",
      std::abs(inner(model, spectrum, MetricKind::biinvariant_hamiltonian, one, one) - vol), cfg.exact_tol);
  const SpectralFunction h0 = random_band(rng, cfg.L, true);
  add("xi_orthogonal", "<xi, X_h>^mu = <xi, X_h>^theta = 0 for mean-zero h",
      std::max(std::abs(dmu_inner(model, spectrum, one, h0)),
               std::abs(inner(model, spectrum, MetricKind::biinvariant_hamiltonian, one, h0))),
      cfg.exact_tol);
  return rep;
}

}  // namespace dtheta
