#include "dtheta/metrics.hpp"

#include <algorithm>

#include "dtheta/contact.hpp"

namespace dtheta {

std::string to_string(MetricKind kind) {
  return kind == MetricKind::right_invariant_L2 ? "right_invariant_L2" : "biinvariant_hamiltonian";
}

namespace {
double spectral_dot(const SpectralFunction& f, const SpectralFunction& h) {
  const int n = std::min(f.size(), h.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += f[i] * h[i];
  return acc;
}

double quadrature_inner(const Model& model, MetricKind kind, const SpectralFunction& f,
                        const SpectralFunction& h) {
  const Grid grid = Grid::exact_for(f.L() + h.L() + 2);
  if (kind == MetricKind::biinvariant_hamiltonian)
    return integrate_invariant(model, grid, [&](const PointS3& p) { return pullback(f, p) * pullback(h, p); });
  const FrameField Xf = contact_field(model, f), Xh = contact_field(model, h);
  return integrate_invariant(model, grid, [&](const PointS3& p) { return model.g(Xf(p), Xh(p)); });
}
}  // namespace

double inner(const Model& model, const Spectrum& spectrum, MetricKind kind, const SpectralFunction& f,
             const SpectralFunction& h, MetricPath path) {
  if (path == MetricPath::quadrature) return quadrature_inner(model, kind, f, h);
  const double V = model.fiber_factor();
  if (kind == MetricKind::biinvariant_hamiltonian) return V * spectral_dot(f, h);
  return V * spectral_dot(f, helmholtz(spectrum, h));
}

double kinetic_energy(const Model& model, const Spectrum& spectrum, const SpectralFunction& f) {
  return 0.5 * inner(model, spectrum, MetricKind::right_invariant_L2, f, f);
}

double kinetic_moment(const Model& model, const SpectralFunction& h) {
  return model.fiber_factor() * h.coeff_norm2();
}

}  // namespace dtheta
