#include "dtheta/euler_flow.hpp"

#include <cmath>
#include <string>

#include "dtheta/metrics.hpp"

namespace dtheta {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (dt > t_end) throw std::invalid_argument("dt must not exceed t_end");
  if (invariant_sample_stride < 1) throw std::invalid_argument("invariant_sample_stride must be >= 1");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (snapshot_every < 0) throw std::invalid_argument("snapshot_every must be >= 0");
}

long IntegratorConfig::steps() const { return std::lround(t_end / dt); }

BlowUp::BlowUp(double t, double norm)
    : std::runtime_error("blow-up at t = " + std::to_string(t) + ", coefficient norm " + std::to_string(norm)),
      t(t),
      norm(norm) {}

EulerFlow::EulerFlow(const Model& model, const Spectrum& spectrum, int L, Exec exec)
    : model_(model), spectrum_(spectrum), L_(L), exec_(exec), bracket_(model, L, L, exec) {
  if (spectrum.L() < L) throw std::domain_error("EulerFlow: spectrum shorter than band limit");
}

SpectralFunction EulerFlow::rhs(const SpectralFunction& h) const {
  return bracket_(h, inverse_helmholtz(spectrum_, h));
}

FlowState EulerFlow::step(const FlowState& s, double dt) const {
  const SpectralFunction k1 = rhs(s.h);
  const SpectralFunction k2 = rhs(s.h + (0.5 * dt) * k1);
  const SpectralFunction k3 = rhs(s.h + (0.5 * dt) * k2);
  const SpectralFunction k4 = rhs(s.h + dt * k3);
  return {s.h + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4), s.t + dt};
}

InvariantSample EulerFlow::invariants(const FlowState& s, int k_max) const {
  InvariantSample out;
  out.t = s.t;
  out.T = 0.5 * inner(model_, spectrum_, MetricKind::biinvariant_hamiltonian, inverse_helmholtz(spectrum_, s.h), s.h);
  out.coeff_norm = std::sqrt(s.h.coeff_norm2());
  const SphericalTransform tr(L_, Grid::exact_for(std::max(k_max * L_, 2 * L_)), exec_);
  const GridFunction g = tr.synthesize(s.h);
  GridFunction power(g.n_lat, g.n_lon);
  for (double& v : power.values) v = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    for (std::size_t n = 0; n < power.values.size(); ++n) power.values[n] *= g.values[n];
    out.I.push_back(model_.fiber_factor() * tr.integrate(power));
  }
  return out;
}

Trajectory EulerFlow::evolve(const FlowState& s0, const IntegratorConfig& cfg) const {
  cfg.validate();
  if (s0.h.L() != L_) throw std::domain_error("evolve: initial state band limit differs from the flow");
  Trajectory tr;
  FlowState s = s0;
  const long n = cfg.steps();
  tr.log.push_back(invariants(s, cfg.k_max));
  if (cfg.snapshot_every > 0) tr.snapshots.push_back(s);
  for (long i = 1; i <= n; ++i) {
    s = step(s, cfg.dt);
    s.t = s0.t + i * cfg.dt;
    const double norm = std::sqrt(s.h.coeff_norm2());
    if (!std::isfinite(norm) || norm > kBlowUpNorm) throw BlowUp(s.t, norm);
    if (i % cfg.invariant_sample_stride == 0 || i == n) tr.log.push_back(invariants(s, cfg.k_max));
    if (cfg.snapshot_every > 0 && i % cfg.snapshot_every == 0) tr.snapshots.push_back(s);
  }
  tr.final_state = s;
  return tr;
}

double EulerFlow::stationarity_residual(const SpectralFunction& h) const {
  return std::sqrt(model_.fiber_factor() * rhs(h).coeff_norm2());
}

}  // namespace dtheta
