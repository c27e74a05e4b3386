#pragma once

// Right-invariant and bi-invariant inner products on contact Hamiltonians.

#include <string>

#include "dtheta/harmonics.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

enum class MetricKind { right_invariant_L2, biinvariant_hamiltonian };
enum class MetricPath { spectral, quadrature };

std::string to_string(MetricKind kind);

/// right_invariant_L2:      ∫ g(X_f, X_h) dμ = ∫ f (1+Δ) h dμ
/// biinvariant_hamiltonian: ∫ f h dμ
/// The quadrature path evaluates the integrand pointwise on lifted base nodes.
double inner(const Model& model, const Spectrum& spectrum, MetricKind kind, const SpectralFunction& f,
             const SpectralFunction& h, MetricPath path = MetricPath::spectral);

/// T = ½ (X_f, X_f)_e.
double kinetic_energy(const Model& model, const Spectrum& spectrum, const SpectralFunction& f);
/// m = ⟨h, h⟩_e for the momentum h = (1+Δ) f.
double kinetic_moment(const Model& model, const SpectralFunction& h);

}  // namespace dtheta
