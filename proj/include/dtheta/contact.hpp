#pragma once

// Pullbacks of base functions to S³, contact vector fields, and quadrature on M.

#include <functional>
#include <vector>

#include "dtheta/frame_calculus.hpp"
#include "dtheta/harmonics.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

/// f(p) = F(π(p)).
double pullback(const SpectralFunction& f, const PointS3& p);
ScalarField as_field(SpectralFunction f);

/// Frame components (E1 f, E2 f, E3 f) of grad f from the spectral surface gradient.
/// E1 f = 0 identically since f is ξ-invariant.
Components frame_gradient(const Model& model, const SpectralFunction& f, const PointS3& p);

FrameField gradient_field(const Model& model, SpectralFunction f);
FrameField phi_gradient_field(const Model& model, SpectralFunction f);

/// X_f = f ξ − φ grad f.
FrameField contact_field(const Model& model, SpectralFunction f);

/// S³ quadrature on a Hopf product grid: lifted base nodes times equispaced fibre angles.
/// Exact for integrands whose base part is a polynomial of degree <= base exactness and
/// whose fibre dependence is a trigonometric polynomial of degree < n_fiber.
struct QuadratureS3 {
  std::vector<PointS3> nodes;
  std::vector<double> weights;

  static QuadratureS3 hopf_product(const Model& model, const Grid& base, int n_fiber);
  double integrate(const ScalarField& f) const;
};

/// ∫_M G dμ for a ξ-invariant G: fibre length × base quadrature at one lift per node.
double integrate_invariant(const Model& model, const Grid& base, const ScalarField& G);

}  // namespace dtheta
