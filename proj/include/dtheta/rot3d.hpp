#pragma once

// Curl on M in the invariant frame, its inverse on contact fields, and the
// bi-invariant pairing of divergence-free fields.

#include <string>
#include <vector>

#include "dtheta/contact.hpp"
#include "dtheta/frame_calculus.hpp"
#include "dtheta/harmonics.hpp"

namespace dtheta {

/// rot X with ω_{rot X} = *dω_X, by frame finite differences.
FrameField curl(const Model& model, FrameField X);

/// Closed form of rot X_f: (f − Δf) ξ + φ grad f.
FrameField curl_of_contact_closed_form(const Model& model, const Spectrum& spectrum, const SpectralFunction& f);

/// −f ξ + 2 φ grad(Δ⁻¹ f). Throws std::domain_error unless f has zero mean.
FrameField curl_inverse_contact(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
                                double tol = 1e-12);

/// ∫ g(rot⁻¹ X_f, X_h) dμ by quadrature. The mean of f contributes through rot⁻¹ ξ = ξ.
double dmu_inner(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
                 const SpectralFunction& h);

struct RotCheck {
  std::string id;
  std::string statement;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RotReport {
  int L = 0;
  unsigned long long seed = 0;
  std::vector<RotCheck> checks;
  bool all_pass() const;
};

struct RotSuiteConfig {
  int L = 8;
  unsigned long long seed = 1;
  int n_points = 500;
  int n_pairs = 100;
  double fd_tol = 1e-6;
  double exact_tol = 1e-8;
};

RotReport rot_suite(const Model& model, const RotSuiteConfig& cfg);

}  // namespace dtheta
