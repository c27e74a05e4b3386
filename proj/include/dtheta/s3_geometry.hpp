#pragma once

// Contact metric model on the unit quaternion sphere S³.
//
// Frame: E_i(q) = s_i * q * u_i with (u_1, u_2, u_3) = (i, j, k) and scales
// s = (2, 1, 1). E_1 = ξ is the Reeb (Hopf) field. The metric g makes
// (E_1, E_2, E_3) orthonormal, so horizontal planes carry the round metric and
// the Hopf fibres have length π. All sign and d-convention choices live in
// Conventions; Conventions::calibrated() is the unique candidate for which the
// contact-metric axioms and rot ξ = ξ hold (see calibrate_conventions).

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtheta/quaternion.hpp"

namespace dtheta {

using Vec4 = Quat;
using Components = std::array<double, 3>;

class PointS3 {
 public:
  PointS3() = default;

  /// Throws std::domain_error unless | |q| - 1 | <= 1e-12.
  explicit PointS3(const Quat& q);

  static PointS3 normalized(const Quat& q);

  const Quat& q() const { return q_; }

 private:
  Quat q_{};
};

struct TangentVector {
  PointS3 base;
  Vec4 v;  // ambient R⁴ vector, v·q = 0
};

struct Conventions {
  double d_factor = 1.0;  // dθ(X,Y) = d_factor (Xθ(Y) - Yθ(X) - θ([X,Y]))
  int orientation = -1;   // vol(E1, E2, E3)
  int phi_sign = 1;       // φE2 = phi_sign E3, φE3 = -phi_sign E2

  static constexpr Conventions calibrated() { return {}; }
  bool operator==(const Conventions&) const = default;
};

class Model {
 public:
  explicit Model(Conventions conv = Conventions::calibrated(),
                 std::array<double, 3> scales = {2.0, 1.0, 1.0});

  const Conventions& conventions() const { return conv_; }
  double scale(int i) const { return scales_[i]; }

  /// c_ij^k with [E_i, E_j] = c_ij^k E_k, indices 0..2.
  double structure(int i, int j, int k) const { return c_[i][j][k]; }

  /// Length of a Reeb orbit.
  double fiber_length() const { return 2.0 * std::numbers::pi / scales_[0]; }

  /// ∫_M F∘π dμ = fiber_factor() ∫_{S²} F dΩ, dΩ the unit-sphere area element.
  double fiber_factor() const;

  double volume() const { return 4.0 * std::numbers::pi * fiber_factor(); }

  // Frame and contact structure, all in frame components.
  Components components(const TangentVector& X) const;
  TangentVector vector(const PointS3& p, const Components& c) const;

  double g(const Components& X, const Components& Y) const;
  double theta(const Components& X) const { return X[0]; }
  double dtheta(const Components& X, const Components& Y) const;
  Components phi(const Components& X) const;
  double volume_form(const Components& X, const Components& Y, const Components& Z) const;
  /// g(X×Y, Z) = vol(X, Y, Z)
  Components cross(const Components& X, const Components& Y) const;
  /// Hodge star of θ evaluated on (X, Y).
  double star_theta(const Components& X, const Components& Y) const;
  /// Hodge star of dθ, a 1-form, evaluated on X.
  double star_dtheta(const Components& X) const;

 private:
  Conventions conv_;
  std::array<double, 3> scales_;
  double c_[3][3][3]{};
};

struct Frame {
  std::array<TangentVector, 3> e;
};

/// Left-invariant frame at p; e[0] is ξ(p). Throws std::domain_error on non-unit input.
Frame frame_at(const Model& model, const Quat& p);
Frame frame_at(const Model& model, const PointS3& p);

struct ContactData {
  double theta_X;
  double dtheta_XY;
  double g_XY;
  TangentVector phi_X;
};

/// Throws std::domain_error if X and Y sit at different base points.
ContactData contact_data(const Model& model, const TangentVector& X, const TangentVector& Y);

/// Hopf projection p ↦ p i p̄ onto the unit sphere in R³.
Vec3 hopf(const PointS3& p);

/// A point in the Hopf fibre over x (|x| = 1).
PointS3 lift(const Vec3& x);

/// Point reached from p after time t along the flow of E_i.
inline PointS3 flow(const Model& model, const PointS3& p, int i, double t) {
  const Vec3 u{i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
  return PointS3::normalized(p.q() * exp_pure(u, model.scale(i) * t));
}

// 8th-order central difference weights for the first derivative.
inline constexpr std::array<double, 4> kFdWeights = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0,
                                                     -1.0 / 280.0};
inline constexpr double kFdStep = 1e-2;

/// E_i f (p) by central differences along the exact flow of E_i.
template <class ScalarFn>
double frame_derivative(const Model& model, ScalarFn&& f, int i, const PointS3& p,
                        double h = kFdStep) {
  double acc = 0.0;
  for (int s = 1; s <= 4; ++s) {
    acc += kFdWeights[s - 1] * (f(flow(model, p, i, s * h)) - f(flow(model, p, i, -s * h)));
  }
  return acc / h;
}

/// Bracket [E_i, E_j] at p by differencing the ambient fields along each other's flows.
Components frame_bracket_fd(const Model& model, const PointS3& p, int i, int j);

/// Uniformly distributed points on S³.
std::vector<PointS3> random_points(std::size_t n, unsigned long long seed);

// ---------------------------------------------------------------------------
// Axiom verification

struct PropertyResult {
  int id;
  std::string statement;
  double max_residual;
  double tolerance;
  bool pass;
};

struct AxiomReport {
  Conventions conventions;
  std::vector<PropertyResult> properties;  // ids 1..14
  bool all_pass() const;
};

AxiomReport verify_axioms(const Model& model, const std::vector<PointS3>& sample, double tol,
                          unsigned long long seed = 7);

struct CalibrationCandidate {
  Conventions conventions;
  bool axioms_pass;
  double rot_xi_residual;
  bool accepted;
};

struct Calibration {
  std::vector<CalibrationCandidate> candidates;
  Conventions chosen;
};

/// Enumerates d-factor, orientation and φ sign; throws std::runtime_error unless exactly one
/// candidate satisfies every axiom and rot ξ = ξ.
Calibration calibrate_conventions(const std::vector<PointS3>& sample, double tol);

}  // namespace dtheta
