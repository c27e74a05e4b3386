#pragma once

// Differential operators on vector fields given by their components in the
// orthonormal frame (E1 = ξ, E2, E3). Derivatives are central differences
// along the exact frame flows.

#include <array>
#include <functional>

#include "dtheta/s3_geometry.hpp"

namespace dtheta {

using ScalarField = std::function<double(const PointS3&)>;
using FrameField = std::function<Components(const PointS3&)>;

/// J[i][j] = E_i(a_j)(p) where a_j are the components of X.
std::array<Components, 3> frame_jacobian(const Model& model, const FrameField& X,
                                         const PointS3& p, double h = kFdStep);

/// rot X with ω_{rot X} = * d ω_X, in the model's conventions.
Components curl_at(const Model& model, const FrameField& X, const PointS3& p);

double divergence_at(const Model& model, const FrameField& X, const PointS3& p);

/// Lie bracket [X, Y] at p.
Components lie_bracket_at(const Model& model, const FrameField& X, const FrameField& Y,
                          const PointS3& p);

/// Frame components of grad f (all three directions differenced).
Components gradient_at(const Model& model, const ScalarField& f, const PointS3& p);

inline Components operator+(const Components& a, const Components& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Components operator-(const Components& a, const Components& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Components operator*(double s, const Components& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double max_abs(const Components& a) {
  double m = 0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace dtheta
