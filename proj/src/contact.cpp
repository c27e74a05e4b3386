#include "dtheta/contact.hpp"

#include <numbers>

namespace dtheta {

double pullback(const SpectralFunction& f, const PointS3& p) { return evaluate(f, hopf(p)); }

ScalarField as_field(SpectralFunction f) {
  return [f = std::move(f)](const PointS3& p) { return pullback(f, p); };
}

Components frame_gradient(const Model& model, const SpectralFunction& f, const PointS3& p) {
  const Vec3 x = hopf(p);
  const Vec3 grad = surface_gradient(f, x);
  // d/dt π(p exp(t u)) = R_p(u i - i u) = R_p(2 u × i)
  const Vec3 i_axis{1.0, 0.0, 0.0};
  Components out{0.0, 0.0, 0.0};
  for (int k = 1; k < 3; ++k) {
    const Vec3 u{0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
    out[k] = model.scale(k) * grad.dot(rotate(p.q(), u.cross(i_axis) * 2.0));
  }
  return out;
}

FrameField gradient_field(const Model& model, SpectralFunction f) {
  return [&model, f = std::move(f)](const PointS3& p) { return frame_gradient(model, f, p); };
}

FrameField phi_gradient_field(const Model& model, SpectralFunction f) {
  return [&model, f = std::move(f)](const PointS3& p) {
    return model.phi(frame_gradient(model, f, p));
  };
}

FrameField contact_field(const Model& model, SpectralFunction f) {
  return [&model, f = std::move(f)](const PointS3& p) {
    const Components pg = model.phi(frame_gradient(model, f, p));
    return Components{pullback(f, p), 0.0, 0.0} - pg;
  };
}

QuadratureS3 QuadratureS3::hopf_product(const Model& model, const Grid& base, int n_fiber) {
  QuadratureS3 q;
  const double fiber_step = 2.0 * std::numbers::pi / n_fiber;
  // base area element on the quotient is dΩ / (2 s_2)²
  const double area = 1.0 / (4.0 * model.scale(1) * model.scale(1));
  const double fiber_len = model.fiber_length() / n_fiber;
  for (int i = 0; i < base.n_lat; ++i) {
    for (int j = 0; j < base.n_lon; ++j) {
      const PointS3 p0 = lift(base.point(i, j));
      for (int k = 0; k < n_fiber; ++k) {
        q.nodes.push_back(PointS3::normalized(p0.q() * exp_pure({1, 0, 0}, k * fiber_step)));
        q.weights.push_back(base.weight[i] * base.dphi * area * fiber_len);
      }
    }
  }
  return q;
}

double QuadratureS3::integrate(const ScalarField& f) const {
  double acc = 0.0;
  for (std::size_t n = 0; n < nodes.size(); ++n) acc += weights[n] * f(nodes[n]);
  return acc;
}

double integrate_invariant(const Model& model, const Grid& base, const ScalarField& G) {
  double acc = 0.0;
  for (int i = 0; i < base.n_lat; ++i) {
    double row = 0.0;
    for (int j = 0; j < base.n_lon; ++j) row += G(lift(base.point(i, j)));
    acc += base.weight[i] * row;
  }
  return model.fiber_factor() * base.dphi * acc;
}

}  // namespace dtheta
