#include "dtheta/frame_calculus.hpp"

namespace dtheta {

std::array<Components, 3> frame_jacobian(const Model& model, const FrameField& X,
                                         const PointS3& p, double h) {
  std::array<Components, 3> J{};
  for (int i = 0; i < 3; ++i) {
    Components acc{0, 0, 0};
    for (int s = 1; s <= 4; ++s) {
      acc = acc + kFdWeights[s - 1] * (X(flow(model, p, i, s * h)) - X(flow(model, p, i, -s * h)));
    }
    J[i] = (1.0 / h) * acc;
  }
  return J;
}

Components curl_at(const Model& model, const FrameField& X, const PointS3& p) {
  const auto J = frame_jacobian(model, X, p);
  const Components a = X(p);
  const auto& conv = model.conventions();
  Components out{};
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    // dω(E_i, E_j) = E_i a_j - E_j a_i - a_m c_ij^m
    double dw = J[i][j] - J[j][i];
    for (int m = 0; m < 3; ++m) dw -= a[m] * model.structure(i, j, m);
    out[k] = conv.orientation * conv.d_factor * dw;
  }
  return out;
}

double divergence_at(const Model& model, const FrameField& X, const PointS3& p) {
  const auto J = frame_jacobian(model, X, p);
  const Components a = X(p);
  double div = 0.0;
  for (int i = 0; i < 3; ++i) {
    div += J[i][i];
    for (int j = 0; j < 3; ++j) div += a[j] * model.structure(i, j, i);
  }
  return div;
}

Components lie_bracket_at(const Model& model, const FrameField& X, const FrameField& Y,
                          const PointS3& p) {
  const auto JX = frame_jacobian(model, X, p);
  const auto JY = frame_jacobian(model, Y, p);
  const Components a = X(p);
  const Components b = Y(p);
  Components out{};
  for (int k = 0; k < 3; ++k) {
    double v = 0.0;
    for (int i = 0; i < 3; ++i) v += a[i] * JY[i][k] - b[i] * JX[i][k];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v += a[i] * b[j] * model.structure(i, j, k);
    out[k] = v;
  }
  return out;
}

Components gradient_at(const Model& model, const ScalarField& f, const PointS3& p) {
  return {frame_derivative(model, f, 0, p), frame_derivative(model, f, 1, p),
          frame_derivative(model, f, 2, p)};
}

}  // namespace dtheta
