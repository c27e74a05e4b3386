#include "dtheta/s3_geometry.hpp"

#include <algorithm>
#include <random>

#include "dtheta/frame_calculus.hpp"

namespace dtheta {

namespace {

constexpr double kUnitTol = 1e-12;

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Vec3 axis(int i) { return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0}; }

double det3(const Components& a, const Components& b, const Components& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

PointS3::PointS3(const Quat& q) : q_(q) {
  if (!(std::abs(q.norm() - 1.0) <= kUnitTol)) {
    throw std::domain_error("PointS3: quaternion is not of unit length");
  }
}

PointS3 PointS3::normalized(const Quat& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::domain_error("PointS3: cannot normalize");
  return PointS3(q * (1.0 / n));
}

Model::Model(Conventions conv, std::array<double, 3> scales) : conv_(conv), scales_(scales) {
  if (scales_[1] != scales_[2]) {
    throw std::invalid_argument("Model: horizontal scales must agree (K-contact)");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c_[i][j][k] = 2.0 * scales_[i] * scales_[j] / scales_[k] * levi_civita(i, j, k);
}

double Model::fiber_factor() const {
  // dπ(E2) has Euclidean length 2 s_2 on the unit sphere.
  const double horiz = 2.0 * scales_[1];
  return fiber_length() / (horiz * horiz);
}

Components Model::components(const TangentVector& X) const {
  const Quat w = X.base.q().conj() * X.v;
  return {w.x / scales_[0], w.y / scales_[1], w.z / scales_[2]};
}

TangentVector Model::vector(const PointS3& p, const Components& c) const {
  const Vec3 w{c[0] * scales_[0], c[1] * scales_[1], c[2] * scales_[2]};
  return {p, p.q() * Quat::pure(w)};
}

double Model::g(const Components& X, const Components& Y) const {
  return X[0] * Y[0] + X[1] * Y[1] + X[2] * Y[2];
}

double Model::dtheta(const Components& X, const Components& Y) const {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc -= X[i] * Y[j] * c_[i][j][0];
  return conv_.d_factor * acc;
}

Components Model::phi(const Components& X) const {
  const double s = conv_.phi_sign;
  return {0.0, -s * X[2], s * X[1]};
}

double Model::volume_form(const Components& X, const Components& Y, const Components& Z) const {
  return conv_.orientation * det3(X, Y, Z);
}

Components Model::cross(const Components& X, const Components& Y) const {
  const double s = conv_.orientation;
  return {s * (X[1] * Y[2] - X[2] * Y[1]), s * (X[2] * Y[0] - X[0] * Y[2]),
          s * (X[0] * Y[1] - X[1] * Y[0])};
}

double Model::star_theta(const Components& X, const Components& Y) const {
  return volume_form({1.0, 0.0, 0.0}, X, Y);
}

double Model::star_dtheta(const Components& X) const {
  const Components e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  double acc = 0.0;
  for (int k = 0; k < 3; ++k) {
    acc += X[k] * conv_.orientation * dtheta(e[(k + 1) % 3], e[(k + 2) % 3]);
  }
  return acc;
}

Frame frame_at(const Model& model, const PointS3& p) {
  Frame f;
  for (int i = 0; i < 3; ++i) {
    Components c{0, 0, 0};
    c[i] = 1.0;
    f.e[i] = model.vector(p, c);
  }
  return f;
}

Frame frame_at(const Model& model, const Quat& p) { return frame_at(model, PointS3(p)); }

ContactData contact_data(const Model& model, const TangentVector& X, const TangentVector& Y) {
  const Quat d = X.base.q() - Y.base.q();
  if (d.norm() > kUnitTol) throw std::domain_error("contact_data: mismatched base points");
  const Components x = model.components(X);
  const Components y = model.components(Y);
  return {model.theta(x), model.dtheta(x, y), model.g(x, y), model.vector(X.base, model.phi(x))};
}

Vec3 hopf(const PointS3& p) { return rotate(p.q(), {1.0, 0.0, 0.0}); }

PointS3 lift(const Vec3& x_in) {
  const Vec3 x = x_in * (1.0 / x_in.norm());
  const Vec3 a{1.0, 0.0, 0.0};
  if (a.dot(x) >= 0.0) {
    const Vec3 c = a.cross(x);
    return PointS3::normalized({1.0 + a.dot(x), c.x, c.y, c.z});
  }
  // Rotate -a onto x, composed with j (which sends a to -a).
  const Vec3 na = a * -1.0;
  const Vec3 c = na.cross(x);
  const Quat r{1.0 + na.dot(x), c.x, c.y, c.z};
  return PointS3::normalized(r * Quat::unit(2));
}

Components frame_bracket_fd(const Model& model, const PointS3& p, int i, int j) {
  const double h = kFdStep;
  auto field = [&](int k, const PointS3& q) {
    return q.q() * Quat::pure(axis(k) * model.scale(k));
  };
  auto derivative = [&](int along, int of) {
    Quat acc{0, 0, 0, 0};
    for (int s = 1; s <= 4; ++s) {
      acc = acc + (field(of, flow(model, p, along, s * h)) -
                   field(of, flow(model, p, along, -s * h))) *
                      kFdWeights[s - 1];
    }
    return acc * (1.0 / h);
  };
  // [X, Y] = DY·X - DX·Y
  const Quat b = derivative(i, j) - derivative(j, i);
  return model.components({p, b});
}

std::vector<PointS3> random_points(std::size_t n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<PointS3> out;
  out.reserve(n);
  while (out.size() < n) {
    const Quat q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (q.norm() < 1e-6) continue;
    out.push_back(PointS3::normalized(q));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool AxiomReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

namespace {

const char* kStatements[14] = {
    "g(X,xi) = theta(X)",
    "phi^2 = -I + theta (x) xi",
    "dtheta(X,Y) = g(X,phi Y)",
    "g(xi,xi) = 1",
    "E = Ker theta is orthogonal to xi",
    "phi(xi) = 0, phi(E) = E",
    "phi skew-symmetric, (phi|E)^2 = -I_E",
    "dtheta(phi X,phi Y) = dtheta(X,Y)",
    "g(X,Y) = theta(X)theta(Y) + dtheta(phi X,Y)",
    "theta ^ dtheta = mu",
    "dtheta(phi X,X) = 1 for unit X in E",
    "(phi X, X, xi) positively oriented",
    "phi X = X x xi",
    "*theta = dtheta, *dtheta = theta",
};

// dθ from brackets measured at the point: left-invariant extensions make the
// derivative terms vanish, leaving -θ([X,Y]).
struct MeasuredDTheta {
  double c0[3][3]{};  // θ([E_i, E_j])
  double d_factor;

  double operator()(const Components& X, const Components& Y) const {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc -= X[i] * Y[j] * c0[i][j];
    return d_factor * acc;
  }
};

}  // namespace

AxiomReport verify_axioms(const Model& model, const std::vector<PointS3>& sample, double tol,
                          unsigned long long seed) {
  if (sample.empty()) throw std::invalid_argument("verify_axioms: empty sample");
  std::vector<double> worst(14, 0.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Components xi{1.0, 0.0, 0.0};
  const int orient = model.conventions().orientation;

  for (const PointS3& p : sample) {
    MeasuredDTheta dth;
    dth.d_factor = model.conventions().d_factor;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double c = frame_bracket_fd(model, p, i, j)[0];
        dth.c0[i][j] = c;
        dth.c0[j][i] = -c;
      }

    // Random ambient tangent vectors, projected onto T_p S³.
    auto random_tangent = [&]() {
      Quat v{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      v = v - p.q() * p.q().dot(v);
      return model.components({p, v});
    };
    const Components X = random_tangent();
    const Components Y = random_tangent();
    const Components Z = random_tangent();
    Components U{0.0, gauss(rng), gauss(rng)};
    {
      const double n = std::sqrt(model.g(U, U));
      U = (1.0 / n) * U;
    }
    const double thX = model.theta(X);

    auto upd = [&](int id, double r) { worst[id - 1] = std::max(worst[id - 1], std::abs(r)); };

    upd(1, model.g(X, xi) - thX);
    for (const Components& V : {X, xi}) {
      upd(2, max_abs(model.phi(model.phi(V)) + V - model.theta(V) * xi));
    }
    upd(3, dth(X, Y) - model.g(X, model.phi(Y)));
    upd(4, model.g(xi, xi) - 1.0);
    upd(5, model.g(U, xi));
    upd(6, max_abs(model.phi(xi)));
    upd(6, model.theta(model.phi(U)));
    upd(7, model.g(model.phi(X), Y) + model.g(X, model.phi(Y)));
    upd(7, max_abs(model.phi(model.phi(U)) + U));
    upd(8, dth(model.phi(X), model.phi(Y)) - dth(X, Y));
    upd(9, model.g(X, Y) - model.theta(X) * model.theta(Y) - dth(model.phi(X), Y));
    const double wedge = model.theta(X) * dth(Y, Z) + model.theta(Y) * dth(Z, X) +
                         model.theta(Z) * dth(X, Y);
    upd(10, wedge - model.volume_form(X, Y, Z));
    upd(11, dth(model.phi(U), U) - 1.0);
    upd(12, model.volume_form(model.phi(U), U, xi) - 1.0);
    upd(13, max_abs(model.phi(X) - model.cross(X, xi)));
    upd(14, model.star_theta(X, Y) - dth(X, Y));
    {
      const Components e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      double star_dth = 0.0;
      for (int k = 0; k < 3; ++k)
        star_dth += X[k] * orient * dth(e[(k + 1) % 3], e[(k + 2) % 3]);
      upd(14, star_dth - model.theta(X));
    }
  }

  AxiomReport report;
  report.conventions = model.conventions();
  for (int id = 1; id <= 14; ++id) {
    report.properties.push_back(
        {id, kStatements[id - 1], worst[id - 1], tol, worst[id - 1] <= tol});
  }
  return report;
}

Calibration calibrate_conventions(const std::vector<PointS3>& sample, double tol) {
  Calibration cal;
  int accepted = 0;
  const FrameField xi_field = [](const PointS3&) { return Components{1.0, 0.0, 0.0}; };
  for (double d : {1.0, 0.5}) {
    for (int orient : {1, -1}) {
      for (int phi : {1, -1}) {
        const Model model(Conventions{d, orient, phi});
        const AxiomReport rep = verify_axioms(model, sample, tol);
        double rot_res = 0.0;
        for (std::size_t n = 0; n < std::min<std::size_t>(sample.size(), 16); ++n) {
          rot_res = std::max(rot_res, max_abs(curl_at(model, xi_field, sample[n]) -
                                              Components{1.0, 0.0, 0.0}));
        }
        const bool ok = rep.all_pass() && rot_res <= std::max(tol, 1e-8);
        cal.candidates.push_back({model.conventions(), rep.all_pass(), rot_res, ok});
        if (ok) {
          cal.chosen = model.conventions();
          ++accepted;
        }
      }
    }
  }
  if (accepted != 1) {
    throw std::runtime_error("calibrate_conventions: expected exactly one consistent convention, found " +
                             std::to_string(accepted));
  }
  return cal;
}

}  // namespace dtheta
