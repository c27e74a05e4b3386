#include "dtheta/harmonics.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "dtheta/contact.hpp"
#include "dtheta/legendre.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

int degree_of(int index) { return static_cast<int>(std::sqrt(double(index) + 0.5)); }
int order_of(int index) {
  const int l = degree_of(index);
  return index - l * l - l;
}

// ---------------------------------------------------------------------------
// SpectralFunction

SpectralFunction::SpectralFunction(int L) : L_(L), c_(num_coeffs(L), 0.0) {
  if (L < 0) throw std::domain_error("SpectralFunction: negative band limit");
}

SpectralFunction::SpectralFunction(int L, std::vector<double> coeffs) : L_(L), c_(std::move(coeffs)) {
  if (L < 0 || static_cast<int>(c_.size()) != num_coeffs(L)) {
    throw std::domain_error("SpectralFunction: coefficient count does not match band limit");
  }
}

SpectralFunction SpectralFunction::mode(int L, int l, int m, double value) {
  SpectralFunction f(L);
  f.at(l, m) = value;
  return f;
}

SpectralFunction SpectralFunction::constant(int L, double c) {
  SpectralFunction f(L);
  f[0] = c * std::sqrt(4.0 * std::numbers::pi);
  return f;
}

SpectralFunction SpectralFunction::from_triples(int L,
                                                const std::vector<std::tuple<int, int, double>>& t) {
  SpectralFunction f(L);
  for (const auto& [l, m, v] : t) f.at(l, m) += v;
  return f;
}

double SpectralFunction::at(int l, int m) const {
  if (l < 0 || l > L_ || m < -l || m > l) throw std::domain_error("SpectralFunction: (l,m) outside band");
  return c_[coeff_index(l, m)];
}

double& SpectralFunction::at(int l, int m) {
  if (l < 0 || l > L_ || m < -l || m > l) throw std::domain_error("SpectralFunction: (l,m) outside band");
  return c_[coeff_index(l, m)];
}

SpectralFunction SpectralFunction::with_band(int L) const {
  SpectralFunction out(L);
  const int n = std::min(num_coeffs(L), num_coeffs(L_));
  std::copy(c_.begin(), c_.begin() + n, out.c_.begin());
  return out;
}

int SpectralFunction::effective_degree(double tol) const {
  for (int i = size() - 1; i >= 0; --i)
    if (std::abs(c_[i]) > tol) return degree_of(i);
  return -1;
}

double SpectralFunction::coeff_norm2() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return s;
}

bool SpectralFunction::all_finite() const {
  for (double v : c_)
    if (!std::isfinite(v)) return false;
  return true;
}

SpectralFunction& SpectralFunction::operator+=(const SpectralFunction& o) {
  if (o.L_ > L_) *this = with_band(o.L_);
  for (int i = 0; i < o.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SpectralFunction& SpectralFunction::operator-=(const SpectralFunction& o) {
  if (o.L_ > L_) *this = with_band(o.L_);
  for (int i = 0; i < o.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SpectralFunction& SpectralFunction::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Grid

namespace {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  if (n == 1) {
    w[0] = 2.0;
    return;
  }
  for (int k = 0; k < n; ++k) {
    double z = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
    }
    x[k] = z;
    w[k] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

}  // namespace

Grid::Grid(int n_lat_, int n_lon_) : n_lat(n_lat_), n_lon(n_lon_) {
  if (n_lat < 1 || n_lon < 1) throw std::domain_error("Grid: empty grid");
  gauss_legendre(n_lat, cos_theta, weight);
  sin_theta.resize(n_lat);
  for (int i = 0; i < n_lat; ++i) sin_theta[i] = std::sqrt((1.0 - cos_theta[i]) * (1.0 + cos_theta[i]));
  dphi = 2.0 * std::numbers::pi / n_lon;
  phi.resize(n_lon);
  for (int j = 0; j < n_lon; ++j) phi[j] = j * dphi;
}

Grid Grid::exact_for(int degree) { return Grid(degree / 2 + 1, degree + 1); }

Vec3 Grid::point(int i, int j) const {
  return {sin_theta[i] * std::cos(phi[j]), sin_theta[i] * std::sin(phi[j]), cos_theta[i]};
}

int Grid::exactness() const { return std::min(2 * n_lat - 1, n_lon - 1); }

// ---------------------------------------------------------------------------
// SphericalTransform

SphericalTransform::SphericalTransform(int L, Grid grid, Exec exec)
    : L_(L), grid_(std::move(grid)), exec_(exec) {
  if (grid_.exactness() < 2 * L_) {
    throw std::domain_error("SphericalTransform: grid cannot resolve the requested band limit");
  }
  const std::size_t stride = tri_size(L_);
  leg_.L = L_;
  leg_.n_lat = grid_.n_lat;
  leg_.value.resize(stride * grid_.n_lat);
  leg_.dtheta.resize(stride * grid_.n_lat);
  leg_.over_sin.resize(stride * grid_.n_lat);
  for (int i = 0; i < grid_.n_lat; ++i) {
    const LegendreColumn col = legendre_column(L_, grid_.cos_theta[i], grid_.sin_theta[i]);
    std::copy(col.value.begin(), col.value.end(), leg_.value.begin() + i * stride);
    std::copy(col.dtheta.begin(), col.dtheta.end(), leg_.dtheta.begin() + i * stride);
    std::copy(col.over_sin.begin(), col.over_sin.end(), leg_.over_sin.begin() + i * stride);
  }
  trig_.M = L_;
  trig_.n_lon = grid_.n_lon;
  trig_.cos.resize(std::size_t(L_ + 1) * grid_.n_lon);
  trig_.sin.resize(trig_.cos.size());
  for (int m = 0; m <= L_; ++m)
    for (int j = 0; j < grid_.n_lon; ++j) {
      trig_.cos[std::size_t(m) * grid_.n_lon + j] = std::cos(m * grid_.phi[j]);
      trig_.sin[std::size_t(m) * grid_.n_lon + j] = std::sin(m * grid_.phi[j]);
    }
}

GridFunction SphericalTransform::run(const SpectralFunction& f, SynthesisMode mode) const {
  if (f.L() > L_) throw std::domain_error("SphericalTransform: input band limit exceeds transform");
  const SpectralFunction padded = f.L() == L_ ? f : f.with_band(L_);
  GridFunction g(grid_.n_lat, grid_.n_lon);
  synthesize_kernel(exec_, L_, padded.coeffs(), leg_, trig_, mode, g.values);
  return g;
}

GridFunction SphericalTransform::synthesize(const SpectralFunction& f) const {
  return run(f, SynthesisMode::value);
}
GridFunction SphericalTransform::synthesize_dtheta(const SpectralFunction& f) const {
  return run(f, SynthesisMode::dtheta);
}
GridFunction SphericalTransform::synthesize_dphi_over_sin(const SpectralFunction& f) const {
  return run(f, SynthesisMode::dphi_over_sin);
}

SpectralFunction SphericalTransform::analyze(const GridFunction& g, int L_out) const {
  if (L_out < 0) L_out = L_;
  if (g.n_lat != grid_.n_lat || g.n_lon != grid_.n_lon) {
    throw std::domain_error("analyze: grid resolution mismatch");
  }
  if (L_out > L_) throw std::domain_error("analyze: output band exceeds transform band");
  SpectralFunction out(L_out);
  analyze_kernel(exec_, L_out, g.values, leg_, trig_, grid_.weight, grid_.dphi, out.coeffs());
  return out;
}

double SphericalTransform::integrate(const GridFunction& g) const {
  double acc = 0.0;
  for (int i = 0; i < g.n_lat; ++i) {
    double row = 0.0;
    for (int j = 0; j < g.n_lon; ++j) row += g(i, j);
    acc += grid_.weight[i] * row;
  }
  return acc * grid_.dphi;
}

// ---------------------------------------------------------------------------
// Pointwise evaluation

namespace {

struct PointTerms {
  double value = 0.0, dtheta = 0.0, dphi_over_sin = 0.0;
};

PointTerms point_terms(const SpectralFunction& f, const Vec3& x) {
  const double n = x.norm();
  const double ct = x.z / n;
  const double st = std::sqrt(x.x * x.x + x.y * x.y) / n;
  const double ph = std::atan2(x.y, x.x);
  const int L = f.L();
  const LegendreColumn col = legendre_column(L, ct, st);
  PointTerms t;
  for (int l = 0; l <= L; ++l) {
    t.value += f.at(l, 0) * col.value[tri_index(l, 0)];
    t.dtheta += f.at(l, 0) * col.dtheta[tri_index(l, 0)];
    for (int m = 1; m <= l; ++m) {
      const double c = std::cos(m * ph), s = std::sin(m * ph);
      const double a = f.at(l, m), b = f.at(l, -m);
      const double r2 = std::numbers::sqrt2;
      t.value += r2 * col.value[tri_index(l, m)] * (a * c + b * s);
      t.dtheta += r2 * col.dtheta[tri_index(l, m)] * (a * c + b * s);
      t.dphi_over_sin += r2 * m * col.over_sin[tri_index(l, m)] * (b * c - a * s);
    }
  }
  return t;
}

}  // namespace

double evaluate(const SpectralFunction& f, const Vec3& x) { return point_terms(f, x).value; }

Vec3 surface_gradient(const SpectralFunction& f, const Vec3& x) {
  const PointTerms t = point_terms(f, x);
  const double n = x.norm();
  const double ct = x.z / n;
  const double st = std::sqrt(x.x * x.x + x.y * x.y) / n;
  const double ph = std::atan2(x.y, x.x);
  const Vec3 e_theta{ct * std::cos(ph), ct * std::sin(ph), -st};
  const Vec3 e_phi{-std::sin(ph), std::cos(ph), 0.0};
  return e_theta * t.dtheta + e_phi * t.dphi_over_sin;
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum::Spectrum(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw std::domain_error("Spectrum: empty");
  if (std::abs(alpha_[0]) > 1e-12) throw std::domain_error("Spectrum: alpha_0 must vanish");
  for (std::size_t l = 1; l < alpha_.size(); ++l)
    if (!(alpha_[l] > alpha_[l - 1])) throw std::domain_error("Spectrum: not strictly increasing");
}

Spectrum Spectrum::measure(const Model& model, int L) {
  std::vector<double> alpha(L + 1, 0.0);
  for (int l = 1; l <= L; ++l) {
    const Grid grid = Grid::exact_for(2 * l + 2);
    const SpectralFunction f = SpectralFunction::mode(l, l, 0);
    const double num = integrate_invariant(model, grid, [&](const PointS3& p) {
      const Components g = frame_gradient(model, f, p);
      return model.g(g, g);
    });
    const double den = integrate_invariant(model, grid, [&](const PointS3& p) {
      const double v = pullback(f, p);
      return v * v;
    });
    alpha[l] = num / den;
  }
  return Spectrum(std::move(alpha));
}

namespace {

template <class Fn>
SpectralFunction diagonal(const Spectrum& s, const SpectralFunction& f, Fn&& fn) {
  if (f.L() > s.L()) throw std::domain_error("Spectrum: band limit exceeds measured spectrum");
  SpectralFunction out(f.L());
  for (int i = 0; i < f.size(); ++i) out[i] = fn(s.alpha(degree_of(i))) * f[i];
  return out;
}

}  // namespace

SpectralFunction laplacian(const Spectrum& s, const SpectralFunction& f) {
  return diagonal(s, f, [](double a) { return a; });
}
SpectralFunction helmholtz(const Spectrum& s, const SpectralFunction& f) {
  return diagonal(s, f, [](double a) { return 1.0 + a; });
}
SpectralFunction inverse_helmholtz(const Spectrum& s, const SpectralFunction& f) {
  return diagonal(s, f, [](double a) { return 1.0 / (1.0 + a); });
}
SpectralFunction inverse_laplacian(const Spectrum& s, const SpectralFunction& f, double tol) {
  if (!f.mean_zero(tol)) throw std::domain_error("inverse_laplacian: input has nonzero mean");
  return diagonal(s, f, [](double a) { return a == 0.0 ? 0.0 : 1.0 / a; });
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_json(const SpectralFunction& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < f.size(); ++i) arr.push_back({degree_of(i), order_of(i), f[i]});
  return arr.dump();
}

SpectralFunction spectral_from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::domain_error("spectral_from_json: expected an array");
  std::vector<std::tuple<int, int, double>> t;
  int L = 0;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) throw std::domain_error("spectral_from_json: expected [l,m,value]");
    const int l = e[0].get<int>(), m = e[1].get<int>();
    if (l < 0 || m < -l || m > l) throw std::domain_error("spectral_from_json: invalid (l,m)");
    t.emplace_back(l, m, e[2].get<double>());
    L = std::max(L, l);
  }
  return SpectralFunction::from_triples(L, t);
}

void write_csv(std::ostream& os, const GridFunction& g) {
  for (int i = 0; i < g.n_lat; ++i) {
    for (int j = 0; j < g.n_lon; ++j) os << (j ? "," : "") << fmt::format("{:.17g}", g(i, j));
    os << '\n';
  }
}

GridFunction grid_from_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::domain_error("grid_from_csv: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::domain_error("grid_from_csv: empty input");
  GridFunction g(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < g.n_lat; ++i)
    for (int j = 0; j < g.n_lon; ++j) g(i, j) = rows[i][j];
  return g;
}

}  // namespace dtheta
