#pragma once

// Real spherical harmonics on the Hopf base, pseudo-spectral transforms, and
// the Laplace spectrum of ξ-invariant functions on M.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dtheta/kernels.hpp"
#include "dtheta/quaternion.hpp"

namespace dtheta {

class Model;

constexpr int num_coeffs(int L) { return (L + 1) * (L + 1); }
constexpr int coeff_index(int l, int m) { return l * l + l + m; }
/// Degree l of the basis element with flat index i.
int degree_of(int index);
/// Order m of the basis element with flat index i.
int order_of(int index);

/// Band-limited ξ-invariant function: coefficients on the real basis
///   Y_l0 = P̄_l^0,  Y_lm = √2 P̄_l^m cos mφ,  Y_l,-m = √2 P̄_l^m sin mφ  (m > 0),
/// orthonormal on the unit sphere.
class SpectralFunction {
 public:
  SpectralFunction() : SpectralFunction(0) {}
  explicit SpectralFunction(int L);
  SpectralFunction(int L, std::vector<double> coeffs);

  /// Single basis element Y_lm at band limit L.
  static SpectralFunction mode(int L, int l, int m, double value = 1.0);
  static SpectralFunction constant(int L, double c);
  /// Entries outside the band limit throw std::domain_error.
  static SpectralFunction from_triples(int L, const std::vector<std::tuple<int, int, double>>& t);

  int L() const { return L_; }
  int size() const { return static_cast<int>(c_.size()); }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  double at(int l, int m) const;
  double& at(int l, int m);
  const std::vector<double>& coeffs() const { return c_; }
  std::vector<double>& coeffs() { return c_; }

  /// Zero-padded or truncated copy at band limit L.
  SpectralFunction with_band(int L) const;
  bool mean_zero(double tol = 0.0) const { return std::abs(c_[0]) <= tol; }
  /// Highest degree with a coefficient above tol (-1 for the zero function).
  int effective_degree(double tol = 0.0) const;
  /// Sum of squared coefficients.
  double coeff_norm2() const;
  bool all_finite() const;

  SpectralFunction& operator+=(const SpectralFunction& o);
  SpectralFunction& operator-=(const SpectralFunction& o);
  SpectralFunction& operator*=(double s);
  friend SpectralFunction operator+(SpectralFunction a, const SpectralFunction& b) { return a += b; }
  friend SpectralFunction operator-(SpectralFunction a, const SpectralFunction& b) { return a -= b; }
  friend SpectralFunction operator*(double s, SpectralFunction a) { return a *= s; }

 private:
  int L_;
  std::vector<double> c_;
};

/// Gauss–Legendre in cos θ times equiangular in φ.
struct Grid {
  int n_lat = 0;
  int n_lon = 0;
  std::vector<double> cos_theta;
  std::vector<double> sin_theta;
  std::vector<double> weight;  // Gauss weights in cos θ
  std::vector<double> phi;
  double dphi = 0.0;

  Grid(int n_lat, int n_lon);
  /// Smallest grid integrating every polynomial of degree <= degree exactly.
  static Grid exact_for(int degree);
  /// Grid on which products of two band-L functions project exactly (3/2 rule).
  static Grid dealiased(int L) { return exact_for(3 * L); }

  Vec3 point(int i, int j) const;
  /// Largest polynomial degree integrated exactly.
  int exactness() const;
};

struct GridFunction {
  int n_lat = 0;
  int n_lon = 0;
  std::vector<double> values;  // [lat][lon]

  GridFunction() = default;
  GridFunction(int n_lat, int n_lon) : n_lat(n_lat), n_lon(n_lon), values(std::size_t(n_lat) * n_lon) {}
  double& operator()(int i, int j) { return values[std::size_t(i) * n_lon + j]; }
  double operator()(int i, int j) const { return values[std::size_t(i) * n_lon + j]; }
};

/// Transforms between SpectralFunction (degree <= L) and values on a grid.
class SphericalTransform {
 public:
  /// Throws std::domain_error if the grid cannot resolve degree L exactly.
  SphericalTransform(int L, Grid grid, Exec exec = Exec::parallel);

  int L() const { return L_; }
  const Grid& grid() const { return grid_; }

  GridFunction synthesize(const SpectralFunction& f) const;
  GridFunction synthesize_dtheta(const SpectralFunction& f) const;
  GridFunction synthesize_dphi_over_sin(const SpectralFunction& f) const;

  /// Quadrature projection onto degrees <= L_out (default L). Exact for band-limited
  /// inputs whenever degree(input) + L_out <= grid().exactness().
  SpectralFunction analyze(const GridFunction& g, int L_out = -1) const;

  /// ∫_{S²} g dΩ by the grid quadrature.
  double integrate(const GridFunction& g) const;

 private:
  GridFunction run(const SpectralFunction& f, SynthesisMode mode) const;

  int L_;
  Grid grid_;
  Exec exec_;
  LegendreTable leg_;
  TrigTable trig_;
};

/// Pointwise value of f at a unit vector x.
double evaluate(const SpectralFunction& f, const Vec3& x);
/// Tangential Euclidean gradient of f on the unit sphere at x.
Vec3 surface_gradient(const SpectralFunction& f, const Vec3& x);

/// Laplace eigenvalues α_l of the degree-l pullbacks under the M-Laplacian Δ = -div∘grad.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> alpha);

  /// α_l = ∫_M |grad Y_l0|² dμ / ∫_M Y_l0² dμ by quadrature on lifted base nodes.
  static Spectrum measure(const Model& model, int L);

  int L() const { return static_cast<int>(alpha_.size()) - 1; }
  double alpha(int l) const { return alpha_.at(l); }
  const std::vector<double>& values() const { return alpha_; }

 private:
  std::vector<double> alpha_;
};

/// Δ, (1+Δ)⁻¹, (1+Δ), Δ⁻¹ acting diagonally.
SpectralFunction laplacian(const Spectrum& s, const SpectralFunction& f);
SpectralFunction helmholtz(const Spectrum& s, const SpectralFunction& f);          // D = 1+Δ
SpectralFunction inverse_helmholtz(const Spectrum& s, const SpectralFunction& f);  // D⁻¹
/// Throws std::domain_error unless f has zero mean.
SpectralFunction inverse_laplacian(const Spectrum& s, const SpectralFunction& f, double tol = 1e-12);

// Serialization: JSON array of [l, m, value] triples; grids as CSV matrices.
std::string to_json(const SpectralFunction& f);
SpectralFunction spectral_from_json(const std::string& text);
void write_csv(std::ostream& os, const GridFunction& g);
GridFunction grid_from_csv(std::istream& is);

}  // namespace dtheta
