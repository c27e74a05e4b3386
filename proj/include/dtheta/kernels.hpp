#pragma once

// Spherical-harmonic transform kernels. Every kernel has a serial reference
// path and an OpenMP path; both visit each output element with the same
// summation order, so their results are bitwise identical.

#include <span>
#include <vector>

namespace dtheta {

enum class Exec { serial, parallel };

/// Legendre data on the latitudes of a grid, triangular in (l, m), row-major in latitude.
struct LegendreTable {
  int L = 0;
  int n_lat = 0;
  std::vector<double> value;
  std::vector<double> dtheta;
  std::vector<double> over_sin;
};

/// cos(m φ_j), sin(m φ_j) for 0 <= m <= M, row-major in m.
struct TrigTable {
  int M = 0;
  int n_lon = 0;
  std::vector<double> cos;
  std::vector<double> sin;
};

enum class SynthesisMode { value, dtheta, dphi_over_sin };

/// Real coefficients indexed l² + l + m (degree <= L) to grid values [lat][lon].
void synthesize_kernel(Exec exec, int L, std::span<const double> coeffs, const LegendreTable& leg,
                       const TrigTable& trig, SynthesisMode mode, std::span<double> out);

/// Quadrature projection of grid values onto degrees <= L_out.
/// weights[i] are the latitude weights, dphi the longitude spacing.
void analyze_kernel(Exec exec, int L_out, std::span<const double> values,
                    const LegendreTable& leg, const TrigTable& trig,
                    std::span<const double> weights, double dphi, std::span<double> coeffs);

}  // namespace dtheta
