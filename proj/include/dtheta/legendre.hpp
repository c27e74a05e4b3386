#pragma once

#include <cstddef>
#include <vector>

namespace dtheta {

/// Offset of (l, m), 0 <= m <= l, in a triangular table.
constexpr std::size_t tri_index(int l, int m) {
  return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
}
constexpr std::size_t tri_size(int L) { return tri_index(L + 1, 0); }

/// Orthonormal associated Legendre functions with Condon-Shortley phase,
///   P̄_l^m = sqrt((2l+1)/(4π) (l-m)!/(l+m)!) P_l^m(cos θ),
/// together with dP̄/dθ and P̄/sin θ (m >= 1; regular at the poles).
struct LegendreColumn {
  std::vector<double> value;
  std::vector<double> dtheta;
  std::vector<double> over_sin;
};

LegendreColumn legendre_column(int L, double cos_theta, double sin_theta);

}  // namespace dtheta
