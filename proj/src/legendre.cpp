#include "dtheta/legendre.hpp"

#include <cmath>
#include <numbers>

namespace dtheta {

LegendreColumn legendre_column(int L, double x, double s) {
  const std::size_t n = tri_size(L);
  // R_l^m = P̄_l^m / sin^m θ obeys the same l-recurrence as P̄ and has no
  // singularity at the poles.
  std::vector<double> R(n, 0.0);
  double diag = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int m = 0; m <= L; ++m) {
    if (m > 0) diag *= -std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    R[tri_index(m, m)] = diag;
    if (m + 1 <= L) R[tri_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * diag;
    for (int l = m + 2; l <= L; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      const double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                 (4.0 * (l - 1) * (l - 1) - 1.0));
      R[tri_index(l, m)] = a * (x * R[tri_index(l - 1, m)] - b * R[tri_index(l - 2, m)]);
    }
  }

  LegendreColumn col{std::vector<double>(n), std::vector<double>(n, 0.0),
                     std::vector<double>(n, 0.0)};
  for (int m = 0; m <= L; ++m) {
    const double sm = std::pow(s, m);
    const double sm1 = m > 0 ? std::pow(s, m - 1) : 0.0;
    for (int l = m; l <= L; ++l) {
      col.value[tri_index(l, m)] = R[tri_index(l, m)] * sm;
      if (m > 0) col.over_sin[tri_index(l, m)] = R[tri_index(l, m)] * sm1;
    }
  }
  // Ladder relation (Condon-Shortley phase):
  //   dP̄_l^m/dθ = ½ [ sqrt((l+m+1)(l-m)) P̄_l^{m+1} - sqrt((l+m)(l-m+1)) P̄_l^{m-1} ],
  // with P̄_l^{-1} = -P̄_l^1.
  for (int l = 0; l <= L; ++l) {
    for (int m = 0; m <= l; ++m) {
      const double up = m + 1 <= l ? col.value[tri_index(l, m + 1)] : 0.0;
      const double cu = std::sqrt(double(l + m + 1) * (l - m));
      if (m == 0) {
        col.dtheta[tri_index(l, 0)] = cu * up;
      } else {
        const double down = col.value[tri_index(l, m - 1)];
        const double cd = std::sqrt(double(l + m) * (l - m + 1));
        col.dtheta[tri_index(l, m)] = 0.5 * (cu * up - cd * down);
      }
    }
  }
  return col;
}

}  // namespace dtheta
