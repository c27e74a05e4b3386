#include "dtheta/kernels.hpp"

#include <cmath>
#include <numbers>

#include "dtheta/legendre.hpp"

namespace dtheta {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

inline int cidx(int l, int m) { return l * l + l + m; }

// One latitude row of the synthesis.
void synthesize_row(int i, int L, std::span<const double> coeffs, const LegendreTable& leg,
                    const TrigTable& trig, SynthesisMode mode, std::span<double> out,
                    std::vector<double>& A, std::vector<double>& B) {
  const std::vector<double>& tab =
      mode == SynthesisMode::value ? leg.value
                                   : (mode == SynthesisMode::dtheta ? leg.dtheta : leg.over_sin);
  const double* row = tab.data() + static_cast<std::size_t>(i) * tri_size(leg.L);
  for (int m = 0; m <= L; ++m) {
    double a = 0.0, b = 0.0;
    for (int l = m; l <= L; ++l) {
      const double p = row[tri_index(l, m)];
      a += coeffs[cidx(l, m)] * p;
      if (m > 0) b += coeffs[cidx(l, -m)] * p;
    }
    A[m] = a;
    B[m] = b;
  }
  const int n_lon = trig.n_lon;
  double* dst = out.data() + static_cast<std::size_t>(i) * n_lon;
  for (int j = 0; j < n_lon; ++j) {
    double v = mode == SynthesisMode::dphi_over_sin ? 0.0 : A[0];
    for (int m = 1; m <= L; ++m) {
      const double c = trig.cos[static_cast<std::size_t>(m) * n_lon + j];
      const double s = trig.sin[static_cast<std::size_t>(m) * n_lon + j];
      if (mode == SynthesisMode::dphi_over_sin) {
        v += kSqrt2 * m * (B[m] * c - A[m] * s);
      } else {
        v += kSqrt2 * (A[m] * c + B[m] * s);
      }
    }
    dst[j] = v;
  }
}

void row_dft(int i, int M, std::span<const double> values, const TrigTable& trig,
             std::vector<double>& a, std::vector<double>& b) {
  const int n_lon = trig.n_lon;
  const double* src = values.data() + static_cast<std::size_t>(i) * n_lon;
  for (int m = 0; m <= M; ++m) {
    double sa = 0.0, sb = 0.0;
    const double* c = trig.cos.data() + static_cast<std::size_t>(m) * n_lon;
    const double* s = trig.sin.data() + static_cast<std::size_t>(m) * n_lon;
    for (int j = 0; j < n_lon; ++j) {
      sa += src[j] * c[j];
      sb += src[j] * s[j];
    }
    a[static_cast<std::size_t>(i) * (M + 1) + m] = sa;
    b[static_cast<std::size_t>(i) * (M + 1) + m] = sb;
  }
}

void project_degree(int l, int M, int n_lat, const LegendreTable& leg,
                    std::span<const double> weights, double dphi, const std::vector<double>& a,
                    const std::vector<double>& b, std::span<double> coeffs) {
  const std::size_t stride = tri_size(leg.L);
  for (int m = 0; m <= l; ++m) {
    double sa = 0.0, sb = 0.0;
    for (int i = 0; i < n_lat; ++i) {
      const double wp = weights[i] * leg.value[static_cast<std::size_t>(i) * stride + tri_index(l, m)];
      sa += wp * a[static_cast<std::size_t>(i) * (M + 1) + m];
      sb += wp * b[static_cast<std::size_t>(i) * (M + 1) + m];
    }
    if (m == 0) {
      coeffs[cidx(l, 0)] = dphi * sa;
    } else {
      coeffs[cidx(l, m)] = kSqrt2 * dphi * sa;
      coeffs[cidx(l, -m)] = kSqrt2 * dphi * sb;
    }
  }
}

}  // namespace

void synthesize_kernel(Exec exec, int L, std::span<const double> coeffs, const LegendreTable& leg,
                       const TrigTable& trig, SynthesisMode mode, std::span<double> out) {
  const int n_lat = leg.n_lat;
  if (exec == Exec::serial) {
    std::vector<double> A(L + 1), B(L + 1);
    for (int i = 0; i < n_lat; ++i) synthesize_row(i, L, coeffs, leg, trig, mode, out, A, B);
    return;
  }
#pragma omp parallel
  {
    std::vector<double> A(L + 1), B(L + 1);
#pragma omp for schedule(static)
    for (int i = 0; i < n_lat; ++i) synthesize_row(i, L, coeffs, leg, trig, mode, out, A, B);
  }
}

void analyze_kernel(Exec exec, int L_out, std::span<const double> values,
                    const LegendreTable& leg, const TrigTable& trig,
                    std::span<const double> weights, double dphi, std::span<double> coeffs) {
  const int n_lat = leg.n_lat;
  const int M = L_out;
  std::vector<double> a(static_cast<std::size_t>(n_lat) * (M + 1));
  std::vector<double> b(a.size());
  if (exec == Exec::serial) {
    for (int i = 0; i < n_lat; ++i) row_dft(i, M, values, trig, a, b);
    for (int l = 0; l <= L_out; ++l) project_degree(l, M, n_lat, leg, weights, dphi, a, b, coeffs);
    return;
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_lat; ++i) row_dft(i, M, values, trig, a, b);
#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l <= L_out; ++l) project_degree(l, M, n_lat, leg, weights, dphi, a, b, coeffs);
}

}  // namespace dtheta
