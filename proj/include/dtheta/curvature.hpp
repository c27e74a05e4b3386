#pragma once

// Sectional curvature of the contact group in the bi-invariant and the
// right-invariant metric.

#include <vector>

#include "dtheta/bracket.hpp"
#include "dtheta/harmonics.hpp"
#include "dtheta/metrics.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

/// Plane spanned by X_f and X_h, stored as a pair orthonormal in the chosen metric.
class SectionPlane {
 public:
  /// Gram–Schmidt in `kind`. Throws std::domain_error for linearly dependent inputs.
  SectionPlane(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
               const SpectralFunction& h, MetricKind kind);

  const SpectralFunction& f() const { return f_; }
  const SpectralFunction& h() const { return h_; }
  MetricKind kind() const { return kind_; }

 private:
  SpectralFunction f_, h_;
  MetricKind kind_;
};

/// ¼ ∫ [f,h]² dμ.
double k_biinvariant(const Model& model, const SectionPlane& plane);

/// Hamiltonians of projected covariant derivatives:
///   D s = ½ (D[f,h] + [f,Dh] + [h,Df]),   D q = [f,Δh] − [Δf,h].
struct ProjectedCovariant {
  SpectralFunction s;
  SpectralFunction q;
};
ProjectedCovariant projected_covariant(const Model& model, const Spectrum& spectrum,
                                       const SpectralFunction& f, const SpectralFunction& h);

enum class CurvaturePath {
  bracket_integrals,    // five bracket integrals, each by quadrature
  covariant_assembly,   // general right-invariant formula from projected covariant derivatives
};

/// Right-invariant sectional curvature. The spectrum must reach three times the input band.
double k_right_invariant(const Model& model, const Spectrum& spectrum, const SectionPlane& plane,
                         CurvaturePath path = CurvaturePath::bracket_integrals);

/// Simplified form for Laplace eigenfunctions Δf = αf, Δh = βh. The pair is orthonormalized
/// in the right-invariant metric first. Throws std::domain_error if either input is not an
/// eigenfunction with the stated eigenvalue.
double k_eigen(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
               const SpectralFunction& h, double alpha, double beta);

/// Curvature of the plane through the L²-normalized basis elements j, k from structure constants:
///   sign / ((1+α)(1+β)) · ( −¾ Σ α_i c_i² + (1+2(α+β))/4 Σ c_i² + (α−β)²/4 Σ c_i²/(1+α_i) ).
double k_structural(const StructureConstants& C, const Spectrum& spectrum, int j, int k, int sign);

/// Sign of the structure-constant form that reproduces k_eigen on the given basis pairs.
/// Returns +1 or −1; throws std::runtime_error if neither sign matches within tol.
struct SignResolution {
  int sign = 0;
  double residual_plus = 0.0;   // max |k_structural(+1) − k_eigen|
  double residual_minus = 0.0;  // max |k_structural(−1) − k_eigen|
};
SignResolution resolve_structural_sign(const Model& model, const Spectrum& spectrum,
                                       const StructureConstants& C,
                                       const std::vector<std::pair<int, int>>& pairs, double tol);

struct CurvatureRow {
  int j = 0, k = 0;
  double k_biinvariant = 0.0;
  double k_right = 0.0;       // bracket-integral path
  double k_eigen = 0.0;
  double k_structural = 0.0;  // with the resolved sign
  int sign_flag = 0;
};

/// All basis pairs j < k with degree <= degree_cutoff.
std::vector<CurvatureRow> curvature_table(const Model& model, int degree_cutoff,
                                          Exec exec = Exec::parallel);

}  // namespace dtheta
