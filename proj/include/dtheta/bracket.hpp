#pragma once

// Lagrange bracket of contact Hamiltonians, computed on the Hopf base as a
// rescaled Poisson bracket, and its structure constants.

#include <map>
#include <utility>
#include <vector>

#include "dtheta/harmonics.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

/// κ with [f,h] = κ x·(∇F × ∇H) for f = F∘π, h = H∘π.
double bracket_scale(const Model& model);

/// Pseudo-spectral bracket of inputs of degree <= L_in, projected onto degrees <= L_out.
/// The quadrature grid integrates degree 2 L_in + L_out exactly, so the projection is exact.
class BracketOperator {
 public:
  BracketOperator(const Model& model, int L_in, int L_out, Exec exec = Exec::parallel);

  int L_in() const { return L_in_; }
  int L_out() const { return L_out_; }
  const SphericalTransform& transform() const { return tr_; }

  SpectralFunction operator()(const SpectralFunction& f, const SpectralFunction& h) const;
  /// Point values of [f,h] on the internal grid.
  GridFunction on_grid(const SpectralFunction& f, const SpectralFunction& h) const;

 private:
  int L_in_, L_out_;
  double scale_;
  SphericalTransform tr_;
};

/// [f,h] = X_f(h). The default output band is f.L() + h.L(), which loses nothing.
SpectralFunction lagrange_bracket(const Model& model, const SpectralFunction& f,
                                  const SpectralFunction& h, int L_out = -1);

/// c^i_{jk} = ⟨[f_j, f_k], f_i⟩ for the L²(M)-orthonormal basis f_i = Y_i / √V.
struct StructureConstants {
  using Row = std::vector<std::pair<int, double>>;

  int L = 0;
  /// Ordered pairs (j,k) with j != k; (k,j) holds the negated row.
  std::map<std::pair<int, int>, Row> entries;

  double value(int i, int j, int k) const;
  const Row& row(int j, int k) const;
  std::size_t nonzeros() const;
};

inline constexpr double kStructureDropTol = 1e-13;

StructureConstants structure_constants(const Model& model, int L, Exec exec = Exec::parallel,
                                       double drop_tol = kStructureDropTol);

/// max over the sample of ‖[X_f, X_h] − X_{[f,h]}‖, the left side by frame finite differences.
double verify_homomorphism(const Model& model, const SpectralFunction& f, const SpectralFunction& h,
                           const std::vector<PointS3>& sample);

}  // namespace dtheta
