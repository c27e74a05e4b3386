#include "dtheta/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtheta {

namespace {

SpectralFunction br(const Model& model, const SpectralFunction& a, const SpectralFunction& b) {
  return lagrange_bracket(model, a, b);
}

// ∫ a b dμ by quadrature on a grid exact for the product.
double integral(const Model& model, const SpectralFunction& a, const SpectralFunction& b) {
  const int L = std::max(a.L(), b.L());
  const SphericalTransform tr(L, Grid::exact_for(std::max(a.L() + b.L(), 2 * L)), Exec::serial);
  GridFunction ga = tr.synthesize(a);
  const GridFunction gb = tr.synthesize(b);
  for (std::size_t n = 0; n < ga.values.size(); ++n) ga.values[n] *= gb.values[n];
  return model.fiber_factor() * tr.integrate(ga);
}

void require_spectrum(const Spectrum& spectrum, int L) {
  if (spectrum.L() < L) throw std::domain_error("curvature: spectrum does not cover band " + std::to_string(L));
}

}  // namespace

SectionPlane::SectionPlane(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
                           const SpectralFunction& h, MetricKind kind)
    : kind_(kind) {
  const int L = std::max(f.L(), h.L());
  auto ip = [&](const SpectralFunction& a, const SpectralFunction& b) { return inner(model, spectrum, kind, a, b); };
  const SpectralFunction fL = f.with_band(L), hL = h.with_band(L);
  const double nf = ip(fL, fL), nh = ip(hL, hL);
  if (!(nf > 0.0) || !(nh > 0.0)) throw std::domain_error("SectionPlane: zero vector");
  f_ = (1.0 / std::sqrt(nf)) * fL;
  SpectralFunction perp = hL - ip(hL, f_) * f_;
  const double np = ip(perp, perp);
  if (np <= 1e-20 * nh) throw std::domain_error("SectionPlane: degenerate plane");
  h_ = (1.0 / std::sqrt(np)) * perp;
}

double k_biinvariant(const Model& model, const SectionPlane& plane) {
  if (plane.kind() != MetricKind::biinvariant_hamiltonian)
    throw std::domain_error("k_biinvariant: plane is not orthonormal in the bi-invariant metric");
  const SpectralFunction b = br(model, plane.f(), plane.h());
  return 0.25 * model.fiber_factor() * b.coeff_norm2();
}

ProjectedCovariant projected_covariant(const Model& model, const Spectrum& spectrum,
                                       const SpectralFunction& f, const SpectralFunction& h) {
  require_spectrum(spectrum, f.L() + h.L());
  const SpectralFunction Df = helmholtz(spectrum, f), Dh = helmholtz(spectrum, h);
  const SpectralFunction Ds = 0.5 * (helmholtz(spectrum, br(model, f, h)) + br(model, f, Dh) + br(model, h, Df));
  const SpectralFunction Dq = br(model, f, laplacian(spectrum, h)) - br(model, laplacian(spectrum, f), h);
  return {inverse_helmholtz(spectrum, Ds), inverse_helmholtz(spectrum, Dq)};
}

double k_right_invariant(const Model& model, const Spectrum& spectrum, const SectionPlane& plane,
                         CurvaturePath path) {
  if (plane.kind() != MetricKind::right_invariant_L2)
    throw std::domain_error("k_right_invariant: plane is not orthonormal in the right-invariant metric");
  const SpectralFunction& f = plane.f();
  const SpectralFunction& h = plane.h();
  const SpectralFunction fh = br(model, f, h);

  if (path == CurvaturePath::bracket_integrals) {
    require_spectrum(spectrum, 2 * f.L());
    const SpectralFunction Lf = laplacian(spectrum, f), Lh = laplacian(spectrum, h);
    const SpectralFunction w = br(model, f, Lh) - br(model, Lf, h);
    return 0.25 * integral(model, fh, fh)                                                   //
           - 0.75 * integral(model, fh, laplacian(spectrum, fh))                            //
           + 0.5 * integral(model, fh, br(model, Lf, h) + br(model, f, Lh))                 //
           - integral(model, br(model, f, Lf), inverse_helmholtz(spectrum, br(model, h, Lh)))  //
           + 0.25 * integral(model, w, inverse_helmholtz(spectrum, w));
  }

  require_spectrum(spectrum, 3 * f.L());
  auto R = [&](const SpectralFunction& a, const SpectralFunction& b) {
    return inner(model, spectrum, MetricKind::right_invariant_L2, a, b);
  };
  const SpectralFunction s_ff = projected_covariant(model, spectrum, f, f).s;
  const SpectralFunction s_hh = projected_covariant(model, spectrum, h, h).s;
  const SpectralFunction q = projected_covariant(model, spectrum, f, h).q;
  return -0.75 * R(fh, fh) - 0.5 * R(br(model, f, fh), h) - 0.5 * R(br(model, h, br(model, h, f)), f) -
         R(s_ff, s_hh) + 0.25 * R(q, q);
}

double k_eigen(const Model& model, const Spectrum& spectrum, const SpectralFunction& f,
               const SpectralFunction& h, double alpha, double beta) {
  for (const auto& [u, a] : {std::pair{&f, alpha}, std::pair{&h, beta}}) {
    const SpectralFunction r = laplacian(spectrum, *u) - a * (*u);
    if (std::sqrt(r.coeff_norm2()) > 1e-10 * std::max(1.0, std::abs(a)) * std::sqrt(u->coeff_norm2()))
      throw std::domain_error("k_eigen: input is not a Laplace eigenfunction with the given eigenvalue");
  }
  const SectionPlane plane(model, spectrum, f, h, MetricKind::right_invariant_L2);
  const SpectralFunction fh = br(model, plane.f(), plane.h());
  require_spectrum(spectrum, fh.L());
  return -0.75 * integral(model, fh, laplacian(spectrum, fh)) +
         0.25 * (1.0 + 2.0 * (alpha + beta)) * integral(model, fh, fh) +
         0.25 * (alpha - beta) * (alpha - beta) * integral(model, fh, inverse_helmholtz(spectrum, fh));
}

double k_structural(const StructureConstants& C, const Spectrum& spectrum, int j, int k, int sign) {
  require_spectrum(spectrum, 2 * C.L);
  const double a = spectrum.alpha(degree_of(j)), b = spectrum.alpha(degree_of(k));
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (const auto& [i, c] : C.row(j, k)) {
    if (i == 0) continue;
    const double ai = spectrum.alpha(degree_of(i));
    s0 += c * c;
    s1 += ai * c * c;
    s2 += c * c / (1.0 + ai);
  }
  const double bracketed = -0.75 * s1 + 0.25 * (1.0 + 2.0 * (a + b)) * s0 + 0.25 * (a - b) * (a - b) * s2;
  return sign * bracketed / ((1.0 + a) * (1.0 + b));
}

SignResolution resolve_structural_sign(const Model& model, const Spectrum& spectrum,
                                       const StructureConstants& C,
                                       const std::vector<std::pair<int, int>>& pairs, double tol) {
  SignResolution r;
  for (const auto& [j, k] : pairs) {
    const int lj = degree_of(j), lk = degree_of(k);
    const double ke = k_eigen(model, spectrum, SpectralFunction::mode(C.L, lj, order_of(j)),
                              SpectralFunction::mode(C.L, lk, order_of(k)), spectrum.alpha(lj), spectrum.alpha(lk));
    r.residual_plus = std::max(r.residual_plus, std::abs(k_structural(C, spectrum, j, k, +1) - ke));
    r.residual_minus = std::max(r.residual_minus, std::abs(k_structural(C, spectrum, j, k, -1) - ke));
  }
  if (r.residual_plus < tol && r.residual_plus <= r.residual_minus)
    r.sign = +1;
  else if (r.residual_minus < tol)
    r.sign = -1;
  else
    throw std::runtime_error("resolve_structural_sign: neither sign reproduces the eigenfunction formula");
  return r;
}

std::vector<CurvatureRow> curvature_table(const Model& model, int degree_cutoff, Exec exec) {
  if (degree_cutoff < 1) throw std::domain_error("curvature_table: degree cutoff must be >= 1");
  const Spectrum spectrum = Spectrum::measure(model, 2 * degree_cutoff);
  const StructureConstants C = structure_constants(model, degree_cutoff, exec);
  const int n = num_coeffs(degree_cutoff);

  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  const int sign = resolve_structural_sign(model, spectrum, C, pairs, 1e-8).sign;

  std::vector<CurvatureRow> rows(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [j, k] = pairs[p];
    const SpectralFunction fj = SpectralFunction::mode(degree_cutoff, degree_of(j), order_of(j));
    const SpectralFunction fk = SpectralFunction::mode(degree_cutoff, degree_of(k), order_of(k));
    const double a = spectrum.alpha(degree_of(j)), b = spectrum.alpha(degree_of(k));
    CurvatureRow& row = rows[p];
    row.j = j;
    row.k = k;
    row.k_biinvariant = k_biinvariant(model, SectionPlane(model, spectrum, fj, fk, MetricKind::biinvariant_hamiltonian));
    row.k_right = k_right_invariant(model, spectrum, SectionPlane(model, spectrum, fj, fk, MetricKind::right_invariant_L2));
    row.k_eigen = k_eigen(model, spectrum, fj, fk, a, b);
    row.k_structural = k_structural(C, spectrum, j, k, sign);
    row.sign_flag = sign;
  }
  return rows;
}

}  // namespace dtheta
