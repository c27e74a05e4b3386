#include "dtheta/bracket.hpp"

#include <algorithm>
#include <cmath>

#include "dtheta/contact.hpp"
#include "dtheta/frame_calculus.hpp"

namespace dtheta {

double bracket_scale(const Model& model) {
  // E2 f = -2 s2 ∇F·R(k), E3 f = 2 s3 ∇F·R(j) and φE2 = σ E3.
  return -4.0 * model.scale(1) * model.scale(2) * model.conventions().phi_sign;
}

namespace {
int grid_degree(int L_in, int L_out) { return std::max(2 * L_in + L_out, 2 * std::max(L_in, L_out)); }
}  // namespace

BracketOperator::BracketOperator(const Model& model, int L_in, int L_out, Exec exec)
    : L_in_(L_in),
      L_out_(L_out),
      scale_(bracket_scale(model)),
      tr_(std::max(L_in, L_out), Grid::exact_for(grid_degree(L_in, L_out)), exec) {
  if (L_in < 0 || L_out < 0) throw std::domain_error("BracketOperator: negative band limit");
}

GridFunction BracketOperator::on_grid(const SpectralFunction& f, const SpectralFunction& h) const {
  if (f.L() > L_in_ || h.L() > L_in_) throw std::domain_error("BracketOperator: input band too large");
  const GridFunction ft = tr_.synthesize_dtheta(f), fp = tr_.synthesize_dphi_over_sin(f);
  const GridFunction ht = tr_.synthesize_dtheta(h), hp = tr_.synthesize_dphi_over_sin(h);
  GridFunction out(ft.n_lat, ft.n_lon);
  for (std::size_t n = 0; n < out.values.size(); ++n)
    out.values[n] = scale_ * (ft.values[n] * hp.values[n] - fp.values[n] * ht.values[n]);
  return out;
}

SpectralFunction BracketOperator::operator()(const SpectralFunction& f, const SpectralFunction& h) const {
  return tr_.analyze(on_grid(f, h), L_out_);
}

SpectralFunction lagrange_bracket(const Model& model, const SpectralFunction& f,
                                  const SpectralFunction& h, int L_out) {
  const int L_in = std::max(f.L(), h.L());
  if (L_out < 0) L_out = f.L() + h.L();
  return BracketOperator(model, L_in, L_out)(f, h);
}

double StructureConstants::value(int i, int j, int k) const {
  auto it = entries.find({j, k});
  if (it == entries.end()) return 0.0;
  for (const auto& [idx, c] : it->second)
    if (idx == i) return c;
  return 0.0;
}

const StructureConstants::Row& StructureConstants::row(int j, int k) const {
  static const Row empty;
  auto it = entries.find({j, k});
  return it == entries.end() ? empty : it->second;
}

std::size_t StructureConstants::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [key, r] : entries) n += r.size();
  return n;
}

StructureConstants structure_constants(const Model& model, int L, Exec exec, double drop_tol) {
  if (L < 1) throw std::domain_error("structure_constants: L must be >= 1");
  const int n = num_coeffs(L);
  const double scale = bracket_scale(model);
  const double norm = 1.0 / std::sqrt(model.fiber_factor());
  const SphericalTransform tr(2 * L, Grid::exact_for(4 * L), Exec::serial);

  std::vector<GridFunction> dt(n), dp(n);
  for (int j = 0; j < n; ++j) {
    const SpectralFunction Y = SpectralFunction::mode(L, degree_of(j), order_of(j));
    dt[j] = tr.synthesize_dtheta(Y);
    dp[j] = tr.synthesize_dphi_over_sin(Y);
  }

  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  std::vector<StructureConstants::Row> rows(pairs.size());

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [j, k] = pairs[p];
    GridFunction g(dt[j].n_lat, dt[j].n_lon);
    for (std::size_t q = 0; q < g.values.size(); ++q)
      g.values[q] = scale * (dt[j].values[q] * dp[k].values[q] - dp[j].values[q] * dt[k].values[q]);
    const int l_max = degree_of(j) + degree_of(k);
    const SpectralFunction b = tr.analyze(g, l_max);
    for (int i = 0; i < b.size(); ++i) {
      const double c = b[i] * norm;
      if (std::abs(c) > drop_tol) rows[p].emplace_back(i, c);
    }
  }

  StructureConstants out;
  out.L = L;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (rows[p].empty()) continue;
    const auto [j, k] = pairs[p];
    StructureConstants::Row neg = rows[p];
    for (auto& e : neg) e.second = -e.second;
    out.entries[{j, k}] = std::move(rows[p]);
    out.entries[{k, j}] = std::move(neg);
  }
  return out;
}

double verify_homomorphism(const Model& model, const SpectralFunction& f, const SpectralFunction& h,
                           const std::vector<PointS3>& sample) {
  const FrameField Xf = contact_field(model, f), Xh = contact_field(model, h);
  const FrameField Xfh = contact_field(model, lagrange_bracket(model, f, h));
  double r = 0.0;
  for (const PointS3& p : sample) r = std::max(r, max_abs(lie_bracket_at(model, Xf, Xh, p) - Xfh(p)));
  return r;
}

}  // namespace dtheta
