// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dtheta/bracket.hpp"
#include "dtheta/curvature.hpp"
#include "dtheta/euler_flow.hpp"
#include "dtheta/metrics.hpp"
#include "dtheta/rot3d.hpp"
#include "dtheta/s3_geometry.hpp"
#include "test_support.hpp"

using namespace dtheta;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Model model;
const Spectrum spectrum = Spectrum::measure(model, 24);
constexpr auto R = MetricKind::right_invariant_L2;
constexpr auto B = MetricKind::biinvariant_hamiltonian;

double l2(const SpectralFunction& f) { return std::sqrt(model.fiber_factor() * f.coeff_norm2()); }

Verdict axiom_suite() {
  const auto t0 = Clock::now();
  const AxiomReport rep = verify_axioms(model, random_points(1000, 1), 1e-10, 1);
  const double secs = seconds_since(t0);
  double worst = 0.0;
  int passed = 0;
  for (const auto& p : rep.properties) {
    worst = std::max(worst, p.max_residual);
    passed += p.pass;
  }
  return {rep.properties.size() == 14 && rep.all_pass() && secs < 10.0,
          fmt::format("{}/14 properties, worst residual {:.2e} (tol 1e-10), {:.2f} s (limit 10 s)", passed, worst, secs)};
}

Verdict homomorphism() {
  std::mt19937_64 rng(2);
  const auto pts = random_points(10, 2);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const SpectralFunction f = testing::random_function(rng, 8, 2);
    const SpectralFunction h = testing::random_function(rng, 8, 2);
    worst = std::max(worst, verify_homomorphism(model, f, h, pts));
  }
  return {worst < 1e-6, fmt::format("50 pairs, L = 8, max |[X_f,X_h] - X_[f,h]| = {:.2e} (tol 1e-6)", worst)};
}

Verdict jacobi() {
  std::mt19937_64 rng(3);
  const int L = 8;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const SpectralFunction f = testing::random_function(rng, L, 2);
    const SpectralFunction h = testing::random_function(rng, L, 2);
    const SpectralFunction k = testing::random_function(rng, L, 2);
    auto br = [&](const SpectralFunction& a, const SpectralFunction& b) { return lagrange_bracket(model, a, b); };
    worst = std::max(worst, l2(br(f, br(h, k)) + br(h, br(k, f)) + br(k, br(f, h))));
  }
  return {worst < 1e-8, fmt::format("50 triples, max L2 Jacobiator {:.2e} (tol 1e-8)", worst)};
}

Verdict metric_relation() {
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const SpectralFunction f = testing::random_function(rng, 4, 4);
    const SpectralFunction h = testing::random_function(rng, 4, 4);
    const double fields = inner(model, spectrum, R, f, h, MetricPath::quadrature);
    worst = std::max(worst, std::abs(fields - inner(model, spectrum, B, helmholtz(spectrum, f), h)));
  }
  return {worst < 1e-9, fmt::format("100 pairs, max |(X_f,X_h) - <X_(f+Lap f),X_h>| = {:.2e} (tol 1e-9)", worst)};
}

Verdict biinvariance() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const SpectralFunction f = testing::random_function(rng, 4, 4);
    const SpectralFunction h = testing::random_function(rng, 4, 4);
    const SpectralFunction k = testing::random_function(rng, 4, 4);
    worst = std::max(worst, std::abs(inner(model, spectrum, B, lagrange_bracket(model, k, f), h) +
                                     inner(model, spectrum, B, f, lagrange_bracket(model, k, h))));
  }
  return {worst < 1e-9, fmt::format("100 triples, max |<[k,f],h> + <f,[k,h]>| = {:.2e} (tol 1e-9)", worst)};
}

struct Drift {
  double T = 0.0, I2 = 0.0, I3 = 0.0;
};

Drift measure_drift(const EulerFlow& flow, const FlowState& s0, double dt) {
  const Trajectory tr = flow.evolve(s0, {dt, 1.0, 1, 3, 0});
  const InvariantSample& a = tr.log.front();
  Drift d;
  for (const auto& s : tr.log) {
    d.T = std::max(d.T, std::abs(s.T - a.T) / std::abs(a.T));
    d.I2 = std::max(d.I2, std::abs(s.I[1] - a.I[1]) / std::abs(a.I[1]));
    d.I3 = std::max(d.I3, std::abs(s.I[2] - a.I[2]) / std::abs(a.I[2]));
  }
  return d;
}

Verdict euler_conservation() {
  const auto t0 = Clock::now();
  const int L = 8;
  std::mt19937_64 rng(6);
  const SpectralFunction f = testing::random_function(rng, L, 2, 0, 10.0);
  const EulerFlow flow(model, spectrum, L);
  const FlowState s0{helmholtz(spectrum, f), 0.0};
  const Drift d1 = measure_drift(flow, s0, 1e-3);
  const Drift d2 = measure_drift(flow, s0, 5e-4);
  const double secs = seconds_since(t0);
  const double ratio_T = d1.T / d2.T, ratio_I2 = d1.I2 / d2.I2;
  const bool drift_ok = d1.T < 1e-6 && d1.I2 < 1e-6 && d1.I3 < 1e-6;
  const bool ratio_ok = ratio_T >= 10.0 && ratio_T <= 22.0 && ratio_I2 >= 10.0 && ratio_I2 <= 22.0;
  return {drift_ok && ratio_ok && secs < 60.0,
          fmt::format("drift T {:.2e}, I_2 {:.2e}, I_3 {:.2e} (tol 1e-6) [{}]; dt-halving ratio T {:.1f}, I_2 {:.1f} "
                      "(required [10, 22]) [{}]; {:.1f} s (limit 60 s)",
                      d1.T, d1.I2, d1.I3, drift_ok ? "ok" : "over", ratio_T, ratio_I2, ratio_ok ? "ok" : "outside",
                      secs)};
}

Verdict equilibria() {
  const int L = 8;
  const EulerFlow flow(model, spectrum, L);
  double residual = 0.0, change = 0.0;
  for (int i = 0; i < num_coeffs(L); ++i) {
    const SpectralFunction e = SpectralFunction::mode(L, degree_of(i), order_of(i), 3.0);
    residual = std::max(residual, flow.stationarity_residual(e));
  }
  for (int l = 1; l <= L; l += 3) {
    const FlowState s0{SpectralFunction::mode(L, l, -l + 1, 2.0), 0.0};
    const Trajectory tr = flow.evolve(s0, {1e-2, 1.0, 100, 1, 0});
    for (int i = 0; i < s0.h.size(); ++i) change = std::max(change, std::abs(tr.final_state.h[i] - s0.h[i]));
  }
  return {residual < 1e-12 && change < 1e-12,
          fmt::format("{} modes, max stationarity residual {:.2e} (tol 1e-12), max coefficient change {:.2e}",
                      num_coeffs(L), residual, change)};
}

Verdict curvature_consistency() {
  std::mt19937_64 rng(8);
  const int L = 3;
  double path_dev = 0.0, min_biinv = 0.0, xi_max = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int a = 1 + int(rng() % L), b = 1 + int(rng() % L);
    const SpectralFunction f = testing::random_function(rng, L, a, a);
    const SpectralFunction h = testing::random_function(rng, L, b, b);
    const SectionPlane p(model, spectrum, f, h, R);
    const double k1 = k_right_invariant(model, spectrum, p, CurvaturePath::covariant_assembly);
    const double k2 = k_right_invariant(model, spectrum, p, CurvaturePath::bracket_integrals);
    const double k3 = k_eigen(model, spectrum, f, h, spectrum.alpha(a), spectrum.alpha(b));
    path_dev = std::max({path_dev, std::abs(k1 - k2), std::abs(k1 - k3), std::abs(k2 - k3)});
    min_biinv = std::min(min_biinv, k_biinvariant(model, SectionPlane(model, spectrum, f, h, B)));
    const SpectralFunction g = testing::random_function(rng, L, L);
    min_biinv = std::min(min_biinv, k_biinvariant(model, SectionPlane(model, spectrum, g, f, B)));
    const SpectralFunction one = SpectralFunction::constant(L, 1.0);
    xi_max = std::max({xi_max, std::abs(k_right_invariant(model, spectrum, SectionPlane(model, spectrum, one, g, R))),
                       std::abs(k_biinvariant(model, SectionPlane(model, spectrum, one, g, B)))});
  }
  return {path_dev < 1e-8 && min_biinv >= 0.0 && xi_max < 1e-10,
          fmt::format("20 eigen-pairs, max pairwise path difference {:.2e} (tol 1e-8); min bi-invariant K {:.2e}; "
                      "max |K| on xi-planes {:.2e} (tol 1e-10)",
                      path_dev, min_biinv, xi_max)};
}

Verdict structural_sign() {
  const int L = 3;
  const StructureConstants C = structure_constants(model, L);
  std::mt19937_64 rng(9);
  std::vector<std::pair<int, int>> pairs;
  while (pairs.size() < 20) {
    const int j = 1 + int(rng() % (num_coeffs(L) - 1)), k = 1 + int(rng() % (num_coeffs(L) - 1));
    if (j != k && !C.row(j, k).empty()) pairs.emplace_back(j, k);
  }
  try {
    const SignResolution s = resolve_structural_sign(model, spectrum, C, pairs, 1e-8);
    double dev = 0.0;
    for (const auto& [j, k] : pairs) {
      const double ke = k_eigen(model, spectrum, SpectralFunction::mode(L, degree_of(j), order_of(j)),
                                SpectralFunction::mode(L, degree_of(k), order_of(k)), spectrum.alpha(degree_of(j)),
                                spectrum.alpha(degree_of(k)));
      dev = std::max(dev, std::abs(std::abs(k_structural(C, spectrum, j, k, s.sign)) - std::abs(ke)));
    }
    return {dev < 1e-8, fmt::format("20 pairs, resolved sign {:+d}, max ||K_struct| - |K_eigen|| {:.2e} (tol 1e-8); "
                                    "residual with +1: {:.2e}, with -1: {:.2e}",
                                    s.sign, dev, s.residual_plus, s.residual_minus)};
  } catch (const std::runtime_error& e) {
    return {false, e.what()};
  }
}

Verdict rot_suite_check() {
  const auto t0 = Clock::now();
  RotSuiteConfig cfg;
  cfg.L = 8;
  cfg.n_points = 500;
  cfg.n_pairs = 100;
  const RotReport rep = rot_suite(model, cfg);
  const double secs = seconds_since(t0);
  std::string detail;
  for (const auto& c : rep.checks)
    detail += fmt::format("{} {:.1e}/{:.0e}{}; ", c.id, c.max_residual, c.tolerance, c.pass ? "" : " FAIL");
  return {rep.all_pass() && secs < 120.0, detail + fmt::format("{:.1f} s (limit 120 s)", secs)};
}

Verdict determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dtheta_acceptance";
  fs::create_directories(dir);
  const std::vector<std::string> runs = {
      "axioms --L 8 --seed 1", "brackets --L 3", "curvature --degree-cutoff 2",
      "evolve --L 8 --t-end 0.1 --seed 4", "rot --L 6 --points 100", "calibrate"};
  int identical = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    std::string bytes[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / fmt::format("run{}_{}.out", r, rep);
      const std::string cmd = fmt::format("\"{}\" {} --out \"{}\"", DTHETA_CLI_PATH, runs[r], out.string());
      if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
      std::ifstream is(out, std::ios::binary);
      bytes[rep].assign(std::istreambuf_iterator<char>(is), {});
    }
    identical += (!bytes[0].empty() && bytes[0] == bytes[1]);
  }
  fs::remove_all(dir);
  return {identical == int(runs.size()),
          fmt::format("{}/{} commands byte-identical across two process runs", identical, runs.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"axiom suite", axiom_suite},
      {"algebra homomorphism", homomorphism},
      {"Jacobi identity", jacobi},
      {"metric relation", metric_relation},
      {"bi-invariance", biinvariance},
      {"Euler flow conservation", euler_conservation},
      {"equilibria", equilibria},
      {"curvature consistency", curvature_consistency},
      {"structure-constant sign", structural_sign},
      {"curl suite", rot_suite_check},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Verdict v = criteria[i].second();
    failed += !v.pass;
    fmt::print("[{}] {:>2}. {}: {}\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
