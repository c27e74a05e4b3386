#include "dtheta/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "dtheta/bracket.hpp"
#include "dtheta/curvature.hpp"
#include "dtheta/euler_flow.hpp"
#include "dtheta/rot3d.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {"axioms", "brackets", "curvature", "evolve", "rot", "calibrate"};

const std::map<std::string, double> kDefaultTolerances = {
    {"axioms", 1e-10},     {"calibrate", 1e-10}, {"bracket", 1e-12}, {"curvature", 1e-8},
    {"drift", 1e-6},       {"rot_fd", 1e-6},     {"rot_exact", 1e-8},
};

std::string default_format(const std::string& command) {
  return (command == "brackets" || command == "curvature" || command == "evolve") ? "csv" : "json";
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

json property_json(const std::string& id, const std::string& statement, double r, double tol, bool pass) {
  return json{{"id", id}, {"statement", statement}, {"max_residual", r}, {"tolerance", tol}, {"pass", pass}};
}

// Writes the report and reports failures by name.
struct Result {
  std::string body;
  std::vector<std::string> failures;
};

Result run_axioms(const RunConfig& cfg) {
  const Model model;
  const double tol = cfg.tolerance("axioms");
  const AxiomReport rep = verify_axioms(model, random_points(cfg.points, cfg.seed), tol, cfg.seed);
  Result r;
  json props = json::array();
  std::string csv = "id,statement,max_residual,tolerance,pass\n";
  for (const auto& p : rep.properties) {
    props.push_back(property_json(std::to_string(p.id), p.statement, p.max_residual, p.tolerance, p.pass));
    csv += fmt::format("{},\"{}\",{},{},{}\n", p.id, p.statement, num(p.max_residual), num(p.tolerance), p.pass);
    if (!p.pass) r.failures.push_back(fmt::format("axiom {} residual {}", p.id, num(p.max_residual)));
  }
  if (cfg.format == "csv") {
    r.body = csv;
  } else {
    const json j{{"command", "axioms"}, {"seed", cfg.seed}, {"points", cfg.points},
                 {"conventions",
                  {{"d_factor", rep.conventions.d_factor},
                   {"orientation", rep.conventions.orientation},
                   {"phi_sign", rep.conventions.phi_sign}}},
                 {"properties", props}, {"pass", rep.all_pass()}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Result run_calibrate(const RunConfig& cfg) {
  const double tol = cfg.tolerance("calibrate");
  const Calibration cal = calibrate_conventions(random_points(std::min(cfg.points, 200), cfg.seed), tol);
  const Model model(cal.chosen);
  const Spectrum spectrum = Spectrum::measure(model, 1);
  // [u_x, u_z] = s u_y for the unit-sphere-normalized degree-1 harmonics
  const SpectralFunction b = lagrange_bracket(model, SpectralFunction::mode(1, 1, 1), SpectralFunction::mode(1, 1, 0));
  const double s = b.at(1, -1);
  Result r;
  const std::vector<std::pair<std::string, json>> values = {
      {"d_factor", cal.chosen.d_factor},
      {"orientation", cal.chosen.orientation},
      {"phi_sign", cal.chosen.phi_sign},
      {"alpha_1", spectrum.alpha(1)},
      {"bracket_scale_s", s},
      {"base_bracket_factor", bracket_scale(model)},
      {"fiber_length", model.fiber_length()},
      {"volume", model.volume()},
  };
  if (cfg.format == "csv") {
    r.body = "key,value\n";
    for (const auto& [k, v] : values) r.body += k + "," + (v.is_number_float() ? num(v.get<double>()) : v.dump()) + "\n";
  } else {
    json j{{"command", "calibrate"}, {"tolerance", tol}};
    for (const auto& [k, v] : values) j[k] = v;
    json cands = json::array();
    for (const auto& c : cal.candidates)
      cands.push_back({{"d_factor", c.conventions.d_factor},
                       {"orientation", c.conventions.orientation},
                       {"phi_sign", c.conventions.phi_sign},
                       {"axioms_pass", c.axioms_pass},
                       {"rot_xi_residual", c.rot_xi_residual},
                       {"accepted", c.accepted}});
    j["candidates"] = cands;
    r.body = j.dump(2) + "\n";
  }
  return r;
}

Result run_brackets(const RunConfig& cfg) {
  const Model model;
  const StructureConstants C = structure_constants(model, cfg.L);
  const double tol = cfg.tolerance("bracket");
  Result r;
  double antisym = 0.0;
  for (const auto& [key, row] : C.entries)
    for (const auto& [i, c] : row) antisym = std::max(antisym, std::abs(c + C.value(i, key.second, key.first)));
  if (antisym >= tol) r.failures.push_back("antisymmetry residual " + num(antisym));
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& [key, row] : C.entries)
      for (const auto& [i, c] : row) rows.push_back({i, key.first, key.second, c});
    const json j{{"command", "brackets"}, {"L", cfg.L}, {"drop_tolerance", kStructureDropTol},
                 {"antisymmetry", property_json("antisymmetry", "c^i_jk + c^i_kj = 0", antisym, tol, antisym < tol)},
                 {"entries", rows}};
    r.body = j.dump(2) + "\n";
  } else {
    r.body = "i,j,k,value\n";
    for (const auto& [key, row] : C.entries)
      for (const auto& [i, c] : row) r.body += fmt::format("{},{},{},{}\n", i, key.first, key.second, num(c));
  }
  return r;
}

Result run_curvature(const RunConfig& cfg) {
  const Model model;
  const double tol = cfg.tolerance("curvature");
  const auto rows = curvature_table(model, cfg.degree_cutoff);
  Result r;
  double dev = 0.0, neg = 0.0;
  for (const auto& row : rows) {
    dev = std::max({dev, std::abs(row.k_right - row.k_eigen), std::abs(row.k_structural - row.k_eigen)});
    neg = std::max(neg, -row.k_biinvariant);
  }
  if (dev >= tol) r.failures.push_back("formula disagreement " + num(dev));
  if (neg > 0.0) r.failures.push_back("negative bi-invariant curvature " + num(-neg));
  if (cfg.format == "json") {
    json table = json::array();
    for (const auto& row : rows)
      table.push_back({{"j", row.j}, {"k", row.k}, {"K_biinv", row.k_biinvariant}, {"K_right_11_10", row.k_right},
                       {"K_11_11", row.k_eigen}, {"K_11_12", row.k_structural}, {"sign_flag", row.sign_flag}});
    const json j{{"command", "curvature"}, {"degree_cutoff", cfg.degree_cutoff},
                 {"sign_flag", rows.empty() ? 0 : rows.front().sign_flag},
                 {"consistency", property_json("consistency", "formulas agree on eigen-pairs", dev, tol, dev < tol)},
                 {"rows", table}};
    r.body = j.dump(2) + "\n";
  } else {
    r.body = "j,k,K_biinv,K_right_11_10,K_11_11,K_11_12,sign_flag\n";
    for (const auto& row : rows)
      r.body += fmt::format("{},{},{},{},{},{},{}\n", row.j, row.k, num(row.k_biinvariant), num(row.k_right),
                            num(row.k_eigen), num(row.k_structural), row.sign_flag);
  }
  return r;
}

json state_json(const FlowState& s) {
  json coeffs = json::array();
  for (int i = 0; i < s.h.size(); ++i)
    if (s.h[i] != 0.0) coeffs.push_back({degree_of(i), order_of(i), s.h[i]});
  return json{{"t", s.t}, {"h", coeffs}};
}

Result run_evolve(const RunConfig& cfg) {
  const Model model;
  const Spectrum spectrum = Spectrum::measure(model, cfg.L);
  SpectralFunction f(cfg.L);
  if (!cfg.init.empty()) {
    const SpectralFunction given = spectral_from_json(cfg.init);
    if (given.L() > cfg.L) throw std::invalid_argument("initial condition exceeds the band limit");
    f = given.with_band(cfg.L);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(-cfg.init_amplitude, cfg.init_amplitude);
    for (int l = 0; l <= std::min(cfg.init_degree, cfg.L); ++l)
      for (int m = -l; m <= l; ++m) f.at(l, m) = u(rng);
  }
  const EulerFlow flow(model, spectrum, cfg.L);
  IntegratorConfig ic{cfg.dt, cfg.t_end, cfg.sample_stride, cfg.k_max, cfg.snapshot_every};
  const Trajectory tr = flow.evolve({helmholtz(spectrum, f), 0.0}, ic);

  Result r;
  const double tol = cfg.tolerance("drift");
  const InvariantSample& s0 = tr.log.front();
  // T and the quadratic moment are conserved by the truncated flow; I_1 is conserved exactly.
  const double scale1 = std::max(std::abs(s0.I[0]), s0.coeff_norm * std::sqrt(model.fiber_factor()));
  double dT = 0.0, d1 = 0.0, d2 = 0.0;
  for (const auto& s : tr.log) {
    dT = std::max(dT, std::abs(s.T - s0.T) / std::abs(s0.T));
    d1 = std::max(d1, std::abs(s.I[0] - s0.I[0]) / scale1);
    if (cfg.k_max >= 2) d2 = std::max(d2, std::abs(s.I[1] - s0.I[1]) / std::abs(s0.I[1]));
  }
  if (!(dT < tol)) r.failures.push_back("energy drift " + num(dT));
  if (!(d1 < tol)) r.failures.push_back("I_1 drift " + num(d1));
  if (!(d2 < tol)) r.failures.push_back("I_2 drift " + num(d2));

  if (cfg.format == "json") {
    json log = json::array();
    for (const auto& s : tr.log) log.push_back({{"t", s.t}, {"T", s.T}, {"I", s.I}, {"coeff_norm", s.coeff_norm}});
    const json j{{"command", "evolve"}, {"L", cfg.L}, {"dt", cfg.dt}, {"t_end", cfg.t_end}, {"k_max", cfg.k_max},
                 {"checks",
                  {property_json("energy", "relative drift of T", dT, tol, dT < tol),
                   property_json("I_1", "relative drift of I_1", d1, tol, d1 < tol),
                   property_json("I_2", "relative drift of I_2", d2, tol, d2 < tol)}},
                 {"log", log}, {"final", state_json(tr.final_state)}};
    r.body = j.dump(2) + "\n";
  } else {
    r.body = "t,T";
    for (int k = 1; k <= cfg.k_max; ++k) r.body += fmt::format(",I_{}", k);
    r.body += ",coeff_norm\n";
    for (const auto& s : tr.log) {
      r.body += num(s.t) + "," + num(s.T);
      for (double v : s.I) r.body += "," + num(v);
      r.body += "," + num(s.coeff_norm) + "\n";
    }
  }
  if (cfg.snapshot_every > 0) {
    json snaps = json::array();
    for (const auto& s : tr.snapshots) snaps.push_back(state_json(s));
    std::ofstream os(cfg.snapshot_path);
    if (!os) throw std::runtime_error("cannot write " + cfg.snapshot_path);
    os << snaps.dump(2) << "\n";
  }
  return r;
}

Result run_rot(const RunConfig& cfg) {
  const Model model;
  RotSuiteConfig rc;
  rc.L = cfg.L;
  rc.seed = cfg.seed;
  rc.n_points = std::min(cfg.points, 500);
  rc.fd_tol = cfg.tolerance("rot_fd");
  rc.exact_tol = cfg.tolerance("rot_exact");
  const RotReport rep = rot_suite(model, rc);
  Result r;
  json checks = json::array();
  std::string csv = "id,statement,max_residual,tolerance,pass\n";
  for (const auto& c : rep.checks) {
    checks.push_back(property_json(c.id, c.statement, c.max_residual, c.tolerance, c.pass));
    csv += fmt::format("{},\"{}\",{},{},{}\n", c.id, c.statement, num(c.max_residual), num(c.tolerance), c.pass);
    if (!c.pass) r.failures.push_back(c.id + " residual " + num(c.max_residual));
  }
  if (cfg.format == "csv") {
    r.body = csv;
  } else {
    const json j{{"command", "rot"}, {"L", cfg.L}, {"seed", cfg.seed}, {"points", rc.n_points},
                 {"checks", checks}, {"pass", rep.all_pass()}};
    r.body = j.dump(2) + "\n";
  }
  return r;
}

}  // namespace

double RunConfig::tolerance(const std::string& key) const {
  if (auto it = tolerances.find(key); it != tolerances.end()) return it->second;
  return kDefaultTolerances.at(key);
}

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw std::invalid_argument("unknown command '" + command + "'");
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  if (degree_cutoff < 1) throw std::invalid_argument("degree-cutoff must be >= 1");
  if (points < 1) throw std::invalid_argument("points must be >= 1");
  if (!format.empty() && format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
  if (k_max < 1) throw std::invalid_argument("k-max must be >= 1");
  if (!(dt > 0.0) || dt > t_end) throw std::invalid_argument("dt must satisfy 0 < dt <= t-end");
  if (sample_stride < 1) throw std::invalid_argument("sample-stride must be >= 1");
  if (snapshot_every < 0) throw std::invalid_argument("snapshot-every must be >= 0");
  if (snapshot_every > 0 && snapshot_path.empty()) throw std::invalid_argument("snapshot-every needs snapshot-out");
  for (const auto& [k, v] : tolerances) {
    if (!kDefaultTolerances.count(k)) throw std::invalid_argument("unknown tolerance '" + k + "'");
    if (!(v > 0.0)) throw std::invalid_argument("tolerance '" + k + "' must be positive");
  }
}

int run(const RunConfig& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg = in;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.format.empty()) cfg.format = default_format(cfg.command);

  Result r;
  try {
    if (cfg.command == "axioms") r = run_axioms(cfg);
    else if (cfg.command == "calibrate") r = run_calibrate(cfg);
    else if (cfg.command == "brackets") r = run_brackets(cfg);
    else if (cfg.command == "curvature") r = run_curvature(cfg);
    else if (cfg.command == "evolve") r = run_evolve(cfg);
    else r = run_rot(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << cfg.command << " failed: " << e.what() << "\n";
    return kCheckFailed;
  }

  if (cfg.output_path.empty()) {
    out << r.body;
  } else {
    std::ofstream os(cfg.output_path, std::ios::binary);
    if (!os) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return kCheckFailed;
    }
    os << r.body;
  }
  for (const auto& f : r.failures) err << cfg.command << ": check failed: " << f << "\n";
  return r.failures.empty() ? kOk : kCheckFailed;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the exact contact transformation group of the 3-sphere", "dtheta"};
  RunConfig cfg;
  std::vector<std::string> tols;
  app.add_option("command", cfg.command, "axioms | brackets | curvature | evolve | rot | calibrate")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--L", cfg.L, "band limit")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--dt", cfg.dt, "time step")->capture_default_str();
  app.add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
  app.add_option("--k-max", cfg.k_max, "highest monitored moment")->capture_default_str();
  app.add_option("--degree-cutoff", cfg.degree_cutoff, "curvature table degree cutoff")->capture_default_str();
  app.add_option("--points", cfg.points, "random sample points")->capture_default_str();
  app.add_option("--out", cfg.output_path, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", tols, "tolerance override KEY=VALUE");
  app.add_option("--init", cfg.init, "initial Hamiltonian as JSON [l,m,value] triples");
  app.add_option("--init-degree", cfg.init_degree, "degree of random initial data")->capture_default_str();
  app.add_option("--init-amplitude", cfg.init_amplitude, "amplitude of random initial data")->capture_default_str();
  app.add_option("--sample-stride", cfg.sample_stride, "steps between invariant samples")->capture_default_str();
  app.add_option("--snapshot-every", cfg.snapshot_every, "steps between state snapshots");
  app.add_option("--snapshot-out", cfg.snapshot_path, "snapshot JSON file");
  app.set_config("--config", "", "flat key=value configuration file");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument(t);
      cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      err << "error: malformed tolerance '" << t << "'\n" << app.help();
      return kUsage;
    }
  }
  return run(cfg, out, err);
}

}  // namespace dtheta::cli
