#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dtheta::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;  // axioms, brackets, curvature, evolve, rot, calibrate
  int L = 8;
  unsigned long long seed = 1;
  double dt = 1e-3;
  double t_end = 1.0;
  int k_max = 3;
  int degree_cutoff = 2;
  int points = 1000;
  std::string output_path;  // empty: standard output
  std::string format;       // csv or json; empty picks the command default
  std::map<std::string, double> tolerances;

  // evolve
  std::string init;  // JSON [l, m, value] triples of the velocity Hamiltonian f
  int init_degree = 2;
  double init_amplitude = 10.0;
  int sample_stride = 1;
  int snapshot_every = 0;
  std::string snapshot_path;

  double tolerance(const std::string& key) const;
  /// Throws std::invalid_argument on an unknown command or out-of-range value.
  void validate() const;
};

/// Runs one command. Reports go to cfg.output_path or `out`; diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses flags (program name excluded) and runs.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtheta::cli
