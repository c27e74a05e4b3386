#pragma once

// Euler equation dh/dt = [h, (1+Δ)⁻¹ h] on contact Hamiltonians in momentum form.

#include <stdexcept>
#include <vector>

#include "dtheta/bracket.hpp"
#include "dtheta/harmonics.hpp"
#include "dtheta/s3_geometry.hpp"

namespace dtheta {

struct FlowState {
  SpectralFunction h;  // momentum h = (1+Δ) f
  double t = 0.0;
};

struct IntegratorConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  int invariant_sample_stride = 1;
  int k_max = 3;
  int snapshot_every = 0;  // 0 disables state snapshots

  /// Throws std::invalid_argument on nonpositive dt, dt > t_end, stride < 1 or k_max < 1.
  void validate() const;
  long steps() const;
};

struct InvariantSample {
  double t = 0.0;
  double T = 0.0;                 // kinetic energy
  std::vector<double> I;          // I[k-1] = ∫ h^k dμ
  double coeff_norm = 0.0;        // Euclidean norm of the coefficient vector
};

struct Trajectory {
  std::vector<InvariantSample> log;
  std::vector<FlowState> snapshots;
  FlowState final_state;
};

class BlowUp : public std::runtime_error {
 public:
  BlowUp(double t, double norm);
  double t;
  double norm;
};

inline constexpr double kBlowUpNorm = 1e12;

class EulerFlow {
 public:
  EulerFlow(const Model& model, const Spectrum& spectrum, int L, Exec exec = Exec::parallel);

  int L() const { return L_; }

  /// [h, D⁻¹h] projected onto degrees <= L.
  SpectralFunction rhs(const SpectralFunction& h) const;
  /// One classical Runge–Kutta step.
  FlowState step(const FlowState& s, double dt) const;
  /// Throws BlowUp when the coefficient norm exceeds kBlowUpNorm or turns non-finite.
  Trajectory evolve(const FlowState& s0, const IntegratorConfig& cfg) const;

  InvariantSample invariants(const FlowState& s, int k_max) const;
  /// ‖rhs(h)‖ in L²(M).
  double stationarity_residual(const SpectralFunction& h) const;

 private:
  const Model& model_;
  const Spectrum& spectrum_;
  int L_;
  Exec exec_;
  BracketOperator bracket_;
};

}  // namespace dtheta
