#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "combwalk/comb.hpp"
#include "combwalk/rotor.hpp"

namespace combwalk {

using Complex = std::complex<double>;

/// Amplitudes c_J, J = 0 .. j_max, in the interaction picture.
struct WalkState {
  std::vector<Complex> amplitudes;
  double time = 0.0;

  static WalkState basis(int size, int index, double time = 0.0);

  int size() const { return static_cast<int>(amplitudes.size()); }
  double norm() const;
  std::vector<double> populations() const;
};

/// How the propagator obtains eps(t) and the line phases exp(2 pi i nu t).
enum class FieldEvaluation {
  direct,    // trig call per component per stage
  rotators,  // per-component half-step rotations, periodically resynced
};

struct RunConfig {
  double t_start = 0.0;
  double t_end = 1.0;
  /// 0 selects default_steps_per_unit_time() for the comb being driven.
  int steps_per_unit_time = 0;
  std::vector<double> snapshot_times;
  int initial_j = 0;
  FieldEvaluation field_evaluation = FieldEvaluation::rotators;

  /// Throws std::domain_error on an invalid window or snapshot schedule.
  void validate() const;
};

/// 64 steps per period of the fastest comb component.
int default_steps_per_unit_time(const CombSpec& comb);

struct Trajectory {
  std::vector<WalkState> snapshots;
  std::vector<std::vector<double>> populations;
  /// sum_J |c_J|^2 - 1 at each snapshot.
  std::vector<double> norm_drift;
  int steps_per_unit_time = 0;
  std::int64_t steps = 0;

  double max_abs_norm_drift() const;
  const WalkState& final_state() const { return snapshots.back(); }
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(std::int64_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

/// Right-hand side of the driven ladder equation,
///   dc_J/dt = i [ mu_{J-1} eps(t) e^{+2 pi i nu_{J-1} t} c_{J-1}
///               + mu_J     eps(t) e^{-2 pi i nu_J t}     c_{J+1} ],
/// with line frequencies nu taken from `rotor` under `lines` and eps(t)
/// from `comb`. The ladder is truncated at J = 0 and J = j_max.
std::vector<Complex> derivative(const WalkState& state, double t,
                                const CombSpec& comb, const RotorSpec& rotor,
                                Distortion lines);

/// Fixed-step RK4 from config.t_start to config.t_end. Snapshots are taken
/// at the grid points nearest the requested times.
Trajectory propagate(const WalkState& initial, const CombSpec& comb,
                     const RotorSpec& rotor, const RunConfig& config,
                     Distortion lines);

/// Exact evolution under the resonant hopping Hamiltonian
/// H_{J,J+1} = H_{J+1,J} = -gamma/2 on the finite ladder, for a duration t.
WalkState propagate_rwa(const WalkState& initial, double gamma, double t);

}  // namespace combwalk
