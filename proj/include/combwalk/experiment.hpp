#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "combwalk/comb.hpp"
#include "combwalk/dynamics.hpp"
#include "combwalk/metrics.hpp"
#include "combwalk/oracles.hpp"
#include "combwalk/rotor.hpp"

namespace combwalk {

/// Rejected configuration; `field()` names the offending key as
/// "section.key".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Units { normalized, hz };
enum class OracleReference { infinite, finite };
enum class OracleKind { ctqw, classical, finite };
enum class OutputFormat { csv, json };

/// Everything a CLI run needs. With units = hz, rotor.b is B in Hz,
/// comb.gamma is in 1/s and all times are in seconds; they are converted
/// to the normalized convention (2B = 1) by resolve(). With units =
/// normalized, rotor.b is fixed at 0.5.
struct ExperimentConfig {
  struct Rotor {
    Units units = Units::normalized;
    double b = 0.5;
    double d_over_b = 0.0;
    double mu = 1.0;
    int m = 0;
    int j_max = 200;
    bool operator==(const Rotor&) const = default;
  } rotor;

  struct Comb {
    double gamma = 1.0;
    bool distorted = false;
    bool operator==(const Comb&) const = default;
  } comb;

  struct Run {
    double t_start = -0.5;
    double t_end = 49.5;
    int initial_j = 100;
    int steps_per_unit_time = 0;
    /// When > 0, snapshots at t_start + k * interval up to t_end.
    double snapshot_interval = 0.0;
    std::vector<double> snapshot_times;
    FieldEvaluation field_evaluation = FieldEvaluation::rotators;
    OracleReference reference = OracleReference::infinite;
    bool operator==(const Run&) const = default;
  } run;

  struct Output {
    std::string directory;
    OutputFormat format = OutputFormat::csv;
    bool operator==(const Output&) const = default;
  } output;

  struct Profile {
    double t0 = -0.5;
    double t1 = 0.5;
    int samples = 2001;
    /// Extra comb sizes to sample; empty means rotor.j_max only.
    std::vector<int> j_max_values;
    bool operator==(const Profile&) const = default;
  } profile;

  struct Oracle {
    OracleKind kind = OracleKind::ctqw;
    double gamma = 1.0;
    double t = 50.0;
    int range = 80;
    /// Chain size for kind = finite; 0 means 2 * range + 1.
    int size = 0;
    bool operator==(const Oracle&) const = default;
  } oracle;

  struct Sweep {
    std::vector<double> gamma;
    std::vector<double> d_over_b;
    std::vector<int> steps_per_unit_time;
    std::vector<bool> comb_distorted;
    int workers = 0;
    bool operator==(const Sweep&) const = default;
  } sweep;

  bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

/// The config converted to normalized units and checked against every
/// module's preconditions.
struct ResolvedExperiment {
  RotorSpec rotor;
  CombSpec comb;
  RunConfig run;
  /// Line positions of the molecule itself: centrifugal when D > 0.
  Distortion lines;
};

ResolvedExperiment resolve(const ExperimentConfig& config);

struct SimulationResult {
  Trajectory trajectory;
  LatticeDistribution simulated;  // final populations indexed by J
  LatticeDistribution reference;  // analytic walk centered on initial J
  ComparisonReport report;
};

/// Reference distribution for a walk started at `origin` on `ladder_size`
/// states after a hopping phase gamma_t, indexed by J.
LatticeDistribution reference_distribution(OracleReference kind, int ladder_size,
                                           int origin, double gamma_t);

SimulationResult simulate(const ExperimentConfig& config);

}  // namespace combwalk
