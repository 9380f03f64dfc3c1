#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "combwalk/experiment.hpp"

namespace combwalk {

struct SweepCell {
  double gamma = 0.0;
  double d_over_b = 0.0;
  int steps_per_unit_time = 0;
  bool comb_distorted = false;
};

struct SweepRow {
  SweepCell cell;
  bool ok = false;
  std::string error;
  double total_variation = 0.0;
  double max_norm_drift = 0.0;
  double wall_seconds = 0.0;
  /// max_J |c_J - c_J^ref| at the final time against a run with four times
  /// the finest step count of the sweep; only set when steps are swept.
  std::optional<double> state_error;
  /// state_error of the cell with half as many steps divided by this one.
  std::optional<double> error_ratio;
};

/// Cross product of the sweep axes; an empty axis takes the base value.
/// Throws ConfigError when no axis is given.
std::vector<SweepCell> sweep_cells(const ExperimentConfig& config);

/// Runs every cell on up to `workers` threads (0 = hardware concurrency).
/// Rows come back in sweep_cells() order whatever the completion order.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int workers);

/// Columns: gamma, d_over_b, steps_per_unit_time, comb_distorted, status,
/// total_variation, max_norm_drift, state_error, error_ratio, [wall_seconds,] error.
/// Timing is off by default so files stay reproducible.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool with_timing = false);

}  // namespace combwalk
