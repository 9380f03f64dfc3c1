#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "combwalk/comb.hpp"
#include "combwalk/dynamics.hpp"
#include "combwalk/metrics.hpp"
#include "combwalk/oracles.hpp"

namespace combwalk {

// Every CSV starts with a "# combwalk <kind> v<version>" line followed by a
// column header. Numbers use the shortest round-trip decimal form.
inline constexpr int kFormatVersion = 1;

std::string format_double(double v);

/// Columns: snapshot_t, J, re_c, im_c, population.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
nlohmann::json trajectory_to_json(const Trajectory& traj);

/// Columns: n, probability.
void write_distribution_csv(std::ostream& out, const LatticeDistribution& d);

/// Reads a distribution CSV, or the final snapshot of a trajectory CSV
/// (sites are then J). Throws std::runtime_error on malformed input.
LatticeDistribution read_distribution_csv(std::istream& in);

/// Columns: t, epsilon.
void write_profile_csv(std::ostream& out, const FieldProfile& profile);

nlohmann::json report_to_json(const ComparisonReport& report);

}  // namespace combwalk
