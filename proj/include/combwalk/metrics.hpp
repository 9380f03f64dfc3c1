#pragma once

#include <vector>

#include "combwalk/oracles.hpp"

namespace combwalk {

struct Moments {
  double norm = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

/// Pair of distributions compared on the union of their supports.
/// Neither input is renormalized; norm_deficit exposes 1 - sum(p) of the
/// first (simulated) distribution.
struct ComparisonReport {
  double total_variation = 0.0;
  double l_inf = 0.0;
  /// mean(p) - mean(q)
  double mean_offset = 0.0;
  double variance_p = 0.0;
  double variance_q = 0.0;
  double norm_deficit = 0.0;
};

/// 1/2 sum_n |p_n - q_n|; throws std::domain_error on negative entries.
double total_variation(const LatticeDistribution& p, const LatticeDistribution& q);

double l_inf_distance(const LatticeDistribution& p, const LatticeDistribution& q);

/// Throws std::domain_error for negative entries or zero total mass.
Moments moments(const LatticeDistribution& p);

ComparisonReport compare(const LatticeDistribution& p, const LatticeDistribution& q);

/// Ladder populations as a distribution indexed by J.
LatticeDistribution ladder_distribution(const std::vector<double>& populations);

/// Shift a distribution so that site n maps to site n + offset.
LatticeDistribution shifted(LatticeDistribution d, int offset);

}  // namespace combwalk
