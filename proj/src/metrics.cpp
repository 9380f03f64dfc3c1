#include "combwalk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace combwalk {

namespace {

void require_nonnegative(const LatticeDistribution& d, const char* who) {
  for (double p : d.probabilities) {
    if (!(p >= 0.0)) {
      throw std::domain_error(std::string(who) + ": negative or NaN probability");
    }
  }
}

template <class F>
void for_each_site(const LatticeDistribution& p, const LatticeDistribution& q, F&& f) {
  if (p.probabilities.empty() && q.probabilities.empty()) return;
  int lo = p.first_site;
  int hi = p.last_site();
  if (p.probabilities.empty()) {
    lo = q.first_site;
    hi = q.last_site();
  } else if (!q.probabilities.empty()) {
    lo = std::min(lo, q.first_site);
    hi = std::max(hi, q.last_site());
  }
  for (int s = lo; s <= hi; ++s) f(p.at(s), q.at(s));
}

}  // namespace

double total_variation(const LatticeDistribution& p, const LatticeDistribution& q) {
  require_nonnegative(p, "total_variation");
  require_nonnegative(q, "total_variation");
  double sum = 0.0;
  for_each_site(p, q, [&](double a, double b) { sum += std::abs(a - b); });
  return 0.5 * sum;
}

double l_inf_distance(const LatticeDistribution& p, const LatticeDistribution& q) {
  double m = 0.0;
  for_each_site(p, q, [&](double a, double b) { m = std::max(m, std::abs(a - b)); });
  return m;
}

Moments moments(const LatticeDistribution& p) {
  require_nonnegative(p, "moments");
  double norm = 0.0;
  double first = 0.0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) {
    norm += p.probabilities[i];
    first += p.site(i) * p.probabilities[i];
  }
  if (!(norm > 0.0)) throw std::domain_error("moments: distribution has zero mass");
  const double mean = first / norm;
  // Central second moment, accumulated about the mean for accuracy.
  double second = 0.0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) {
    const double d = p.site(i) - mean;
    second += d * d * p.probabilities[i];
  }
  return {norm, mean, second / norm};
}

ComparisonReport compare(const LatticeDistribution& p, const LatticeDistribution& q) {
  ComparisonReport r;
  r.total_variation = total_variation(p, q);
  r.l_inf = l_inf_distance(p, q);
  const Moments mp = moments(p);
  const Moments mq = moments(q);
  r.mean_offset = mp.mean - mq.mean;
  r.variance_p = mp.variance;
  r.variance_q = mq.variance;
  r.norm_deficit = 1.0 - mp.norm;
  return r;
}

LatticeDistribution ladder_distribution(const std::vector<double>& populations) {
  return {0, populations};
}

LatticeDistribution shifted(LatticeDistribution d, int offset) {
  d.first_site += offset;
  return d;
}

}  // namespace combwalk
