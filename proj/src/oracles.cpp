#include "combwalk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "path_graph.hpp"

namespace combwalk {

namespace {

constexpr double kBig = 1e250;
constexpr double kBigInv = 1e-250;

// Starting order for the downward recurrences; the true sequence is below
// double precision relative to its bulk well before this index.
int miller_start(int n_max, double x) {
  const double top = std::max(static_cast<double>(n_max), x);
  const int m = static_cast<int>(top + 60.0 + std::sqrt(60.0 * top) + 10.0 * std::sqrt(x));
  return m + (m % 2);
}

}  // namespace

double LatticeDistribution::at(int s) const {
  if (s < first_site || s > last_site()) return 0.0;
  return probabilities[static_cast<std::size_t>(s - first_site)];
}

double LatticeDistribution::total() const {
  double t = 0.0;
  for (double p : probabilities) t += p;
  return t;
}

std::vector<double> bessel_j_sequence(int n_max, double x) {
  if (n_max < 0) throw std::domain_error("bessel_j: order must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const bool flip = x < 0.0;
  const double ax = std::abs(x);

  const int m = miller_start(n_max, ax);
  const double two_over_x = 2.0 / ax;
  double above = 0.0;  // J_{k+1}
  double cur = 1.0;    // J_k, arbitrary scale
  double even_sum = 0.0;
  for (int k = m; k >= 1; --k) {
    // cur holds J_k
    if (k <= n_max) out[static_cast<std::size_t>(k)] = cur;
    if (k % 2 == 0) even_sum += cur;
    const double below = k * two_over_x * cur - above;
    above = cur;
    cur = below;
    if (std::abs(cur) > kBig) {
      cur *= kBigInv;
      above *= kBigInv;
      even_sum *= kBigInv;
      for (int i = k; i <= std::min(n_max, m); ++i) out[static_cast<std::size_t>(i)] *= kBigInv;
    }
  }
  out[0] = cur;
  const double norm = cur + 2.0 * even_sum;
  for (auto& v : out) v /= norm;
  if (flip) {
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  }
  return out;
}

double bessel_j(int n, double x) {
  if (n < 0) {
    // J_{-n} = (-1)^n J_n
    const double v = bessel_j(-n, x);
    return (n % 2 == 0) ? v : -v;
  }
  return bessel_j_sequence(n, x).back();
}

std::vector<double> bessel_i_scaled_sequence(int n_max, double x) {
  if (n_max < 0) throw std::domain_error("bessel_i: order must be >= 0");
  if (x < 0.0) throw std::domain_error("bessel_i: argument must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int m = miller_start(n_max, x);
  const double two_over_x = 2.0 / x;
  double above = 0.0;
  double cur = 1.0;
  double sum = 0.0;  // sum_{k>=1} I_k
  for (int k = m; k >= 1; --k) {
    if (k <= n_max) out[static_cast<std::size_t>(k)] = cur;
    sum += cur;
    const double below = k * two_over_x * cur + above;
    above = cur;
    cur = below;
    if (cur > kBig) {
      cur *= kBigInv;
      above *= kBigInv;
      sum *= kBigInv;
      for (int i = k; i <= std::min(n_max, m); ++i) out[static_cast<std::size_t>(i)] *= kBigInv;
    }
  }
  out[0] = cur;
  const double norm = cur + 2.0 * sum;
  for (auto& v : out) v /= norm;
  return out;
}

std::complex<double> ctqw_infinite(int n, double t, double gamma) {
  const int a = std::abs(n);
  const double j = bessel_j(a, gamma * t);
  // i^a
  switch (a % 4) {
    case 0: return {j, 0.0};
    case 1: return {0.0, j};
    case 2: return {-j, 0.0};
    default: return {0.0, -j};
  }
}

LatticeDistribution ctqw_distribution(double gamma_t, int radius) {
  if (radius < 0) throw std::domain_error("ctqw_distribution: radius must be >= 0");
  const auto j = bessel_j_sequence(radius, gamma_t);
  LatticeDistribution d{-radius, std::vector<double>(2 * static_cast<std::size_t>(radius) + 1)};
  for (int n = -radius; n <= radius; ++n) {
    const double v = j[static_cast<std::size_t>(std::abs(n))];
    d.probabilities[static_cast<std::size_t>(n + radius)] = v * v;
  }
  return d;
}

WalkState ctqw_finite(int size, int origin, double t, double gamma) {
  if (size < 1) throw std::domain_error("ctqw_finite: size must be >= 1");
  if (origin < 0 || origin >= size) {
    throw std::domain_error("ctqw_finite: origin outside the chain");
  }
  return propagate_rwa(WalkState::basis(size, origin), gamma, t);
}

double classical_ctrw(int n, double t, double gamma) {
  if (t < 0.0) throw std::domain_error("classical_ctrw: t must be >= 0");
  const double x = gamma * t;
  if (x < 0.0) throw std::domain_error("classical_ctrw: gamma must be >= 0");
  return bessel_i_scaled_sequence(std::abs(n), x).back();
}

LatticeDistribution classical_distribution(double gamma_t, int radius) {
  if (radius < 0) throw std::domain_error("classical_distribution: radius must be >= 0");
  if (gamma_t < 0.0) throw std::domain_error("classical_distribution: gamma t must be >= 0");
  const auto in = bessel_i_scaled_sequence(radius, gamma_t);
  LatticeDistribution d{-radius, std::vector<double>(2 * static_cast<std::size_t>(radius) + 1)};
  for (int n = -radius; n <= radius; ++n) {
    d.probabilities[static_cast<std::size_t>(n + radius)] = in[static_cast<std::size_t>(std::abs(n))];
  }
  return d;
}

}  // namespace combwalk
