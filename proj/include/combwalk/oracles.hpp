#pragma once

#include <complex>
#include <vector>

#include "combwalk/dynamics.hpp"

namespace combwalk {

/// Probabilities on consecutive lattice sites first_site, first_site+1, ...
struct LatticeDistribution {
  int first_site = 0;
  std::vector<double> probabilities;

  int last_site() const { return first_site + static_cast<int>(probabilities.size()) - 1; }
  int site(std::size_t i) const { return first_site + static_cast<int>(i); }
  /// Zero outside the stored range.
  double at(int site) const;
  double total() const;
};

/// J_0(x) .. J_{n_max}(x) by downward recurrence normalized with
/// J_0 + 2 sum_k J_{2k} = 1. Negative x uses J_n(-x) = (-1)^n J_n(x).
std::vector<double> bessel_j_sequence(int n_max, double x);
double bessel_j(int n, double x);

/// e^{-x} I_0(x) .. e^{-x} I_{n_max}(x) for x >= 0, by downward recurrence
/// normalized with I_0 + 2 sum_k I_k = e^x.
std::vector<double> bessel_i_scaled_sequence(int n_max, double x);

/// Infinite-lattice walk amplitude i^{|n|} J_{|n|}(gamma t) for a walker
/// started at n = 0.
std::complex<double> ctqw_infinite(int n, double t, double gamma);

/// |psi(n,t)|^2 = J_{|n|}(gamma t)^2 on sites -radius .. radius.
LatticeDistribution ctqw_distribution(double gamma_t, int radius);

/// Exact walk on a finite chain of `size` sites started at `origin`.
WalkState ctqw_finite(int size, int origin, double t, double gamma);

/// Continuous-time classical random walk with hop rate gamma/2 to each
/// neighbor: P_n(t) = e^{-gamma t} I_{|n|}(gamma t).
double classical_ctrw(int n, double t, double gamma);
LatticeDistribution classical_distribution(double gamma_t, int radius);

}  // namespace combwalk
