#pragma once

#include <complex>
#include <span>
#include <vector>

namespace combwalk::detail {

/// exp(-i H t) c for H = -(gamma/2) (shift + shift^T) on an open chain of
/// c.size() sites, using the closed-form eigensystem
///   v_k(j) = sqrt(2/(N+1)) sin(pi k (j+1) / (N+1)),  lambda_k = -gamma cos(pi k / (N+1)).
std::vector<std::complex<double>> evolve_path_graph(
    std::span<const std::complex<double>> c, double gamma, double t);

}  // namespace combwalk::detail
