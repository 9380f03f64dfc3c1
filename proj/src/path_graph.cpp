#include "path_graph.hpp"

#include <cmath>
#include <numbers>

namespace combwalk::detail {

std::vector<std::complex<double>> evolve_path_graph(
    std::span<const std::complex<double>> c, double gamma, double t) {
  const std::size_t n = c.size();
  const std::size_t s = n + 1;
  // sin(pi m / s) for m in [0, 2s); mode products are reduced mod 2s.
  std::vector<double> sine(2 * s);
  for (std::size_t m = 0; m < 2 * s; ++m) {
    sine[m] = std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(s));
  }
  const double scale = 2.0 / static_cast<double>(s);

  std::vector<std::complex<double>> modes(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += sine[((k + 1) * (j + 1)) % (2 * s)] * c[j];
    }
    const double lambda = -gamma * std::cos(std::numbers::pi * static_cast<double>(k + 1) /
                                            static_cast<double>(s));
    modes[k] = acc * std::polar(scale, -lambda * t);
  }
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += sine[((k + 1) * (j + 1)) % (2 * s)] * modes[k];
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace combwalk::detail
