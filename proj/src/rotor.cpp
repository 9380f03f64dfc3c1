#include "combwalk/rotor.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace combwalk {

RotorSpec::RotorSpec(double b, double d, int j_max, double mu, int m)
    : b_(b), d_(d), mu_(mu), m_(m), j_max_(j_max) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::domain_error("rotor: B must be positive and finite");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw std::domain_error("rotor: D must be non-negative and finite");
  }
  if (d / b > kMaxDistortionRatio) {
    throw std::domain_error("rotor: D/B = " + std::to_string(d / b) +
                            " exceeds the supported limit 1e-3");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::domain_error("rotor: dipole moment must be positive");
  }
  if (j_max < 1) {
    throw std::domain_error("rotor: j_max must be >= 1");
  }
  if (std::abs(m) > j_max) {
    throw std::domain_error("rotor: |M| exceeds j_max");
  }
}

RotorSpec RotorSpec::normalized(int j_max, double d_over_b, double mu, int m) {
  constexpr double kB = 0.5;
  return RotorSpec(kB, d_over_b * kB, j_max, mu, m);
}

double rotational_energy(const RotorSpec& spec, int j, Distortion distortion) {
  if (j < 0) {
    throw std::domain_error("rotational_energy: J must be >= 0");
  }
  const double x = static_cast<double>(j) * (j + 1);
  double e = spec.b() * x;
  if (distortion == Distortion::centrifugal) {
    e -= spec.d() * x * x;
  }
  return e;
}

double transition_frequency(const RotorSpec& spec, int j,
                            Distortion distortion) {
  if (j < 0 || j > spec.j_max() - 1) {
    throw std::domain_error("transition_frequency: J = " + std::to_string(j) +
                            " outside 0.." + std::to_string(spec.j_max() - 1));
  }
  const double k = j + 1.0;
  double nu = 2.0 * spec.b() * k;
  if (distortion == Distortion::centrifugal) {
    nu -= 4.0 * spec.d() * k * k * k;
  }
  return nu;
}

double transition_dipole(const RotorSpec& spec, int j) {
  if (j < 0 || j > spec.j_max() - 1) {
    throw std::domain_error("transition_dipole: J = " + std::to_string(j) +
                            " outside the ladder");
  }
  const double k = j + 1.0;
  const double m = spec.m();
  if (std::abs(m) > k) {
    throw std::domain_error("transition_dipole: |M| > J+1, transition forbidden");
  }
  return spec.mu() * std::sqrt((k * k - m * m) / ((2.0 * j + 1.0) * (2.0 * j + 3.0)));
}

}  // namespace combwalk
