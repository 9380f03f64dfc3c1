#include "combwalk/comb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "phase.hpp"

namespace combwalk {

double CombSpec::highest_frequency() const {
  double f = 0.0;
  for (const auto& c : components) f = std::max(f, c.frequency);
  return f;
}

double CombSpec::amplitude_sum() const {
  double s = 0.0;
  for (const auto& c : components) s += std::abs(c.amplitude);
  return s;
}

CombSpec build_comb(const RotorSpec& rotor, double gamma, Distortion distortion) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::domain_error("build_comb: gamma must be finite and >= 0");
  }
  if (rotor.m() != 0) {
    // Lines below J = |M| do not exist, so the full comb cannot be built.
    throw std::domain_error("build_comb: only M = 0 ladders are supported");
  }
  CombSpec comb{{}, gamma, distortion, rotor};
  comb.components.reserve(static_cast<std::size_t>(rotor.j_max()));
  for (int j = 0; j < rotor.j_max(); ++j) {
    const double f = transition_frequency(rotor, j, distortion);
    if (!comb.components.empty() && !(f > comb.components.back().frequency)) {
      throw std::domain_error("build_comb: line frequencies stop increasing at J = " +
                              std::to_string(j));
    }
    comb.components.push_back({gamma / transition_dipole(rotor, j), f});
  }
  return comb;
}

double field_amplitude(const CombSpec& comb, double t) {
  double eps = 0.0;
  for (const auto& c : comb.components) {
    eps += c.amplitude * std::cos(detail::cycle_angle(c.frequency, t));
  }
  return eps;
}

FieldProfile sample_profile(const CombSpec& comb, double t0, double t1, int n) {
  if (n < 2) {
    throw std::domain_error("sample_profile: need at least 2 samples");
  }
  if (!(t1 > t0)) {
    throw std::domain_error("sample_profile: t1 must exceed t0");
  }
  FieldProfile p;
  p.times.resize(static_cast<std::size_t>(n));
  p.values.resize(static_cast<std::size_t>(n));
  const double dt = (t1 - t0) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double t = (i == n - 1) ? t1 : t0 + i * dt;
    p.times[i] = t;
    p.values[i] = field_amplitude(comb, t);
  }
  return p;
}

double pulse_rms_width(const CombSpec& comb, double center, double half_window,
                       int samples) {
  const auto p = sample_profile(comb, center - half_window,
                                center + half_window, samples);
  double w = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    const double e2 = p.values[i] * p.values[i];
    w += e2;
    mean += e2 * p.times[i];
  }
  mean /= w;
  double var = 0.0;
  for (std::size_t i = 0; i < p.times.size(); ++i) {
    const double dt = p.times[i] - mean;
    var += p.values[i] * p.values[i] * dt * dt;
  }
  return std::sqrt(var / w);
}

}  // namespace combwalk
