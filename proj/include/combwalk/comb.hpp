#pragma once

#include <vector>

#include "combwalk/rotor.hpp"

namespace combwalk {

struct CombComponent {
  double amplitude;
  double frequency;
};

/// Comb field eps(t) = sum_k a_k cos(2 pi f_k t), one component per
/// rotational line J' = 0 .. j_max-1 with a_k = gamma / mu_J'. All
/// components have zero phase at t = 0.
struct CombSpec {
  std::vector<CombComponent> components;
  double gamma = 0.0;
  Distortion distortion = Distortion::rigid;
  RotorSpec rotor;

  double highest_frequency() const;
  double amplitude_sum() const;
};

struct FieldProfile {
  std::vector<double> times;
  std::vector<double> values;
};

/// Ideal comb (rigid line positions) or chirp-compensated comb (distorted
/// line positions). gamma = 0 gives the field-free comb used for identity
/// checks; gamma < 0 is rejected.
CombSpec build_comb(const RotorSpec& rotor, double gamma, Distortion distortion);

double field_amplitude(const CombSpec& comb, double t);

/// n uniform samples on [t0, t1], both ends included.
FieldProfile sample_profile(const CombSpec& comb, double t0, double t1, int n);

/// RMS width of |eps|^2 around the peak nearest `center`, measured over
/// [center - half_window, center + half_window]. Used to compare pulse
/// shapes across a chirped train.
double pulse_rms_width(const CombSpec& comb, double center, double half_window,
                       int samples);

}  // namespace combwalk
