#pragma once

// Rigid and centrifugally distorted diatomic rotor.
//
// Units: hbar = h = 1. Energies and frequencies share one unit; the
// normalized convention used throughout the project sets 2B = 1 so that
// the comb pulse interval 1/(2B) is the time unit.

namespace combwalk {

enum class Distortion { rigid, centrifugal };

class RotorSpec {
 public:
  /// Largest accepted D/B ratio. Anything above this is a configuration error.
  static constexpr double kMaxDistortionRatio = 1e-3;

  RotorSpec(double b, double d, int j_max, double mu = 1.0, int m = 0);

  /// Rotor in normalized units (2B = 1) with D given as the ratio D/B.
  static RotorSpec normalized(int j_max, double d_over_b = 0.0,
                              double mu = 1.0, int m = 0);

  double b() const { return b_; }
  double d() const { return d_; }
  double mu() const { return mu_; }
  int m() const { return m_; }
  int j_max() const { return j_max_; }
  /// Number of ladder states, J = 0 .. j_max.
  int ladder_size() const { return j_max_ + 1; }
  double d_over_b() const { return d_ / b_; }

 private:
  double b_;
  double d_;
  double mu_;
  int m_;
  int j_max_;
};

/// B J(J+1), minus D J^2 (J+1)^2 when distorted.
double rotational_energy(const RotorSpec& spec, int j, Distortion distortion);

/// Frequency of the J -> J+1 line: 2B(J+1), minus 4D(J+1)^3 when distorted.
/// Valid for 0 <= J <= j_max - 1.
double transition_frequency(const RotorSpec& spec, int j,
                            Distortion distortion);

/// Transition dipole of J -> J+1:
///   mu * sqrt(((J+1)^2 - M^2) / ((2J+1)(2J+3))).
/// Zero when |M| = J+1; throws std::domain_error when |M| > J+1.
double transition_dipole(const RotorSpec& spec, int j);

}  // namespace combwalk
