#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace combwalk::detail {

/// 2 pi f t reduced to [-pi, pi] before the trig call. The product and
/// the reduction run in extended precision so that f * t ~ 1e4 keeps its
/// fractional part to ~1e-16.
inline double cycle_angle(double f, long double t) {
  const long double cycles = static_cast<long double>(f) * t;
  return static_cast<double>(2.0L * std::numbers::pi_v<long double> *
                             (cycles - std::nearbyint(cycles)));
}

inline std::complex<double> cycle_phasor(double f, long double t) {
  return std::polar(1.0, cycle_angle(f, t));
}

/// t0 + q * dt without the rounding of a double-precision sum.
inline long double grid_time(double t0, std::int64_t q, double dt) {
  return static_cast<long double>(t0) + static_cast<long double>(q) * dt;
}

/// Phasors e^{2 pi i f t} on the half-step grid t_q = t0 + q * dt, advanced
/// by one fixed rotation per call and recomputed from scratch every
/// kResync calls so that rounding does not accumulate.
class PhaseTrack {
 public:
  static constexpr std::int64_t kResync = 128;

  PhaseTrack(std::vector<double> freqs, double t0, double dt)
      : freqs_(std::move(freqs)), t0_(t0), dt_(dt),
        phase_(freqs_.size()), rotor_(freqs_.size()) {
    for (std::size_t k = 0; k < freqs_.size(); ++k) {
      rotor_[k] = cycle_phasor(freqs_[k], static_cast<long double>(dt_));
    }
    resync(0);
  }

  const std::vector<std::complex<double>>& at(std::int64_t q) {
    if (q != q_) {
      // Only sequential access is used by the integrator.
      if (q == q_ + 1 && q % kResync != 0) {
        for (std::size_t k = 0; k < phase_.size(); ++k) phase_[k] *= rotor_[k];
        q_ = q;
      } else {
        resync(q);
      }
    }
    return phase_;
  }

 private:
  void resync(std::int64_t q) {
    const long double t = grid_time(t0_, q, dt_);
    for (std::size_t k = 0; k < freqs_.size(); ++k) {
      phase_[k] = cycle_phasor(freqs_[k], t);
    }
    q_ = q;
  }

  std::vector<double> freqs_;
  double t0_;
  double dt_;
  std::vector<std::complex<double>> phase_;
  std::vector<std::complex<double>> rotor_;
  std::int64_t q_ = 0;
};

}  // namespace combwalk::detail
