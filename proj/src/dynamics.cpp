#include "combwalk/dynamics.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <string>

#include "path_graph.hpp"
#include "phase.hpp"

namespace combwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Field value and line phasors e^{2 pi i nu_J t} at one instant.
struct FieldSample {
  double epsilon = 0.0;
  std::vector<Complex> line_phase;
};

class LadderKernel {
 public:
  LadderKernel(const CombSpec& comb, const RotorSpec& rotor, Distortion lines)
      : size_(rotor.ladder_size()) {
    if (static_cast<int>(comb.components.size()) != rotor.j_max()) {
      throw std::domain_error("dynamics: comb has " +
                              std::to_string(comb.components.size()) +
                              " components, ladder needs " +
                              std::to_string(rotor.j_max()));
    }
    for (int j = 0; j < rotor.j_max(); ++j) {
      dipole_.push_back(transition_dipole(rotor, j));
      line_freq_.push_back(transition_frequency(rotor, j, lines));
    }
    for (const auto& c : comb.components) {
      amplitude_.push_back(c.amplitude);
      comb_freq_.push_back(c.frequency);
    }
    shared_phases_ = (comb_freq_ == line_freq_);
  }

  int size() const { return size_; }
  bool shared_phases() const { return shared_phases_; }
  const std::vector<double>& line_frequencies() const { return line_freq_; }
  const std::vector<double>& comb_frequencies() const { return comb_freq_; }

  double field_from(const std::vector<Complex>& comb_phase) const {
    double eps = 0.0;
    for (std::size_t k = 0; k < amplitude_.size(); ++k) {
      eps += amplitude_[k] * comb_phase[k].real();
    }
    return eps;
  }

  void sample_direct(long double t, FieldSample& out) const {
    out.line_phase.resize(line_freq_.size());
    for (std::size_t j = 0; j < line_freq_.size(); ++j) {
      out.line_phase[j] = detail::cycle_phasor(line_freq_[j], t);
    }
    if (shared_phases_) {
      out.epsilon = field_from(out.line_phase);
    } else {
      double eps = 0.0;
      for (std::size_t k = 0; k < amplitude_.size(); ++k) {
        eps += amplitude_[k] * std::cos(detail::cycle_angle(comb_freq_[k], t));
      }
      out.epsilon = eps;
    }
  }

  void apply(const FieldSample& s, const Complex* c, Complex* dc) const {
    const std::size_t bonds = dipole_.size();
    Complex down = 0.0;  // coupling from J-1, carried across iterations
    for (std::size_t j = 0; j < bonds; ++j) {
      const Complex g = (dipole_[j] * s.epsilon) * std::conj(s.line_phase[j]);
      dc[j] = kI * (down + g * c[j + 1]);
      down = std::conj(g) * c[j];
    }
    dc[bonds] = kI * down;
  }

 private:
  int size_;
  std::vector<double> dipole_;
  std::vector<double> line_freq_;
  std::vector<double> amplitude_;
  std::vector<double> comb_freq_;
  bool shared_phases_ = false;
};

/// Produces FieldSamples on the half-step grid in increasing order.
class FieldSampler {
 public:
  FieldSampler(const LadderKernel& kernel, FieldEvaluation mode, double t0,
               double half_step)
      : kernel_(kernel), mode_(mode), t0_(t0), half_(half_step) {
    if (mode_ == FieldEvaluation::rotators) {
      lines_.emplace(std::vector<double>(kernel.line_frequencies()), t0, half_step);
      if (!kernel.shared_phases()) {
        comb_.emplace(std::vector<double>(kernel.comb_frequencies()), t0, half_step);
      }
    }
  }

  void sample(std::int64_t q, FieldSample& out) {
    if (mode_ == FieldEvaluation::direct) {
      kernel_.sample_direct(detail::grid_time(t0_, q, half_), out);
      return;
    }
    out.line_phase = lines_->at(q);
    out.epsilon = kernel_.field_from(comb_ ? comb_->at(q) : out.line_phase);
  }

 private:
  const LadderKernel& kernel_;
  FieldEvaluation mode_;
  double t0_;
  double half_;
  std::optional<detail::PhaseTrack> lines_;
  std::optional<detail::PhaseTrack> comb_;
};

}  // namespace

WalkState WalkState::basis(int size, int index, double time) {
  if (index < 0 || index >= size) {
    throw std::domain_error("WalkState::basis: index outside ladder");
  }
  WalkState s{std::vector<Complex>(static_cast<std::size_t>(size)), time};
  s.amplitudes[static_cast<std::size_t>(index)] = 1.0;
  return s;
}

double WalkState::norm() const {
  double n = 0.0;
  for (const auto& c : amplitudes) n += std::norm(c);
  return n;
}

std::vector<double> WalkState::populations() const {
  std::vector<double> p(amplitudes.size());
  std::transform(amplitudes.begin(), amplitudes.end(), p.begin(),
                 [](const Complex& c) { return std::norm(c); });
  return p;
}

void RunConfig::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start)) {
    throw std::domain_error("run: t_end must exceed t_start");
  }
  if (steps_per_unit_time < 0) {
    throw std::domain_error("run: steps_per_unit_time must be >= 1 (0 for default)");
  }
  if (initial_j < 0) {
    throw std::domain_error("run: initial_J must be >= 0");
  }
  for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
    const double ts = snapshot_times[i];
    if (!(ts >= t_start && ts <= t_end)) {
      throw std::domain_error("run: snapshot time " + std::to_string(ts) +
                              " outside [t_start, t_end]");
    }
    if (i > 0 && ts < snapshot_times[i - 1]) {
      throw std::domain_error("run: snapshot times must be sorted");
    }
  }
}

int default_steps_per_unit_time(const CombSpec& comb) {
  const double f = comb.highest_frequency();
  return 64 * std::max(1, static_cast<int>(std::ceil(f - 1e-9)));
}

double Trajectory::max_abs_norm_drift() const {
  double m = 0.0;
  for (double d : norm_drift) m = std::max(m, std::abs(d));
  return m;
}

std::vector<Complex> derivative(const WalkState& state, double t,
                                const CombSpec& comb, const RotorSpec& rotor,
                                Distortion lines) {
  if (state.size() != rotor.ladder_size()) {
    throw std::domain_error("derivative: state has " + std::to_string(state.size()) +
                            " amplitudes, ladder has " +
                            std::to_string(rotor.ladder_size()));
  }
  const LadderKernel kernel(comb, rotor, lines);
  FieldSample s;
  kernel.sample_direct(t, s);
  std::vector<Complex> dc(state.amplitudes.size());
  kernel.apply(s, state.amplitudes.data(), dc.data());
  return dc;
}

Trajectory propagate(const WalkState& initial, const CombSpec& comb,
                     const RotorSpec& rotor, const RunConfig& config,
                     Distortion lines) {
  config.validate();
  if (initial.size() != rotor.ladder_size()) {
    throw std::domain_error("propagate: initial state does not match the ladder");
  }
  const LadderKernel kernel(comb, rotor, lines);

  Trajectory traj;
  traj.steps_per_unit_time = config.steps_per_unit_time > 0
                                 ? config.steps_per_unit_time
                                 : default_steps_per_unit_time(comb);
  const double window = config.t_end - config.t_start;
  const std::int64_t n_steps = std::max<std::int64_t>(
      1, std::llround(window * traj.steps_per_unit_time));
  const double h = window / static_cast<double>(n_steps);
  traj.steps = n_steps;

  std::vector<std::int64_t> snap_steps;
  for (double ts : config.snapshot_times) {
    snap_steps.push_back(std::clamp<std::int64_t>(
        std::llround((ts - config.t_start) / h), 0, n_steps));
  }
  std::size_t next_snap = 0;
  auto record = [&](const std::vector<Complex>& c, std::int64_t step) {
    while (next_snap < snap_steps.size() && snap_steps[next_snap] == step) {
      WalkState s{c, config.t_start + static_cast<double>(step) * h};
      traj.populations.push_back(s.populations());
      traj.norm_drift.push_back(s.norm() - 1.0);
      traj.snapshots.push_back(std::move(s));
      ++next_snap;
    }
  };

  const std::size_t n = initial.amplitudes.size();
  std::vector<Complex> c = initial.amplitudes;
  std::vector<Complex> k1(n), k2(n), k3(n), k4(n), tmp(n);
  FieldSampler sampler(kernel, config.field_evaluation, config.t_start, 0.5 * h);
  FieldSample s_begin, s_mid, s_end;
  sampler.sample(0, s_begin);

  record(c, 0);
  for (std::int64_t step = 0; step < n_steps; ++step) {
    sampler.sample(2 * step + 1, s_mid);
    sampler.sample(2 * step + 2, s_end);

    kernel.apply(s_begin, c.data(), k1.data());
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + (0.5 * h) * k1[j];
    kernel.apply(s_mid, tmp.data(), k2.data());
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + (0.5 * h) * k2[j];
    kernel.apply(s_mid, tmp.data(), k3.data());
    for (std::size_t j = 0; j < n; ++j) tmp[j] = c[j] + h * k3[j];
    kernel.apply(s_end, tmp.data(), k4.data());

    double norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      c[j] += (h / 6.0) * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
      norm += std::norm(c[j]);
    }
    if (!std::isfinite(norm) || norm > 1e6) {
      throw IntegrationError(step + 1, "propagate: state diverged at step " +
                                           std::to_string(step + 1));
    }
    std::swap(s_begin, s_end);
    record(c, step + 1);
  }
  return traj;
}

WalkState propagate_rwa(const WalkState& initial, double gamma, double t) {
  if (t < 0.0) {
    throw std::domain_error("propagate_rwa: t must be >= 0");
  }
  if (initial.amplitudes.empty()) {
    throw std::domain_error("propagate_rwa: empty state");
  }
  if (t == 0.0 || gamma == 0.0) {
    return WalkState{initial.amplitudes, initial.time + t};
  }
  return WalkState{detail::evolve_path_graph(initial.amplitudes, gamma, t),
                   initial.time + t};
}

}  // namespace combwalk
