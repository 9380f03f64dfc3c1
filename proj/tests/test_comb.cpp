#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "combwalk/comb.hpp"
#include "phase.hpp"

using namespace combwalk;

TEST_CASE("single-line comb") {
  const auto comb = build_comb(RotorSpec::normalized(1), 1.0, Distortion::rigid);
  REQUIRE(comb.components.size() == 1);
  CHECK(comb.components[0].amplitude == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(comb.components[0].amplitude == doctest::Approx(1.73205).epsilon(1e-5));
  CHECK(comb.components[0].frequency == 1.0);
  CHECK(std::abs(field_amplitude(comb, 0.25)) < 1e-12);
}

TEST_CASE("comb amplitudes and frequencies follow the rotor") {
  const RotorSpec rotor = RotorSpec::normalized(2);
  const auto comb = build_comb(rotor, 2.0, Distortion::rigid);
  REQUIRE(comb.components.size() == 2);
  CHECK(comb.components[0].amplitude == doctest::Approx(2.0 / transition_dipole(rotor, 0)));
  CHECK(comb.components[1].amplitude == doctest::Approx(2.0 / transition_dipole(rotor, 1)));
  CHECK(comb.components[0].frequency == 1.0);
  CHECK(comb.components[1].frequency == 2.0);

  const auto big = build_comb(RotorSpec::normalized(200), 1.0, Distortion::rigid);
  REQUIRE(big.components.size() == 200);
  for (int k = 0; k < 200; ++k) CHECK(big.components[k].frequency == k + 1.0);
}

TEST_CASE("comb construction errors") {
  CHECK_THROWS_AS(build_comb(RotorSpec::normalized(5), -1.0, Distortion::rigid), std::domain_error);
  CHECK_THROWS_AS(build_comb(RotorSpec::normalized(5, 0.0, 1.0, 1), 1.0, Distortion::rigid),
                  std::domain_error);
  // At D/B = 1e-3 the distorted lines turn over near J = 12.
  CHECK_THROWS_AS(build_comb(RotorSpec::normalized(40, 1e-3), 1.0, Distortion::centrifugal),
                  std::domain_error);
  CHECK_NOTHROW(build_comb(RotorSpec::normalized(40, 1e-3), 1.0, Distortion::rigid));
}

TEST_CASE("comb invariants hold over random rotors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> j_dist(1, 250);
  std::uniform_real_distribution<double> ratio(0.0, 2e-7);
  std::uniform_real_distribution<double> g_dist(0.01, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const RotorSpec rotor = RotorSpec::normalized(j_dist(rng), ratio(rng));
    const double gamma = g_dist(rng);
    for (auto mode : {Distortion::rigid, Distortion::centrifugal}) {
      const auto comb = build_comb(rotor, gamma, mode);
      REQUIRE(static_cast<int>(comb.components.size()) == rotor.j_max());
      for (int k = 0; k < rotor.j_max(); ++k) {
        CHECK(comb.components[k].amplitude == gamma / transition_dipole(rotor, k));
        CHECK(comb.components[k].amplitude > 0.0);
        CHECK(comb.components[k].frequency == transition_frequency(rotor, k, mode));
        if (k > 0) CHECK(comb.components[k].frequency > comb.components[k - 1].frequency);
      }
    }
  }
}

TEST_CASE("ideal comb peaks at t = 0 and repeats every unit") {
  const auto comb = build_comb(RotorSpec::normalized(200), 1.0, Distortion::rigid);
  CHECK(field_amplitude(comb, 0.0) == doctest::Approx(comb.amplitude_sum()).epsilon(1e-13));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t_dist(0.0, 50.0);
  const double bound = 1e-9 * comb.amplitude_sum();
  for (int i = 0; i < 1000; ++i) {
    const double t = t_dist(rng);
    CHECK(std::abs(field_amplitude(comb, t + 1.0) - field_amplitude(comb, t)) <= bound);
  }
}

TEST_CASE("field is even in time for both comb variants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> t_dist(0.0, 30.0);
  for (auto mode : {Distortion::rigid, Distortion::centrifugal}) {
    const auto comb = build_comb(RotorSpec::normalized(200, 1.57e-7), 1.0, mode);
    for (int i = 0; i < 200; ++i) {
      const double t = t_dist(rng);
      CHECK(field_amplitude(comb, -t) == field_amplitude(comb, t));
    }
  }
}

TEST_CASE("profile sampling") {
  const auto comb = build_comb(RotorSpec::normalized(200), 1.0, Distortion::rigid);
  const auto p = sample_profile(comb, 0.0, 1.0, 3);
  REQUIRE(p.times.size() == 3);
  CHECK(p.times[0] == 0.0);
  CHECK(p.times[1] == 0.5);
  CHECK(p.times[2] == 1.0);
  CHECK(std::abs(p.values[0]) > 10.0 * std::abs(p.values[1]));

  const auto two = sample_profile(comb, -1.0, 1.0, 2);
  CHECK(two.times.size() == 2);
  CHECK_THROWS_AS(sample_profile(comb, 0.0, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(sample_profile(comb, 1.0, 1.0, 5), std::domain_error);
}

TEST_CASE("chirped train: first and last pulses are broader than the central one") {
  const auto chirped = build_comb(RotorSpec::normalized(200, 1.57e-7), 1.0, Distortion::centrifugal);
  const double first = pulse_rms_width(chirped, -12.0, 0.25, 4001);
  const double middle = pulse_rms_width(chirped, 0.0, 0.25, 4001);
  const double last = pulse_rms_width(chirped, 12.0, 0.25, 4001);
  CHECK(first > 1.5 * middle);
  CHECK(last > 1.5 * middle);

  // The chirp sign flips across the train: the instantaneous frequency
  // sweeps in opposite directions in the first and last pulse, which
  // shows up as time reversal of the pulse shape about t = 0.
  const auto early = sample_profile(chirped, -12.25, -11.75, 2001);
  const auto late = sample_profile(chirped, 11.75, 12.25, 2001);
  double mismatch = 0.0;
  double asym = 0.0;
  for (std::size_t i = 0; i < early.values.size(); ++i) {
    mismatch += std::abs(early.values[i] - late.values[early.values.size() - 1 - i]);
    asym += std::abs(early.values[i] - late.values[i]);
  }
  CHECK(mismatch < 1e-9 * asym);

  const auto ideal = build_comb(RotorSpec::normalized(200), 1.0, Distortion::rigid);
  CHECK(pulse_rms_width(ideal, -12.0, 0.25, 4001) ==
        doctest::Approx(pulse_rms_width(ideal, 12.0, 0.25, 4001)).epsilon(1e-9));
}

TEST_CASE("phase rotators match direct evaluation") {
  const std::vector<double> freqs = {1.0, 57.25, 199.6862};
  const double t0 = -12.5;
  const double dt = 1.0 / 25344.0;
  detail::PhaseTrack track(freqs, t0, dt);
  for (std::int64_t q = 0; q < 20000; ++q) {
    const auto& ph = track.at(q);
    const long double t = detail::grid_time(t0, q, dt);
    for (std::size_t k = 0; k < freqs.size(); ++k) {
      CHECK(std::abs(ph[k] - detail::cycle_phasor(freqs[k], t)) < 1e-12);
    }
  }
}
