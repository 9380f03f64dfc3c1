#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "combwalk/rotor.hpp"

using namespace combwalk;

TEST_CASE("rotational energy follows the rigid and distorted laws") {
  const RotorSpec rigid(1.0, 0.0, 20);
  CHECK(rotational_energy(rigid, 0, Distortion::rigid) == 0.0);
  CHECK(rotational_energy(rigid, 2, Distortion::rigid) == doctest::Approx(6.0));

  const RotorSpec distorted(1.0, 1e-7, 20);
  CHECK(rotational_energy(distorted, 10, Distortion::centrifugal) ==
        doctest::Approx(110.0 - 1e-7 * 12100.0).epsilon(1e-14));
  CHECK(rotational_energy(distorted, 10, Distortion::centrifugal) ==
        doctest::Approx(109.99879).epsilon(1e-12));
  CHECK_THROWS_AS(rotational_energy(rigid, -1, Distortion::rigid), std::domain_error);
}

TEST_CASE("transition frequencies") {
  const RotorSpec spec(0.5, 0.0, 10);
  CHECK(transition_frequency(spec, 0, Distortion::rigid) == 1.0);
  CHECK(transition_frequency(spec, 9, Distortion::rigid) == 10.0);
  CHECK_THROWS_AS(transition_frequency(spec, 10, Distortion::rigid), std::domain_error);
  CHECK_THROWS_AS(transition_frequency(spec, -1, Distortion::rigid), std::domain_error);

  // D/B = 1.57e-7, J = 99: 100 - 4 * 0.785e-7 * 1e6
  const RotorSpec cs = RotorSpec::normalized(200, 1.57e-7);
  CHECK(transition_frequency(cs, 99, Distortion::centrifugal) == doctest::Approx(99.686).epsilon(1e-12));
}

TEST_CASE("transition dipole closed form") {
  const RotorSpec spec(0.5, 0.0, 10);
  CHECK(transition_dipole(spec, 0) == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
  CHECK(transition_dipole(spec, 0) == doctest::Approx(0.577350).epsilon(1e-6));
  CHECK(transition_dipole(spec, 1) == doctest::Approx(std::sqrt(4.0 / 15.0)).epsilon(1e-15));
  CHECK(transition_dipole(spec, 1) == doctest::Approx(0.516398).epsilon(1e-6));

  const RotorSpec double_mu(0.5, 0.0, 10, 2.0);
  CHECK(transition_dipole(double_mu, 0) == doctest::Approx(2.0 * std::sqrt(1.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("dipole with nonzero M") {
  const RotorSpec m1(0.5, 0.0, 10, 1.0, 1);
  CHECK(transition_dipole(m1, 0) == 0.0);  // |M| = J + 1
  CHECK(transition_dipole(m1, 1) == doctest::Approx(std::sqrt(3.0 / 15.0)));
  const RotorSpec m2(0.5, 0.0, 10, 1.0, -2);
  CHECK_THROWS_AS(transition_dipole(m2, 0), std::domain_error);
  CHECK(transition_dipole(m2, 2) > 0.0);
}

TEST_CASE("rotor construction rejects bad constants") {
  CHECK_THROWS_AS(RotorSpec(0.0, 0.0, 5), std::domain_error);
  CHECK_THROWS_AS(RotorSpec(1.0, -1e-9, 5), std::domain_error);
  CHECK_THROWS_AS(RotorSpec(1.0, 2e-3, 5), std::domain_error);
  CHECK_THROWS_AS(RotorSpec(1.0, 0.0, 0), std::domain_error);
  CHECK_THROWS_AS(RotorSpec(1.0, 0.0, 3, 1.0, 4), std::domain_error);
  CHECK_NOTHROW(RotorSpec(1.0, 1e-3, 5));
}

TEST_CASE("frequency equals energy gap for random rotors") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> b_dist(0.1, 10.0);
  std::uniform_real_distribution<double> ratio_dist(0.0, 1e-5);
  std::uniform_int_distribution<int> j_dist(1, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const double b = b_dist(rng);
    const RotorSpec spec(b, ratio_dist(rng) * b, j_dist(rng));
    for (auto mode : {Distortion::rigid, Distortion::centrifugal}) {
      for (int j = 0; j < spec.j_max(); ++j) {
        const double upper = rotational_energy(spec, j + 1, mode);
        const double gap = upper - rotational_energy(spec, j, mode);
        const double nu = transition_frequency(spec, j, mode);
        // Relative to the operands of the subtraction, i.e. ulp scale.
        CHECK(std::abs(gap - nu) <= 1e-12 * std::max(1.0, std::abs(upper)));
      }
    }
  }
}

TEST_CASE("line spacing: even for rigid, shrinking with distortion") {
  const RotorSpec rigid = RotorSpec::normalized(300);
  const RotorSpec cs = RotorSpec::normalized(300, 1.57e-7);
  for (int j = 0; j + 1 < 300; ++j) {
    CHECK(transition_frequency(rigid, j + 1, Distortion::rigid) -
              transition_frequency(rigid, j, Distortion::rigid) ==
          2.0 * rigid.b());
    CHECK(transition_frequency(cs, j + 1, Distortion::centrifugal) -
              transition_frequency(cs, j, Distortion::centrifugal) <
          2.0 * cs.b());
  }
}

TEST_CASE("dipole bounds and large-J limit") {
  const RotorSpec spec = RotorSpec::normalized(1001);
  for (int j = 0; j < spec.j_max(); ++j) {
    const double mu = transition_dipole(spec, j);
    CHECK(mu > 0.0);
    CHECK(mu <= 1.0 / std::sqrt(3.0) + 1e-15);
    if (j > 0) CHECK(mu < transition_dipole(spec, j - 1));
  }
  // (J+1)/sqrt((2J+1)(2J+3)) -> 1/2; at J = 1000 it is 1/2 / sqrt(1 - 1/(2J+2)^2).
  const double j = 1000.0;
  const double limit_form = 0.5 / std::sqrt(1.0 - 1.0 / ((2 * j + 2) * (2 * j + 2)));
  CHECK(transition_dipole(spec, 1000) == doctest::Approx(limit_form).epsilon(1e-6));
  CHECK(std::abs(transition_dipole(spec, 1000) - 0.5) < 1e-6);
}
