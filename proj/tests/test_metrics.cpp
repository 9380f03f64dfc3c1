#include <doctest.h>

#include <random>

#include "combwalk/metrics.hpp"
#include "combwalk/oracles.hpp"

using namespace combwalk;

namespace {

LatticeDistribution random_distribution(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> first(-5, 5);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LatticeDistribution d{first(rng), std::vector<double>(static_cast<std::size_t>(len(rng)))};
  double s = 0.0;
  for (auto& p : d.probabilities) s += (p = u(rng));
  for (auto& p : d.probabilities) p /= s;
  return d;
}

}  // namespace

TEST_CASE("total variation examples") {
  const LatticeDistribution delta0{0, {1.0}};
  const LatticeDistribution delta1{1, {1.0}};
  const LatticeDistribution uniform{0, {0.5, 0.5}};
  CHECK(total_variation(uniform, uniform) == 0.0);
  CHECK(total_variation(delta0, delta1) == 1.0);
  CHECK(total_variation(uniform, delta0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(total_variation(LatticeDistribution{0, {-0.1, 1.1}}, delta0), std::domain_error);
}

TEST_CASE("moments") {
  const auto m = moments(LatticeDistribution{7, {1.0}});
  CHECK(m.norm == 1.0);
  CHECK(m.mean == 7.0);
  CHECK(m.variance == 0.0);
  CHECK_THROWS_AS(moments(LatticeDistribution{0, {0.0, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(moments(LatticeDistribution{0, {0.5, -0.5}}), std::domain_error);

  CHECK(moments(classical_distribution(10.0, 120)).variance == doctest::Approx(10.0).epsilon(1e-7));
  CHECK(std::abs(moments(ctqw_distribution(10.0, 80)).variance - 50.0) <= 1e-4);
}

TEST_CASE("total variation is a metric on random pairs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto p = random_distribution(rng);
    const auto q = random_distribution(rng);
    const auto r = random_distribution(rng);
    const double pq = total_variation(p, q);
    CHECK(pq == total_variation(q, p));
    CHECK(pq >= 0.0);
    CHECK(pq <= 1.0 + 1e-9);
    CHECK(total_variation(p, p) == 0.0);
    CHECK(pq <= total_variation(p, r) + total_variation(r, q) + 1e-12);
    CHECK(l_inf_distance(p, q) <= 2.0 * pq + 1e-15);
  }
}

TEST_CASE("zero total variation means pointwise equality") {
  const LatticeDistribution a{-1, {0.25, 0.5, 0.25}};
  const LatticeDistribution padded{-3, {0.0, 0.0, 0.25, 0.5, 0.25, 0.0}};
  CHECK(total_variation(a, padded) == 0.0);
  for (int s = -4; s <= 4; ++s) CHECK(std::abs(a.at(s) - padded.at(s)) <= 1e-12);
}

TEST_CASE("comparison report keeps the norm deficit visible") {
  const LatticeDistribution sim{0, {0.2, 0.7}};
  const LatticeDistribution ref{0, {0.2, 0.8}};
  const auto r = compare(sim, ref);
  CHECK(r.norm_deficit == doctest::Approx(0.1));
  CHECK(r.total_variation == doctest::Approx(0.05));
  CHECK(r.l_inf == doctest::Approx(0.1));
  CHECK(r.l_inf <= 2.0 * r.total_variation + 1e-15);
  CHECK(r.mean_offset == doctest::Approx(0.7 / 0.9 - 0.8));
}
