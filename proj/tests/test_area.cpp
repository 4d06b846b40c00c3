#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rhoplane/area.hpp"
#include "rhoplane/chord.hpp"
#include "rhoplane/errors.hpp"

using namespace rhoplane;

TEST_CASE("sector_area examples") {
  const NormSpec e = NormSpec::euclidean();
  CHECK(std::abs(sector_area(e, 0, oracle::kPi / 2, 4096).value - oracle::kPi / 4) <= 1e-6);
  CHECK(std::abs(sector_area(NormSpec::square(), 0, 2 * oracle::kPi, 4096).value - 4.0) <= 1e-6);
  CHECK(std::abs(sector_area(NormSpec::quadratic(1, 0, 4), 0, 2 * oracle::kPi, 4096).value - oracle::kPi / 2) <= 1e-6);

  const SectorArea s = sector_area(e, 0.2, 1.7, 1024);
  CHECK(s.alpha == 0.2);
  CHECK(s.beta == 1.7);
  CHECK(s.samples == 1024);
  CHECK(s.error_estimate > 0.0);
  CHECK(std::abs(s.value - 0.75) <= 4 * s.error_estimate);  // ½·(β-α) on the unit circle

  CHECK_THROWS_AS(sector_area(e, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(sector_area(e, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(sector_area(e, 0.0, 7.0), DomainError);
  CHECK_THROWS_AS(sector_area(e, 0.0, 1.0, 8), DomainError);
}

TEST_CASE("total_ball_area examples") {
  CHECK(total_ball_area(NormSpec::euclidean()) == doctest::Approx(oracle::kPi).epsilon(1e-6));
  CHECK(total_ball_area(NormSpec::square()) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(total_ball_area(NormSpec::parse("poly:1,0;0,1")) == doctest::Approx(2.0).epsilon(1e-12));
  // Area of the lp unit ball: 4 Γ(1+1/p)² / Γ(1+2/p).
  const double g = std::tgamma(1.25);
  CHECK(total_ball_area(NormSpec::lp(4)) == doctest::Approx(4 * g * g / std::tgamma(1.5)).epsilon(1e-6));
}

TEST_CASE("cap_area examples") {
  const NormSpec e = NormSpec::euclidean();
  CHECK(cap_area(e, unit_point_towards(e, {1, 0}), unit_point_towards(e, {0, 1})) ==
        doctest::Approx(oracle::kPi / 4 - 0.5).epsilon(1e-6));
  CHECK(cap_area(e, unit_point_towards(e, {1, 0}), unit_point_towards(e, {-0.5, std::sqrt(3.0) / 2})) ==
        doctest::Approx(oracle::kPi / 3 - std::sqrt(3.0) / 4).epsilon(1e-6));
  const NormSpec sq = NormSpec::square();
  CHECK(cap_area(sq, unit_point_towards(sq, {1, 0}), unit_point_towards(sq, {0, 1})) == doctest::Approx(0.5).epsilon(1e-9));

  CHECK_THROWS_AS(cap_area(e, unit_point_towards(e, {0, 1}), unit_point_towards(e, {1, 0})), DomainError);
}

TEST_CASE("sector additivity within the error estimates") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0, 1);
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::quadratic(2, 1, 3), NormSpec::lp(4), NormSpec::lp(1.5)}) {
    CAPTURE(spec.id());
    for (int i = 0; i < 40; ++i) {
      std::vector<double> t = {unit(rng), unit(rng), unit(rng)};
      std::sort(t.begin(), t.end());
      const double a = 6.0 * t[0] - 3.0, b = 6.0 * t[1] - 3.0, c = 6.0 * t[2] - 3.0;
      if (b - a < 1e-3 || c - b < 1e-3) continue;
      const SectorArea ab = sector_area(spec, a, b), bc = sector_area(spec, b, c), ac = sector_area(spec, a, c);
      const double budget = 2.0 * (ab.error_estimate + bc.error_estimate + ac.error_estimate);
      REQUIRE(std::abs(ab.value + bc.value - ac.value) <= budget + 1e-14);
    }
  }
}

TEST_CASE("central symmetry of sectors") {
  for (const NormSpec& spec : {NormSpec::lp(4), NormSpec::quadratic(2, 1, 3), NormSpec::parse("poly:2,0;1,1.5;-1,1")}) {
    for (double a = -3.0; a < 3.0; a += 0.7) {
      const double b = a + 1.3;
      REQUIRE(std::abs(sector_area(spec, a, b).value - sector_area(spec, a + oracle::kPi, b + oracle::kPi).value) <= 1e-12);
    }
  }
}

TEST_CASE("refinement stability") {
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::lp(4), NormSpec::quadratic(1, 0, 4)}) {
    const SectorArea coarse = sector_area(spec, 0.3, 2.9, 2048);
    const SectorArea fine = sector_area(spec, 0.3, 2.9, 4096);
    CHECK(std::abs(fine.value - coarse.value) < coarse.error_estimate);
    CHECK(fine.error_estimate < coarse.error_estimate);
  }
}

TEST_CASE("caps and wedges of u, u* are constant on inner-product norms") {
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::quadratic(1, 0, 4), NormSpec::quadratic(2, 1, 3)}) {
    for (double rho : {0.3, 0.5, 0.8}) {
      double cap_lo = 1e9, cap_hi = -1e9, w_lo = 1e9, w_hi = -1e9;
      for (int i = 0; i < 32; ++i) {
        const UnitPoint u = natural_param(spec, 0.05 + kTwoPi * i / 32);
        const UnitPoint us = star_map(spec, u, rho);
        const double cap = cap_area(spec, u, us);
        const double w = wedge(u.coords, us.coords);
        cap_lo = std::min(cap_lo, cap);
        cap_hi = std::max(cap_hi, cap);
        w_lo = std::min(w_lo, w);
        w_hi = std::max(w_hi, w);
      }
      CHECK(cap_hi - cap_lo <= 1e-6);
      CHECK(w_hi - w_lo <= 1e-8);
    }
  }
}

TEST_CASE("sectors are transported by the star map on inner-product norms") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ang(0, 2 * oracle::kPi), gap(0.1, 3.0);
  for (const NormSpec& spec : {NormSpec::quadratic(1, 0, 4), NormSpec::quadratic(2, 1, 3)}) {
    for (int i = 0; i < 16; ++i) {
      const double t = ang(rng);
      const UnitPoint u = natural_param(spec, t), v = natural_param(spec, t + gap(rng));
      const UnitPoint us = star_map(spec, u, 0.6), vs = star_map(spec, v, 0.6);
      REQUIRE(std::abs(arc_sector_area(spec, u, v) - arc_sector_area(spec, us, vs)) <= 1e-6);
    }
  }
}

TEST_CASE("pairwise_sum is order fixed") {
  std::vector<double> x(1000);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 1.0 / (1.0 + static_cast<double>(i));
  const double a = pairwise_sum(x);
  const double b = pairwise_sum(x);
  CHECK(a == b);
  double naive = 0.0;
  for (double v : x) naive += v;
  CHECK(a == doctest::Approx(naive).epsilon(1e-14));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}
