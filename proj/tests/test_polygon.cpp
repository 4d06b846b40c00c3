#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "rhoplane/errors.hpp"
#include "rhoplane/polygon.hpp"

using namespace rhoplane;

namespace {

const std::vector<std::pair<int, int>> kOddPairs = {{1, 3}, {1, 5}, {2, 5}, {1, 7}, {2, 7}, {3, 7}};

}  // namespace

TEST_CASE("rho_from_kn examples") {
  CHECK(rho_from_kn(1, 3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rho_from_kn(1, 4) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(rho_from_kn(2, 7) == doctest::Approx(std::cos(2 * oracle::kPi / 7)).epsilon(1e-15));
  CHECK(rho_from_kn(2, 7) == doctest::Approx(0.6234898018587336).epsilon(1e-14));
  CHECK_THROWS_AS(rho_from_kn(2, 4), DomainError);
  CHECK_THROWS_AS(rho_from_kn(0, 5), DomainError);
  CHECK_THROWS_AS(rho_from_kn(1, 2), DomainError);
}

TEST_CASE("rho_from_kn strictly decreases in k") {
  for (int n = 3; n <= 40; ++n)
    for (int k = 1; 2 * (k + 1) < n; ++k) REQUIRE(rho_from_kn(k + 1, n) < rho_from_kn(k, n));
}

TEST_CASE("enumerate_M examples") {
  const auto m1 = enumerate_M(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].k == 1);
  CHECK(m1[0].m == 1);
  CHECK(m1[0].rho == doctest::Approx(0.5).epsilon(1e-15));

  const auto m2 = enumerate_M(2);
  REQUIRE(m2.size() == 3);
  bool saw_first = false, saw_second = false;
  for (const MEntry& e : m2) {
    if (e.k == 1 && e.m == 2) saw_first = std::abs(e.rho - std::cos(oracle::kPi / 5)) < 1e-15;
    if (e.k == 2 && e.m == 2) saw_second = std::abs(e.rho - std::cos(2 * oracle::kPi / 5)) < 1e-15;
  }
  CHECK(saw_first);
  CHECK(saw_second);

  const auto m3 = enumerate_M(3);
  CHECK(m3.size() == 6);
  for (std::size_t i = 1; i < m3.size(); ++i) CHECK(m3[i - 1].rho >= m3[i].rho);

  // k=1,m=1 and k=3,m=4 are distinct entries of equal value (cos(π/3) = cos(3π/9)).
  const auto m4 = enumerate_M(4);
  int halves = 0;
  for (const MEntry& e : m4) halves += std::abs(e.rho - 0.5) < 1e-15;
  CHECK(halves == 2);

  MEntry hit;
  CHECK(find_in_M(rho_from_kn(2, 7), hit));
  CHECK(hit.n == 7);
  CHECK(hit.k == 2);
  CHECK_FALSE(find_in_M(std::sqrt(0.5), hit));
}

TEST_CASE("build_polygon examples") {
  const NormSpec e = NormSpec::euclidean();
  const RhoPolygon pent = build_polygon(e, natural_param(e, 0.0), std::cos(oracle::kPi / 5), {100, 1e-8});
  REQUIRE(pent.status == PolygonStatus::Closed);
  CHECK(pent.n == 5);
  CHECK(pent.k == 1);
  for (int j = 0; j < 5; ++j) CHECK(oracle::angle_diff(pent.vertices[j].theta, 2 * oracle::kPi * j / 5) < 1e-9);

  const NormSpec sq = NormSpec::square();
  const RhoPolygon axis = build_polygon(sq, natural_param(sq, 0.0), 0.5, {100, 1e-8});
  REQUIRE(axis.status == PolygonStatus::Closed);
  CHECK(axis.n == 4);
  CHECK(axis.k == 1);
  const std::vector<Vec2> expect = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int j = 0; j < 4; ++j) CHECK(distance(axis.vertices[j].coords, expect[j]) < 1e-9);

  const RhoPolygon open = build_polygon(sq, natural_param(sq, 0.35), 0.5, {2000, 1e-8});
  CHECK(open.status == PolygonStatus::NonClosing);
  CHECK(open.steps == 2000);
  CHECK(open.accumulation_points.size() == 4);
  for (const Vec2& p : open.accumulation_points) {
    double best = 1e9;
    for (const Vec2& q : expect) best = std::min(best, distance(p, q));
    CHECK(best < 1e-3);
  }
  CHECK(set_distance(expect, open.accumulation_points) < 1e-3);
}

TEST_CASE("classify examples") {
  const NormSpec e = NormSpec::euclidean();
  const char* names[] = {"Convex", "StarShaped(2)", "StarShaped(3)"};
  for (int k = 1; k <= 3; ++k) {
    const RhoPolygon p = build_polygon(e, natural_param(e, 0.2), rho_from_kn(k, 7));
    REQUIRE(p.status == PolygonStatus::Closed);
    CHECK(p.n == 7);
    CHECK(p.k == k);
    CHECK(classify(p).to_string() == names[k - 1]);
    CHECK(classify(p).shape == (k == 1 ? PolygonShape::Convex : PolygonShape::StarShaped));
  }
  const NormSpec sq = NormSpec::square();
  const RhoPolygon open = build_polygon(sq, natural_param(sq, 0.35), 0.5, {200, 1e-8});
  CHECK_THROWS_AS(classify(open), DomainError);
  CHECK_THROWS_AS(wedge_sum(open), DomainError);
}

TEST_CASE("wedge_sum examples") {
  const NormSpec e = NormSpec::euclidean();
  CHECK(wedge_sum(build_polygon(e, natural_param(e, 0.0), std::cos(oracle::kPi / 5))) ==
        doctest::Approx(5 * std::sin(2 * oracle::kPi / 5)).epsilon(1e-12));
  CHECK(wedge_sum(build_polygon(e, natural_param(e, 0.4), 0.5)) ==
        doctest::Approx(3 * std::sin(2 * oracle::kPi / 3)).epsilon(1e-12));
  const NormSpec sq = NormSpec::square();
  CHECK(wedge_sum(build_polygon(sq, natural_param(sq, 0.0), 0.5)) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("closed polygons follow the rotation oracle on inner-product norms") {
  const NormSpec e = NormSpec::euclidean();
  const NormSpec q = NormSpec::quadratic(1, 0, 4);
  const auto sub = oracle::Substitution::from_quadratic(1, 0, 4);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * oracle::kPi);
  for (auto [k, n] : kOddPairs) {
    const double rho = rho_from_kn(k, n);
    for (int s = 0; s < 8; ++s) {
      const double t = ang(rng);
      const RhoPolygon pe = build_polygon(e, natural_param(e, t), rho);
      REQUIRE(pe.status == PolygonStatus::Closed);
      REQUIRE(pe.n == n);
      REQUIRE(pe.k == k);
      for (int j = 0; j < n; ++j)
        REQUIRE(oracle::angle_diff(pe.vertices[j].theta, t + 2 * oracle::kPi * j * k / n) < 1e-6);

      const UnitPoint u = natural_param(q, t);
      const RhoPolygon pq = build_polygon(q, u, rho);
      REQUIRE(pq.status == PolygonStatus::Closed);
      REQUIRE(pq.n == n);
      REQUIRE(pq.k == k);
      const double phi0 = sub.circle_angle(u.coords);
      for (int j = 0; j < n; ++j) {
        const Vec2 expect = sub.sphere_at_circle_angle(phi0 + 2 * oracle::kPi * j * k / n);
        REQUIRE(distance(pq.vertices[j].coords, expect) < 1e-6);
      }
    }
  }
}

TEST_CASE("antipodal polygon is the negated polygon") {
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::quadratic(2, 1, 3), NormSpec::lp(4), NormSpec::square()}) {
    CAPTURE(spec.id());
    for (double rho : {rho_from_kn(1, 5), rho_from_kn(2, 7), 0.5}) {
      const RhoPolygon a = build_polygon(spec, natural_param(spec, 0.3), rho, {300, 1e-8});
      const RhoPolygon b = build_polygon(spec, natural_param(spec, 0.3 + oracle::kPi), rho, {300, 1e-8});
      REQUIRE(a.vertices.size() == b.vertices.size());
      CHECK(a.status == b.status);
      double worst = 0.0;
      for (std::size_t j = 0; j < a.vertices.size(); ++j)
        worst = std::max(worst, distance(a.vertices[j].coords, -b.vertices[j].coords));
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("odd polygons and their antipodes are disjoint") {
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::quadratic(1, 0, 4), NormSpec::quadratic(2, 1, 3)}) {
    for (const MEntry& m : enumerate_M(3)) {
      const RhoPolygon a = build_polygon(spec, natural_param(spec, 0.9), m.rho);
      const RhoPolygon b = build_polygon(spec, natural_param(spec, 0.9 + oracle::kPi), m.rho);
      REQUIRE(a.status == PolygonStatus::Closed);
      CHECK(min_pair_distance(coords_of(a), coords_of(b)) > 0.1);
    }
  }
}

TEST_CASE("vertex count and wedge sum are seed independent on inner-product norms") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ang(0, 2 * oracle::kPi);
  for (const NormSpec& spec : {NormSpec::quadratic(1, 0, 4), NormSpec::quadratic(2, 1, 3)}) {
    for (const MEntry& m : enumerate_M(3)) {
      int n0 = -1, k0 = -1;
      double lo = 1e300, hi = -1e300;
      for (int s = 0; s < 32; ++s) {
        const RhoPolygon p = build_polygon(spec, natural_param(spec, ang(rng)), m.rho);
        REQUIRE(p.status == PolygonStatus::Closed);
        if (n0 < 0) {
          n0 = p.n;
          k0 = p.k;
        }
        REQUIRE(p.n == n0);
        REQUIRE(p.k == k0);
        const double w = wedge_sum(p);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
      CHECK(n0 == m.n);
      CHECK(k0 == m.k);
      CHECK(hi - lo <= 1e-8);
    }
  }
}

TEST_CASE("non-closing orbit on an ellipse at a non-M ratio") {
  const NormSpec q = NormSpec::quadratic(1, 0, 4);
  const RhoPolygon p = build_polygon(q, natural_param(q, 0.1), 0.6, {500, 1e-8});
  CHECK(p.status == PolygonStatus::NonClosing);
  CHECK(p.steps == 500);
  CHECK(p.vertices.size() == 501u);  // seed plus one vertex per step
}
