#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rhoplane/chord.hpp"
#include "rhoplane/errors.hpp"
#include "rhoplane/property_lab.hpp"

using namespace rhoplane;

TEST_CASE("checker grid contains the axis and diagonal angles") {
  const std::vector<double> a = checker_angles(10);
  for (int k = 0; k < 8; ++k) {
    bool hit = false;
    for (double t : a) hit = hit || std::abs(t - k * oracle::kPi / 4) < 1e-15;
    CHECK(hit);
  }
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1] < a[i]);
  CHECK(a.size() == 16u);  // 0 and π are already grid points
  CHECK(checker_angles(256).size() == 256u);
}

TEST_CASE("check_p_rho_s examples") {
  const PropertyReport e = check_p_rho_s(NormSpec::euclidean(), 0.5, 256, 1e-8);
  CHECK(e.pass);
  CHECK(e.max_midpoint_deviation <= 1e-9);
  CHECK(e.evaluated == 256);
  CHECK(e.spec_id == "euclid");

  const PropertyReport sq = check_p_rho_s(NormSpec::square(), 1.0 / 3.0, 256, 1e-8);
  CHECK_FALSE(sq.pass);
  CHECK(sq.max_midpoint_deviation >= 0.16);
  const UnitPoint worst = natural_param(NormSpec::square(), sq.worst_theta);
  CHECK(std::abs(midpoint_check(NormSpec::square(), worst, 1.0 / 3.0).deviation(1.0 / 3.0) -
                 sq.max_midpoint_deviation) == 0.0);

  CHECK(check_p_rho_s(NormSpec::quadratic(1, 0, 4), std::cos(oracle::kPi / 5), 256, 1e-8).pass);
  CHECK_THROWS_AS(check_p_rho_s(NormSpec::euclidean(), 1.2), DomainError);
  CHECK_THROWS_AS(check_p_rho_s(NormSpec::euclidean(), 0.5, 4), DomainError);
}

TEST_CASE("checker is complete on the square and lp:4") {
  for (const NormSpec& spec : {NormSpec::square(), NormSpec::lp(4)}) {
    for (double rho : {1.0 / 3.0, 0.5, std::pow(0.5, 0.75)}) {
      CAPTURE(spec.id());
      CAPTURE(rho);
      const PropertyReport r = check_p_rho_s(spec, rho, 256);
      CHECK_FALSE(r.pass);
      CHECK(r.max_midpoint_deviation > 1e-4);
    }
  }
}

TEST_CASE("checker is sound on inner-product norms") {
  for (const NormSpec& spec : {NormSpec::euclidean(), NormSpec::quadratic(1, 0, 4), NormSpec::quadratic(2, 1, 3)}) {
    for (double rho : {0.2, 0.5, 0.7, 0.95}) {
      const PropertyReport r = check_p_rho_s(spec, rho, 128);
      CHECK(r.pass);
      CHECK(r.notes.empty());
    }
  }
}

TEST_CASE("punto_suite examples") {
  const NormSpec e = NormSpec::euclidean();
  const PuntoReport tri = punto_suite(e, rho_from_kn(1, 3), 0.0);
  CHECK(tri.n == 3);
  CHECK(tri.k == 1);
  for (double w : tri.wedges) CHECK(w == doctest::Approx(std::sin(2 * oracle::kPi / 3)).epsilon(1e-12));
  REQUIRE(tri.partition.areas.size() == 6u);
  for (double a : tri.partition.areas) CHECK(a == doctest::Approx(oracle::kPi / 6).epsilon(1e-6));
  CHECK(tri.pw_target == "P_-v");
  CHECK(tri.all_pass());

  const PuntoReport q = punto_suite(NormSpec::quadratic(1, 0, 4), rho_from_kn(2, 7), 0.4);
  CHECK(q.n == 7);
  CHECK(q.k == 2);
  CHECK(q.wedge_spread <= 1e-8);
  CHECK(q.sector_spread <= 1e-5);
  CHECK(q.partition.areas.size() == 14u);
  CHECK(q.partition.spread <= 1e-5);
  CHECK(std::abs(q.partition.sum - oracle::kPi / 2) <= 1e-5);
  CHECK(q.pw_target == "P_v");
  CHECK(q.all_pass());

  const PuntoReport r = punto_suite(e, rho_from_kn(3, 7), 1.234);
  CHECK(r.n == 7);
  CHECK(r.k == 3);
  CHECK(r.pw_target == "P_-v");
  CHECK(r.all_pass());
}

TEST_CASE("punto_suite input checks") {
  const NormSpec e = NormSpec::euclidean();
  CHECK_THROWS_AS(punto_suite(e, 0.6, 0.0), DomainError);
  // ρ = √2/2 closes as a square on the circle; forced runs report n = 4.
  const PuntoReport forced = punto_suite(e, std::sqrt(0.5), 0.0, true);
  CHECK(forced.forced);
  CHECK(forced.n == 4);
  CHECK_FALSE(forced.odd_vertex_count);
  CHECK_THROWS_AS(punto_suite(NormSpec::quadratic(1, 0, 4), 0.6, 0.0, true), NumericalError);
}

TEST_CASE("punto partitions sum to the ball area") {
  for (const NormSpec& spec : {NormSpec::quadratic(2, 1, 3), NormSpec::euclidean()}) {
    for (const MEntry& m : enumerate_M(3)) {
      const PuntoReport r = punto_suite(spec, m.rho, 0.77);
      CHECK(std::abs(r.partition.sum - r.total_area) <= 1e-5);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("make_partition") {
  const NormSpec sq = NormSpec::square();
  std::vector<UnitPoint> pts;
  for (Vec2 v : {Vec2{0, -1}, Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}}) pts.push_back(unit_point_towards(sq, v));
  const SectorPartition p = make_partition(sq, 0.5, pts);
  REQUIRE(p.areas.size() == 4u);
  for (double a : p.areas) CHECK(a == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p.spread < 1e-9);
  CHECK(p.sum == doctest::Approx(4.0).epsilon(1e-12));
  for (std::size_t i = 1; i < p.boundary.size(); ++i) CHECK(p.boundary[i - 1].theta < p.boundary[i].theta);
  pts.push_back(pts.front());
  CHECK_THROWS_AS(make_partition(sq, 0.5, pts), GeometryError);
}

TEST_CASE("i0 identity examples") {
  const NormSpec e = NormSpec::euclidean();
  CHECK(i0_identities(e, 0.5, 0.0, oracle::kPi / 3, 4096).max() <= 1e-6);
  CHECK(i0_identities(NormSpec::quadratic(1, 0, 4), std::cos(oracle::kPi / 5), 0.1, 1.7, 4096).max() <= 1e-6);
  const I0Residuals full = i0_identities(e, 0.5, 0.0, 2 * oracle::kPi, 4096);
  CHECK(full.perp_by_parts <= 1e-6);
  CHECK(full.max() <= 1e-6);
  CHECK_THROWS_AS(i0_identities(NormSpec::square(), 0.5, 0.0, 1.0), UnsupportedSpecError);
}

TEST_CASE("i0 identities only need smoothness") {
  // s⊥ and ds are both tangent to S, and the other two are integration by
  // parts, so the residuals stay at discretization level off the i.p.s. family.
  const I0Residuals r = i0_identities(NormSpec::lp(4), 0.5, 0.0, 2.0, 4096);
  CHECK(r.max() <= 1e-6);
  const I0Residuals coarse = i0_identities(NormSpec::lp(4), 0.5, 0.0, 2.0, 512);
  CHECK(r.max() <= coarse.max());
}

TEST_CASE("even_probe examples") {
  const EvenProbeRecord sq = even_probe(NormSpec::euclidean(), 1, 4, 0.0);
  CHECK(sq.pv_status == PolygonStatus::Closed);
  CHECK(sq.pv_vertices == 4);
  CHECK(sq.pw_vertices == 4);
  CHECK(sq.symmetry_distance <= 1e-8);
  CHECK(sq.pv_pw_min_distance > 0.1);
  REQUIRE(sq.partition.has_value());
  CHECK(sq.partition->areas.size() == 8u);
  for (double a : sq.partition->areas) CHECK(a == doctest::Approx(oracle::kPi / 8).epsilon(1e-6));
  CHECK(sq.partition->spread <= 1e-6);

  const EvenProbeRecord q = even_probe(NormSpec::quadratic(1, 0, 4), 1, 6, 0.2);
  REQUIRE(q.partition.has_value());
  CHECK(q.partition->areas.size() == 12u);
  CHECK(q.partition->spread <= 1e-5);
  CHECK(q.symmetry_distance <= 1e-8);

  const EvenProbeRecord l4 = even_probe(NormSpec::lp(4), 1, 4, 0.0);
  if (l4.pv_status == PolygonStatus::NonClosing) CHECK_FALSE(l4.notes.empty());
  CHECK(l4.n == 4);

  CHECK_THROWS_AS(even_probe(NormSpec::euclidean(), 1, 5, 0.0), DomainError);
  CHECK_THROWS_AS(even_probe(NormSpec::euclidean(), 2, 4, 0.0), DomainError);
}

TEST_CASE("sweep examples") {
  const auto ok = sweep({NormSpec::euclidean()}, {0.3, 0.5, 0.8});
  REQUIRE(ok.size() == 3u);
  for (const SweepCell& c : ok) {
    REQUIRE(c.report.has_value());
    CHECK(c.report->pass);
    CHECK(c.inner_product);
  }
  CHECK(ok[0].rho == 0.3);
  CHECK(ok[2].rho == 0.8);
  CHECK_FALSE(sweep_has_ips_failure(ok));

  const auto l4 = sweep({NormSpec::lp(4)}, {0.5});
  REQUIRE(l4.size() == 1u);
  CHECK_FALSE(l4[0].report->pass);
  CHECK(l4[0].report->max_midpoint_deviation > 1e-4);
  CHECK_FALSE(l4[0].inner_product);
  CHECK_FALSE(sweep_has_ips_failure(l4));

  const auto sq = sweep({NormSpec::parse("poly:1,1;-1,1;-1,-1;1,-1")}, {0.5});
  CHECK_FALSE(sq[0].report->pass);

  // Spec-major, ρ-minor ordering; an invalid ρ is recorded inline.
  const auto grid = sweep({NormSpec::euclidean(), NormSpec::lp(4)}, {0.5, 1.5}, 32);
  REQUIRE(grid.size() == 4u);
  CHECK(grid[0].spec_id == "euclid");
  CHECK(grid[1].rho == 1.5);
  CHECK_FALSE(grid[1].report.has_value());
  CHECK_FALSE(grid[1].error.empty());
  CHECK(grid[2].spec_id == "lp:4");
  CHECK(sweep_has_ips_failure(grid));
}

TEST_CASE("reports are deterministic") {
  const PropertyReport a = check_p_rho_s(NormSpec::lp(4), 0.5, 256);
  const PropertyReport b = check_p_rho_s(NormSpec::lp(4), 0.5, 256);
  CHECK(a.max_midpoint_deviation == b.max_midpoint_deviation);
  CHECK(a.worst_theta == b.worst_theta);
  const PuntoReport p = punto_suite(NormSpec::quadratic(2, 1, 3), rho_from_kn(1, 5), 0.3);
  const PuntoReport r = punto_suite(NormSpec::quadratic(2, 1, 3), rho_from_kn(1, 5), 0.3);
  CHECK(p.wedges == r.wedges);
  CHECK(p.partition.areas == r.partition.areas);
}
