#include "rhoplane/property_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>

#include "rhoplane/area.hpp"
#include "rhoplane/chord.hpp"
#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

std::string fmt_theta(double theta) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

double spread_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return *hi - *lo;
}

double hausdorff(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  return std::max(set_distance(a, b), set_distance(b, a));
}

UnitPoint antipode(const UnitPoint& p) { return {normalize_angle(p.theta + kPi), -p.coords}; }

PropertyReport check_impl(const NormSpec& spec, double rho, int samples, double tol, bool parallel) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("check_p_rho_s: rho must lie in (0, 1)");
  if (samples < 8) throw DomainError("check_p_rho_s: samples must be at least 8");
  const std::vector<double> angles = checker_angles(samples);
  const int count = static_cast<int>(angles.size());
  std::vector<double> dev(angles.size(), -1.0);
  std::vector<std::string> err(angles.size());

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int i = 0; i < count; ++i) {
    try {
      dev[i] = midpoint_check(spec, natural_param(spec, angles[i]), rho).deviation(rho);
    } catch (const Error& e) {
      err[i] = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
      err[i] = e.what();
    }
  }

  PropertyReport r;
  r.spec_id = spec.id();
  r.rho = rho;
  r.samples = samples;
  r.tol = tol;
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    if (!err[i].empty()) {
      ++failures;
      if (!r.notes.empty()) r.notes += "; ";
      r.notes += "theta=" + fmt_theta(angles[i]) + " " + err[i];
      continue;
    }
    ++r.evaluated;
    if (dev[i] > r.max_midpoint_deviation || r.evaluated == 1) {
      r.max_midpoint_deviation = dev[i];
      r.worst_theta = angles[i];
    }
  }
  r.pass = failures == 0 && r.max_midpoint_deviation <= tol;
  return r;
}

}  // namespace

std::vector<double> checker_angles(int samples) {
  std::vector<double> angles;
  for (int i = 0; i < samples; ++i) angles.push_back(kTwoPi * i / samples);
  for (int j = 0; j < 8; ++j) angles.push_back(j * kPi / 4.0);
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(), [](double a, double b) { return std::abs(a - b) <= 1e-15; }),
               angles.end());
  return angles;
}

PropertyReport check_p_rho_s(const NormSpec& spec, double rho, int samples, double tol) {
  return check_impl(spec, rho, samples, tol, true);
}

PropertyReport check_p_rho_s_serial(const NormSpec& spec, double rho, int samples, double tol) {
  return check_impl(spec, rho, samples, tol, false);
}

SectorPartition make_partition(const NormSpec& spec, double rho, std::vector<UnitPoint> points, int samples) {
  if (points.size() < 2) throw DomainError("make_partition: need at least two boundary points");
  std::sort(points.begin(), points.end(), [](const UnitPoint& a, const UnitPoint& b) { return a.theta < b.theta; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].theta > points[i - 1].theta)) throw GeometryError("make_partition: repeated boundary direction");
  }
  SectorPartition p;
  p.rho = rho;
  p.boundary = std::move(points);
  for (std::size_t i = 0; i < p.boundary.size(); ++i) {
    p.areas.push_back(arc_sector_area(spec, p.boundary[i], p.boundary[(i + 1) % p.boundary.size()], samples));
  }
  p.spread = spread_of(p.areas);
  p.sum = pairwise_sum(p.areas);
  return p;
}

PuntoReport punto_suite(const NormSpec& spec, double rho, double seed_theta, bool force, const PuntoTolerances& tol,
                        int area_samples) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("punto_suite: rho must lie in (0, 1)");
  PuntoReport r;
  r.rho = rho;
  r.seed_theta = normalize_angle(seed_theta);
  r.forced = force;
  MEntry entry;
  if (find_in_M(rho, entry)) {
    r.m_entry = entry;
  } else if (!force) {
    throw DomainError("punto_suite: rho is not in M (pass force to run anyway)");
  }

  const UnitPoint v = natural_param(spec, seed_theta);
  const RhoPolygon pv = build_polygon(spec, v, rho);
  if (pv.status != PolygonStatus::Closed) {
    throw NumericalError("punto_suite: P_v is NonClosing after " + std::to_string(pv.steps) + " steps");
  }
  r.n = pv.n;
  r.k = pv.k;
  r.odd_vertex_count = r.n % 2 == 1 && (!r.m_entry || r.m_entry->n == r.n);

  const auto& vs = pv.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const UnitPoint& a = vs[i];
    const UnitPoint& b = vs[(i + 1) % vs.size()];
    r.wedges.push_back(wedge(a.coords, b.coords));
    r.sector_areas.push_back(arc_sector_area(spec, a, b, area_samples));
  }
  r.wedge_spread = spread_of(r.wedges);
  r.sector_spread = spread_of(r.sector_areas);
  r.equal_wedges = r.wedge_spread <= tol.wedge;
  r.equal_sectors = r.sector_spread <= tol.sector;

  std::vector<UnitPoint> boundary = vs;
  for (const UnitPoint& p : vs) boundary.push_back(antipode(p));
  r.total_area = total_ball_area(spec, area_samples);
  try {
    r.partition = make_partition(spec, rho, boundary, area_samples);
    r.equal_partition = r.partition.boundary.size() == 2 * vs.size() && r.partition.spread <= tol.partition &&
                        std::abs(r.partition.sum - r.total_area) <= tol.area_sum;
  } catch (const GeometryError&) {
    r.equal_partition = false;  // P_v meets P_{-v}
  }

  const UnitPoint w = unit_point_towards(spec, vs[0].coords + vs[1].coords);
  const RhoPolygon pw = build_polygon(spec, w, rho);
  std::vector<Vec2> target = coords_of(pv);
  if (r.k % 2 == 1) {
    for (Vec2& t : target) t = -t;
    r.pw_target = "P_-v";
  } else {
    r.pw_target = "P_v";
  }
  r.pw_distance = pw.status == PolygonStatus::Closed ? hausdorff(coords_of(pw), target)
                                                     : std::numeric_limits<double>::infinity();
  r.pw_identified = r.pw_distance <= tol.identification;
  return r;
}

double I0Residuals::max() const { return std::max({orthogonal_integral, perp_by_parts, mu_perp_by_parts}); }

I0Residuals i0_identities(const NormSpec& spec, double rho, double alpha, double beta, int samples) {
  if (!(alpha < beta) || beta - alpha > kTwoPi * (1.0 + 1e-15)) {
    throw DomainError("i0_identities: need alpha < beta <= alpha + 2*pi");
  }
  if (samples < 16) throw DomainError("i0_identities: samples must be at least 16");
  // Surface spec and ρ errors before entering the parallel region.
  mu_of(spec, alpha, rho);
  const int n = samples;
  // Frames on the grid nodes and at the cell midpoints (the Stieltjes tags).
  std::vector<ChordFrame> node(static_cast<std::size_t>(n) + 1), mid(static_cast<std::size_t>(n));
  const double h = (beta - alpha) / n;
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (int i = 0; i <= n; ++i) {
    try {
      node[i] = mu_of(spec, i == n ? beta : alpha + h * i, rho);
      if (i < n) mid[i] = mu_of(spec, alpha + h * (i + 0.5), rho);
    } catch (...) {
#pragma omp critical(i0_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> t1(n), t2(n), t3(n);
  for (int i = 0; i < n; ++i) {
    const Vec2 s_mid = mid[i].base.coords;
    const Vec2 mp_mid = mid[i].mu * mid[i].perp.coords;
    const Vec2 ds = node[i + 1].base.coords - node[i].base.coords;
    const Vec2 dp = node[i + 1].perp.coords - node[i].perp.coords;
    const Vec2 dmp = node[i + 1].mu * node[i + 1].perp.coords - node[i].mu * node[i].perp.coords;
    t1[i] = wedge(mp_mid, ds);
    t2[i] = wedge(s_mid, dp);
    t3[i] = wedge(s_mid, dmp);
  }
  const ChordFrame& a = node.front();
  const ChordFrame& b = node.back();
  const double bd2 = wedge(b.base.coords, b.perp.coords) - wedge(a.base.coords, a.perp.coords);
  const double bd3 = wedge(b.base.coords, b.mu * b.perp.coords) - wedge(a.base.coords, a.mu * a.perp.coords);

  I0Residuals r;
  r.orthogonal_integral = std::abs(pairwise_sum(t1));
  r.perp_by_parts = std::abs(pairwise_sum(t2) - bd2);
  r.mu_perp_by_parts = std::abs(pairwise_sum(t3) - bd3);
  return r;
}

EvenProbeRecord even_probe(const NormSpec& spec, int k, int n, double seed_theta, int area_samples) {
  if (n % 2 != 0) throw DomainError("even_probe: n must be even");
  EvenProbeRecord rec;
  rec.k = k;
  rec.n = n;
  rec.rho = rho_from_kn(k, n);
  rec.seed_theta = normalize_angle(seed_theta);

  const UnitPoint v = natural_param(spec, seed_theta);
  const RhoPolygon pv = build_polygon(spec, v, rec.rho);
  rec.pv_status = pv.status;
  if (pv.status != PolygonStatus::Closed) {
    rec.notes = "P_v did not close within " + std::to_string(pv.steps) + " steps";
    return rec;
  }
  rec.pv_vertices = pv.n;
  rec.pv_winding = pv.k;
  std::vector<Vec2> pv_pts = coords_of(pv), neg = pv_pts;
  for (Vec2& p : neg) p = -p;
  rec.symmetry_distance = hausdorff(pv_pts, neg);

  const UnitPoint w = unit_point_towards(spec, pv.vertices[0].coords + pv.vertices[1].coords);
  const RhoPolygon pw = build_polygon(spec, w, rec.rho);
  rec.pw_status = pw.status;
  rec.pw_vertices = pw.status == PolygonStatus::Closed ? pw.n : 0;
  rec.pv_pw_min_distance = min_pair_distance(pv_pts, coords_of(pw));
  if (pw.status != PolygonStatus::Closed) {
    rec.notes = "P_w did not close within " + std::to_string(pw.steps) + " steps";
    return rec;
  }
  std::vector<UnitPoint> boundary = pv.vertices;
  boundary.insert(boundary.end(), pw.vertices.begin(), pw.vertices.end());
  try {
    rec.partition = make_partition(spec, rec.rho, boundary, area_samples);
  } catch (const GeometryError& e) {
    rec.notes = e.what();
  }
  return rec;
}

std::vector<SweepCell> sweep(const std::vector<NormSpec>& specs, const std::vector<double>& rhos, int samples,
                             double tol) {
  if (specs.empty() || rhos.empty()) throw DomainError("sweep: spec and rho lists must be non-empty");
  std::vector<SweepCell> cells(specs.size() * rhos.size());
  const int total = static_cast<int>(cells.size());
#pragma omp parallel for schedule(static, 1)
  for (int idx = 0; idx < total; ++idx) {
    const NormSpec& spec = specs[idx / rhos.size()];
    SweepCell& cell = cells[idx];
    cell.spec_id = spec.id();
    cell.inner_product = spec.is_inner_product();
    cell.rho = rhos[idx % rhos.size()];
    try {
      cell.report = check_p_rho_s_serial(spec, cell.rho, samples, tol);
    } catch (const Error& e) {
      cell.error = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  }
  return cells;
}

bool sweep_has_ips_failure(const std::vector<SweepCell>& cells) {
  return std::any_of(cells.begin(), cells.end(), [](const SweepCell& c) {
    return c.inner_product && (!c.report || !c.report->pass);
  });
}

}  // namespace rhoplane
