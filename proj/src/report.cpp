#include "rhoplane/report.hpp"

#include <cmath>
#include <cstdio>

#include "rhoplane/errors.hpp"

namespace rhoplane {

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json points_json(const std::vector<UnitPoint>& pts) {
  json arr = json::array();
  for (const UnitPoint& p : pts) arr.push_back({p.theta, p.coords.x, p.coords.y});
  return arr;
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* status_name(PolygonStatus s) { return s == PolygonStatus::Closed ? "Closed" : "NonClosing"; }

json to_json(const PropertyReport& r) {
  return {{"spec", r.spec_id},
          {"rho", r.rho},
          {"samples", r.samples},
          {"evaluated", r.evaluated},
          {"max_dev", r.max_midpoint_deviation},
          {"worst_theta", r.worst_theta},
          {"tol", r.tol},
          {"pass", r.pass},
          {"notes", r.notes}};
}

json to_json(const RhoPolygon& p) {
  json j = {{"rho", p.rho}, {"status", status_name(p.status)}, {"n", p.n}, {"k", p.k}};
  j["vertices"] = points_json(p.vertices);
  j["turning"] = p.total_turning;
  j["steps"] = p.steps;
  if (p.status == PolygonStatus::Closed) {
    j["coprime"] = p.coprime;
    j["closure_error"] = p.closure_error;
  } else {
    json acc = json::array();
    for (const Vec2& a : p.accumulation_points) acc.push_back({a.x, a.y});
    j["accumulation_points"] = acc;
  }
  return j;
}

RhoPolygon polygon_from_json(const json& j) {
  try {
    RhoPolygon p;
    p.rho = j.at("rho").get<double>();
    const std::string status = j.at("status").get<std::string>();
    if (status == "Closed") {
      p.status = PolygonStatus::Closed;
    } else if (status == "NonClosing") {
      p.status = PolygonStatus::NonClosing;
    } else {
      throw ConfigError("polygon JSON: unknown status '" + status + "'");
    }
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    p.total_turning = j.at("turning").get<double>();
    p.steps = j.value("steps", 0);
    p.coprime = j.value("coprime", false);
    p.closure_error = j.value("closure_error", 0.0);
    for (const auto& v : j.at("vertices")) {
      p.vertices.push_back({v.at(0).get<double>(), {v.at(1).get<double>(), v.at(2).get<double>()}});
    }
    if (j.contains("accumulation_points")) {
      for (const auto& a : j.at("accumulation_points")) p.accumulation_points.push_back({a.at(0), a.at(1)});
    }
    return p;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("polygon JSON: ") + e.what());
  }
}

json to_json(const ConicForm& c) { return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"cond", c.cond}}; }

json to_json(const SectorPartition& p) {
  return {{"rho", p.rho}, {"boundary", points_json(p.boundary)}, {"areas", p.areas}, {"spread", p.spread},
          {"sum", p.sum}};
}

json to_json(const PuntoReport& r) {
  json j = {{"rho", r.rho}, {"seed_theta", r.seed_theta}, {"n", r.n}, {"k", r.k}, {"forced", r.forced}};
  if (r.m_entry) j["M"] = {{"k", r.m_entry->k}, {"m", r.m_entry->m}, {"n", r.m_entry->n}};
  j["wedges"] = r.wedges;
  j["wedge_spread"] = r.wedge_spread;
  j["sector_areas"] = r.sector_areas;
  j["sector_spread"] = r.sector_spread;
  j["partition"] = to_json(r.partition);
  j["total_area"] = r.total_area;
  j["pw_target"] = r.pw_target;
  j["pw_distance"] = finite_or_null(r.pw_distance);
  j["verdicts"] = {{"odd_vertex_count", r.odd_vertex_count},
                   {"pw_identified", r.pw_identified},
                   {"equal_wedges", r.equal_wedges},
                   {"equal_sectors", r.equal_sectors},
                   {"equal_partition", r.equal_partition}};
  j["pass"] = r.all_pass();
  return j;
}

json to_json(const I0Residuals& r) {
  return {{"orthogonal_integral", r.orthogonal_integral},
          {"perp_by_parts", r.perp_by_parts},
          {"mu_perp_by_parts", r.mu_perp_by_parts}};
}

json to_json(const EvenProbeRecord& r) {
  json j = {{"k", r.k},
            {"n", r.n},
            {"rho", r.rho},
            {"seed_theta", r.seed_theta},
            {"pv_status", status_name(r.pv_status)},
            {"pv_vertices", r.pv_vertices},
            {"pv_winding", r.pv_winding},
            {"pw_status", status_name(r.pw_status)},
            {"pw_vertices", r.pw_vertices},
            {"symmetry_distance", finite_or_null(r.symmetry_distance)},
            {"pv_pw_min_distance", finite_or_null(r.pv_pw_min_distance)}};
  if (r.partition) {
    j["partition"] = to_json(*r.partition);
    j["sector_spread"] = r.partition->spread;
  } else {
    j["partition"] = nullptr;
    j["sector_spread"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

json to_json(const std::vector<SweepCell>& cells) {
  json arr = json::array();
  for (const SweepCell& c : cells) {
    json j = {{"spec", c.spec_id}, {"rho", c.rho}, {"inner_product", c.inner_product}};
    j["report"] = c.report ? to_json(*c.report) : json(nullptr);
    j["error"] = c.error;
    arr.push_back(j);
  }
  return arr;
}

std::string sweep_to_csv(const std::vector<SweepCell>& cells) {
  std::string out = "spec,rho,samples,max_dev,worst_theta,pass\n";
  for (const SweepCell& c : cells) {
    // Spec ids contain commas; quote them.
    out += '"' + c.spec_id + "\"," + format_number(c.rho) + ',';
    if (c.report) {
      out += std::to_string(c.report->samples) + ',' + format_number(c.report->max_midpoint_deviation) + ',' +
             format_number(c.report->worst_theta) + ',' + (c.report->pass ? "true" : "false");
    } else {
      out += ",,,false";
    }
    out += '\n';
  }
  return out;
}

}  // namespace rhoplane
