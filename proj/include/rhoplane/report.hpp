#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rhoplane/ellipse.hpp"
#include "rhoplane/polygon.hpp"
#include "rhoplane/property_lab.hpp"

namespace rhoplane {

using json = nlohmann::ordered_json;

/// "%.17g" rendering used for every CSV number.
std::string format_number(double x);

json to_json(const PropertyReport& r);
json to_json(const RhoPolygon& p);
json to_json(const ConicForm& c);
json to_json(const SectorPartition& p);
json to_json(const PuntoReport& r);
json to_json(const I0Residuals& r);
json to_json(const EvenProbeRecord& r);
json to_json(const std::vector<SweepCell>& cells);

/// {rho, status, n, k, vertices:[[θ,x,y],...], turning}. Inverse of to_json.
RhoPolygon polygon_from_json(const json& j);

/// Header spec,rho,samples,max_dev,worst_theta,pass; one row per cell.
/// Errored cells leave the numeric columns empty and pass=false.
std::string sweep_to_csv(const std::vector<SweepCell>& cells);

const char* status_name(PolygonStatus s);

}  // namespace rhoplane
