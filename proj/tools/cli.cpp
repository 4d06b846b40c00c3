#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rhoplane/area.hpp"
#include "rhoplane/chord.hpp"
#include "rhoplane/ellipse.hpp"
#include "rhoplane/errors.hpp"
#include "rhoplane/norm.hpp"
#include "rhoplane/polygon.hpp"
#include "rhoplane/property_lab.hpp"
#include "rhoplane/report.hpp"
#include "rhoplane/svg.hpp"

namespace rhoplane::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string> kCommands = {"check", "polygon", "ellipse", "area", "sweep", "probe-even", "render"};

std::pair<int, int> parse_kn(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError{"--kn expects k,n"};
  try {
    std::size_t p1 = 0, p2 = 0;
    const int k = std::stoi(s.substr(0, comma), &p1);
    const int n = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw UsageError{"--kn expects integers k,n"};
    return {k, n};
  } catch (const std::logic_error&) {
    throw UsageError{"--kn expects integers k,n"};
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void merge_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read config file '" + path + "'"};
  ojson j;
  try {
    in >> j;
  } catch (const ojson::exception& e) {
    throw UsageError{std::string("config file is not valid JSON: ") + e.what()};
  }
  if (!j.is_object()) throw UsageError{"config file must hold a JSON object"};
  static const std::vector<std::string> known = {"command", "spec",      "rho",          "kn",           "seed",
                                                 "samples", "tol",       "orth_tol",     "close_tol",    "max_steps",
                                                 "alpha",   "beta",      "out",          "format",       "show_ellipse",
                                                 "show_polygon", "from_json"};
  try {
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw UsageError{"unknown config key '" + key + "'"};
      }
    }
    if (j.contains("command")) cfg.command = j["command"].get<std::string>();
    if (j.contains("spec")) {
      cfg.specs = j["spec"].is_array() ? j["spec"].get<std::vector<std::string>>()
                                       : std::vector<std::string>{j["spec"].get<std::string>()};
    }
    if (j.contains("rho")) {
      cfg.rhos = j["rho"].is_array() ? j["rho"].get<std::vector<double>>()
                                     : std::vector<double>{j["rho"].get<double>()};
    }
    if (j.contains("kn")) {
      cfg.kn = j["kn"].is_array() ? std::pair<int, int>{j["kn"].at(0).get<int>(), j["kn"].at(1).get<int>()}
                                  : parse_kn(j["kn"].get<std::string>());
    }
    if (j.contains("seed")) cfg.seed_theta = j["seed"].get<double>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("orth_tol")) cfg.orth_tol = j["orth_tol"].get<double>();
    if (j.contains("close_tol")) cfg.close_tol = j["close_tol"].get<double>();
    if (j.contains("max_steps")) cfg.max_steps = j["max_steps"].get<int>();
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("show_ellipse")) cfg.show_ellipse = j["show_ellipse"].get<bool>();
    if (j.contains("show_polygon")) cfg.show_polygon = j["show_polygon"].get<bool>();
    if (j.contains("from_json")) cfg.from_json = j["from_json"].get<std::string>();
  } catch (const ojson::exception& e) {
    throw UsageError{std::string("config file: ") + e.what()};
  }
}

void validate(RunConfig& cfg) {
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
    throw UsageError{"unknown command '" + cfg.command + "'"};
  }
  if (cfg.format.empty()) {
    if (cfg.command == "render" || ends_with(cfg.out, ".svg")) {
      cfg.format = "svg";
    } else if (ends_with(cfg.out, ".csv")) {
      cfg.format = "csv";
    } else {
      cfg.format = "json";
    }
  }
  const std::string& f = cfg.format;
  if (f != "json" && f != "csv" && f != "svg") throw UsageError{"--format must be json, csv or svg"};
  const bool csv_ok = cfg.command == "check" || cfg.command == "sweep";
  const bool svg_ok = cfg.command == "polygon" || cfg.command == "ellipse" || cfg.command == "render";
  if (f == "csv" && !csv_ok) throw UsageError{cfg.command + " cannot emit csv"};
  if (f == "svg" && !svg_ok) throw UsageError{cfg.command + " cannot emit svg"};
  if (cfg.command == "render" && f != "svg") throw UsageError{"render only emits svg"};

  if (cfg.specs.empty()) throw UsageError{"--spec is required"};
  if (cfg.command != "sweep" && cfg.specs.size() != 1) throw UsageError{"exactly one --spec expected"};
  if (cfg.kn && !cfg.rhos.empty()) throw UsageError{"give either --rho or --kn, not both"};
  if (cfg.kn) {
    if (cfg.command == "sweep") throw UsageError{"sweep takes --rho values"};
    try {
      cfg.rhos = {rho_from_kn(cfg.kn->first, cfg.kn->second)};
    } catch (const DomainError& e) {
      throw UsageError{e.what()};
    }
  }
  const bool needs_rho = cfg.command != "area" && cfg.command != "probe-even" &&
                         !(cfg.command == "render" && !cfg.show_ellipse && !cfg.show_polygon);
  if (cfg.command == "probe-even") {
    if (!cfg.kn) throw UsageError{"probe-even requires --kn k,n"};
    if (cfg.kn->second % 2 != 0) throw UsageError{"probe-even requires an even n"};
  }
  if (needs_rho && cfg.rhos.empty()) throw UsageError{"--rho or --kn is required"};
  if (cfg.command != "sweep" && cfg.rhos.size() > 1) throw UsageError{"exactly one --rho expected"};
  for (double r : cfg.rhos) {
    if (!(r > 0.0 && r < 1.0)) throw UsageError{"rho must lie in (0, 1)"};
  }
  if (cfg.command == "area") {
    if (cfg.alpha.has_value() != cfg.beta.has_value()) throw UsageError{"--alpha and --beta go together"};
    if (cfg.alpha && !(*cfg.alpha < *cfg.beta && *cfg.beta - *cfg.alpha <= kTwoPi)) {
      throw UsageError{"need alpha < beta <= alpha + 2*pi"};
    }
    if (cfg.samples < 16) throw UsageError{"area needs --samples >= 16"};
  } else if (cfg.samples < 8) {
    throw UsageError{"--samples must be at least 8"};
  }
  if (!(cfg.tol > 0.0) || !(cfg.orth_tol > 0.0) || !(cfg.close_tol > 0.0)) {
    throw UsageError{"tolerances must be positive"};
  }
  if (cfg.max_steps < 3) throw UsageError{"--max-steps must be at least 3"};
  if (!cfg.from_json.empty() && cfg.command != "render") throw UsageError{"--from-json is a render option"};
  for (const std::string& s : cfg.specs) {
    try {
      (void)NormSpec::parse(s);
    } catch (const ConfigError& e) {
      throw UsageError{e.what()};
    }
  }
}

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ojson effective_config(const RunConfig& cfg) {
  ojson j = cfg.to_json();
  if (!cfg.rhos.empty()) j["resolved_rho"] = cfg.rhos;
  if (std::getenv("RHO_PLANES_SEED") == nullptr) j["generated_at"] = timestamp_utc();
  return j;
}

std::string wrap_json(const RunConfig& cfg, ojson result) {
  ojson doc;
  doc["config"] = effective_config(cfg);
  doc["result"] = std::move(result);
  return doc.dump(2) + "\n";
}

std::string csv_with_config(const RunConfig& cfg, const std::string& csv) {
  return "# config: " + effective_config(cfg).dump() + "\n" + csv;
}

svg::Scene base_scene(const NormSpec& spec, const RunConfig& cfg, std::optional<double> rho) {
  svg::Scene scene;
  scene.comment = "config: " + effective_config(cfg).dump();
  scene.sphere = svg::sphere_curve(spec);
  if (rho) scene.homothet = svg::sphere_curve(spec, *rho);
  return scene;
}

void add_polygon(svg::Scene& scene, const RhoPolygon& poly) {
  scene.polygons.push_back({coords_of(poly), poly.status == PolygonStatus::Closed});
}

void add_ellipse(svg::Scene& scene, const NormSpec& spec, const UnitPoint& u, double rho) {
  const UnitPoint us = star_map(spec, u, rho);
  const ConicForm C = fit_rho_ellipse(u, us, rho);
  scene.ellipse = svg::conic_curve(C);
  scene.markers.push_back({u.coords, "u"});
  scene.markers.push_back({(u.coords + us.coords) / (2.0 * rho), "(u+u*)/2rho"});
  scene.markers.push_back({us.coords, "u*"});
}

struct Artifact {
  std::string text;
  ExitCode code = ExitCode::Ok;
};

Artifact run_check(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  const PropertyReport r = check_p_rho_s(spec, cfg.rhos.front(), cfg.samples, cfg.tol);
  Artifact a;
  if (cfg.format == "csv") {
    SweepCell cell{r.spec_id, spec.is_inner_product(), r.rho, r, ""};
    a.text = csv_with_config(cfg, sweep_to_csv({cell}));
  } else {
    ojson res = to_json(r);
    res["inner_product"] = spec.is_inner_product();
    a.text = wrap_json(cfg, res);
  }
  if (spec.is_inner_product() && !r.pass) a.code = ExitCode::PropertyFailure;
  return a;
}

PolygonOptions polygon_options(const RunConfig& cfg) {
  PolygonOptions o;
  o.max_steps = cfg.max_steps;
  o.close_tol = cfg.close_tol;
  return o;
}

Artifact run_polygon(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  const double rho = cfg.rhos.front();
  const RhoPolygon poly = build_polygon(spec, natural_param(spec, cfg.seed_theta), rho, polygon_options(cfg));
  Artifact a;
  if (cfg.format == "svg") {
    svg::Scene scene = base_scene(spec, cfg, rho);
    add_polygon(scene, poly);
    a.text = svg::render(scene);
  } else {
    ojson res = to_json(poly);
    res["spec"] = spec.id();
    if (poly.status == PolygonStatus::Closed) {
      res["classification"] = classify(poly).to_string();
      res["wedge_sum"] = wedge_sum(poly);
    }
    a.text = wrap_json(cfg, res);
  }
  return a;
}

Artifact run_ellipse(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  const double rho = cfg.rhos.front();
  const UnitPoint u = natural_param(spec, cfg.seed_theta);
  Artifact a;
  if (cfg.format == "svg") {
    svg::Scene scene = base_scene(spec, cfg, rho);
    add_ellipse(scene, spec, u, rho);
    a.text = svg::render(scene);
    return a;
  }
  const UnitPoint us = star_map(spec, u, rho);
  const ConicForm C = fit_rho_ellipse(u, us, rho);
  ojson res;
  res["spec"] = spec.id();
  res["rho"] = rho;
  res["u"] = {u.theta, u.coords.x, u.coords.y};
  res["u_star"] = {us.theta, us.coords.x, us.coords.y};
  res["conic"] = to_json(C);
  res["tangency_star"] = tangency_star(spec, u, rho, cfg.orth_tol);
  res["tangency_dstar"] = tangency_dstar(spec, u, rho, cfg.orth_tol);
  res["tangent_at_midpoint"] = conic_tangent_at(spec, C, unit_point_towards(spec, u.coords + us.coords).coords,
                                                cfg.orth_tol);
  res["degenerate_direction"] = tangency_degenerate(rho);
  a.text = wrap_json(cfg, res);
  return a;
}

Artifact run_area(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  const double alpha = cfg.alpha.value_or(0.0);
  const double beta = cfg.beta.value_or(kTwoPi);
  const SectorArea s = sector_area(spec, alpha, beta, cfg.samples);
  ojson res = {{"spec", spec.id()}, {"alpha", s.alpha},   {"beta", s.beta},
               {"value", s.value},  {"samples", s.samples}, {"error_estimate", s.error_estimate}};
  return {wrap_json(cfg, res), ExitCode::Ok};
}

Artifact run_sweep(const RunConfig& cfg) {
  std::vector<NormSpec> specs;
  for (const std::string& s : cfg.specs) specs.push_back(NormSpec::parse(s));
  const std::vector<SweepCell> cells = sweep(specs, cfg.rhos, cfg.samples, cfg.tol);
  Artifact a;
  a.text = cfg.format == "csv" ? csv_with_config(cfg, sweep_to_csv(cells)) : wrap_json(cfg, to_json(cells));
  if (sweep_has_ips_failure(cells)) a.code = ExitCode::PropertyFailure;
  return a;
}

Artifact run_probe_even(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  const EvenProbeRecord rec = even_probe(spec, cfg.kn->first, cfg.kn->second, cfg.seed_theta);
  ojson res = to_json(rec);
  res["spec"] = spec.id();
  return {wrap_json(cfg, res), ExitCode::Ok};
}

Artifact run_render(const RunConfig& cfg) {
  const NormSpec spec = NormSpec::parse(cfg.specs.front());
  std::optional<double> rho;
  if (!cfg.rhos.empty()) rho = cfg.rhos.front();
  std::optional<RhoPolygon> from_file;
  if (!cfg.from_json.empty()) {
    std::ifstream in(cfg.from_json);
    if (!in) throw UsageError{"cannot read '" + cfg.from_json + "'"};
    ojson j;
    try {
      in >> j;
    } catch (const ojson::exception& e) {
      throw UsageError{std::string("--from-json: ") + e.what()};
    }
    from_file = polygon_from_json(j.contains("result") ? j["result"] : j);
    if (!rho) rho = from_file->rho;
  }
  svg::Scene scene = base_scene(spec, cfg, rho);
  if (cfg.show_ellipse) add_ellipse(scene, spec, natural_param(spec, cfg.seed_theta), *rho);
  if (from_file) {
    add_polygon(scene, *from_file);
  } else if (cfg.show_polygon) {
    add_polygon(scene, build_polygon(spec, natural_param(spec, cfg.seed_theta), *rho, polygon_options(cfg)));
  }
  return {svg::render(scene), ExitCode::Ok};
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << ojson{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

nlohmann::ordered_json RunConfig::to_json() const {
  ojson j;
  j["command"] = command;
  j["spec"] = specs;
  j["rho"] = rhos;
  if (kn) j["kn"] = {kn->first, kn->second};
  j["seed"] = seed_theta;
  j["samples"] = samples;
  j["tol"] = tol;
  j["orth_tol"] = orth_tol;
  j["close_tol"] = close_tol;
  j["max_steps"] = max_steps;
  if (alpha) j["alpha"] = *alpha;
  if (beta) j["beta"] = *beta;
  j["format"] = format;
  if (show_ellipse) j["show_ellipse"] = true;
  if (show_polygon) j["show_polygon"] = true;
  if (!from_json.empty()) j["from_json"] = from_json;
  return j;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"rhoplane: midpoint-support geometry of Minkowski planes"};
  app.set_help_flag();
  app.allow_extras(false);

  std::string command;
  std::vector<std::string> specs;
  std::vector<double> rhos;
  std::string kn, out, format, from_json, config_file;
  double seed = 0.0, tol = 1e-8, orth_tol = 1e-9, close_tol = 1e-8, alpha = 0.0, beta = 0.0;
  int samples = 256, max_steps = 2000;
  bool show_ellipse = false, show_polygon = false;

  app.add_option("command", command, "check|polygon|ellipse|area|sweep|probe-even|render");
  auto* o_spec = app.add_option("--spec", specs, "norm spec (repeatable for sweep)");
  auto* o_rho = app.add_option("--rho", rhos, "rho in (0,1) (repeatable for sweep)");
  auto* o_kn = app.add_option("--kn", kn, "k,n resolved to rho = cos(k*pi/n)");
  auto* o_seed = app.add_option("--seed", seed, "seed angle theta");
  auto* o_samples = app.add_option("--samples", samples, "grid size");
  auto* o_tol = app.add_option("--tol", tol, "pass threshold for the midpoint deviation");
  auto* o_orth = app.add_option("--orth-tol", orth_tol, "Birkhoff orthogonality tolerance");
  auto* o_close = app.add_option("--close-tol", close_tol, "polygon closure tolerance");
  auto* o_steps = app.add_option("--max-steps", max_steps, "polygon step limit");
  auto* o_alpha = app.add_option("--alpha", alpha, "sector start angle");
  auto* o_beta = app.add_option("--beta", beta, "sector end angle");
  auto* o_out = app.add_option("--out", out, "output path (default stdout)");
  auto* o_format = app.add_option("--format", format, "json|csv|svg");
  auto* o_ell = app.add_flag("--show-ellipse", show_ellipse, "draw the rho-ellipse of the seed");
  auto* o_poly = app.add_flag("--show-polygon", show_polygon, "draw the rho-polygon of the seed");
  auto* o_from = app.add_option("--from-json", from_json, "render a polygon JSON file");
  app.add_option("--config", config_file, "JSON config file; flags override it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError{e.what()};
  }

  RunConfig cfg;
  if (!config_file.empty()) {
    merge_config_file(cfg, config_file);
    cfg.config_file = config_file;
  }
  if (!command.empty()) cfg.command = command;
  if (o_spec->count()) cfg.specs = specs;
  if (o_rho->count()) cfg.rhos = rhos;
  if (o_kn->count()) cfg.kn = parse_kn(kn);
  if (o_seed->count()) cfg.seed_theta = seed;
  if (o_samples->count()) cfg.samples = samples;
  if (o_tol->count()) cfg.tol = tol;
  if (o_orth->count()) cfg.orth_tol = orth_tol;
  if (o_close->count()) cfg.close_tol = close_tol;
  if (o_steps->count()) cfg.max_steps = max_steps;
  if (o_alpha->count()) cfg.alpha = alpha;
  if (o_beta->count()) cfg.beta = beta;
  if (o_out->count()) cfg.out = out;
  if (o_format->count()) cfg.format = format;
  if (o_ell->count()) cfg.show_ellipse = show_ellipse;
  if (o_poly->count()) cfg.show_polygon = show_polygon;
  if (o_from->count()) cfg.from_json = from_json;
  if (cfg.command.empty()) throw UsageError{"missing command"};
  validate(cfg);
  return cfg;
}

ExitCode run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Artifact a;
  try {
    if (cfg.command == "check") {
      a = run_check(cfg);
    } else if (cfg.command == "polygon") {
      a = run_polygon(cfg);
    } else if (cfg.command == "ellipse") {
      a = run_ellipse(cfg);
    } else if (cfg.command == "area") {
      a = run_area(cfg);
    } else if (cfg.command == "sweep") {
      a = run_sweep(cfg);
    } else if (cfg.command == "probe-even") {
      a = run_probe_even(cfg);
    } else {
      a = run_render(cfg);
    }
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.message);
    return ExitCode::Usage;
  } catch (const NumericalError& e) {
    emit_error(err, e.kind(), e.what());
    return ExitCode::Numerical;
  } catch (const GeometryError& e) {
    emit_error(err, e.kind(), e.what());
    return ExitCode::Numerical;
  } catch (const Error& e) {
    emit_error(err, e.kind(), e.what());
    return ExitCode::Usage;
  }

  if (cfg.out.empty()) {
    out << a.text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f || !(f << a.text)) {
      emit_error(err, "io", "cannot write '" + cfg.out + "'");
      return ExitCode::Usage;
    }
  }
  if (a.code == ExitCode::PropertyFailure) {
    emit_error(err, "property", "an inner-product spec failed the midpoint-support check");
  }
  return a.code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args.front() == "--help" || args.front() == "-h") {
    // Bare invocation is a usage error; the text goes to the error stream.
    if (args.empty()) emit_error(err, "usage", "missing command");
    (args.empty() ? err : out) << "usage: rhoplane <check|polygon|ellipse|area|sweep|probe-even|render> --spec SPEC [options]\n"
           "  norm specs: euclid | lp:<p> | quad:<a>,<b>,<c> | poly:<x1>,<y1>;<x2>,<y2>;...\n"
           "  --rho R | --kn k,n   --seed THETA   --samples N   --tol T   --orth-tol T\n"
           "  --close-tol T   --max-steps N   --alpha A --beta B   --out PATH\n"
           "  --format json|csv|svg   --show-ellipse   --show-polygon   --from-json FILE\n"
           "  --config FILE (JSON, flags win)\n";
    return args.empty() ? static_cast<int>(ExitCode::Usage) : 0;
  }
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    emit_error(err, "usage", e.message);
    return static_cast<int>(ExitCode::Usage);
  }
  return static_cast<int>(run(cfg, out, err));
}

}  // namespace rhoplane::cli
