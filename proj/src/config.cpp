#include "mslit/config.hpp"

#include <fstream>
#include <initializer_list>
#include <numbers>
#include <set>

#include <json.hpp>

namespace mslit {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key()))
      throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

double get_number(const json& obj, const std::string& where,
                  const std::string& key) {
  if (!obj.contains(key))
    throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!obj[key].is_number())
    throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

double get_number_or(const json& obj, const std::string& where,
                     const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw ConfigError("key \"" + key + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

std::string get_string(const json& obj, const std::string& where,
                       const std::string& key) {
  if (!obj.contains(key))
    throw ConfigError("missing key \"" + key + "\" in " + where);
  if (!obj[key].is_string())
    throw ConfigError("key \"" + key + "\" in " + where + " must be a string");
  return obj[key].get<std::string>();
}

// Length keys carry a _m suffix in SI mode.
std::string len_key(const std::string& base, bool natural) {
  return natural ? base : base + "_m";
}

NumericsSpec parse_numerics(const json& root) {
  NumericsSpec num;
  if (!root.contains("numerics")) return num;
  const json& n = root["numerics"];
  check_keys(n, "numerics",
             {"n_points", "extent_over_separation", "peak_threshold"});
  num.n_points =
      static_cast<int>(get_number_or(n, "numerics", "n_points", num.n_points));
  num.extent_over_separation = get_number_or(
      n, "numerics", "extent_over_separation", num.extent_over_separation);
  num.peak_threshold =
      get_number_or(n, "numerics", "peak_threshold", num.peak_threshold);
  if (num.n_points < 2)
    throw ConfigError("numerics.n_points must be at least 2");
  if (!(num.extent_over_separation > 0.0))
    throw ConfigError("numerics.extent_over_separation must be positive");
  if (!(num.peak_threshold > 0.0) || num.peak_threshold >= 1.0)
    throw ConfigError("numerics.peak_threshold must lie in (0, 1)");
  return num;
}

ExperimentConfig parse_experiment(const json& root, bool natural) {
  ExperimentConfig cfg;
  const json& ap = root["aperture"];
  const std::string ap_keys[] = {len_key("slit_width", natural),
                                 len_key("separation", natural),
                                 len_key("single_center", natural)};
  check_keys(ap, "aperture",
             {"mode", ap_keys[0].c_str(), ap_keys[1].c_str(),
              ap_keys[2].c_str()});
  const std::string mode = get_string(ap, "aperture", "mode");
  if (mode == "single")
    cfg.aperture.mode = ApertureSpec::Mode::Single;
  else if (mode == "double")
    cfg.aperture.mode = ApertureSpec::Mode::Double;
  else
    throw ConfigError("aperture.mode must be \"single\" or \"double\"");
  cfg.aperture.slit_width = get_number(ap, "aperture", ap_keys[0]);
  cfg.aperture.separation = get_number(ap, "aperture", ap_keys[1]);
  cfg.aperture.single_center = get_number_or(
      ap, "aperture", ap_keys[2], 0.5 * cfg.aperture.separation);
  if (!(cfg.aperture.slit_width > 0.0))
    throw ConfigError("aperture slit width must be positive");
  if (!(cfg.aperture.slit_width < cfg.aperture.separation))
    throw ConfigError("aperture requires slit_width < separation");

  if (!root.contains("grating"))
    throw ConfigError("experiment config needs a grating block");
  const json& gr = root["grating"];
  const std::string type = get_string(gr, "grating", "type");
  if (type == "wires") {
    const std::string gw = len_key("wire_width", natural);
    const std::string gs = len_key("wire_spacing", natural);
    const std::string gl = len_key("lateral_shift", natural);
    check_keys(gr, "grating",
               {"type", "n_wires", gw.c_str(), gs.c_str(), gl.c_str()});
    GratingSpec wires;
    wires.n_wires =
        static_cast<int>(get_number(gr, "grating", "n_wires"));
    wires.wire_width = get_number(gr, "grating", gw);
    wires.wire_spacing = get_number(gr, "grating", gs);
    // default shift: centered for the double slit, the standard sideways
    // offset (0.250/1.3 of the spacing) for the single slit
    const double default_shift =
        cfg.aperture.mode == ApertureSpec::Mode::Single
            ? wires.wire_spacing * (0.250 / 1.3)
            : 0.0;
    wires.lateral_shift = get_number_or(gr, "grating", gl, default_shift);
    if (wires.n_wires < 0) throw ConfigError("grating.n_wires must be >= 0");
    if (wires.n_wires > 0 && wires.wire_width < 0.0)
      throw ConfigError("grating wire width must be nonnegative");
    if (wires.n_wires > 1 && !(wires.wire_width < wires.wire_spacing))
      throw ConfigError("grating wires overlap: width >= spacing");
    cfg.grating = wires;
  } else if (type == "ideal") {
    check_keys(gr, "grating", {"type", "Tprime_over_T"});
    const double ratio = get_number(gr, "grating", "Tprime_over_T");
    if (!(ratio > 1.0))
      throw ConfigError("grating.Tprime_over_T must exceed 1");
    cfg.grating = IdealGrating{ratio * cfg.aperture.separation};
  } else {
    throw ConfigError("grating.type must be \"wires\" or \"ideal\"");
  }

  if (root.contains("geometry")) {
    const json& ge = root["geometry"];
    const std::string gl = len_key("L", natural);
    const std::string glam = len_key("lambda", natural);
    check_keys(ge, "geometry", {gl.c_str(), glam.c_str()});
    cfg.geometry.L = get_number(ge, "geometry", gl);
    if (ge.contains(glam) && ge[glam].is_string()) {
      if (ge[glam].get<std::string>() != "infer")
        throw ConfigError("geometry wavelength must be a number or \"infer\"");
      const auto* wires = std::get_if<GratingSpec>(&cfg.grating);
      if (!wires)
        throw ConfigError(
            "wavelength inference needs a wire grating (spacing unknown)");
      cfg.geometry.lambda = infer_wavelength(
          cfg.geometry.L, cfg.aperture.separation, wires->wire_spacing);
    } else {
      cfg.geometry.lambda = get_number(ge, "geometry", glam);
    }
  } else if (natural) {
    // dimensionless default: s = 2 pi / (L lambda) = 1, so screen
    // coordinate and momentum coincide
    cfg.geometry = OpticalGeometry{1.0, 2.0 * std::numbers::pi};
  } else {
    throw ConfigError("SI experiment config needs a geometry block");
  }
  if (!(cfg.geometry.L > 0.0) || !(cfg.geometry.lambda > 0.0))
    throw ConfigError("geometry lengths must be positive");

  cfg.numerics = parse_numerics(root);
  return cfg;
}

EnvelopeConfig parse_envelope(const json& root) {
  const json& en = root["envelope"];
  check_keys(en, "envelope",
             {"window", "a", "T", "Tprime", "shift", "n_terms", "n_points",
              "extent_over_T"});
  if (get_string(en, "envelope", "window") != "rect")
    throw ConfigError("envelope.window: only \"rect\" is configurable");
  EnvelopeConfig e;
  e.T = get_number_or(en, "envelope", "T", 1.0);
  e.a = get_number(en, "envelope", "a");
  e.Tprime = get_number(en, "envelope", "Tprime");
  e.shift = get_number_or(en, "envelope", "shift", 0.5 * e.T);
  e.n_terms =
      static_cast<int>(get_number_or(en, "envelope", "n_terms", e.n_terms));
  e.n_points =
      static_cast<int>(get_number_or(en, "envelope", "n_points", e.n_points));
  e.extent_over_T =
      get_number_or(en, "envelope", "extent_over_T", e.extent_over_T);
  if (!(e.T > 0.0) || !(e.a > 0.0) || e.a >= e.T)
    throw ConfigError("envelope requires 0 < a < T");
  if (!(e.Tprime > e.T))
    throw ConfigError("envelope requires Tprime > T (strict)");
  if (e.n_terms < 0 || e.n_points < 2 || !(e.extent_over_T > 0.0))
    throw ConfigError("invalid envelope numerics");
  return e;
}

json canonical(const LoadedConfig& c) {
  json out;
  out["units"] = c.natural_units ? "natural" : "si";
  if (c.experiment) {
    const ExperimentConfig& e = *c.experiment;
    json ap;
    ap["mode"] =
        e.aperture.mode == ApertureSpec::Mode::Single ? "single" : "double";
    ap["slit_width"] = e.aperture.slit_width;
    ap["separation"] = e.aperture.separation;
    ap["single_center"] = e.aperture.single_center;
    out["aperture"] = ap;
    json gr;
    if (const auto* wires = std::get_if<GratingSpec>(&e.grating)) {
      gr["type"] = "wires";
      gr["n_wires"] = wires->n_wires;
      gr["wire_width"] = wires->wire_width;
      gr["wire_spacing"] = wires->wire_spacing;
      gr["lateral_shift"] = wires->lateral_shift;
    } else {
      gr["type"] = "ideal";
      gr["Tprime"] = std::get<IdealGrating>(e.grating).Tprime;
    }
    out["grating"] = gr;
    out["geometry"] = {{"L", e.geometry.L}, {"lambda", e.geometry.lambda}};
    out["numerics"] = {
        {"n_points", e.numerics.n_points},
        {"extent_over_separation", e.numerics.extent_over_separation},
        {"peak_threshold", e.numerics.peak_threshold}};
  }
  if (c.envelope) {
    const EnvelopeConfig& e = *c.envelope;
    out["envelope"] = {{"window", "rect"},       {"a", e.a},
                       {"T", e.T},               {"Tprime", e.Tprime},
                       {"shift", e.shift},       {"n_terms", e.n_terms},
                       {"n_points", e.n_points}, {"extent_over_T",
                                                  e.extent_over_T}};
  }
  return out;
}

}  // namespace

LoadedConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  check_keys(root, "config root",
             {"units", "aperture", "grating", "geometry", "numerics",
              "envelope"});
  LoadedConfig out;
  if (root.contains("units")) {
    const std::string u = get_string(root, "config root", "units");
    if (u == "natural")
      out.natural_units = true;
    else if (u != "si")
      throw ConfigError("units must be \"si\" or \"natural\"");
  }
  if (root.contains("aperture"))
    out.experiment = parse_experiment(root, out.natural_units);
  else if (root.contains("grating") || root.contains("geometry"))
    throw ConfigError("grating/geometry blocks need an aperture block");
  if (root.contains("envelope")) out.envelope = parse_envelope(root);
  if (!out.experiment && !out.envelope)
    throw ConfigError("config defines neither an experiment nor an envelope");
  out.resolved_text = canonical(out).dump(2);
  return out;
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config(text);
}

const ExperimentConfig& require_experiment(const LoadedConfig& c) {
  if (!c.experiment)
    throw ConfigError("this command needs an aperture/grating config");
  return *c.experiment;
}

const EnvelopeConfig& require_envelope(const LoadedConfig& c) {
  if (!c.envelope) throw ConfigError("this command needs an envelope block");
  return *c.envelope;
}

}  // namespace mslit
