#pragma once

// Run configuration: a JSON document with a versioned `schema` field.
// See configs/README.md for the schema.

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "oscforce/circuits.hpp"
#include "oscforce/errors.hpp"
#include "oscforce/forces.hpp"
#include "oscforce/oscillator.hpp"

namespace oscforce::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

enum class Mode { oscillator, series_rlc, parallel_rlc, planar, sphere_plate };
enum class Units { reduced, si };
enum class Format { csv, json };
enum class Spacing { linear, log };
enum class CasimirRegime { automatic, low_t, high_t };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::oscillator: return "oscillator";
    case Mode::series_rlc: return "series-rlc";
    case Mode::parallel_rlc: return "parallel-rlc";
    case Mode::planar: return "planar";
    case Mode::sphere_plate: return "sphere-plate";
  }
  return "?";
}

inline std::string to_string(Units u) { return u == Units::si ? "si" : "reduced"; }

inline bool is_geometry(Mode m) { return m == Mode::planar || m == Mode::sphere_plate; }

/// x(lambda) = value (lambda/lambda0)^exponent.
struct PowerLaw {
  double value = 0.0;
  double exponent = 0.0;

  [[nodiscard]] double at(double lambda, double lambda0) const {
    return exponent == 0.0 ? value : value * std::pow(lambda / lambda0, exponent);
  }
  [[nodiscard]] double slope(double lambda, double lambda0) const {
    return exponent == 0.0 ? 0.0 : exponent * at(lambda, lambda0) / lambda;
  }
};

struct OscillatorBlock {
  PowerLaw omega;
  PowerLaw gamma0;
  std::optional<PowerLaw> omega_d;
};

struct CircuitBlock {
  PowerLaw resistance;
  PowerLaw inductance;
  PowerLaw capacitance;
};

struct GeometryBlock {
  double area = 0.0;  // planar
  double permittivity = 1.0;
  double radius = 0.0;  // sphere-plate
  double inductance = 0.0;
  double resistance = 0.0;
  CasimirRegime casimir = CasimirRegime::automatic;
  std::optional<double> element_size;
};

struct Sweep {
  std::string parameter;  // "lambda" or "temperature"
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 1;
  Spacing spacing = Spacing::linear;
};

struct RunConfig {
  Mode mode = Mode::oscillator;
  Units units = Units::reduced;
  double temperature = 0.0;  // reduced, or kelvin in SI
  double lambda = 1.0;       // gap in geometry modes
  double lambda0 = 1.0;
  ForceMethod method = ForceMethod::exact;
  Guards guards;
  OscillatorBlock oscillator;
  CircuitBlock circuit;
  GeometryBlock geometry;
  std::optional<Sweep> sweep;
  Format format = Format::csv;
  std::optional<std::string> output_path;
  bool oracle = false;
  std::size_t n_max = 100000;
};

namespace detail {

inline void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& item : j.items()) {
    if (!ok.count(item.key())) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

inline const json& need(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) throw ConfigError(where + ": missing '" + key + "'");
  return j.at(key);
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + ": not finite");
  return x;
}

inline double number(const json& j, const std::string& where, const char* key) {
  return number(need(j, where, key), where + "." + key);
}

inline double number_or(const json& j, const std::string& where, const char* key, double fallback) {
  return j.contains(key) ? number(j.at(key), where + "." + key) : fallback;
}

inline std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a string");
  return j.get<std::string>();
}

/// A number (constant) or {"value": x, "exponent": e}.
inline PowerLaw power_law(const json& j, const std::string& where) {
  if (j.is_number()) return {number(j, where), 0.0};
  only_keys(j, where, {"value", "exponent"});
  return {number(j, where, "value"), number_or(j, where, "exponent", 0.0)};
}

inline Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::oscillator, Mode::series_rlc, Mode::parallel_rlc, Mode::planar, Mode::sphere_plate}) {
    if (to_string(m) == s) return m;
  }
  throw ConfigError("mode: unknown value '" + s + "'");
}

inline ForceMethod parse_method(const std::string& s) {
  for (ForceMethod m : {ForceMethod::exact, ForceMethod::weak_dissipation, ForceMethod::high_t,
                        ForceMethod::very_high_t, ForceMethod::low_t}) {
    if (to_string(m) == s) return m;
  }
  throw ConfigError("parameters.method: unknown value '" + s + "'");
}

}  // namespace detail

inline Units parse_units(const std::string& s) {
  if (s == "reduced") return Units::reduced;
  if (s == "si") return Units::si;
  throw ConfigError("units: expected 'reduced' or 'si', got '" + s + "'");
}

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("output.format: expected 'csv' or 'json', got '" + s + "'");
}

/// Parses and validates; every problem is a ConfigError.
inline RunConfig parse_config(const json& root) {
  using namespace detail;
  only_keys(root, "config", {"schema", "mode", "units", "parameters", "sweep", "output", "validation"});
  const json& schema = need(root, "config", "schema");
  if (!schema.is_number_integer() || schema.get<int>() != schema_version) {
    throw ConfigError("schema: expected " + std::to_string(schema_version));
  }

  RunConfig c;
  c.mode = parse_mode(text(need(root, "config", "mode"), "mode"));
  if (root.contains("units")) c.units = parse_units(text(root.at("units"), "units"));

  const json& p = need(root, "config", "parameters");
  const std::string where = "parameters";
  switch (c.mode) {
    case Mode::oscillator:
      only_keys(p, where, {"temperature", "lambda", "lambda0", "method", "guards", "omega", "gamma0", "omega_d"});
      c.oscillator.omega = power_law(need(p, where, "omega"), where + ".omega");
      c.oscillator.gamma0 = power_law(need(p, where, "gamma0"), where + ".gamma0");
      if (p.contains("omega_d")) c.oscillator.omega_d = power_law(p.at("omega_d"), where + ".omega_d");
      break;
    case Mode::series_rlc:
    case Mode::parallel_rlc:
      only_keys(p, where,
                {"temperature", "lambda", "lambda0", "method", "guards", "resistance", "inductance", "capacitance"});
      c.circuit.resistance = power_law(need(p, where, "resistance"), where + ".resistance");
      c.circuit.inductance = power_law(need(p, where, "inductance"), where + ".inductance");
      c.circuit.capacitance = power_law(need(p, where, "capacitance"), where + ".capacitance");
      break;
    case Mode::planar:
    case Mode::sphere_plate: {
      if (c.mode == Mode::planar) {
        only_keys(p, where,
                  {"temperature", "gap", "method", "guards", "area", "permittivity", "inductance", "resistance",
                   "casimir_regime", "element_size"});
        c.geometry.area = number(p, where, "area");
        c.geometry.permittivity = number_or(p, where, "permittivity", 1.0);
      } else {
        only_keys(p, where,
                  {"temperature", "gap", "method", "guards", "radius", "inductance", "resistance", "casimir_regime",
                   "element_size"});
        c.geometry.radius = number(p, where, "radius");
      }
      c.geometry.inductance = number(p, where, "inductance");
      c.geometry.resistance = number_or(p, where, "resistance", 0.0);
      if (p.contains("element_size")) c.geometry.element_size = number(p, where, "element_size");
      if (p.contains("casimir_regime")) {
        const std::string r = text(p.at("casimir_regime"), where + ".casimir_regime");
        if (r == "low-T") c.geometry.casimir = CasimirRegime::low_t;
        else if (r == "high-T") c.geometry.casimir = CasimirRegime::high_t;
        else if (r == "auto") c.geometry.casimir = CasimirRegime::automatic;
        else throw ConfigError(where + ".casimir_regime: expected 'low-T', 'high-T' or 'auto'");
      }
      break;
    }
  }
  c.temperature = number(p, where, "temperature");
  if (c.temperature < 0.0) throw ConfigError(where + ".temperature: must be >= 0");
  const char* lambda_key = is_geometry(c.mode) ? "gap" : "lambda";
  c.lambda = number_or(p, where, lambda_key, 1.0);
  c.lambda0 = is_geometry(c.mode) ? 1.0 : number_or(p, where, "lambda0", 1.0);
  if (!(c.lambda0 > 0.0)) throw ConfigError(where + ".lambda0: must be positive");
  if (p.contains("method")) c.method = parse_method(text(p.at("method"), where + ".method"));
  if (p.contains("guards")) {
    const json& g = p.at("guards");
    const std::string gw = where + ".guards";
    only_keys(g, gw, {"weak_dissipation", "high_t", "very_high_t", "low_t", "imaginary_tolerance"});
    c.guards.weak_dissipation = number_or(g, gw, "weak_dissipation", c.guards.weak_dissipation);
    c.guards.high_t = number_or(g, gw, "high_t", c.guards.high_t);
    c.guards.very_high_t = number_or(g, gw, "very_high_t", c.guards.very_high_t);
    c.guards.low_t = number_or(g, gw, "low_t", c.guards.low_t);
    c.guards.imaginary_tolerance = number_or(g, gw, "imaginary_tolerance", c.guards.imaginary_tolerance);
  }
  if (is_geometry(c.mode) && c.units != Units::si) {
    throw ConfigError("units: geometry modes work in SI; set \"units\": \"si\"");
  }

  if (root.contains("sweep")) {
    const json& s = root.at("sweep");
    only_keys(s, "sweep", {"parameter", "from", "to", "points", "spacing"});
    Sweep sw;
    sw.parameter = text(need(s, "sweep", "parameter"), "sweep.parameter");
    if (sw.parameter == "gap" && is_geometry(c.mode)) sw.parameter = "lambda";
    if (sw.parameter != "lambda" && sw.parameter != "temperature") {
      throw ConfigError("sweep.parameter: expected '" + std::string(lambda_key) + "' or 'temperature'");
    }
    sw.from = number(s, "sweep", "from");
    sw.to = number(s, "sweep", "to");
    const json& n = need(s, "sweep", "points");
    if (!n.is_number_integer() || n.get<long long>() < 1) throw ConfigError("sweep.points: expected an integer >= 1");
    sw.points = n.get<std::size_t>();
    if (s.contains("spacing")) {
      const std::string sp = text(s.at("spacing"), "sweep.spacing");
      if (sp == "linear") sw.spacing = Spacing::linear;
      else if (sp == "log") sw.spacing = Spacing::log;
      else throw ConfigError("sweep.spacing: expected 'linear' or 'log'");
    }
    if (!(sw.from > 0.0) || !(sw.to > sw.from)) throw ConfigError("sweep: need 0 < from < to");
    c.sweep = sw;
  }

  if (root.contains("output")) {
    const json& o = root.at("output");
    only_keys(o, "output", {"format", "path"});
    if (o.contains("format")) c.format = parse_format(text(o.at("format"), "output.format"));
    if (o.contains("path")) c.output_path = text(o.at("path"), "output.path");
  }

  if (root.contains("validation")) {
    const json& v = root.at("validation");
    only_keys(v, "validation", {"oracle", "n_max"});
    if (v.contains("oracle")) {
      if (!v.at("oracle").is_boolean()) throw ConfigError("validation.oracle: expected true or false");
      c.oracle = v.at("oracle").get<bool>();
    }
    if (v.contains("n_max")) {
      const json& n = v.at("n_max");
      if (!n.is_number_integer() || n.get<long long>() < 1) throw ConfigError("validation.n_max: expected an integer >= 1");
      c.n_max = n.get<std::size_t>();
    }
  }
  return c;
}

inline RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(root);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace oscforce::cli
