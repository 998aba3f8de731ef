#pragma once

// Evaluating a configuration at sweep points and writing the table.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "cli/config.hpp"
#include "oscforce/circuits.hpp"
#include "oscforce/errors.hpp"
#include "oscforce/forces.hpp"
#include "oscforce/matsubara.hpp"
#include "oscforce/units.hpp"

namespace oscforce::cli {

/// One output row. Forces are in newtons with SI units, reduced otherwise.
struct Row {
  double lambda = 0.0;
  double temperature = 0.0;
  double force = 0.0;
  double f_omega = 0.0;
  double f_gamma0 = 0.0;
  double f_omega_d = 0.0;
  std::string regime;
  std::optional<double> oracle;
  std::optional<double> discrepancy;
  std::optional<double> oracle_truncation;
  std::optional<double> casimir;
  std::optional<double> relative_weight;
  WarningSet warnings;
};

inline const std::vector<std::string>& columns() {
  static const std::vector<std::string> names{
      "lambda", "temperature", "force",     "f_omega",           "f_gamma0", "f_omegaD",        "regime",
      "oracle", "discrepancy", "oracle_truncation", "casimir", "relative_weight", "warnings"};
  return names;
}

namespace detail {

inline void fill_oracle(Row& row, const RunConfig& c, const OscillatorParams& p, const Derivatives& d, double scale) {
  if (!c.oracle || !(p.temperature > 0.0)) return;
  matsubara::SumSpec spec;
  spec.n_max = c.n_max;
  double value = 0.0;
  double truncation = 0.0;
  if (is_drude(p.damping)) {
    // same approximate rates as the closed form, so the residual measures the summation alone
    const auto r = matsubara::force_sum_drude_approximate(p, d, spec);
    value = r.value;
    truncation = r.truncation_estimate;
  } else {
    const auto r = matsubara::force_sum_exact(p, d, spec);
    value = r.value;
    truncation = r.truncation_estimate;
  }
  row.oracle = scale * value;
  row.oracle_truncation = scale * truncation;
  row.discrepancy = std::abs(row.force - *row.oracle);
}

inline void fill_force(Row& row, const ForceResult& r, double scale) {
  row.force = scale * r.value;
  if (r.components) {
    row.f_omega = scale * r.components->f_omega;
    row.f_gamma0 = scale * r.components->f_gamma0;
    row.f_omega_d = scale * r.components->f_omega_d;
  } else {
    row.f_omega = row.force;
  }
  row.regime = to_string(r.regime);
  row.warnings.merge(r.warnings);
}

inline Row evaluate_oscillator(const RunConfig& c, double lambda, double T) {
  const auto& o = c.oscillator;
  OscillatorParams p;
  p.omega0 = o.omega.at(lambda, c.lambda0);
  p.temperature = T;
  Derivatives d;
  d.d_omega = o.omega.slope(lambda, c.lambda0);
  d.d_gamma0 = o.gamma0.slope(lambda, c.lambda0);
  if (o.omega_d) {
    p.damping = DrudeDamping{o.gamma0.at(lambda, c.lambda0), o.omega_d->at(lambda, c.lambda0)};
    d.d_omega_d = o.omega_d->slope(lambda, c.lambda0);
  } else {
    p.damping = OhmicDamping{o.gamma0.at(lambda, c.lambda0)};
  }
  const double scale = c.units == Units::si ? si::hbar : 1.0;
  Row row;
  fill_force(row, force(p, d, c.method, c.guards), scale);
  fill_oracle(row, c, p, d, scale);
  return row;
}

inline Row evaluate_circuit(const RunConfig& c, double lambda, double T) {
  const auto& e = c.circuit;
  const double R = e.resistance.at(lambda, c.lambda0);
  const double L = e.inductance.at(lambda, c.lambda0);
  const double C = e.capacitance.at(lambda, c.lambda0);
  const double dR = e.resistance.slope(lambda, c.lambda0);
  const double dL = e.inductance.slope(lambda, c.lambda0);
  const double dC = e.capacitance.slope(lambda, c.lambda0);
  const double scale = c.units == Units::si ? si::hbar : 1.0;
  Row row;
  if (c.mode == Mode::series_rlc) {
    const circuits::SeriesRLC rlc{R, L, C, dR, dL, dC};
    fill_force(row, circuits::force_series_rlc(rlc, T, c.method, c.guards), scale);
    const auto m = circuits::map_series(rlc, T);
    fill_oracle(row, c, m.params, m.derivatives, scale);
  } else {
    const circuits::ParallelRLC rlc{R, L, C, dR, dL, dC};
    fill_force(row, circuits::force_parallel_rlc(rlc, T, c.method, c.guards), scale);
    const auto m = circuits::map_parallel(rlc, T);
    fill_oracle(row, c, m.params, m.derivatives, scale);
  }
  return row;
}

inline Row evaluate_geometry(const RunConfig& c, double gap, double kelvin) {
  const auto& g = c.geometry;
  circuits::Geometry geometry;
  circuits::Capacitance cap;
  if (c.mode == Mode::planar) {
    const circuits::PlanarCapacitor pc{g.area, gap, g.permittivity};
    cap = circuits::capacitance_planar(pc);
    geometry = pc;
  } else {
    const circuits::SpherePlate sp{g.radius, gap};
    cap = circuits::capacitance_sphere_plate(sp);
    geometry = sp;
  }
  const double T = si::temperature_to_reduced(kelvin);
  const auto rlc = circuits::series_with_capacitor(cap, g.inductance, g.resistance);
  Row row;
  row.warnings.merge(cap.warnings);
  fill_force(row, circuits::force_series_rlc(rlc, T, c.method, c.guards), si::hbar);
  const auto m = circuits::map_series(rlc, T);
  fill_oracle(row, c, m.params, m.derivatives, si::hbar);

  circuits::ThermalRegime regime = circuits::ThermalRegime::low_t;
  if (g.casimir == CasimirRegime::high_t ||
      (g.casimir == CasimirRegime::automatic && circuits::thermal_parameter(gap, kelvin) >= 1.0)) {
    regime = circuits::ThermalRegime::high_t;
  }
  const auto casimir = circuits::casimir_reference(geometry, kelvin, regime);
  row.casimir = casimir.force;
  row.relative_weight = row.force / casimir.force;
  row.warnings.merge(casimir.warnings);
  if (g.element_size) {
    row.warnings.set_if(circuits::lumped_element_suspect(g.resistance / g.inductance, *g.element_size),
                        Warning::lumped_element_validity);
  }
  return row;
}

}  // namespace detail

/// One row at lambda (the gap in geometry modes) and temperature, both in the config's units.
inline Row evaluate(const RunConfig& c, double lambda, double temperature) {
  const double T = c.units == Units::si ? si::temperature_to_reduced(temperature) : temperature;
  Row row;
  switch (c.mode) {
    case Mode::oscillator: row = detail::evaluate_oscillator(c, lambda, T); break;
    case Mode::series_rlc:
    case Mode::parallel_rlc: row = detail::evaluate_circuit(c, lambda, T); break;
    case Mode::planar:
    case Mode::sphere_plate: row = detail::evaluate_geometry(c, lambda, temperature); break;
  }
  row.lambda = lambda;
  row.temperature = temperature;
  return row;
}

/// Sweep values; the endpoints are exact.
inline std::vector<double> sweep_values(const Sweep& s) {
  std::vector<double> out(s.points);
  if (s.points == 1) {
    out[0] = s.from;
    return out;
  }
  const double n = static_cast<double>(s.points - 1);
  for (std::size_t i = 0; i < s.points; ++i) {
    const double t = static_cast<double>(i) / n;
    out[i] = s.spacing == Spacing::log ? std::exp(std::log(s.from) + t * (std::log(s.to) - std::log(s.from)))
                                       : s.from + t * (s.to - s.from);
  }
  out.front() = s.from;
  out.back() = s.to;
  return out;
}

/// Evaluates every point with `jobs` workers; rows come back in sweep order. If any point
/// fails, the first failure in sweep order is rethrown.
inline std::vector<Row> run_points(const RunConfig& c, unsigned jobs = 1) {
  std::vector<std::pair<double, double>> points;
  if (!c.sweep) {
    points.emplace_back(c.lambda, c.temperature);
  } else {
    for (double v : sweep_values(*c.sweep)) {
      points.emplace_back(c.sweep->parameter == "temperature" ? std::pair{c.lambda, v} : std::pair{v, c.temperature});
    }
  }
  std::vector<Row> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = evaluate(c, points[i].first, points[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

// ---------------------------------------------------------------- output

/// Fixed 17 significant digits; negative zero prints as zero.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

inline void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  const auto& cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string(); };
  for (const auto& r : rows) {
    out << format_number(r.lambda) << ',' << format_number(r.temperature) << ',' << format_number(r.force) << ','
        << format_number(r.f_omega) << ',' << format_number(r.f_gamma0) << ',' << format_number(r.f_omega_d) << ','
        << r.regime << ',' << opt(r.oracle) << ',' << opt(r.discrepancy) << ',' << opt(r.oracle_truncation) << ','
        << opt(r.casimir) << ',' << opt(r.relative_weight) << ',' << r.warnings.joined() << '\n';
  }
}

inline void write_json(std::ostream& out, const RunConfig& c, const std::vector<Row>& rows) {
  auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string("null"); };
  auto str = [](const std::string& s) { return json(s).dump(); };
  out << "{\n  \"schema\": " << schema_version << ",\n  \"mode\": " << str(to_string(c.mode))
      << ",\n  \"units\": " << str(to_string(c.units)) << ",\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i ? ",\n" : "\n") << "    {\"lambda\": " << format_number(r.lambda)
        << ", \"temperature\": " << format_number(r.temperature) << ", \"force\": " << format_number(r.force)
        << ", \"f_omega\": " << format_number(r.f_omega) << ", \"f_gamma0\": " << format_number(r.f_gamma0)
        << ", \"f_omegaD\": " << format_number(r.f_omega_d) << ", \"regime\": " << str(r.regime)
        << ", \"oracle\": " << opt(r.oracle) << ", \"discrepancy\": " << opt(r.discrepancy)
        << ", \"oracle_truncation\": " << opt(r.oracle_truncation) << ", \"casimir\": " << opt(r.casimir)
        << ", \"relative_weight\": " << opt(r.relative_weight) << ", \"warnings\": [";
    const auto names = r.warnings.names();
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? ", " : "") << str(names[k]);
    out << "]}";
  }
  out << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

inline void write_table(std::ostream& out, const RunConfig& c, const std::vector<Row>& rows) {
  if (c.format == Format::json) {
    write_json(out, c, rows);
  } else {
    write_csv(out, rows);
  }
}

// ---------------------------------------------------------------- exit codes

inline constexpr int exit_ok = 0;
inline constexpr int exit_config = 2;
inline constexpr int exit_precondition = 3;
inline constexpr int exit_validation = 4;

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return exit_config;
  if (dynamic_cast<const PreconditionViolation*>(&e) || dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const DivergentSum*>(&e)) {
    return exit_precondition;
  }
  return 1;
}

}  // namespace oscforce::cli
