#pragma once

// RLC circuits as damped oscillators, capacitor geometries, reference Casimir
// forces and relative weights.
//
// Series RLC maps to Omega = 1/sqrt(LC), gamma = R/L; parallel RLC to
// Omega = 1/sqrt(LC), gamma = 1/(RC). Element values may be in any consistent
// unit system; the geometry helpers (capacitances, Casimir references,
// sphere-plate forces) work in SI and return newtons.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "oscforce/errors.hpp"
#include "oscforce/forces.hpp"
#include "oscforce/oscillator.hpp"
#include "oscforce/specfun.hpp"
#include "oscforce/units.hpp"

namespace oscforce::circuits {

/// Element values and their derivatives with respect to lambda.
struct SeriesRLC {
  double resistance = 0.0;
  double inductance = 1.0;
  double capacitance = 1.0;
  double d_resistance = 0.0;
  double d_inductance = 0.0;
  double d_capacitance = 0.0;
};

struct ParallelRLC {
  double resistance = 1.0;
  double inductance = 1.0;
  double capacitance = 1.0;
  double d_resistance = 0.0;
  double d_inductance = 0.0;
  double d_capacitance = 0.0;
};

/// An element value as a function of lambda with its analytic derivative.
struct Element {
  std::function<double(double)> value;
  std::function<double(double)> derivative;

  static Element constant(double x) {
    return {[x](double) { return x; }, [](double) { return 0.0; }};
  }
};

struct RLCModel {
  Element resistance;
  Element inductance;
  Element capacitance;
};

struct Mapped {
  OscillatorParams params;
  Derivatives derivatives;
};

namespace detail {

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw PreconditionViolation(std::string("circuits: ") + what + " must be positive and finite");
  }
}

/// Omega = (LC)^-1/2  =>  Omega' = -(Omega/2)(L'/L + C'/C).
inline void set_resonance(Mapped& m, double L, double C, double dL, double dC) {
  m.params.omega0 = 1.0 / std::sqrt(L * C);
  m.derivatives.d_omega = -0.5 * m.params.omega0 * (dL / L + dC / C);
}

}  // namespace detail

inline Mapped map_series(const SeriesRLC& c, double temperature = 0.0) {
  if (!(c.resistance >= 0.0)) throw PreconditionViolation("circuits: resistance must be >= 0");
  detail::require_positive(c.inductance, "inductance");
  detail::require_positive(c.capacitance, "capacitance");
  Mapped m;
  m.params.temperature = temperature;
  m.params.mass = c.inductance;
  detail::set_resonance(m, c.inductance, c.capacitance, c.d_inductance, c.d_capacitance);
  const double L = c.inductance;
  m.params.damping = OhmicDamping{c.resistance / L};
  m.derivatives.d_gamma0 = c.d_resistance / L - c.resistance * c.d_inductance / (L * L);
  return m;
}

inline Mapped map_parallel(const ParallelRLC& c, double temperature = 0.0) {
  detail::require_positive(c.resistance, "resistance");
  detail::require_positive(c.inductance, "inductance");
  detail::require_positive(c.capacitance, "capacitance");
  Mapped m;
  m.params.temperature = temperature;
  m.params.mass = c.capacitance;
  detail::set_resonance(m, c.inductance, c.capacitance, c.d_inductance, c.d_capacitance);
  const double RC = c.resistance * c.capacitance;
  m.params.damping = OhmicDamping{1.0 / RC};
  m.derivatives.d_gamma0 = -(c.d_resistance * c.capacitance + c.resistance * c.d_capacitance) / (RC * RC);
  return m;
}

namespace detail {

inline SeriesRLC series_at(const RLCModel& m, double lambda) {
  return {m.resistance.value(lambda),      m.inductance.value(lambda),
          m.capacitance.value(lambda),     m.resistance.derivative(lambda),
          m.inductance.derivative(lambda), m.capacitance.derivative(lambda)};
}

inline ParallelRLC parallel_at(const RLCModel& m, double lambda) {
  return {m.resistance.value(lambda),      m.inductance.value(lambda),
          m.capacitance.value(lambda),     m.resistance.derivative(lambda),
          m.inductance.derivative(lambda), m.capacitance.derivative(lambda)};
}

template <class Map>
ParametricModel to_parametric(Map map) {
  ParametricModel pm;
  pm.omega = [map](double l) { return map(l).params.omega0; };
  pm.d_omega = [map](double l) { return map(l).derivatives.d_omega; };
  pm.gamma0 = [map](double l) { return gamma0_of(map(l).params.damping); };
  pm.d_gamma0 = [map](double l) { return map(l).derivatives.d_gamma0; };
  return pm;
}

}  // namespace detail

inline ParametricModel map_series(const RLCModel& m) {
  return detail::to_parametric([m](double l) { return map_series(detail::series_at(m, l)); });
}

inline ParametricModel map_parallel(const RLCModel& m) {
  return detail::to_parametric([m](double l) { return map_parallel(detail::parallel_at(m, l)); });
}

/// Series circuit force; only C may depend on lambda.
inline ForceResult force_series_rlc(const SeriesRLC& c, double temperature,
                                    ForceMethod method = ForceMethod::exact, const Guards& guards = {}) {
  if (c.d_resistance != 0.0 || c.d_inductance != 0.0) {
    throw PreconditionViolation(
        "force_series_rlc: only the capacitance may depend on lambda; use force_difference");
  }
  const auto m = map_series(c, temperature);
  return force(m.params, m.derivatives, method, guards);
}

/// Parallel circuit force; only L may depend on lambda.
inline ForceResult force_parallel_rlc(const ParallelRLC& c, double temperature,
                                      ForceMethod method = ForceMethod::exact, const Guards& guards = {}) {
  if (c.d_resistance != 0.0 || c.d_capacitance != 0.0) {
    throw PreconditionViolation(
        "force_parallel_rlc: only the inductance may depend on lambda; use force_difference");
  }
  const auto m = map_parallel(c, temperature);
  return force(m.params, m.derivatives, method, guards);
}

// ---------------------------------------------------------------- geometry (SI)

struct PlanarCapacitor {
  double area = 1.0;  // m^2
  double gap = 1.0;   // m
  double permittivity = 1.0;
};

struct SpherePlate {
  double radius = 1.0;  // m
  double gap = 1.0;     // m
};

using Geometry = std::variant<PlanarCapacitor, SpherePlate>;

/// Above this d^2/S the parallel-plate formula misses edge effects.
inline constexpr double edge_effect_ratio = 0.1;

struct Capacitance {
  double value = 0.0;       // F
  double derivative = 0.0;  // dC/dd in F/m
  WarningSet warnings;
};

inline void validate(const PlanarCapacitor& g) {
  detail::require_positive(g.area, "plate area");
  detail::require_positive(g.gap, "gap");
  detail::require_positive(g.permittivity, "permittivity");
}

inline void validate(const SpherePlate& g) {
  detail::require_positive(g.radius, "sphere radius");
  detail::require_positive(g.gap, "gap");
}

/// C = eps0 eps S / d.
inline Capacitance capacitance_planar(const PlanarCapacitor& g) {
  validate(g);
  Capacitance out;
  out.value = si::epsilon0 * g.permittivity * g.area / g.gap;
  out.derivative = -out.value / g.gap;
  out.warnings.set_if(g.gap * g.gap / g.area > edge_effect_ratio, Warning::edge_effects);
  return out;
}

/// 1 + log(1 + R/d) / 2
inline double sphere_plate_log_factor(const SpherePlate& g) {
  return 1.0 + 0.5 * std::log1p(g.radius / g.gap);
}

/// Interpolation C = 4 pi eps0 R [1 + log(1 + R/d)/2], accurate for d <~ R.
inline Capacitance capacitance_sphere_plate(const SpherePlate& g) {
  validate(g);
  const double R = g.radius;
  const double d = g.gap;
  Capacitance out;
  out.value = 4.0 * std::numbers::pi * si::epsilon0 * R * sphere_plate_log_factor(g);
  out.derivative = -2.0 * std::numbers::pi * si::epsilon0 * R * R / (d * d * (1.0 + R / d));
  out.warnings.set_if(d > R, Warning::interpolation_accuracy);
  return out;
}

/// Series LC circuit whose capacitor is the given geometry, lambda = gap.
inline SeriesRLC series_with_capacitor(const Capacitance& cap, double inductance, double resistance = 0.0) {
  SeriesRLC c;
  c.resistance = resistance;
  c.inductance = inductance;
  c.capacitance = cap.value;
  c.d_capacitance = cap.derivative;
  return c;
}

// ---------------------------------------------------------------- Casimir references

enum class ThermalRegime { low_t, high_t };

inline std::string to_string(ThermalRegime r) { return r == ThermalRegime::low_t ? "low-T" : "high-T"; }

struct CasimirResult {
  double force = 0.0;  // N
  WarningSet warnings;
};

/// k_B T d / (hbar c); the regimes are T << hbar c / d and T >> hbar c / d.
inline double thermal_parameter(double gap, double kelvin) {
  return si::k_b * kelvin * gap / (si::hbar * si::c);
}

/// Plate-plate: -pi^2 hbar c S / 240 d^4 or -zeta(3) k_B T S / 8 pi d^3 (half the plasma-model value).
/// Sphere-plate (proximity force): -pi^3 hbar c R / 360 d^3 or -zeta(3) k_B T R / 8 d^2.
inline CasimirResult casimir_reference(const Geometry& geometry, double kelvin, ThermalRegime regime) {
  const double pi = std::numbers::pi;
  CasimirResult out;
  double gap = 0.0;
  if (const auto* plates = std::get_if<PlanarCapacitor>(&geometry)) {
    validate(*plates);
    const double d = plates->gap;
    gap = d;
    out.force = regime == ThermalRegime::low_t
                    ? -pi * pi * si::hbar * si::c * plates->area / (240.0 * std::pow(d, 4))
                    : -specfun::zeta3 * si::k_b * kelvin * plates->area / (8.0 * pi * d * d * d);
  } else {
    const auto& sp = std::get<SpherePlate>(geometry);
    validate(sp);
    const double d = sp.gap;
    gap = d;
    out.force = regime == ThermalRegime::low_t
                    ? -pi * pi * pi * si::hbar * si::c * sp.radius / (360.0 * d * d * d)
                    : -specfun::zeta3 * si::k_b * kelvin * sp.radius / (8.0 * d * d);
  }
  const double x = thermal_parameter(gap, kelvin);
  out.warnings.set_if(x >= 0.1 && x <= 10.0, Warning::casimir_regime_ambiguous);
  return out;
}

// ---------------------------------------------------------------- circuit forces in closed form

/// Dissipationless sphere-plate LC force: -hbar Omega / (8 d (1 + d/R) B) at low T,
/// -k_B T / (4 d (1 + d/R) B) at high T, with B = 1 + log(1 + R/d)/2.
inline double sphere_plate_circuit_force(const SpherePlate& g, double inductance, double kelvin,
                                         ThermalRegime regime) {
  validate(g);
  detail::require_positive(inductance, "inductance");
  const double d = g.gap;
  const double denom = d * (1.0 + d / g.radius) * sphere_plate_log_factor(g);
  if (regime == ThermalRegime::low_t) {
    const double omega = 1.0 / std::sqrt(inductance * capacitance_sphere_plate(g).value);
    return -si::hbar * omega / (8.0 * denom);
  }
  return -si::k_b * kelvin / (4.0 * denom);
}

/// Planar LC circuit at low T and weak dissipation: -hbar / (4 sqrt(eps0 eps L S d)) + hbar R / (4 pi L d).
inline double planar_force_weak_low_t(const PlanarCapacitor& g, double inductance, double resistance) {
  validate(g);
  const double eps = si::epsilon0 * g.permittivity;
  return -si::hbar / (4.0 * std::sqrt(eps * inductance * g.area * g.gap)) +
         si::hbar * resistance / (4.0 * std::numbers::pi * inductance * g.gap);
}

/// Planar LC circuit at low T and strong dissipation: -hbar / (2 pi eps0 eps S R) log(eps0 eps S R^2 / (L d)).
inline double planar_force_strong_low_t(const PlanarCapacitor& g, double inductance, double resistance) {
  validate(g);
  const double eps = si::epsilon0 * g.permittivity;
  return -si::hbar / (2.0 * std::numbers::pi * eps * g.area * resistance) *
         std::log(eps * g.area * resistance * resistance / (inductance * g.gap));
}

// ---------------------------------------------------------------- relative weights

/// Closed-form ratio of the dissipationless circuit force to the Casimir reference.
/// Low T needs the circuit frequency Omega (rad/s); high T is independent of it.
inline double relative_weight(const Geometry& geometry, ThermalRegime regime, double omega = 0.0) {
  const double pi = std::numbers::pi;
  if (const auto* plates = std::get_if<PlanarCapacitor>(&geometry)) {
    validate(*plates);
    const double d = plates->gap;
    const double aspect = d * d / plates->area;
    if (regime == ThermalRegime::high_t) return 4.0 * pi * aspect / specfun::zeta3;
    return 60.0 / (pi * pi) * (omega * d / si::c) * aspect;
  }
  const auto& sp = std::get<SpherePlate>(geometry);
  validate(sp);
  const double bracket = (sp.radius / sp.gap + 1.0) * sphere_plate_log_factor(sp);
  if (regime == ThermalRegime::high_t) return 2.0 / specfun::zeta3 / bracket;
  return 45.0 / (pi * pi * pi) * (omega * sp.gap / si::c) / bracket;
}

/// Series-LC resonance for an ideal circuit built on the geometry's capacitance.
inline double circuit_frequency(const Geometry& geometry, double inductance) {
  detail::require_positive(inductance, "inductance");
  const double C = std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, PlanarCapacitor>) {
          return capacitance_planar(g).value;
        } else {
          return capacitance_sphere_plate(g).value;
        }
      },
      geometry);
  return 1.0 / std::sqrt(inductance * C);
}

/// Dissipationless circuit force (SI) through the general oscillator route: -hbar Omega'/2 at
/// low T, -k_B T Omega'/Omega at high T.
inline double circuit_force_leading(const Geometry& geometry, double inductance, double kelvin,
                                    ThermalRegime regime) {
  const Capacitance cap = std::visit(
      [](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, PlanarCapacitor>) {
          return capacitance_planar(g);
        } else {
          return capacitance_sphere_plate(g);
        }
      },
      geometry);
  const auto m = map_series(series_with_capacitor(cap, inductance));
  const double w = m.params.omega0;
  const double dw = m.derivatives.d_omega;
  if (regime == ThermalRegime::low_t) return si::force_to_si(-0.5 * dw);
  return si::force_to_si(-si::temperature_to_reduced(kelvin) * dw / w);
}

/// r as the quotient of the two force computations.
inline double relative_weight_quotient(const Geometry& geometry, double inductance, double kelvin,
                                       ThermalRegime regime) {
  return circuit_force_leading(geometry, inductance, kelvin, regime) /
         casimir_reference(geometry, kelvin, regime).force;
}

/// Lumped-element validity R/L << min(omega_c, c/r0); advisory, with r0 the element size.
inline bool lumped_element_suspect(double gamma, double element_size,
                                   std::optional<double> omega_c = std::nullopt, double margin = 0.1) {
  double limit = si::c / element_size;
  if (omega_c) limit = std::min(limit, *omega_c);
  return gamma > margin * limit;
}

}  // namespace oscforce::circuits
