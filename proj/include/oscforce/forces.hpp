#pragma once

// Closed-form fluctuation forces and free energies.
//
// Every exact form reduces to the divided digamma difference
//   D = [psi(1 + A) - psi(1 + B)] / (A - B),  A, B = i omega_{1,2} / (2 pi T),
// which is real for the conjugate (or real) pair of Ohmic-type roots and stays
// finite at critical damping. Forces are -dF/dlambda for an abstract sweep
// parameter lambda, in reduced units (hbar = k_B = 1).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "oscforce/errors.hpp"
#include "oscforce/oscillator.hpp"
#include "oscforce/specfun.hpp"

namespace oscforce {

enum class Regime { exact, weak_dissipation, high_t, very_high_t, low_t };

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::exact: return "exact";
    case Regime::weak_dissipation: return "weak-dissipation";
    case Regime::high_t: return "high-T";
    case Regime::very_high_t: return "very-high-T";
    case Regime::low_t: return "low-T";
  }
  return "?";
}

enum class Warning : std::uint32_t {
  drude_regime = 1u << 0,
  weak_dissipation_guard = 1u << 1,
  high_t_guard = 1u << 2,
  very_high_t_guard = 1u << 3,
  low_t_guard = 1u << 4,
  imaginary_residual = 1u << 5,
  edge_effects = 1u << 6,
  interpolation_accuracy = 1u << 7,
  casimir_regime_ambiguous = 1u << 8,
  lumped_element_validity = 1u << 9,
};

inline const char* to_string(Warning w) {
  switch (w) {
    case Warning::drude_regime: return "drude-regime";
    case Warning::weak_dissipation_guard: return "weak-dissipation-guard";
    case Warning::high_t_guard: return "high-T-guard";
    case Warning::very_high_t_guard: return "very-high-T-guard";
    case Warning::low_t_guard: return "low-T-guard";
    case Warning::imaginary_residual: return "imaginary-residual";
    case Warning::edge_effects: return "edge-effects";
    case Warning::interpolation_accuracy: return "interpolation-accuracy";
    case Warning::casimir_regime_ambiguous: return "casimir-regime-ambiguous";
    case Warning::lumped_element_validity: return "lumped-element-validity";
  }
  return "?";
}

class WarningSet {
 public:
  void set(Warning w) { bits_ |= static_cast<std::uint32_t>(w); }
  void set_if(bool condition, Warning w) {
    if (condition) set(w);
  }
  void merge(const WarningSet& other) { bits_ |= other.bits_; }
  [[nodiscard]] bool has(Warning w) const { return (bits_ & static_cast<std::uint32_t>(w)) != 0; }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] std::uint32_t bits() const { return bits_; }

  [[nodiscard]] std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (std::uint32_t bit = 1; bit != 0 && bit <= bits_; bit <<= 1) {
      if (bits_ & bit) out.emplace_back(to_string(static_cast<Warning>(bit)));
    }
    return out;
  }

  /// Names joined with ';' in bit order.
  [[nodiscard]] std::string joined() const {
    std::string out;
    for (const auto& name : names()) {
      if (!out.empty()) out += ';';
      out += name;
    }
    return out;
  }

  friend bool operator==(const WarningSet&, const WarningSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class Provenance { closed_form, oracle };

/// Contributions driven by Omega', gamma0' and omega_d' respectively.
struct ForceComponents {
  double f_omega = 0.0;
  double f_gamma0 = 0.0;
  double f_omega_d = 0.0;
  [[nodiscard]] double total() const { return f_omega + f_gamma0 + f_omega_d; }
};

struct ForceResult {
  double value = 0.0;
  Regime regime = Regime::exact;
  WarningSet warnings;
  std::optional<ForceComponents> components;
  /// |Im| of the digamma combination before it was discarded.
  double imag_residual = 0.0;
  Provenance provenance = Provenance::closed_form;
};

/// Validity thresholds for the asymptotic forms. Violations raise warnings; nothing is refused.
struct Guards {
  /// weak dissipation: gamma <= weak_dissipation * min(Omega, T)
  double weak_dissipation = 0.01;
  /// high T: T >= high_t * max(Omega, gamma); Drude also needs omega_d >= high_t * T
  double high_t = 10.0;
  /// very high T: T >= very_high_t * omega_d
  double very_high_t = 10.0;
  /// low T: T <= low_t * min |i omega_{1,2}|
  double low_t = 0.01;
  /// reality check on exact forms
  double imaginary_tolerance = 1e-10;
};

namespace detail {

inline double two_pi_t(double temperature) { return 2.0 * std::numbers::pi * temperature; }

/// [psi(1 + p1/2piT) - psi(1 + p2/2piT)] / [(p1 - p2)/2piT].
inline Complex digamma_slope(Complex p1, Complex p2, double temperature) {
  const double x = two_pi_t(temperature);
  return specfun::digamma_divided_difference(1.0 + p1 / x, 1.0 + p2 / x);
}

/// Lambda = [log(h + q) - log(h - q)] / (2q), h = gamma/2, q = sqrt(gamma^2/4 - Omega^2).
/// Underdamped this is atan2(s, gamma/2)/s; it is pi/(2 Omega) at gamma = 0.
inline double low_t_kernel(double omega, double gamma) {
  const double h = 0.5 * gamma;
  if (h == 0.0) return 0.5 * std::numbers::pi / omega;
  const Complex q = std::sqrt(Complex{h * h - omega * omega, 0.0});
  const Complex x = q / h;
  if (std::abs(x) < 1e-3) {
    const Complex x2 = x * x;
    return ((1.0 + x2 / 3.0 + x2 * x2 / 5.0) / h).real();
  }
  return (std::atanh(x) / (x * h)).real();
}

inline const DrudeDamping& require_drude(const OscillatorParams& p, const char* fn) {
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation(std::string(fn) + ": damping model is Ohmic");
  return *drude;
}

inline double require_ohmic(const OscillatorParams& p, const char* fn) {
  if (is_drude(p.damping)) throw PreconditionViolation(std::string(fn) + ": damping model is Drude");
  return std::get<OhmicDamping>(p.damping).gamma0;
}

inline double min_rate_magnitude(double omega, double gamma) {
  const auto e = eigenfrequencies_ohmic(omega, gamma);
  return std::min(std::abs(e.rate(1)), std::abs(e.rate(2)));
}

inline void check_reality(ForceResult& r, const Guards& g) {
  r.warnings.set_if(r.imag_residual > g.imaginary_tolerance * std::abs(r.value),
                    Warning::imaginary_residual);
}

inline ForceResult ohmic_only(double value, Regime regime) {
  ForceResult r;
  r.value = value;
  r.regime = regime;
  r.components = ForceComponents{value, 0.0, 0.0};
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------- Ohmic

/// Low-T limit: f = -(Omega/pi) Lambda Omega', one expression for under- and overdamped.
inline ForceResult force_ohmic_low_t(const OscillatorParams& p, double d_omega,
                                     const Guards& guards = {}) {
  const double gamma = detail::require_ohmic(p, "force_ohmic_low_t");
  p.validate();
  const double w = p.omega0;
  auto r = detail::ohmic_only(-(w / std::numbers::pi) * detail::low_t_kernel(w, gamma) * d_omega,
                              Regime::low_t);
  r.warnings.set_if(p.temperature > guards.low_t * detail::min_rate_magnitude(w, gamma),
                    Warning::low_t_guard);
  return r;
}

/// f = -[T/Omega + Omega D / (2 pi^2 T)] Omega'. T = 0 is answered by the low-T limit.
inline ForceResult force_ohmic_exact(const OscillatorParams& p, double d_omega,
                                     const Guards& guards = {}) {
  const double gamma = detail::require_ohmic(p, "force_ohmic_exact");
  p.validate();
  if (p.temperature == 0.0) return force_ohmic_low_t(p, d_omega, guards);
  const double T = p.temperature;
  const double w = p.omega0;
  const auto e = eigenfrequencies_ohmic(w, gamma);
  const Complex slope = detail::digamma_slope(e.rate(1), e.rate(2), T);
  const double scale = w * d_omega / (2.0 * std::numbers::pi * std::numbers::pi * T);
  auto r = detail::ohmic_only(-(T / w) * d_omega - scale * slope.real(), Regime::exact);
  r.imag_residual = std::abs(scale * slope.imag());
  detail::check_reality(r, guards);
  return r;
}

/// First order in gamma: f = -[coth(Omega/2T)/2 + (gamma/4 pi^2 T) Im psi'(1 + i Omega/2 pi T)] Omega'.
inline ForceResult force_ohmic_weak_dissipation(const OscillatorParams& p, double d_omega,
                                                const Guards& guards = {}) {
  const double gamma = detail::require_ohmic(p, "force_ohmic_weak_dissipation");
  p.validate();
  const double T = p.temperature;
  const double w = p.omega0;
  double bracket = 0.0;
  if (T == 0.0) {
    bracket = 0.5 - gamma / (2.0 * std::numbers::pi * w);
  } else {
    const double y = w / detail::two_pi_t(T);
    const double coth = 1.0 / std::tanh(0.5 * w / T);
    bracket = 0.5 * coth + gamma / (4.0 * std::numbers::pi * std::numbers::pi * T) *
                               specfun::trigamma(Complex{1.0, y}).imag();
  }
  auto r = detail::ohmic_only(-bracket * d_omega, Regime::weak_dissipation);
  r.warnings.set_if(gamma > guards.weak_dissipation * std::min(w, T),
                    Warning::weak_dissipation_guard);
  return r;
}

/// f = -(T/Omega + Omega/12T) Omega'.
inline ForceResult force_ohmic_high_t(const OscillatorParams& p, double d_omega,
                                      const Guards& guards = {}) {
  const double gamma = detail::require_ohmic(p, "force_ohmic_high_t");
  p.validate();
  const double T = p.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("force_ohmic_high_t: temperature must be > 0");
  const double w = p.omega0;
  auto r = detail::ohmic_only(-(T / w + w / (12.0 * T)) * d_omega, Regime::high_t);
  r.warnings.set_if(T < guards.high_t * std::max(w, gamma), Warning::high_t_guard);
  return r;
}

/// Difference-force integrand for Ohmic damping whose gamma also depends on lambda.
/// Only differences f~(lambda1) - f~(lambda2) are physical; they equal the true force difference.
inline ForceResult force_difference_tilde(const OscillatorParams& p, const Derivatives& d,
                                          const Guards& guards = {}) {
  const double gamma = detail::require_ohmic(p, "force_difference_tilde");
  p.validate();
  const double T = p.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("force_difference_tilde: temperature must be > 0");
  const double w = p.omega0;
  const auto e = eigenfrequencies_ohmic(w, gamma);
  const double x = detail::two_pi_t(T);
  const Complex psi_sum = specfun::digamma(1.0 + e.rate(1) / x) + specfun::digamma(1.0 + e.rate(2) / x);
  const Complex slope = detail::digamma_slope(e.rate(1), e.rate(2), T);
  const double inv = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi * T);
  const Complex omega_part = -slope * inv * (w * d.d_omega);
  const Complex gamma_part = d.d_gamma0 / (4.0 * std::numbers::pi) * psi_sum +
                             slope * inv * (0.25 * gamma * d.d_gamma0);

  ForceResult r;
  r.regime = Regime::exact;
  const double f_omega = -(T / w) * d.d_omega + omega_part.real();
  r.components = ForceComponents{f_omega, gamma_part.real(), 0.0};
  r.value = f_omega + gamma_part.real();
  r.imag_residual = std::abs((omega_part + gamma_part).imag());
  detail::check_reality(r, guards);
  return r;
}

/// f(state1) - f(state2) for Ohmic damping with lambda-dependent gamma.
inline ForceResult force_difference(const OscillatorParams& p1, const Derivatives& d1,
                                    const OscillatorParams& p2, const Derivatives& d2,
                                    const Guards& guards = {}) {
  if (p1.temperature != p2.temperature) {
    throw PreconditionViolation("force_difference: both states must share the temperature");
  }
  const auto a = force_difference_tilde(p1, d1, guards);
  const auto b = force_difference_tilde(p2, d2, guards);
  ForceResult r;
  r.value = a.value - b.value;
  r.regime = Regime::exact;
  r.components = ForceComponents{a.components->f_omega - b.components->f_omega,
                                 a.components->f_gamma0 - b.components->f_gamma0, 0.0};
  r.imag_residual = a.imag_residual + b.imag_residual;
  r.warnings = a.warnings;
  r.warnings.merge(b.warnings);
  return r;
}

// ---------------------------------------------------------------- Drude

namespace detail {

inline ForceResult drude_result(const ForceComponents& c, Regime regime, const OscillatorParams& p) {
  ForceResult r;
  r.components = c;
  r.value = c.total();
  r.regime = regime;
  r.warnings.set_if(p.drude_regime_violated(), Warning::drude_regime);
  return r;
}

}  // namespace detail

/// Low-T Drude force:
///   -(Omega/pi) Lambda Omega' - [log(omega_d/Omega)/2pi - gamma0 Lambda/4pi] gamma0' - gamma0 omega_d'/(2 pi omega_d).
inline ForceResult force_drude_low_t(const OscillatorParams& p, const Derivatives& d,
                                     const Guards& guards = {}) {
  const auto& drude = detail::require_drude(p, "force_drude_low_t");
  p.validate();
  const double w = p.omega0;
  const double g0 = drude.gamma0;
  const double wd = drude.omega_d;
  const double kernel = detail::low_t_kernel(w, g0);
  const double pi = std::numbers::pi;
  ForceComponents c;
  c.f_omega = -(w / pi) * kernel * d.d_omega;
  c.f_gamma0 = -(std::log(wd / w) / (2.0 * pi) - g0 * kernel / (4.0 * pi)) * d.d_gamma0;
  c.f_omega_d = -g0 / (2.0 * pi * wd) * d.d_omega_d;
  auto r = detail::drude_result(c, Regime::low_t, p);
  r.warnings.set_if(p.temperature > guards.low_t * detail::min_rate_magnitude(w, g0),
                    Warning::low_t_guard);
  return r;
}

/// Full Drude force from the Gamma-function free energy with approximate roots
/// i omega_{1,2} = gamma0/2 +- i s, i omega_3 = omega_d - gamma0. T = 0 routes to the low-T form.
inline ForceResult force_drude_full(const OscillatorParams& p, const Derivatives& d,
                                    const Guards& guards = {}) {
  const auto& drude = detail::require_drude(p, "force_drude_full");
  p.validate();
  if (p.temperature == 0.0) return force_drude_low_t(p, d, guards);
  const double T = p.temperature;
  const double w = p.omega0;
  const double g0 = drude.gamma0;
  const double wd = drude.omega_d;
  const double pi = std::numbers::pi;
  const double x = detail::two_pi_t(T);
  const auto e = eigenfrequencies_drude_approx(p);
  const Complex slope = detail::digamma_slope(e.rate(1), e.rate(2), T);
  const double inv = 1.0 / (2.0 * pi * pi * T);
  const Complex psi_sum = specfun::digamma(1.0 + e.rate(1) / x) + specfun::digamma(1.0 + e.rate(2) / x);
  const double a3 = (wd - g0) / x;
  const double psi3 = specfun::digamma(1.0 + a3);

  const Complex omega_part = -slope * inv * (w * d.d_omega);
  const Complex gamma_part =
      slope * inv * (0.25 * g0 * d.d_gamma0) + d.d_gamma0 / (4.0 * pi) * (psi_sum - 2.0 * psi3);
  // psi(1 + a3) - psi(1 + a_d) with a3 - a_d = -gamma0 / 2 pi T
  const double shift_slope =
      specfun::digamma_divided_difference(Complex{1.0 + a3, 0.0}, Complex{1.0 + wd / x, 0.0}).real();

  ForceComponents c;
  c.f_omega = -(T / w) * d.d_omega + omega_part.real();
  c.f_gamma0 = gamma_part.real();
  c.f_omega_d = -(g0 / x) * shift_slope / (2.0 * pi) * d.d_omega_d;
  auto r = detail::drude_result(c, Regime::exact, p);
  r.imag_residual = std::abs(omega_part.imag() + gamma_part.imag());
  detail::check_reality(r, guards);
  return r;
}

/// omega_d >> T >> Omega, gamma0:
///   -(T/Omega) Omega' - log(omega_d / 2 pi T) gamma0' / 2pi - gamma0 omega_d' / (2 pi omega_d).
inline ForceResult force_drude_high_t(const OscillatorParams& p, const Derivatives& d,
                                      const Guards& guards = {}) {
  const auto& drude = detail::require_drude(p, "force_drude_high_t");
  p.validate();
  const double T = p.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("force_drude_high_t: temperature must be > 0");
  const double w = p.omega0;
  const double pi = std::numbers::pi;
  ForceComponents c;
  c.f_omega = -(T / w) * d.d_omega;
  c.f_gamma0 = -std::log(drude.omega_d / (2.0 * pi * T)) / (2.0 * pi) * d.d_gamma0;
  c.f_omega_d = -drude.gamma0 / (2.0 * pi * drude.omega_d) * d.d_omega_d;
  auto r = detail::drude_result(c, Regime::high_t, p);
  r.warnings.set_if(T < guards.high_t * std::max(w, drude.gamma0) || drude.omega_d < guards.high_t * T,
                    Warning::high_t_guard);
  return r;
}

/// T >> omega_d >> Omega, gamma0: -(T/Omega) Omega' - (omega_d/24T) gamma0' - (gamma0/24T) omega_d'.
inline ForceResult force_drude_very_high_t(const OscillatorParams& p, const Derivatives& d,
                                           const Guards& guards = {}) {
  const auto& drude = detail::require_drude(p, "force_drude_very_high_t");
  p.validate();
  const double T = p.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("force_drude_very_high_t: temperature must be > 0");
  ForceComponents c;
  c.f_omega = -(T / p.omega0) * d.d_omega;
  c.f_gamma0 = -drude.omega_d / (24.0 * T) * d.d_gamma0;
  c.f_omega_d = -drude.gamma0 / (24.0 * T) * d.d_omega_d;
  auto r = detail::drude_result(c, Regime::very_high_t, p);
  r.warnings.set_if(T < guards.very_high_t * drude.omega_d, Warning::very_high_t_guard);
  return r;
}

// ---------------------------------------------------------------- free energies

struct FreeEnergy {
  double value = 0.0;
  double imag_residual = 0.0;
};

/// F = -T [log T + sum_k log Gamma(1 + i omega_k / 2 pi T) - log Omega - log Gamma(1 + omega_d / 2 pi T)].
/// The default approximate roots are the ones the closed-form Drude forces are built on.
inline FreeEnergy free_energy_drude_gamma(const OscillatorParams& p,
                                          RootMethod roots = RootMethod::approximate) {
  const auto& drude = detail::require_drude(p, "free_energy_drude_gamma");
  p.validate();
  const double T = p.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("free_energy_drude_gamma: temperature must be > 0");
  const auto e = eigenfrequencies(p, roots);
  const double x = detail::two_pi_t(T);
  const Complex log_gammas = specfun::log_gamma(1.0 + e.rate(1) / x) +
                             specfun::log_gamma(1.0 + e.rate(2) / x) +
                             specfun::log_gamma(1.0 + e.rate(3) / x);
  const Complex bracket =
      std::log(T) + log_gammas - std::log(p.omega0) - specfun::log_gamma(1.0 + drude.omega_d / x);
  return {-T * bracket.real(), std::abs(T * bracket.imag())};
}

/// F(p2) - F(p1) for Ohmic damping shared by both states:
///   T log(Omega2/Omega1) + T sum_k [log Gamma(1 + a_k(1)) - log Gamma(1 + a_k(2))].
inline FreeEnergy free_energy_difference_gamma(const OscillatorParams& p1, const OscillatorParams& p2) {
  const double gamma = detail::require_ohmic(p1, "free_energy_difference_gamma");
  detail::require_ohmic(p2, "free_energy_difference_gamma");
  p1.validate();
  p2.validate();
  if (!(p1.damping == p2.damping) || p1.temperature != p2.temperature) {
    throw PreconditionViolation(
        "free_energy_difference_gamma: both states must share the damping function and temperature");
  }
  const double T = p1.temperature;
  if (!(T > 0.0)) throw PreconditionViolation("free_energy_difference_gamma: temperature must be > 0");
  const double x = detail::two_pi_t(T);
  auto log_gammas = [&](double omega) {
    const auto e = eigenfrequencies_ohmic(omega, gamma);
    return specfun::log_gamma(1.0 + e.rate(1) / x) + specfun::log_gamma(1.0 + e.rate(2) / x);
  };
  const Complex bracket = std::log(p2.omega0 / p1.omega0) + log_gammas(p1.omega0) - log_gammas(p2.omega0);
  return {T * bracket.real(), std::abs(T * bracket.imag())};
}

// ---------------------------------------------------------------- dispatch

enum class ForceMethod {
  exact,
  weak_dissipation,
  high_t,
  very_high_t,
  low_t,
};

inline std::string to_string(ForceMethod m) {
  switch (m) {
    case ForceMethod::exact: return "exact";
    case ForceMethod::weak_dissipation: return "weak-dissipation";
    case ForceMethod::high_t: return "high-T";
    case ForceMethod::very_high_t: return "very-high-T";
    case ForceMethod::low_t: return "low-T";
  }
  return "?";
}

/// The force for either damping model. Ohmic damping with gamma0' != 0 has no finite force.
inline ForceResult force(const OscillatorParams& p, const Derivatives& d,
                         ForceMethod method = ForceMethod::exact, const Guards& guards = {}) {
  if (!is_drude(p.damping)) {
    if (d.d_gamma0 != 0.0) {
      throw DivergentSum(
          "force: Ohmic damping with d gamma/d lambda != 0 has no finite force; use a Drude model "
          "or force_difference");
    }
    switch (method) {
      case ForceMethod::exact: return force_ohmic_exact(p, d.d_omega, guards);
      case ForceMethod::weak_dissipation: return force_ohmic_weak_dissipation(p, d.d_omega, guards);
      case ForceMethod::high_t: return force_ohmic_high_t(p, d.d_omega, guards);
      case ForceMethod::low_t: return force_ohmic_low_t(p, d.d_omega, guards);
      case ForceMethod::very_high_t:
        throw PreconditionViolation("force: the very-high-T form exists only for Drude damping");
    }
  } else {
    switch (method) {
      case ForceMethod::exact: return force_drude_full(p, d, guards);
      case ForceMethod::high_t: return force_drude_high_t(p, d, guards);
      case ForceMethod::very_high_t: return force_drude_very_high_t(p, d, guards);
      case ForceMethod::low_t: return force_drude_low_t(p, d, guards);
      case ForceMethod::weak_dissipation:
        throw PreconditionViolation("force: the weak-dissipation form exists only for Ohmic damping");
    }
  }
  throw PreconditionViolation("force: unknown method");
}

inline ForceResult force(const ParametricModel& m, double lambda, double temperature,
                         ForceMethod method = ForceMethod::exact, const Guards& guards = {}) {
  return force(m.at(lambda, temperature), m.derivatives_at(lambda), method, guards);
}

}  // namespace oscforce
