#pragma once

// Damped-oscillator parameters, lambda-parametric models and eigenfrequencies.
//
// Units are reduced: hbar = k_B = 1, so temperatures, damping rates and
// frequencies share one unit. Eigenfrequencies omega_k are the roots of the
// dispersion relation Omega^2 - i gamma(omega) omega - omega^2 = 0; the
// "rates" i*omega_k have positive real part for every damped mode.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "oscforce/cubic.hpp"
#include "oscforce/errors.hpp"

namespace oscforce {

using Complex = std::complex<double>;

struct OhmicDamping {
  double gamma0 = 0.0;
  friend bool operator==(const OhmicDamping&, const OhmicDamping&) = default;
};

/// gamma(omega) = gamma0 * omega_d / (omega_d - i omega)
struct DrudeDamping {
  double gamma0 = 0.0;
  double omega_d = 1.0;
  friend bool operator==(const DrudeDamping&, const DrudeDamping&) = default;
};

using DampingModel = std::variant<OhmicDamping, DrudeDamping>;

inline bool is_drude(const DampingModel& m) { return std::holds_alternative<DrudeDamping>(m); }

inline double gamma0_of(const DampingModel& m) {
  return std::visit([](const auto& d) { return d.gamma0; }, m);
}

/// Drude closed forms rely on omega_d >> Omega, gamma0; below this ratio results carry a warning.
inline constexpr double drude_regime_ratio = 10.0;

struct OscillatorParams {
  double omega0 = 1.0;
  DampingModel damping = OhmicDamping{};
  double temperature = 0.0;
  /// The oscillator mass cancels from every force formula; kept for completeness.
  double mass = 1.0;

  void validate() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
      throw PreconditionViolation("oscillator: omega0 must be positive and finite");
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
      throw PreconditionViolation("oscillator: temperature must be >= 0");
    }
    if (!(gamma0_of(damping) >= 0.0)) {
      throw PreconditionViolation("oscillator: gamma0 must be >= 0");
    }
    if (const auto* drude = std::get_if<DrudeDamping>(&damping); drude && !(drude->omega_d > 0.0)) {
      throw PreconditionViolation("oscillator: Drude omega_d must be positive");
    }
  }

  [[nodiscard]] bool drude_regime_violated() const {
    const auto* drude = std::get_if<DrudeDamping>(&damping);
    if (!drude) return false;
    return drude->omega_d < drude_regime_ratio * std::max(omega0, drude->gamma0);
  }
};

/// Derivatives of Omega, gamma0, omega_d with respect to the sweep parameter lambda.
struct Derivatives {
  double d_omega = 0.0;
  double d_gamma0 = 0.0;
  double d_omega_d = 0.0;
};

/// Omega(lambda), gamma0(lambda), omega_d(lambda) with analytic derivatives.
/// lambda is any sweep parameter: a distance, or an angle for torques.
/// An empty omega_d function means Ohmic damping.
struct ParametricModel {
  std::function<double(double)> omega;
  std::function<double(double)> d_omega;
  std::function<double(double)> gamma0;
  std::function<double(double)> d_gamma0;
  std::function<double(double)> omega_d;
  std::function<double(double)> d_omega_d;

  [[nodiscard]] bool is_drude() const { return static_cast<bool>(omega_d); }

  [[nodiscard]] OscillatorParams at(double lambda, double temperature) const {
    OscillatorParams p;
    p.omega0 = omega(lambda);
    p.temperature = temperature;
    const double g = gamma0 ? gamma0(lambda) : 0.0;
    if (is_drude()) {
      p.damping = DrudeDamping{g, omega_d(lambda)};
    } else {
      p.damping = OhmicDamping{g};
    }
    return p;
  }

  [[nodiscard]] Derivatives derivatives_at(double lambda) const {
    Derivatives d;
    d.d_omega = d_omega ? d_omega(lambda) : 0.0;
    d.d_gamma0 = d_gamma0 ? d_gamma0(lambda) : 0.0;
    d.d_omega_d = (is_drude() && d_omega_d) ? d_omega_d(lambda) : 0.0;
    return d;
  }

  /// X(lambda) = X0 * (lambda / lambda0)^exponent for each parameter.
  static ParametricModel power_law(double lambda0, double omega0, double omega_exp, double gamma0,
                                   double gamma_exp, std::optional<double> omega_d = std::nullopt,
                                   double omega_d_exp = 0.0) {
    auto value = [lambda0](double x0, double e) {
      return [=](double l) { return x0 * std::pow(l / lambda0, e); };
    };
    auto slope = [lambda0](double x0, double e) {
      return [=](double l) { return e == 0.0 ? 0.0 : x0 * e * std::pow(l / lambda0, e) / l; };
    };
    ParametricModel m;
    m.omega = value(omega0, omega_exp);
    m.d_omega = slope(omega0, omega_exp);
    m.gamma0 = value(gamma0, gamma_exp);
    m.d_gamma0 = slope(gamma0, gamma_exp);
    if (omega_d) {
      m.omega_d = value(*omega_d, omega_d_exp);
      m.d_omega_d = slope(*omega_d, omega_d_exp);
    }
    return m;
  }
};

enum class RootMethod { ohmic, approximate, exact_cubic };

inline std::string to_string(RootMethod m) {
  switch (m) {
    case RootMethod::ohmic: return "ohmic";
    case RootMethod::approximate: return "approx";
    case RootMethod::exact_cubic: return "exact-cubic";
  }
  return "?";
}

/// Complex eigenfrequencies. Convention: i*omega1 = gamma/2 + i s, i*omega2 = gamma/2 - i s
/// with s = sqrt(Omega^2 - gamma^2/4) on the principal complex branch, so overdamped
/// modes have i*omega1 < i*omega2 (both real). omega3 is the Drude relaxation mode.
struct Eigenfrequencies {
  Complex omega1{};
  Complex omega2{};
  std::optional<Complex> omega3;
  RootMethod method = RootMethod::ohmic;
  bool regime_warning = false;

  /// i * omega_k for k = 1, 2, 3.
  [[nodiscard]] Complex rate(int k) const {
    const Complex i{0.0, 1.0};
    switch (k) {
      case 1: return i * omega1;
      case 2: return i * omega2;
      case 3:
        if (!omega3) throw PreconditionViolation("eigenfrequencies: no third mode for Ohmic damping");
        return i * *omega3;
      default: throw PreconditionViolation("eigenfrequencies: mode index must be 1, 2 or 3");
    }
  }
};

namespace detail {

inline Complex rate_to_frequency(Complex rate) { return Complex{0.0, -1.0} * rate; }

/// s = sqrt(Omega^2 - gamma^2/4) on the principal branch; +0 imaginary part keeps
/// the overdamped case at s = +i|s|.
inline Complex splitting(double omega, double gamma) {
  return std::sqrt(Complex{omega * omega - 0.25 * gamma * gamma, 0.0});
}

}  // namespace detail

/// i omega_{1,2} = gamma/2 +- i sqrt(Omega^2 - gamma^2/4), one code path for all damping strengths.
inline Eigenfrequencies eigenfrequencies_ohmic(double omega, double gamma) {
  const Complex s = detail::splitting(omega, gamma);
  const Complex i{0.0, 1.0};
  Eigenfrequencies e;
  e.omega1 = detail::rate_to_frequency(0.5 * gamma + i * s);
  e.omega2 = detail::rate_to_frequency(0.5 * gamma - i * s);
  e.method = RootMethod::ohmic;
  return e;
}

inline Eigenfrequencies eigenfrequencies_ohmic(const OscillatorParams& p) {
  if (is_drude(p.damping)) {
    throw PreconditionViolation("eigenfrequencies_ohmic: damping model is Drude");
  }
  p.validate();
  return eigenfrequencies_ohmic(p.omega0, gamma0_of(p.damping));
}

/// First-order roots for omega_d >> Omega, gamma0: Ohmic pair plus i omega3 = omega_d - gamma0.
inline Eigenfrequencies eigenfrequencies_drude_approx(const OscillatorParams& p) {
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation("eigenfrequencies_drude_approx: damping model is Ohmic");
  p.validate();
  Eigenfrequencies e = eigenfrequencies_ohmic(p.omega0, drude->gamma0);
  e.omega3 = detail::rate_to_frequency(Complex{drude->omega_d - drude->gamma0, 0.0});
  e.method = RootMethod::approximate;
  e.regime_warning = p.drude_regime_violated();
  return e;
}

/// The three roots of omega^3 + i w_D omega^2 - (Omega^2 + gamma0 w_D) omega - i Omega^2 w_D = 0.
///
/// With omega = -i r the rates r solve the real cubic
///   r^3 - w_D r^2 + (Omega^2 + gamma0 w_D) r - Omega^2 w_D = 0.
/// omega3 is the real-rate relaxation mode (the largest real rate when all three are real).
inline Eigenfrequencies eigenfrequencies_drude_exact(const OscillatorParams& p) {
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation("eigenfrequencies_drude_exact: damping model is Ohmic");
  p.validate();
  const double w2 = p.omega0 * p.omega0;
  const double wd = drude->omega_d;
  const auto roots = cubic::solve(-wd, w2 + drude->gamma0 * wd, -w2 * wd);

  Eigenfrequencies e;
  // pair[0] has im > 0 (i omega1 = gamma/2 + i s) or is the smaller real rate
  e.omega1 = detail::rate_to_frequency(roots.pair[0]);
  e.omega2 = detail::rate_to_frequency(roots.pair[1]);
  e.omega3 = detail::rate_to_frequency(Complex{roots.anchor, 0.0});
  e.method = RootMethod::exact_cubic;
  e.regime_warning = p.drude_regime_violated();
  return e;
}

inline Eigenfrequencies eigenfrequencies(const OscillatorParams& p, RootMethod method) {
  switch (method) {
    case RootMethod::ohmic: return eigenfrequencies_ohmic(p);
    case RootMethod::approximate: return eigenfrequencies_drude_approx(p);
    case RootMethod::exact_cubic: return eigenfrequencies_drude_exact(p);
  }
  throw PreconditionViolation("eigenfrequencies: unknown root method");
}

/// gamma(i omega_n): gamma0 for Ohmic, gamma0 omega_d / (omega_d + omega_n) for Drude.
inline double damping_at_matsubara(const DampingModel& m, double omega_n) {
  if (const auto* drude = std::get_if<DrudeDamping>(&m)) {
    return drude->gamma0 * drude->omega_d / (drude->omega_d + omega_n);
  }
  return std::get<OhmicDamping>(m).gamma0;
}

inline double damping_at_matsubara(const OscillatorParams& p, double omega_n) {
  if (!(omega_n >= 0.0)) throw DomainError("damping_at_matsubara: omega_n must be >= 0");
  return damping_at_matsubara(p.damping, omega_n);
}

/// d gamma(i omega_n) / d lambda.
inline double damping_derivative_at_matsubara(const DampingModel& m, const Derivatives& d,
                                              double omega_n) {
  if (const auto* drude = std::get_if<DrudeDamping>(&m)) {
    const double denom = drude->omega_d + omega_n;
    return d.d_gamma0 * drude->omega_d / denom +
           drude->gamma0 * d.d_omega_d * omega_n / (denom * denom);
  }
  return d.d_gamma0;
}

}  // namespace oscforce
