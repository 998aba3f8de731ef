#pragma once

// Matsubara-sum and finite-difference oracles.
//
// Nothing here uses digamma or Gamma closed forms: the sums are evaluated
// term by term in ascending n with compensated accumulation, and the tail
// beyond n_max is the integral of the same summand from n_max + 1/2 to
// infinity plus the first Euler-Maclaurin midpoint correction. These are the
// independent references against which forces.hpp is validated.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "oscforce/errors.hpp"
#include "oscforce/oscillator.hpp"
#include "oscforce/specfun.hpp"

namespace oscforce::matsubara {

enum class Tail { none, integral };

struct SumSpec {
  std::size_t n_max = 100'000;
  Tail tail = Tail::integral;
  /// Primed sum: the n = 0 term carries weight 1/2.
  bool half_weight_n0 = true;

  /// n_max proportional to the largest frequency scale over the Matsubara spacing 2 pi T.
  static SumSpec automatic(const OscillatorParams& p, std::size_t cap = 10'000'000) {
    double scale = std::max(p.omega0, gamma0_of(p.damping));
    if (const auto* drude = std::get_if<DrudeDamping>(&p.damping)) {
      scale = std::max(scale, drude->omega_d);
    }
    const double wanted = 1e3 * scale / (2.0 * std::numbers::pi * std::max(p.temperature, 1e-300));
    SumSpec spec;
    spec.n_max = static_cast<std::size_t>(
        std::clamp(std::ceil(wanted), 1e4, static_cast<double>(cap)));
    return spec;
  }
};

struct OracleResult {
  double value = 0.0;
  /// Estimated absolute error: tail/quadrature remainder plus an accumulated rounding bound.
  double truncation_estimate = 0.0;
  std::size_t n_used = 0;
};

namespace detail {

/// Neumaier-compensated running sum; also tracks sum |x| for the rounding bound.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::abs(x);
  }
  [[nodiscard]] double value() const { return sum_ + compensation_; }
  [[nodiscard]] double rounding_bound() const {
    return 8.0 * std::numeric_limits<double>::epsilon() * abs_sum_;
  }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double abs_sum_ = 0.0;
};

struct TailEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// sum_{n > n_last} h(n) ~ integral_{n_last + 1/2}^inf h(x) dx + h'(n_last + 1/2) / 24.
template <class Term>
TailEstimate tail_integral(const Term& term, double n_last) {
  const double x0 = n_last + 0.5;
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  double quad_error = 0.0;
  double l1 = 0.0;
  const double integral = integrator.integrate([&term](double x) { return term(x); }, x0,
                                               std::numeric_limits<double>::infinity(), 1e-13,
                                               &quad_error, &l1);
  const double step = 1e-2 * x0;
  const double slope = (term(x0 + step) - term(x0 - step)) / (2.0 * step);
  const double correction = slope / 24.0;
  // next midpoint term ~ 7/5760 h''' which for h ~ x^-2 is ~0.35 |correction| / x0^2
  const double next = std::abs(correction) / (x0 * x0);
  return {integral + correction, quad_error + next};
}

/// Sum of term(n) for n = 1..n_max plus (optionally) the integral tail.
/// The n = 0 contribution is supplied by the caller with its weight already applied.
template <class Term>
OracleResult series(const Term& term, double weighted_n0, const SumSpec& spec) {
  if (spec.n_max < 1) throw PreconditionViolation("matsubara: n_max must be >= 1");
  CompensatedSum acc;
  acc.add(weighted_n0);
  for (std::size_t n = 1; n <= spec.n_max; ++n) acc.add(term(static_cast<double>(n)));

  const auto tail = tail_integral(term, static_cast<double>(spec.n_max));
  OracleResult out;
  out.n_used = spec.n_max;
  if (spec.tail == Tail::integral) {
    acc.add(tail.value);
    out.truncation_estimate = tail.error + acc.rounding_bound();
  } else {
    out.truncation_estimate = std::abs(tail.value) + acc.rounding_bound();
  }
  out.value = acc.value();
  return out;
}

inline void require_positive_temperature(const OscillatorParams& p, const char* fn) {
  p.validate();
  if (!(p.temperature > 0.0)) {
    throw DomainError(std::string(fn) + ": Matsubara sums need temperature > 0");
  }
}

inline double matsubara_spacing(double temperature) {
  return 2.0 * std::numbers::pi * temperature;
}

}  // namespace detail

/// One summand of the force series (without the primed weight):
///   -T [2 Omega Omega' + omega_n gamma'(i omega_n)] / [omega_n^2 + gamma(i omega_n) omega_n + Omega^2].
inline double force_term(const OscillatorParams& p, const Derivatives& d, double omega_n) {
  const double w = p.omega0;
  const double g = damping_at_matsubara(p.damping, omega_n);
  const double dg = damping_derivative_at_matsubara(p.damping, d, omega_n);
  return -p.temperature * (2.0 * w * d.d_omega + omega_n * dg) /
         (omega_n * omega_n + g * omega_n + w * w);
}

/// The exact force as a primed Matsubara sum. Ohmic damping with gamma' != 0 diverges
/// logarithmically and is rejected.
inline OracleResult force_sum_exact(const OscillatorParams& p, const Derivatives& d,
                                    const SumSpec& spec = {}) {
  detail::require_positive_temperature(p, "force_sum_exact");
  if (!is_drude(p.damping) && d.d_gamma0 != 0.0) {
    throw DivergentSum(
        "force_sum_exact: Ohmic damping with d gamma/d lambda != 0 diverges logarithmically; "
        "use a Drude model or a difference force");
  }
  const double spacing = detail::matsubara_spacing(p.temperature);
  auto term = [&](double n) { return force_term(p, d, spacing * n); };
  const double weight0 = spec.half_weight_n0 ? 0.5 : 1.0;
  return detail::series(term, weight0 * force_term(p, d, 0.0), spec);
}

inline OracleResult force_sum_exact(const ParametricModel& m, double lambda, double temperature,
                                    const SumSpec& spec = {}) {
  return force_sum_exact(m.at(lambda, temperature), m.derivatives_at(lambda), spec);
}

/// F2 - F1 = T sum' log[1 + (Omega2^2 - Omega1^2) / (omega_n^2 + omega_n gamma(i omega_n) + Omega1^2)].
/// Both states must share temperature and damping function.
inline OracleResult free_energy_difference(const OscillatorParams& p1, const OscillatorParams& p2,
                                           const SumSpec& spec = {}) {
  detail::require_positive_temperature(p1, "free_energy_difference");
  detail::require_positive_temperature(p2, "free_energy_difference");
  if (!(p1.damping == p2.damping) || p1.temperature != p2.temperature) {
    throw PreconditionViolation(
        "free_energy_difference: both states must share the damping function and temperature");
  }
  if (p2.omega0 < p1.omega0) {
    // always expand around the smaller frequency; makes the result exactly antisymmetric
    auto swapped = free_energy_difference(p2, p1, spec);
    swapped.value = -swapped.value;
    return swapped;
  }
  const double T = p1.temperature;
  const double base = p1.omega0 * p1.omega0;
  const double delta = p2.omega0 * p2.omega0 - base;
  const double spacing = detail::matsubara_spacing(T);
  auto term = [&](double n) {
    const double w = spacing * n;
    return T * std::log1p(delta / (w * w + w * damping_at_matsubara(p1.damping, w) + base));
  };
  const double weight0 = spec.half_weight_n0 ? 0.5 : 1.0;
  return detail::series(term, weight0 * T * std::log1p(delta / base), spec);
}

/// F = T log[(Omega/T) prod_{n>=1} (1 + Omega^2/omega_n^2 + gamma(i omega_n)/omega_n)].
inline OracleResult free_energy_direct(const OscillatorParams& p, const SumSpec& spec = {}) {
  detail::require_positive_temperature(p, "free_energy_direct");
  if (!is_drude(p.damping)) {
    throw DivergentSum("free_energy_direct: the Ohmic free energy diverges; use free_energy_difference");
  }
  const double T = p.temperature;
  const double w2 = p.omega0 * p.omega0;
  const double spacing = detail::matsubara_spacing(T);
  auto term = [&](double n) {
    const double w = spacing * n;
    return T * std::log1p(w2 / (w * w) + damping_at_matsubara(p.damping, w) / w);
  };
  return detail::series(term, T * std::log(p.omega0 / T), spec);
}

/// Drude free energy as the product over (omega_n + i omega_1)(omega_n + i omega_2)(omega_n + i omega_3)
/// / (omega_n^2 (omega_n + omega_d)), using the requested eigenfrequencies. The product converges
/// because the rates sum to omega_d for both the exact and the approximate roots.
inline OracleResult free_energy_drude(const OscillatorParams& p, const SumSpec& spec = {},
                                      RootMethod roots = RootMethod::approximate) {
  detail::require_positive_temperature(p, "free_energy_drude");
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation("free_energy_drude: damping model is Ohmic");
  const auto eig = eigenfrequencies(p, roots);
  const Complex r1 = eig.rate(1);
  const Complex r2 = eig.rate(2);
  const Complex r3 = eig.rate(3);
  const double wd = drude->omega_d;
  const double T = p.temperature;
  const double spacing = detail::matsubara_spacing(T);
  auto term = [&](double n) {
    const double w = spacing * n;
    const Complex logs = specfun::log1p_complex(r1 / w) + specfun::log1p_complex(r2 / w) +
                         specfun::log1p_complex(r3 / w);
    return T * (logs.real() - std::log1p(wd / w));
  };
  return detail::series(term, T * std::log(p.omega0 / T), spec);
}

/// -dF/dlambda by central differences.
template <class FreeEnergy>
double central_difference_force(const FreeEnergy& free_energy, double lambda, double h) {
  return -(free_energy(lambda + h) - free_energy(lambda - h)) / (2.0 * h);
}

/// -dF/dlambda with one Richardson step over (h, h/2). Default h = 1e-5 |lambda|.
template <class FreeEnergy>
OracleResult finite_difference_force(const FreeEnergy& free_energy, double lambda,
                                     std::optional<double> h = std::nullopt) {
  const double step = h.value_or(1e-5 * (lambda != 0.0 ? std::abs(lambda) : 1.0));
  if (!(step > 0.0)) throw PreconditionViolation("finite_difference_force: step must be positive");
  const double coarse = central_difference_force(free_energy, lambda, step);
  const double fine = central_difference_force(free_energy, lambda, 0.5 * step);
  OracleResult out;
  out.value = fine + (fine - coarse) / 3.0;
  out.truncation_estimate = std::abs(fine - coarse) / 3.0;
  out.n_used = 4;
  return out;
}

/// Term-by-term derivative of the free energy with the approximate Drude rates
/// p1 + p2 = gamma0, p1 p2 = Omega^2, p3 = omega_D - gamma0:
///   f = -T sum' [(gamma0' w + 2 Omega Omega') / (w^2 + gamma0 w + Omega^2)
///               + (omega_D' - gamma0') / (w + omega_D - gamma0) - omega_D' / (w + omega_D)],
/// with n = 0 contributing only through Omega^2. This is the sum the closed Drude force evaluates.
inline OracleResult force_sum_drude_approximate(const OscillatorParams& p, const Derivatives& d,
                                                const SumSpec& spec = {}) {
  detail::require_positive_temperature(p, "force_sum_drude_approximate");
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation("force_sum_drude_approximate: damping model is Ohmic");
  const double w2 = p.omega0 * p.omega0;
  const double g0 = drude->gamma0;
  const double wd = drude->omega_d;
  const double T = p.temperature;
  const double spacing = detail::matsubara_spacing(T);
  auto summand = [&](double w) {
    return (d.d_gamma0 * w + 2.0 * p.omega0 * d.d_omega) / (w * w + g0 * w + w2) +
           (d.d_omega_d - d.d_gamma0) / (w + wd - g0) - d.d_omega_d / (w + wd);
  };
  const double weight0 = spec.half_weight_n0 ? 0.5 : 1.0;
  // the zero-frequency factor of the product is Omega^2 alone
  return detail::series([&](double n) { return -T * summand(spacing * n); },
                        -T * weight0 * 2.0 * d.d_omega / p.omega0, spec);
}

struct DrudeForceParts {
  OracleResult f_omega;
  OracleResult f_gamma0;
  OracleResult f_omega_d1;
  OracleResult f_omega_d2;

  [[nodiscard]] double total() const {
    return f_omega.value + f_gamma0.value + f_omega_d1.value + f_omega_d2.value;
  }
};

/// The Drude force split by which parameter's lambda-dependence drives it.
inline DrudeForceParts per_parameter_sums_drude(const OscillatorParams& p, const Derivatives& d,
                                                const SumSpec& spec = {},
                                                RootMethod roots = RootMethod::exact_cubic) {
  detail::require_positive_temperature(p, "per_parameter_sums_drude");
  const auto* drude = std::get_if<DrudeDamping>(&p.damping);
  if (!drude) throw PreconditionViolation("per_parameter_sums_drude: damping model is Ohmic");
  const auto eig = eigenfrequencies(p, roots);
  const Complex r1 = eig.rate(1);
  const Complex r2 = eig.rate(2);
  const Complex r3 = eig.rate(3);
  const double wd = drude->omega_d;
  const double g0 = drude->gamma0;
  const double T = p.temperature;
  const double spacing = detail::matsubara_spacing(T);
  auto inv_product = [&](double w) { return 1.0 / ((w + r1) * (w + r2) * (w + r3)); };
  const double weight0 = spec.half_weight_n0 ? 0.5 : 1.0;

  DrudeForceParts parts;
  {
    const double c = -2.0 * T * p.omega0 * d.d_omega;
    auto term = [&](double n) {
      const double w = spacing * n;
      return c * ((w + wd) * inv_product(w)).real();
    };
    parts.f_omega = detail::series(term, weight0 * c * (wd * inv_product(0.0)).real(), spec);
  }
  {
    const double c = -T * d.d_gamma0 * wd;
    auto term = [&](double n) {
      const double w = spacing * n;
      return c * (w * inv_product(w)).real();
    };
    parts.f_gamma0 = detail::series(term, 0.0, spec);
  }
  {
    const double c = -T * d.d_omega_d * g0;
    auto term = [&](double n) {
      const double w = spacing * n;
      return c * (w * inv_product(w)).real();
    };
    parts.f_omega_d1 = detail::series(term, 0.0, spec);
  }
  {
    const double c = T * d.d_omega_d * wd * g0;
    auto term = [&](double n) {
      const double w = spacing * n;
      return c * (w / (w + wd) * inv_product(w)).real();
    };
    parts.f_omega_d2 = detail::series(term, 0.0, spec);
  }
  return parts;
}

}  // namespace oscforce::matsubara
