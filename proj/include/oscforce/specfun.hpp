#pragma once

// Complex log-Gamma, digamma and trigamma on the right half plane.
//
// All functions use the same scheme: shift the argument upward with the
// recurrence until re(z) >= 12, then evaluate the Stirling-type asymptotic
// series through the B_14 Bernoulli term. The truncation error at |z| >= 12
// is below 1e-17 relative, so accuracy is limited by the recurrence sums.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "oscforce/errors.hpp"

namespace oscforce::specfun {

using Complex = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double zeta3 = 1.2020569031595942854;

namespace detail {

inline constexpr double shift_threshold = 12.0;

// B_2, B_4, ..., B_14
inline constexpr std::array<double, 7> bernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

inline void require_right_half_plane(Complex z, const char* fn) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.real() > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be finite with re(z) > 0");
  }
}

}  // namespace detail

/// log(1 + u) without loss of relative accuracy for small |u|.
inline Complex log1p_complex(Complex u) {
  const double x = u.real();
  const double y = u.imag();
  return {0.5 * std::log1p(x * (2.0 + x) + y * y), std::atan2(y, 1.0 + x)};
}

/// Principal branch of log Gamma(z), analytic in re(z) > 0 (not log of the principal Gamma value).
inline Complex log_gamma(Complex z) {
  detail::require_right_half_plane(z, "log_gamma");
  Complex shifted_logs{0.0, 0.0};
  while (z.real() < detail::shift_threshold) {
    shifted_logs += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv;
  Complex series{0.0, 0.0};
  for (std::size_t k = 1; k <= detail::bernoulli.size(); ++k) {
    const double n = 2.0 * static_cast<double>(k);
    series += detail::bernoulli[k - 1] / (n * (n - 1.0)) * power;
    power *= inv2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series - shifted_logs;
}

inline double log_gamma(double x) { return log_gamma(Complex{x, 0.0}).real(); }

/// psi(z) = d/dz log Gamma(z).
inline Complex digamma(Complex z) {
  detail::require_right_half_plane(z, "digamma");
  Complex shifted{0.0, 0.0};
  while (z.real() < detail::shift_threshold) {
    shifted += 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2;
  Complex series{0.0, 0.0};
  for (std::size_t k = 1; k <= detail::bernoulli.size(); ++k) {
    series += detail::bernoulli[k - 1] / (2.0 * static_cast<double>(k)) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shifted;
}

inline double digamma(double x) { return digamma(Complex{x, 0.0}).real(); }

/// psi'(z).
inline Complex trigamma(Complex z) {
  detail::require_right_half_plane(z, "trigamma");
  Complex shifted{0.0, 0.0};
  while (z.real() < detail::shift_threshold) {
    shifted += 1.0 / (z * z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2 * inv;
  Complex series{0.0, 0.0};
  for (double b : detail::bernoulli) {
    series += b * power;
    power *= inv2;
  }
  return inv + 0.5 * inv2 + series + shifted;
}

inline double trigamma(double x) { return trigamma(Complex{x, 0.0}).real(); }

/// [psi(x) - psi(y)] / (x - y), evaluated without cancellation as y -> x.
///
/// Both the recurrence and the asymptotic series are differenced term by term,
/// so the result tends smoothly to trigamma(x) at x == y. Used wherever the
/// force formulas divide a digamma difference by the eigenfrequency splitting,
/// which vanishes at critical damping.
inline Complex digamma_divided_difference(Complex x, Complex y) {
  detail::require_right_half_plane(x, "digamma_divided_difference");
  detail::require_right_half_plane(y, "digamma_divided_difference");
  Complex shifted{0.0, 0.0};
  while (std::min(x.real(), y.real()) < detail::shift_threshold) {
    shifted += 1.0 / (x * y);
    x += 1.0;
    y += 1.0;
  }
  const Complex ix = 1.0 / x;
  const Complex iy = 1.0 / y;
  const Complex u = (x - y) * iy;
  // [log x - log y] / (x - y) = log1p(u) / (u y)
  const Complex log_part = (u == Complex{0.0, 0.0}) ? iy : log1p_complex(u) / u * iy;

  constexpr std::size_t max_power = 2 * detail::bernoulli.size();
  std::array<Complex, max_power + 1> px{};
  std::array<Complex, max_power + 1> py{};
  px[0] = py[0] = Complex{1.0, 0.0};
  for (std::size_t m = 1; m <= max_power; ++m) {
    px[m] = px[m - 1] * ix;
    py[m] = py[m - 1] * iy;
  }
  Complex series{0.0, 0.0};
  for (std::size_t k = 1; k <= detail::bernoulli.size(); ++k) {
    const std::size_t m = 2 * k;
    Complex inner{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) inner += px[j + 1] * py[m - j];
    series += detail::bernoulli[k - 1] / static_cast<double>(m) * inner;
  }
  return log_part + 0.5 * ix * iy + series + shifted;
}

}  // namespace oscforce::specfun
