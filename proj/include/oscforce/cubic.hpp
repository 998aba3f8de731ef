#pragma once

// Roots of the monic real cubic  p^3 + b p^2 + c p + d = 0.
//
// One real root is found first (Cardano when the discriminant is positive,
// the trigonometric form otherwise), polished by Newton, and the remaining
// pair is recovered from the Vieta relations with a cancellation-free
// quadratic. Every root is then polished on the undeflated polynomial.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace oscforce::cubic {

using Complex = std::complex<double>;

struct CubicRoots {
  /// The real root used as the deflation anchor.
  double anchor = 0.0;
  /// The remaining pair: complex conjugates (pair[0] with im > 0) or two reals (ascending).
  std::array<Complex, 2> pair{};
  bool pair_is_complex = false;
};

template <class T>
T evaluate(double b, double c, double d, T p) {
  return ((p + b) * p + c) * p + d;
}

template <class T>
T evaluate_derivative(double b, double c, T p) {
  return (3.0 * p + 2.0 * b) * p + c;
}

template <class T>
T newton_polish(double b, double c, double d, T p, int max_steps = 3) {
  auto residual = std::abs(evaluate(b, c, d, p));
  for (int step = 0; step < max_steps && residual > 0.0; ++step) {
    const T slope = evaluate_derivative(b, c, p);
    if (slope == T{}) break;
    const T next = p - evaluate(b, c, d, p) / slope;
    const auto next_residual = std::abs(evaluate(b, c, d, next));
    if (!(next_residual < residual)) break;
    p = next;
    residual = next_residual;
  }
  return p;
}

inline CubicRoots solve(double b, double c, double d) {
  // depressed form t^3 + P t + Q = 0 with p = t - b/3
  const double shift = b / 3.0;
  const double P = c - b * shift;
  const double Q = (2.0 * shift * shift - c) * shift + d;
  const double half_q = 0.5 * Q;
  const double third_p = P / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;

  double anchor = 0.0;
  if (disc > 0.0) {
    // one real root; pick the sign that avoids cancellation in -Q/2 +- sqrt(disc)
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(half_q >= 0.0 ? -half_q - sq : -half_q + sq);
    const double t = (u != 0.0) ? u - third_p / u : 0.0;
    anchor = t - shift;
  } else {
    // three real roots; use the one of largest magnitude
    const double r = (P < 0.0) ? 2.0 * std::sqrt(-third_p) : 0.0;
    double best = -shift;
    if (r > 0.0) {
      const double cos_arg = std::clamp(3.0 * Q / (P * r), -1.0, 1.0);
      const double phi = std::acos(cos_arg) / 3.0;
      double best_abs = -1.0;
      for (int k = 0; k < 3; ++k) {
        const double root = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift;
        if (std::abs(root) > best_abs) {
          best_abs = std::abs(root);
          best = root;
        }
      }
    }
    anchor = best;
  }
  anchor = newton_polish(b, c, d, anchor);

  // remaining pair: p^2 - S p + R = 0
  const double product = (anchor != 0.0) ? -d / anchor : 0.0;
  double sum = 0.0;
  if (anchor != 0.0 && std::abs(anchor) > 0.5 * std::abs(b)) {
    sum = (c - product) / anchor;
  } else {
    sum = -b - anchor;
  }

  CubicRoots out;
  out.anchor = anchor;
  const double quad_disc = sum * sum - 4.0 * product;
  if (quad_disc < 0.0) {
    const double re = 0.5 * sum;
    const double im = 0.5 * std::sqrt(-quad_disc);
    Complex upper = newton_polish(b, c, d, Complex{re, im});
    if (upper.imag() < 0.0) upper = std::conj(upper);
    out.pair = {upper, std::conj(upper)};
    out.pair_is_complex = true;
  } else {
    const double q = 0.5 * (sum + std::copysign(std::sqrt(quad_disc), sum));
    double r1 = q;
    double r2 = (q != 0.0) ? product / q : 0.0;
    r1 = newton_polish(b, c, d, r1);
    r2 = newton_polish(b, c, d, r2);
    if (r1 > r2) std::swap(r1, r2);
    out.pair = {Complex{r1, 0.0}, Complex{r2, 0.0}};
  }
  return out;
}

}  // namespace oscforce::cubic
