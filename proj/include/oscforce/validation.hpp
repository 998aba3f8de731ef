#pragma once

// Validation batteries: closed forms against the Matsubara and finite-difference
// oracles, asymptotic slopes, circuit identities and the quoted relative weights.
// Shared by `oscforce validate` and the acceptance binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oscforce/circuits.hpp"
#include "oscforce/errors.hpp"
#include "oscforce/forces.hpp"
#include "oscforce/matsubara.hpp"
#include "oscforce/oscillator.hpp"
#include "oscforce/units.hpp"

namespace oscforce::validation {

struct Check {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst residual, or the measured quantity
  double bound = 0.0;  // what it was compared against
  std::string detail;
  double seconds = 0.0;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  [[nodiscard]] std::string to_text() const {
    std::string out;
    char line[512];
    for (const auto& c : checks) {
      std::snprintf(line, sizeof line, "%s %s/%s worst=%.3e bound=%.3e time=%.2fs%s%s\n", c.passed ? "PASS" : "FAIL",
                    suite.c_str(), c.name.c_str(), c.worst, c.bound, c.seconds, c.detail.empty() ? "" : " ",
                    c.detail.c_str());
      out += line;
    }
    std::snprintf(line, sizeof line, "%s %s\n", passed() ? "PASS" : "FAIL", suite.c_str());
    out += line;
    return out;
  }
};

namespace detail {

inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

/// Times `body`, which fills in the check.
inline Check timed(const std::string& name, const std::function<void(Check&)>& body) {
  Check c;
  c.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, i / static_cast<double>(n - 1)));
  return out;
}

inline OscillatorParams ohmic(double omega, double gamma, double T) {
  OscillatorParams p;
  p.omega0 = omega;
  p.damping = OhmicDamping{gamma};
  p.temperature = T;
  return p;
}

inline OscillatorParams drude(double omega, double g0, double wd, double T) {
  OscillatorParams p;
  p.omega0 = omega;
  p.damping = DrudeDamping{g0, wd};
  p.temperature = T;
  return p;
}

}  // namespace detail

// ---------------------------------------------------------------- random grids

struct OhmicCase {
  OscillatorParams params;
  double d_omega = 0.0;
};

/// Omega in [0.1, 10], gamma in [0, 20], T log-uniform in [0.01, 100], Omega' = +-[0.1, 2].
inline std::vector<OhmicCase> ohmic_grid(std::size_t count = 200, std::uint64_t seed = 20240601) {
  detail::Sampler s(seed);
  std::vector<OhmicCase> out;
  for (std::size_t k = 0; k < count; ++k) {
    OhmicCase c;
    c.params = detail::ohmic(s.uniform(0.1, 10.0), s.uniform(0.0, 20.0), s.log_uniform(0.01, 100.0));
    c.d_omega = s.sign() * s.uniform(0.1, 2.0);
    out.push_back(c);
  }
  return out;
}

struct DrudeCase {
  OscillatorParams params;
  Derivatives derivatives;
};

/// Omega in [0.1, 10], gamma0 in [0, 10], omega_D / max(Omega, gamma0) log-uniform in [10, 1e4],
/// T log-uniform in [0.01, 100]; each derivative is +-[0.2, 1] times its parameter.
inline std::vector<DrudeCase> drude_grid(std::size_t count = 50, std::uint64_t seed = 20240602) {
  detail::Sampler s(seed);
  std::vector<DrudeCase> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double w = s.uniform(0.1, 10.0);
    const double g0 = s.uniform(0.0, 10.0);
    const double wd = s.log_uniform(10.0, 1e4) * std::max(w, g0);
    DrudeCase c;
    c.params = detail::drude(w, g0, wd, s.log_uniform(0.01, 100.0));
    c.derivatives.d_omega = s.sign() * s.uniform(0.2, 1.0) * w;
    c.derivatives.d_gamma0 = s.sign() * s.uniform(0.2, 1.0) * std::max(g0, 0.1);
    c.derivatives.d_omega_d = s.sign() * s.uniform(0.2, 1.0) * wd;
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------- individual checks

/// Closed-form Ohmic force against the truncated Matsubara sum with tail.
inline Check ohmic_oracle_equivalence(std::size_t cases = 200, std::size_t n_max = 100000) {
  return detail::timed("ohmic-oracle-equivalence", [&](Check& c) {
    matsubara::SumSpec spec;
    spec.n_max = n_max;
    c.passed = true;
    double worst_ratio = 0.0;
    for (const auto& k : ohmic_grid(cases)) {
      const auto oracle = matsubara::force_sum_exact(k.params, {k.d_omega, 0.0, 0.0}, spec);
      const double closed = force_ohmic_exact(k.params, k.d_omega).value;
      const double allowed = std::max(1e-8, 2.0 * oracle.truncation_estimate);
      const double diff = std::abs(closed - oracle.value);
      worst_ratio = std::max(worst_ratio, diff / allowed);
      if (diff > allowed) c.passed = false;
    }
    c.worst = worst_ratio;
    c.bound = 1.0;
    c.detail = "residual / max(1e-8, 2 truncation_estimate)";
  });
}

/// Drude force against Richardson differences of the Gamma free energy along a linear path.
inline Check drude_fd_equivalence(std::size_t cases = 50, double tolerance = 1e-5) {
  return detail::timed("drude-fd-equivalence", [&](Check& c) {
    c.passed = true;
    for (const auto& k : drude_grid(cases)) {
      const auto& d0 = std::get<DrudeDamping>(k.params.damping);
      const Derivatives& d = k.derivatives;
      auto at = [&](double l) {
        auto p = k.params;
        p.omega0 += d.d_omega * (l - 1.0);
        p.damping = DrudeDamping{d0.gamma0 + d.d_gamma0 * (l - 1.0), d0.omega_d + d.d_omega_d * (l - 1.0)};
        return p;
      };
      auto F = [&](double l) { return free_energy_drude_gamma(at(l)).value; };
      const double fd = matsubara::finite_difference_force(F, 1.0, 1e-3).value;
      const double closed = force_drude_full(k.params, d).value;
      const double e = detail::rel(closed, fd);
      c.worst = std::max(c.worst, e);
    }
    c.bound = tolerance;
    c.passed = c.worst <= tolerance;
  });
}

/// Gamma-function free energy against the product over Matsubara frequencies.
inline Check gamma_vs_product(std::size_t cases = 20, std::size_t n_max = 1000000, double tolerance = 1e-8) {
  return detail::timed("gamma-vs-product", [&](Check& c) {
    matsubara::SumSpec spec;
    spec.n_max = n_max;
    for (const auto& k : drude_grid(cases, 20240603)) {
      const double closed = free_energy_drude_gamma(k.params).value;
      const double product = matsubara::free_energy_drude(k.params, spec).value;
      c.worst = std::max(c.worst, detail::rel(closed, product));
    }
    c.bound = tolerance;
    c.passed = c.worst <= tolerance;
  });
}

/// r_T for plates at d^2/S = 0.04 and 2.5e-3.
inline Check planar_reference_values() {
  return detail::timed("planar-relative-weight", [](Check& c) {
    using namespace circuits;
    const double hi = relative_weight(PlanarCapacitor{1.0, std::sqrt(0.04), 1.0}, ThermalRegime::high_t);
    const double lo = relative_weight(PlanarCapacitor{1.0, std::sqrt(2.5e-3), 1.0}, ThermalRegime::high_t);
    c.passed = std::abs(hi - 0.42) <= 0.02 && std::abs(lo - 0.03) <= 0.01;
    c.worst = std::max(std::abs(hi - 0.42) / 0.02, std::abs(lo - 0.03) / 0.01);
    c.bound = 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "r(0.04)=%.4f r(2.5e-3)=%.4f", hi, lo);
    c.detail = buf;
  });
}

/// r_T for sphere-plate at d/R = 0.75 and 0.035.
inline Check sphere_plate_reference_values() {
  return detail::timed("sphere-plate-relative-weight", [](Check& c) {
    using namespace circuits;
    const double hi = relative_weight(SpherePlate{1.0, 0.75}, ThermalRegime::high_t);
    const double lo = relative_weight(SpherePlate{1.0, 0.035}, ThermalRegime::high_t);
    c.passed = std::abs(hi - 0.50) <= 0.02 && std::abs(lo - 0.02) <= 0.005;
    c.worst = std::max(std::abs(hi - 0.50) / 0.02, std::abs(lo - 0.02) / 0.005);
    c.bound = 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "r(0.75)=%.4f r(0.035)=%.4f", hi, lo);
    c.detail = buf;
  });
}

/// gamma = 1e-6 Omega, T = 1e-4 Omega: f -> -Omega'/2.
inline Check zero_point_limit() {
  return detail::timed("zero-point-limit", [](Check& c) {
    for (double w : {0.1, 1.0, 10.0}) {
      for (double dw : {-1.5, 0.3, 2.0}) {
        const double f = force_ohmic_exact(detail::ohmic(w, 1e-6 * w, 1e-4 * w), dw).value;
        c.worst = std::max(c.worst, detail::rel(f, -0.5 * dw));
      }
    }
    c.bound = 1e-3;
    c.passed = c.worst <= c.bound;
  });
}

/// Log-log slope of |high-T - exact| over T/Omega in [10, 1e4]; the worst (largest) slope is reported.
inline Check high_t_slope() {
  return detail::timed("high-T-error-slope", [](Check& c) {
    c.worst = -INFINITY;
    for (double g : {0.0, 0.3, 1.0}) {
      const auto T = detail::log_grid(10.0, 1e4, 16);
      std::vector<double> err;
      for (double t : T) {
        const auto p = detail::ohmic(1.0, g, t);
        err.push_back(std::abs(force_ohmic_high_t(p, 1.0).value - force_ohmic_exact(p, 1.0).value));
      }
      c.worst = std::max(c.worst, detail::slope(T, err));
    }
    c.bound = -1.8;
    c.passed = c.worst <= c.bound;
  });
}

/// Log-log slope of |low-T - exact| against x = scale/T over T/scale in [1e-4, 1e-1], scale the
/// slowest relaxation rate; decay means a negative slope.
inline Check low_t_slope() {
  return detail::timed("low-T-error-slope", [](Check& c) {
    c.worst = -INFINITY;
    for (double g : {0.3, 2.5, 10.0}) {
      const auto e = eigenfrequencies_ohmic(1.0, g);
      const double scale = std::min(std::abs(e.rate(1)), std::abs(e.rate(2)));
      const auto ratio = detail::log_grid(1e-4, 1e-1, 16);
      std::vector<double> x, err;
      for (double r : ratio) {
        const auto p = detail::ohmic(1.0, g, r * scale);
        x.push_back(1.0 / r);
        err.push_back(std::abs(force_ohmic_low_t(p, 1.0).value - force_ohmic_exact(p, 1.0).value));
      }
      c.worst = std::max(c.worst, detail::slope(x, err));
    }
    c.bound = -0.9;
    c.passed = c.worst <= c.bound;
  });
}

/// Omega' > 0 gives attraction (f < 0), Omega' < 0 repulsion, per operation inside its guards.
inline Check sign_laws() {
  return detail::timed("sign-laws", [](Check& c) {
    std::size_t violations = 0;
    std::size_t checked = 0;
    auto expect = [&](double f, double d) {
      ++checked;
      if (!(f * d < 0.0)) ++violations;
    };
    for (const auto& k : ohmic_grid()) {
      for (double s : {1.0, -1.0}) {
        const double d = s * k.d_omega;
        expect(force_ohmic_exact(k.params, d).value, d);
        expect(force_ohmic_low_t(k.params, d).value, d);
        expect(force_ohmic_high_t(k.params, d).value, d);
        expect(force_difference_tilde(k.params, {d, 0.0, 0.0}).value, d);
        const auto weak = force_ohmic_weak_dissipation(k.params, d);
        if (!weak.warnings.has(Warning::weak_dissipation_guard)) expect(weak.value, d);
      }
    }
    for (const auto& k : drude_grid()) {
      for (int which = 0; which < 3; ++which) {
        for (double s : {1.0, -1.0}) {
          Derivatives d;
          double& slot = which == 0 ? d.d_omega : which == 1 ? d.d_gamma0 : d.d_omega_d;
          slot = s * std::abs(which == 0 ? k.derivatives.d_omega
                              : which == 1 ? k.derivatives.d_gamma0
                                           : k.derivatives.d_omega_d);
          expect(force_drude_full(k.params, d).value, slot);
          expect(force_drude_low_t(k.params, d).value, slot);
          const auto hot = force_drude_high_t(k.params, d);
          if (!hot.warnings.has(Warning::high_t_guard)) expect(hot.value, slot);
          const auto very = force_drude_very_high_t(k.params, d);
          if (!very.warnings.has(Warning::very_high_t_guard)) expect(very.value, slot);
        }
      }
    }
    c.worst = static_cast<double>(violations);
    c.bound = 0.0;
    c.passed = violations == 0;
    c.detail = std::to_string(checked) + " signs checked";
  });
}

/// Vieta relations of the exact cubic roots to 1e-12 and dispersion residuals to 1e-10, relative.
inline Check vieta_residuals(std::size_t cases = 10000) {
  return detail::timed("vieta-residuals", [&](Check& c) {
    detail::Sampler s(20240604);
    const Complex i{0.0, 1.0};
    double worst_vieta = 0.0;
    double worst_poly = 0.0;
    for (std::size_t k = 0; k < cases; ++k) {
      const double w = s.uniform(0.1, 10.0);
      const double g0 = s.uniform(0.0, 10.0) * w;
      const double wd = s.log_uniform(1.0, 1e4) * std::max(w, g0);
      const auto p = detail::drude(w, g0, wd, 1.0);
      const auto e = eigenfrequencies_drude_exact(p);
      const Complex a = e.omega1, b = e.omega2, cc = *e.omega3;
      const double e2 = w * w + g0 * wd;
      worst_vieta = std::max({worst_vieta, std::abs(a + b + cc + i * wd) / wd,
                              std::abs(a * b + a * cc + b * cc + e2) / e2,
                              std::abs(a * b * cc - i * w * w * wd) / (w * w * wd)});
      for (Complex r : {a, b, cc}) {
        const Complex poly = r * r * r + i * wd * r * r - e2 * r - i * w * w * wd;
        // scale: the largest monomial at this root
        const double scale = std::max({std::abs(r * r * r), wd * std::abs(r * r), e2 * std::abs(r), w * w * wd});
        worst_poly = std::max(worst_poly, std::abs(poly) / scale);
      }
    }
    c.worst = std::max(worst_vieta / 1e-12, worst_poly / 1e-10);
    c.bound = 1.0;
    c.passed = c.worst <= 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "vieta=%.2e polish=%.2e", worst_vieta, worst_poly);
    c.detail = buf;
  });
}

/// Jump of the exact Ohmic force across gamma = 2 Omega (1 +- 1e-6).
inline Check critical_continuity(std::size_t pairs = 20) {
  return detail::timed("critical-damping-continuity", [&](Check& c) {
    detail::Sampler s(20240605);
    for (std::size_t k = 0; k < pairs; ++k) {
      const double w = s.uniform(0.1, 10.0);
      const double T = s.log_uniform(0.01, 100.0);
      const double below = force_ohmic_exact(detail::ohmic(w, 2.0 * w * (1.0 - 1e-6), T), 1.0).value;
      const double above = force_ohmic_exact(detail::ohmic(w, 2.0 * w * (1.0 + 1e-6), T), 1.0).value;
      const double at = force_ohmic_exact(detail::ohmic(w, 2.0 * w, T), 1.0).value;
      c.worst = std::max({c.worst, detail::rel(below, above), detail::rel(below, at), detail::rel(above, at)});
    }
    c.bound = 1e-6;
    c.passed = c.worst <= c.bound;
  });
}

/// Drude limits against the full expression inside their windows.
inline Check drude_limits() {
  return detail::timed("drude-limits", [](Check& c) {
    const Derivatives d{0.7, 0.2, 30.0};
    const double low = detail::rel(force_drude_low_t(detail::drude(1.0, 0.3, 300.0, 1e-5), d).value,
                                   force_drude_full(detail::drude(1.0, 0.3, 300.0, 1e-5), d).value);
    const double high = detail::rel(force_drude_high_t(detail::drude(1.0, 0.3, 1e4, 100.0), d).value,
                                    force_drude_full(detail::drude(1.0, 0.3, 1e4, 100.0), d).value);
    const double very = detail::rel(force_drude_very_high_t(detail::drude(1.0, 0.3, 50.0, 5000.0), d).value,
                                    force_drude_full(detail::drude(1.0, 0.3, 50.0, 5000.0), d).value);
    const double ohm = detail::rel(force_drude_full(detail::drude(1.0, 0.4, 1e6, 0.5), {1.0, 0.0, 0.0}).value,
                                   force_ohmic_exact(detail::ohmic(1.0, 0.4, 0.5), 1.0).value);
    c.worst = std::max({low / 1e-3, high / 1e-2, very / 1e-3, ohm / 1e-4});
    c.bound = 1.0;
    c.passed = c.worst <= 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "low=%.1e high=%.1e very-high=%.1e ohmic-limit=%.1e", low, high, very, ohm);
    c.detail = buf;
  });
}

/// Circuit force = oscillator force composed with the element mapping.
inline Check circuit_composition() {
  return detail::timed("circuit-composition", [](Check& c) {
    using namespace circuits;
    detail::Sampler s(20240606);
    for (int k = 0; k < 200; ++k) {
      SeriesRLC sc{s.uniform(0.0, 5.0), s.log_uniform(0.1, 10.0), s.log_uniform(0.1, 10.0)};
      sc.d_capacitance = s.uniform(-2.0, 2.0);
      ParallelRLC pc{s.log_uniform(0.05, 50.0), s.log_uniform(0.1, 10.0), s.log_uniform(0.1, 10.0)};
      pc.d_inductance = s.uniform(-2.0, 2.0);
      const double T = s.log_uniform(0.01, 100.0);
      const auto ms = map_series(sc, T);
      const auto mp = map_parallel(pc, T);
      c.worst = std::max({c.worst,
                          detail::rel(force_series_rlc(sc, T).value,
                                      force_ohmic_exact(ms.params, ms.derivatives.d_omega).value),
                          detail::rel(force_parallel_rlc(pc, T).value,
                                      force_ohmic_exact(mp.params, mp.derivatives.d_omega).value)});
    }
    c.bound = 1e-14;
    c.passed = c.worst <= c.bound;
  });
}

/// Planar LC closed forms at weak and strong dissipation against the exact route, T 1e-4 below threshold.
inline Check planar_low_t_regressions() {
  return detail::timed("planar-low-T-closed-forms", [](Check& c) {
    using namespace circuits;
    const double pi = std::numbers::pi;
    for (double area : {1e-6, 1e-4}) {
      for (double gap : {1e-7, 1e-6}) {
        const PlanarCapacitor g{area, gap, 1.0};
        const double L = 1e-9;
        const auto cap = capacitance_planar(g);
        const double w = circuit_frequency(g, L);
        const double weak_R = 1e-3 * w * L;
        const double strong_R = 1e3 * w * L;
        const double weak = si::force_to_si(
            force_series_rlc(series_with_capacitor(cap, L, weak_R), 1e-4 * w / (2.0 * pi)).value);
        const double strong = si::force_to_si(
            force_series_rlc(series_with_capacitor(cap, L, strong_R), 1e-4 / (2.0 * pi * strong_R * cap.value))
                .value);
        c.worst = std::max({c.worst, detail::rel(planar_force_weak_low_t(g, L, weak_R), weak),
                            detail::rel(planar_force_strong_low_t(g, L, strong_R), strong)});
      }
    }
    c.bound = 1e-2;
    c.passed = c.worst <= c.bound;
  });
}

/// Closed-form relative weights against the quotient of the two force computations on 20-point grids.
inline Check relative_weight_quotients() {
  return detail::timed("relative-weight-quotients", [](Check& c) {
    using namespace circuits;
    const double L = 1e-6;
    const auto grid = detail::log_grid(0.035, 0.75, 20);
    const auto aspects = detail::log_grid(2.5e-3, 0.04, 20);
    for (int i = 0; i < 20; ++i) {
      const SpherePlate sp{1e-3, grid[i] * 1e-3};
      const PlanarCapacitor pc{1e-4, std::sqrt(aspects[i] * 1e-4), 1.0};
      for (const Geometry& g : {Geometry{sp}, Geometry{pc}}) {
        c.worst = std::max(
            {c.worst,
             detail::rel(relative_weight_quotient(g, L, 300.0, ThermalRegime::high_t),
                         relative_weight(g, ThermalRegime::high_t)),
             detail::rel(relative_weight_quotient(g, L, 0.0, ThermalRegime::low_t),
                         relative_weight(g, ThermalRegime::low_t, circuit_frequency(g, L)))});
      }
    }
    c.bound = 1e-3;
    c.passed = c.worst <= c.bound;
  });
}

/// SI -> reduced -> SI for forces, energies and temperatures.
inline Check unit_round_trip() {
  return detail::timed("unit-round-trip", [](Check& c) {
    detail::Sampler s(20240607);
    for (int k = 0; k < 1000; ++k) {
      const double x = s.log_uniform(1e-30, 1e30);
      c.worst = std::max({c.worst, detail::rel(si::force_to_si(si::force_from_si(x)), x),
                          detail::rel(si::energy_to_si(si::energy_from_si(x)), x),
                          detail::rel(si::temperature_from_reduced(si::temperature_to_reduced(x)), x)});
    }
    c.bound = 1e-12;
    c.passed = c.worst <= c.bound;
  });
}

// ---------------------------------------------------------------- suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ohmic-oracle", "drude-fd", "asymptotics", "circuits", "reference-values"};
  return names;
}

/// Runs a named suite; `n_max` overrides the Matsubara cutoff of the oracle checks.
inline Report run_suite(const std::string& name, std::optional<std::size_t> n_max = std::nullopt) {
  Report r;
  r.suite = name;
  if (name == "ohmic-oracle") {
    r.checks.push_back(ohmic_oracle_equivalence(200, n_max.value_or(100000)));
    r.checks.push_back(sign_laws());
  } else if (name == "drude-fd") {
    r.checks.push_back(drude_fd_equivalence());
    r.checks.push_back(gamma_vs_product(20, n_max.value_or(1000000)));
    r.checks.push_back(vieta_residuals());
  } else if (name == "asymptotics") {
    r.checks.push_back(zero_point_limit());
    r.checks.push_back(high_t_slope());
    r.checks.push_back(low_t_slope());
    r.checks.push_back(critical_continuity());
    r.checks.push_back(drude_limits());
  } else if (name == "circuits") {
    r.checks.push_back(circuit_composition());
    r.checks.push_back(planar_low_t_regressions());
    r.checks.push_back(relative_weight_quotients());
    r.checks.push_back(unit_round_trip());
  } else if (name == "reference-values") {
    r.checks.push_back(planar_reference_values());
    r.checks.push_back(sphere_plate_reference_values());
  } else {
    throw ConfigError("unknown validation suite '" + name + "'");
  }
  return r;
}

}  // namespace oscforce::validation
