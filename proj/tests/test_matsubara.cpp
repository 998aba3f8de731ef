#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oscforce/forces.hpp"
#include "oscforce/matsubara.hpp"
#include "test_support.hpp"

using namespace oscforce;
using namespace oscforce::matsubara;
using testing_support::Gen;
using testing_support::rel_err;

namespace {

OscillatorParams ohmic(double omega, double gamma, double T) {
  OscillatorParams p;
  p.omega0 = omega;
  p.damping = OhmicDamping{gamma};
  p.temperature = T;
  return p;
}

OscillatorParams drude(double omega, double g0, double wd, double T) {
  OscillatorParams p;
  p.omega0 = omega;
  p.damping = DrudeDamping{g0, wd};
  p.temperature = T;
  return p;
}

SumSpec with_n_max(std::size_t n, Tail tail = Tail::integral) {
  SumSpec s;
  s.n_max = n;
  s.tail = tail;
  return s;
}

}  // namespace

TEST(ForceSumExact, ZeroDerivativesGiveZero) {
  const auto r = force_sum_exact(drude(1.0, 0.3, 100.0, 0.2), {});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_GE(r.truncation_estimate, 0.0);
  EXPECT_EQ(force_sum_exact(ohmic(1.0, 0.3, 0.2), {}).value, 0.0);
}

TEST(ForceSumExact, HighPrecisionFixtures) {
  // tests/fixtures/gen_fixtures.py
  const auto a = force_sum_exact(ohmic(1.0, 0.5, 0.25), {1.0, 0.0, 0.0}, with_n_max(1'000'000));
  EXPECT_NEAR(a.value, -0.48186691753376335368, std::max(1e-14, 2.0 * a.truncation_estimate));
  const auto b = force_sum_exact(ohmic(3.0, 10.0, 0.05), {1.0, 0.0, 0.0}, with_n_max(1'000'000));
  EXPECT_NEAR(b.value, -0.26323471875028125886, std::max(1e-14, 2.0 * b.truncation_estimate));
  EXPECT_EQ(a.n_used, 1'000'000u);
}

TEST(ForceSumExact, OhmicGammaDerivativeDiverges) {
  EXPECT_THROW(force_sum_exact(ohmic(1.0, 0.5, 0.25), {0.0, 1.0, 0.0}), DivergentSum);
  EXPECT_NO_THROW(force_sum_exact(drude(1.0, 0.5, 100.0, 0.25), {0.0, 1.0, 0.0}));
}

TEST(ForceSumExact, NeedsPositiveTemperature) {
  EXPECT_THROW(force_sum_exact(ohmic(1.0, 0.5, 0.0), {1.0, 0.0, 0.0}), DomainError);
}

TEST(ForceSumExact, ParametricOverloadMatches) {
  const auto m = ParametricModel::power_law(1.0, 2.0, -1.5, 0.4, 1.0, 300.0, 0.5);
  const double l = 1.3;
  const auto a = force_sum_exact(m, l, 0.3);
  const auto b = force_sum_exact(m.at(l, 0.3), m.derivatives_at(l));
  EXPECT_EQ(a.value, b.value);
}

TEST(ForceSumExact, DoublingNMaxStaysWithinEstimate) {
  Gen gen(31);
  for (int k = 0; k < 100; ++k) {
    const bool use_drude = k % 2 == 1;
    const double w = gen.log_uniform(0.1, 10.0);
    const double g = gen.uniform(0.0, 5.0);
    const double T = gen.log_uniform(0.05, 10.0);
    const auto p = use_drude ? drude(w, g, gen.log_uniform(10.0, 1000.0) * std::max(w, g), T) : ohmic(w, g, T);
    const Derivatives d{gen.uniform(-1.0, 1.0), use_drude ? gen.uniform(-1.0, 1.0) : 0.0,
                        use_drude ? gen.uniform(-10.0, 10.0) : 0.0};
    const auto a = force_sum_exact(p, d, with_n_max(20'000));
    const auto b = force_sum_exact(p, d, with_n_max(40'000));
    EXPECT_LE(std::abs(a.value - b.value), a.truncation_estimate + b.truncation_estimate) << k;
  }
}

TEST(ForceSumExact, UntailedConvergenceIsFirstOrder) {
  const auto p = ohmic(1.0, 0.7, 0.4);
  const Derivatives d{1.0, 0.0, 0.0};
  std::vector<double> n;
  std::vector<double> diff;
  for (std::size_t m : {250u, 500u, 1000u, 2000u, 4000u}) {
    const double a = force_sum_exact(p, d, with_n_max(m, Tail::none)).value;
    const double b = force_sum_exact(p, d, with_n_max(4 * m, Tail::none)).value;
    n.push_back(static_cast<double>(m));
    diff.push_back(std::abs(a - b));
  }
  EXPECT_NEAR(testing_support::log_log_slope(n, diff), -1.0, 0.1);
}

TEST(ForceSumExact, TailBeatsTruncation) {
  const auto p = ohmic(1.0, 0.7, 0.4);
  const Derivatives d{1.0, 0.0, 0.0};
  const double ref = force_ohmic_exact(p, 1.0).value;
  const auto bare = force_sum_exact(p, d, with_n_max(1000, Tail::none));
  const auto tailed = force_sum_exact(p, d, with_n_max(1000));
  EXPECT_LT(std::abs(tailed.value - ref), 1e-6 * std::abs(bare.value - ref));
  EXPECT_GE(bare.truncation_estimate, 0.5 * std::abs(bare.value - ref));
  // the closed form carries its own few-ulp error
  EXPECT_LE(std::abs(tailed.value - ref), 2.0 * tailed.truncation_estimate + 1e-14 * std::abs(ref));
}

TEST(ForceSumExact, DrudeOmegaOnlyEqualsFrozenOhmicPerTerm) {
  Gen gen(41);
  for (int k = 0; k < 20; ++k) {
    const double w = gen.uniform(0.2, 5.0);
    const double g0 = gen.uniform(0.0, 3.0);
    const double wd = gen.uniform(5.0, 500.0);
    const double T = gen.uniform(0.05, 3.0);
    const auto p = drude(w, g0, wd, T);
    const Derivatives d{gen.uniform(-2.0, 2.0), 0.0, 0.0};
    const double spacing = 2.0 * std::numbers::pi * T;
    for (int n : {0, 1, 7, 100}) {
      const double omega_n = spacing * n;
      const auto frozen = ohmic(w, damping_at_matsubara(p, omega_n), T);
      EXPECT_EQ(force_term(p, d, omega_n), force_term(frozen, d, omega_n));
    }
  }
}

TEST(FreeEnergyDifference, IdenticalStatesGiveZero) {
  const auto p = ohmic(1.3, 0.4, 0.2);
  EXPECT_EQ(free_energy_difference(p, p).value, 0.0);
}

TEST(FreeEnergyDifference, Antisymmetric) {
  Gen gen(17);
  for (int k = 0; k < 50; ++k) {
    const double g = gen.uniform(0.0, 5.0);
    const double T = gen.log_uniform(0.05, 10.0);
    const auto a = ohmic(gen.uniform(0.2, 5.0), g, T);
    const auto b = ohmic(gen.uniform(0.2, 5.0), g, T);
    EXPECT_LE(std::abs(free_energy_difference(a, b).value + free_energy_difference(b, a).value), 1e-14);
  }
}

TEST(FreeEnergyDifference, MatchesGammaFunctionClosedForm) {
  Gen gen(18);
  for (int k = 0; k < 10; ++k) {
    const double g = gen.uniform(0.0, 5.0);
    const double T = gen.log_uniform(0.1, 5.0);
    const auto a = ohmic(gen.uniform(0.2, 5.0), g, T);
    const auto b = ohmic(gen.uniform(0.2, 5.0), g, T);
    const auto sum = free_energy_difference(a, b, with_n_max(1'000'000));
    const auto closed = free_energy_difference_gamma(a, b);
    EXPECT_LE(rel_err(sum.value, closed.value), 1e-8) << k;
  }
}

TEST(FreeEnergyDifference, ClassicalLimit) {
  const auto r = free_energy_difference(ohmic(1.0, 0.0, 100.0), ohmic(2.0, 0.0, 100.0));
  EXPECT_LE(rel_err(r.value, 100.0 * std::log(2.0)), 1e-4);
}

TEST(FreeEnergyDifference, RejectsMismatchedDamping) {
  EXPECT_THROW(free_energy_difference(ohmic(1.0, 0.1, 1.0), ohmic(2.0, 0.2, 1.0)), PreconditionViolation);
  EXPECT_THROW(free_energy_difference(ohmic(1.0, 0.1, 1.0), ohmic(2.0, 0.1, 2.0)), PreconditionViolation);
  EXPECT_THROW(free_energy_difference(ohmic(1.0, 0.1, 1.0), drude(2.0, 0.1, 10.0, 1.0)), PreconditionViolation);
}

TEST(FreeEnergyDrude, HighPrecisionFixture) {
  // tests/fixtures/gen_fixtures.py: direct product with the exact damping function
  const auto p = drude(1.0, 0.3, 300.0, 0.5);
  const double want = 0.66452695096837041411;
  EXPECT_LE(rel_err(free_energy_direct(p, with_n_max(1'000'000)).value, want), 1e-12);
  EXPECT_LE(rel_err(free_energy_drude(p, with_n_max(1'000'000), RootMethod::exact_cubic).value, want), 1e-12);
}

TEST(FreeEnergyDrude, ProductMatchesGammaClosedForm) {
  for (RootMethod roots : {RootMethod::approximate, RootMethod::exact_cubic}) {
    for (double T : {0.05, 0.5, 5.0}) {
      const auto p = drude(1.0, 0.3, 300.0, T);
      EXPECT_LE(rel_err(free_energy_drude(p, {}, roots).value, free_energy_drude_gamma(p, roots).value), 1e-8);
    }
  }
}

TEST(FreeEnergyDrude, UndampedLimitForce) {
  // gamma0 -> 0: f -> -(1/2) coth(Omega/2T) Omega'
  const double T = 0.4;
  auto F = [&](double l) { return free_energy_drude(drude(l, 1e-9, 500.0, T)).value; };
  const auto f = finite_difference_force(F, 1.2);
  EXPECT_LE(rel_err(f.value, -0.5 / std::tanh(1.2 / (2.0 * T))), 1e-6);
}

TEST(FreeEnergyDrude, ClassicalLeadingTerm) {
  const auto p = drude(1.0, 0.3, 2.0, 1e4);
  EXPECT_LE(rel_err(free_energy_drude(p).value, 1e4 * std::log(1e-4)), 1e-4);
}

TEST(FiniteDifference, QuadraticIsExact) {
  auto F = [](double x) { return 3.0 * x * x - 2.0 * x + 7.0; };
  const auto r = finite_difference_force(F, 1.5);
  EXPECT_NEAR(r.value, -(6.0 * 1.5 - 2.0), 1e-9);
}

TEST(FiniteDifference, CentralDifferenceIsSecondOrder) {
  auto F = [](double x) { return std::sin(x) * std::exp(x); };
  const double x = 0.8;
  const double exact = -(std::cos(x) + std::sin(x)) * std::exp(x);
  const double e1 = std::abs(central_difference_force(F, x, 1e-2) - exact);
  const double e2 = std::abs(central_difference_force(F, x, 5e-3) - exact);
  EXPECT_NEAR(e1 / e2, 4.0, 0.05);
}

TEST(FiniteDifference, DrudeFreeEnergyMatchesFullForce) {
  const auto base = drude(1.0, 0.3, 300.0, 0.5);
  const Derivatives d{0.7, 0.2, 30.0};
  auto at = [&](double l) {
    return drude(1.0 + d.d_omega * (l - 1.0), 0.3 + d.d_gamma0 * (l - 1.0), 300.0 + d.d_omega_d * (l - 1.0), 0.5);
  };
  const auto fd = finite_difference_force([&](double l) { return free_energy_drude(at(l)).value; }, 1.0);
  const auto full = force_drude_full(base, d);
  EXPECT_LE(rel_err(fd.value, full.value), 1e-5);
}

TEST(PerParameterSums, ZeroDerivativesGiveZeros) {
  const auto parts = per_parameter_sums_drude(drude(1.0, 0.3, 100.0, 0.3), {});
  EXPECT_EQ(parts.f_omega.value, 0.0);
  EXPECT_EQ(parts.f_gamma0.value, 0.0);
  EXPECT_EQ(parts.f_omega_d1.value, 0.0);
  EXPECT_EQ(parts.f_omega_d2.value, 0.0);
}

TEST(PerParameterSums, TotalEqualsDirectSum) {
  Gen gen(23);
  for (int k = 0; k < 20; ++k) {
    const double w = gen.uniform(0.2, 5.0);
    const double g0 = gen.uniform(0.0, 3.0);
    const auto p = drude(w, g0, gen.log_uniform(10.0, 1e3) * std::max(w, g0), gen.log_uniform(0.05, 5.0));
    const Derivatives d{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0), gen.uniform(-10.0, 10.0)};
    const auto parts = per_parameter_sums_drude(p, d);
    const auto direct = force_sum_exact(p, d);
    EXPECT_LE(rel_err(parts.total(), direct.value), 1e-10) << k;
  }
}

TEST(PerParameterSums, SecondCutoffTermSmallAtLowTemperature) {
  const auto parts = per_parameter_sums_drude(drude(1.0, 0.3, 1000.0, 0.05), {0.0, 0.0, 1.0});
  EXPECT_LT(std::abs(parts.f_omega_d2.value), std::abs(parts.f_omega_d1.value));
}

TEST(SumSpec, AutomaticScalesWithInverseTemperature) {
  const auto hot = SumSpec::automatic(drude(1.0, 0.3, 100.0, 1.0));
  const auto cold = SumSpec::automatic(drude(1.0, 0.3, 100.0, 1e-3));
  EXPECT_GE(cold.n_max, hot.n_max);
  EXPECT_LE(SumSpec::automatic(drude(1.0, 0.3, 100.0, 1e-12)).n_max, 10'000'000u);
  EXPECT_THROW(force_sum_exact(ohmic(1.0, 0.1, 1.0), {1.0, 0.0, 0.0}, with_n_max(0)), PreconditionViolation);
}

TEST(ApproximateRateSum, MatchesClosedDrudeForce) {
  Gen gen(29);
  for (int k = 0; k < 50; ++k) {
    const double w = gen.uniform(0.1, 10.0);
    const double g0 = gen.uniform(0.0, 10.0);
    const auto p = drude(w, g0, gen.log_uniform(10.0, 1e4) * std::max(w, g0), gen.log_uniform(0.01, 100.0));
    const Derivatives d{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0), gen.uniform(-10.0, 10.0)};
    const auto sum = force_sum_drude_approximate(p, d);
    const double closed = force_drude_full(p, d).value;
    EXPECT_LE(std::abs(sum.value - closed), 2.0 * sum.truncation_estimate + 1e-12 * std::abs(closed)) << k;
  }
}

TEST(ApproximateRateSum, DiffersFromExactDampingAtOrderGammaOverCutoff) {
  const auto p = drude(1.0, 0.3, 300.0, 0.5);
  const Derivatives d{0.7, 0.2, 30.0};
  const double gap = std::abs(force_sum_drude_approximate(p, d).value - force_sum_exact(p, d).value);
  EXPECT_GT(gap, 1e-6);
  EXPECT_LT(gap, 10.0 * 0.3 / 300.0);
}
