#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oscforce/oscillator.hpp"
#include "test_support.hpp"

using namespace oscforce;
using testing_support::Gen;

namespace {

OscillatorParams drude(double omega, double g0, double wd, double T = 1.0) {
  OscillatorParams p;
  p.omega0 = omega;
  p.damping = DrudeDamping{g0, wd};
  p.temperature = T;
  return p;
}

Complex dispersion(const OscillatorParams& p, Complex w) {
  const auto& d = std::get<DrudeDamping>(p.damping);
  const Complex i{0.0, 1.0};
  const double w2 = p.omega0 * p.omega0;
  return w * w * w + i * d.omega_d * w * w - (w2 + d.gamma0 * d.omega_d) * w - i * w2 * d.omega_d;
}

}  // namespace

TEST(OscillatorParams, Validation) {
  OscillatorParams p;
  EXPECT_NO_THROW(p.validate());
  p.omega0 = 0.0;
  EXPECT_THROW(p.validate(), PreconditionViolation);
  p.omega0 = 1.0;
  p.temperature = -1.0;
  EXPECT_THROW(p.validate(), PreconditionViolation);
  p.temperature = 0.0;
  p.damping = OhmicDamping{-0.1};
  EXPECT_THROW(p.validate(), PreconditionViolation);
  p.damping = DrudeDamping{0.1, 0.0};
  EXPECT_THROW(p.validate(), PreconditionViolation);
}

TEST(OhmicEigenfrequencies, Undamped) {
  const auto e = eigenfrequencies_ohmic(1.0, 0.0);
  EXPECT_NEAR(std::abs(e.rate(1) - Complex{0.0, 1.0}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.rate(2) - Complex{0.0, -1.0}), 0.0, 1e-15);
  EXPECT_EQ(e.method, RootMethod::ohmic);
  EXPECT_FALSE(e.omega3.has_value());
}

TEST(OhmicEigenfrequencies, CriticalDampingDoubleRoot) {
  const auto e = eigenfrequencies_ohmic(1.0, 2.0);
  EXPECT_NEAR(std::abs(e.rate(1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.rate(2) - 1.0), 0.0, 1e-15);
}

TEST(OhmicEigenfrequencies, OverdampedRealRates) {
  const auto e = eigenfrequencies_ohmic(1.0, 4.0);
  EXPECT_NEAR(e.rate(1).real(), 2.0 - std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(e.rate(2).real(), 2.0 + std::sqrt(3.0), 1e-15);
  EXPECT_EQ(e.rate(1).imag(), 0.0);
  EXPECT_EQ(e.rate(2).imag(), 0.0);
}

TEST(OhmicEigenfrequencies, SolveTheQuadratic) {
  Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    const double w = gen.uniform(0.1, 10.0);
    const double g = gen.uniform(0.0, 20.0);
    const auto e = eigenfrequencies_ohmic(w, g);
    const Complex i1{0.0, 1.0};
    for (Complex om : {e.omega1, e.omega2}) {
      EXPECT_LE(std::abs(om * om + i1 * g * om - w * w), 1e-12 * (w * w + g * g));
    }
    EXPECT_GT(e.rate(1).real(), 0.0);
    EXPECT_GT(e.rate(2).real(), 0.0);
  }
}

TEST(OhmicEigenfrequencies, ContinuousAcrossCriticalDamping) {
  for (double w : {0.1, 1.0, 7.0}) {
    const Complex at = eigenfrequencies_ohmic(w, 2.0 * w).omega1;
    for (double s : {1.0 - 1e-8, 1.0 + 1e-8}) {
      EXPECT_LE(std::abs(eigenfrequencies_ohmic(w, 2.0 * w * s).omega1 - at), 1e-3 * w);
    }
  }
}

TEST(OhmicEigenfrequencies, RejectsDrude) {
  EXPECT_THROW(eigenfrequencies_ohmic(drude(1, 0.1, 100)), PreconditionViolation);
}

TEST(DrudeExact, DecoupledLimit) {
  const auto e = eigenfrequencies_drude_exact(drude(1.3, 0.0, 50.0));
  EXPECT_NEAR(std::abs(e.omega1 - 1.3) * std::abs(e.omega2 + 1.3), 0.0, 1e-24);
  EXPECT_NEAR(std::abs(e.omega1 - 1.3), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e.omega2 + 1.3), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(*e.omega3 - Complex{0.0, -50.0}), 0.0, 1e-12);
}

TEST(DrudeExact, VietaResidualsOnRandomGrid) {
  Gen gen(2024);
  const Complex i{0.0, 1.0};
  for (int k = 0; k < 10000; ++k) {
    const double w = 1.0;
    const double wd = gen.log_uniform(1.0, 1e4) * w;
    const double g0 = gen.uniform(0.0, 10.0) * w;
    const auto p = drude(w, g0, wd);
    const auto e = eigenfrequencies_drude_exact(p);
    const Complex a = e.omega1, b = e.omega2, c = *e.omega3;
    EXPECT_LE(std::abs(a + b + c + i * wd), 1e-12 * wd);
    EXPECT_LE(std::abs(a * b + a * c + b * c + (w * w + g0 * wd)), 1e-12 * (w * w + g0 * wd));
    EXPECT_LE(std::abs(a * b * c - i * w * w * wd), 1e-12 * w * w * wd);
    for (Complex r : {a, b, c}) EXPECT_LE(std::abs(dispersion(p, r)), 1e-10 * wd * wd * wd);
    for (int m = 1; m <= 3; ++m) EXPECT_GT(e.rate(m).real(), 0.0);
    EXPECT_EQ(e.method, RootMethod::exact_cubic);
  }
}

TEST(DrudeExact, RelaxationModeIsLargestForWideCutoff) {
  Gen gen(8);
  for (int k = 0; k < 500; ++k) {
    const double g0 = gen.uniform(0.0, 5.0);
    const double wd = gen.log_uniform(10.0 * std::max(1.0, g0), 1e4);
    const auto e = eigenfrequencies_drude_exact(drude(1.0, g0, wd));
    EXPECT_GE(std::abs(*e.omega3), std::abs(e.omega1));
    EXPECT_GE(std::abs(*e.omega3), std::abs(e.omega2));
  }
}

TEST(DrudeApprox, DirectFormula) {
  const auto e = eigenfrequencies_drude_approx(drude(1.0, 0.5, 200.0));
  EXPECT_DOUBLE_EQ(e.rate(3).real(), 199.5);
  EXPECT_NEAR(e.rate(3).imag(), 0.0, 0.0);
  EXPECT_FALSE(e.regime_warning);
  EXPECT_EQ(e.method, RootMethod::approximate);
}

TEST(DrudeApprox, SumRuleHoldsExactly) {
  Gen gen(4);
  for (int k = 0; k < 200; ++k) {
    const double wd = gen.log_uniform(1.0, 1e4);
    const auto e = eigenfrequencies_drude_approx(drude(gen.uniform(0.1, 3.0), gen.uniform(0.0, 3.0), wd));
    const Complex sum = e.omega1 + e.omega2 + *e.omega3;
    EXPECT_LE(std::abs(sum - Complex{0.0, -wd}), 4e-16 * wd);
  }
}

TEST(DrudeApprox, ConvergesToExactAsCutoffGrows) {
  // |delta omega_1| / Omega <= C Omega / omega_D with a fitted C of order one
  for (double g0 : {0.2, 0.5, 1.0}) {
    std::vector<double> fitted;
    for (double ratio : {10.0, 100.0, 1000.0}) {
      const auto p = drude(1.0, g0, ratio);
      const double err = std::abs(eigenfrequencies_drude_exact(p).omega1 - eigenfrequencies_drude_approx(p).omega1);
      fitted.push_back(err * ratio);
    }
    for (double c : fitted) EXPECT_LE(c, 2.0) << g0;
    // first order: C settles as the cutoff grows
    EXPECT_NEAR(fitted[2] / fitted[1], 1.0, 0.05) << g0;
  }
}

TEST(DrudeApprox, RegimeWarning) {
  EXPECT_TRUE(eigenfrequencies_drude_approx(drude(1.0, 0.5, 5.0)).regime_warning);
  EXPECT_TRUE(eigenfrequencies_drude_exact(drude(1.0, 3.0, 20.0)).regime_warning);
  EXPECT_FALSE(eigenfrequencies_drude_exact(drude(1.0, 3.0, 30.0)).regime_warning);
}

TEST(DampingAtMatsubara, Values) {
  const auto d = drude(1.0, 0.4, 10.0);
  EXPECT_DOUBLE_EQ(damping_at_matsubara(d, 0.0), 0.4);
  EXPECT_DOUBLE_EQ(damping_at_matsubara(d, 10.0), 0.2);
  OscillatorParams o;
  o.damping = OhmicDamping{0.7};
  for (double w : {0.0, 1.0, 1e6}) EXPECT_DOUBLE_EQ(damping_at_matsubara(o, w), 0.7);
  EXPECT_THROW(damping_at_matsubara(o, -1.0), DomainError);
}

TEST(ParametricModel, AnalyticDerivativesMatchFiniteDifferences) {
  Gen gen(77);
  for (int k = 0; k < 100; ++k) {
    const double l0 = gen.log_uniform(1e-3, 10.0);
    const auto m = ParametricModel::power_law(l0, gen.uniform(0.5, 2.0), gen.uniform(-3.0, 3.0),
                                              gen.uniform(0.0, 1.0), gen.uniform(-3.0, 3.0),
                                              gen.uniform(50.0, 500.0), gen.uniform(-3.0, 3.0));
    const double l = l0 * gen.uniform(0.5, 2.0);
    const double h = 1e-6 * l;
    auto check = [&](const std::function<double(double)>& f, const std::function<double(double)>& df) {
      const double fd = (f(l + h) - f(l - h)) / (2.0 * h);
      EXPECT_LE(std::abs(fd - df(l)), 1e-6 * std::max(std::abs(df(l)), 1e-12 * std::abs(f(l)) / l));
    };
    check(m.omega, m.d_omega);
    check(m.gamma0, m.d_gamma0);
    check(m.omega_d, m.d_omega_d);
  }
}

TEST(ParametricModel, AtBuildsMatchingParams) {
  const auto m = ParametricModel::power_law(2.0, 1.5, 1.0, 0.3, 0.0);
  const auto p = m.at(4.0, 0.2);
  EXPECT_DOUBLE_EQ(p.omega0, 3.0);
  EXPECT_FALSE(is_drude(p.damping));
  EXPECT_DOUBLE_EQ(gamma0_of(p.damping), 0.3);
  EXPECT_DOUBLE_EQ(m.derivatives_at(4.0).d_omega, 0.75);
  EXPECT_EQ(m.derivatives_at(4.0).d_gamma0, 0.0);
  const auto md = ParametricModel::power_law(1.0, 1.0, -1.0, 0.1, 0.0, 100.0, 2.0);
  EXPECT_TRUE(is_drude(md.at(1.0, 1.0).damping));
}

TEST(Mass, DoesNotEnterEigenfrequencies) {
  auto p = drude(1.0, 0.3, 40.0);
  const auto a = eigenfrequencies_drude_exact(p);
  p.mass = 123.0;
  const auto b = eigenfrequencies_drude_exact(p);
  EXPECT_EQ(a.omega1, b.omega1);
  EXPECT_EQ(*a.omega3, *b.omega3);
}
