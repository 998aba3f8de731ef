#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oscforce/specfun.hpp"
#include "test_support.hpp"

using oscforce::specfun::Complex;
namespace sf = oscforce::specfun;
using testing_support::Gen;

namespace {

// 50-digit reference values, tests/fixtures/gen_fixtures.py
struct Fixture {
  Complex z;
  Complex expected;
};

void expect_close(Complex got, Complex want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << "got " << got << " want " << want;
}

}  // namespace

TEST(LogGamma, SmallIntegers) {
  // |exp(error) - 1| <= 1e-13 is the contract, i.e. an absolute bound on the log
  EXPECT_NEAR(sf::log_gamma(Complex{1.0, 0.0}).real(), 0.0, 1e-13);
  EXPECT_NEAR(sf::log_gamma(Complex{1.0, 0.0}).imag(), 0.0, 1e-15);
  EXPECT_NEAR(sf::log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGamma, HighPrecisionFixtures) {
  const Fixture cases[] = {
      {{1.0, 3.0}, {-3.2441442995897561916, 1.0533507710686132003}},
      {{0.5, 0.25}, {0.43180624845992696202, -0.45239454904415881413}},
      {{30.0, -40.0}, {49.232808494070298819, -143.83479582266482462}},
      {{2.5, 100.0}, {-146.95022878711940572, 363.63902908801042024}},
  };
  for (const auto& c : cases) expect_close(sf::log_gamma(c.z), c.expected, 1e-13);
}

TEST(LogGamma, ExpMatchesGammaOnRealAxis) {
  for (double x : {0.3, 1.5, 7.25, 20.0, 150.0}) {
    EXPECT_NEAR(sf::log_gamma(x), std::lgamma(x), 1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST(LogGamma, RecurrenceOnComplexPlane) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    const Complex z{gen.uniform(0.1, 100.0), gen.uniform(-100.0, 100.0)};
    const Complex lhs = sf::log_gamma(z + 1.0) - sf::log_gamma(z);
    const Complex rhs = std::log(z);
    // the branch is the analytic one, so the difference is exactly log z
    EXPECT_LE(std::abs(lhs - rhs), 1e-11 * (1.0 + std::abs(sf::log_gamma(z)))) << z;
  }
}

TEST(LogGamma, LargeArgument) {
  const Complex z{1e6, 3e5};
  const Complex stirling = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + 1.0 / (12.0 * z);
  expect_close(sf::log_gamma(z), stirling, 1e-14);
}

TEST(LogGamma, RejectsLeftHalfPlane) {
  EXPECT_THROW(sf::log_gamma(Complex{0.0, 1.0}), oscforce::DomainError);
  EXPECT_THROW(sf::log_gamma(Complex{-1.5, 0.0}), oscforce::DomainError);
  EXPECT_THROW(sf::log_gamma(Complex{NAN, 0.0}), oscforce::DomainError);
}

TEST(Digamma, KnownValues) {
  EXPECT_NEAR(sf::digamma(1.0), -sf::euler_gamma, 1e-15);
  EXPECT_NEAR(sf::digamma(2.0), 1.0 - sf::euler_gamma, 1e-15);
  EXPECT_NEAR(sf::digamma(0.5), -sf::euler_gamma - 2.0 * std::log(2.0), 1e-14);
}

TEST(Digamma, HighPrecisionFixtures) {
  const Fixture cases[] = {
      {{1.0, 3.0}, {1.1079807107101508808, 1.4041296805875762097}},
      {{0.1, 0.2}, {-2.3875341022553845897, 4.2808216656910460696}},
      {{7.5, -2.0}, {1.9858123050376176155, -0.27788663080211484498}},
      {{1e3, 1e5}, {11.512975412483725408, 1.5608016596084480094}},
  };
  for (const auto& c : cases) expect_close(sf::digamma(c.z), c.expected, 1e-13);
}

TEST(Digamma, ImaginaryPartOnUnitLine) {
  for (double y : testing_support::log_grid(1e-3, 50.0, 200)) {
    const double want = -0.5 / y + 0.5 * std::numbers::pi / std::tanh(std::numbers::pi * y);
    const double got = sf::digamma(Complex{1.0, y}).imag();
    EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want))) << y;
  }
  EXPECT_NEAR(sf::digamma(Complex{1.0, 0.7}).imag(),
              -0.5 / 0.7 + 0.5 * std::numbers::pi / std::tanh(0.7 * std::numbers::pi), 1e-14);
}

TEST(Digamma, RecurrenceProperty) {
  Gen gen(12345);
  for (int i = 0; i < 10000; ++i) {
    const Complex z{gen.uniform(0.1, 100.0), gen.uniform(-100.0, 100.0)};
    const Complex psi = sf::digamma(z);
    EXPECT_LE(std::abs(sf::digamma(z + 1.0) - psi - 1.0 / z), 1e-12 * (1.0 + std::abs(psi))) << z;
  }
}

TEST(Digamma, Conjugation) {
  Gen gen(7);
  for (int i = 0; i < 1000; ++i) {
    const Complex z{gen.uniform(0.01, 50.0), gen.uniform(-50.0, 50.0)};
    const Complex a = sf::digamma(z);
    const Complex b = sf::digamma(std::conj(z));
    EXPECT_EQ(a.real(), b.real());
    EXPECT_LE(std::abs(a.imag() + b.imag()), 1e-14 * std::max(1.0, std::abs(a.imag())));
  }
}

TEST(Digamma, AsymptoticRemainderDecaysAsInverseSquare) {
  std::vector<double> r;
  std::vector<double> err;
  for (double mod : testing_support::log_grid(10.0, 1e4, 12)) {
    const Complex z = std::polar(mod, 0.6);
    r.push_back(mod);
    err.push_back(std::abs(sf::digamma(z) - (std::log(z) - 0.5 / z)));
  }
  EXPECT_NEAR(testing_support::log_log_slope(r, err), -2.0, 0.05);
}

TEST(Digamma, SeriesNearOne) {
  const double z = 1e-4;
  const double series = -sf::euler_gamma + std::numbers::pi * std::numbers::pi / 6.0 * z;
  EXPECT_NEAR(sf::digamma(1.0 + z), series, 1e-7);
}

TEST(Digamma, RejectsLeftHalfPlane) {
  EXPECT_THROW(sf::digamma(Complex{-0.5, 2.0}), oscforce::DomainError);
  EXPECT_THROW(sf::digamma(0.0), oscforce::DomainError);
}

TEST(Trigamma, KnownValues) {
  const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
  EXPECT_NEAR(sf::trigamma(1.0), z2, 1e-14);
  EXPECT_NEAR(sf::trigamma(2.0), z2 - 1.0, 1e-14);
}

TEST(Trigamma, HighPrecisionFixtures) {
  expect_close(sf::trigamma(Complex{1.0, 2.0}), {0.12493116214094458271, -0.4778255501472297481}, 1e-12);
  expect_close(sf::trigamma(Complex{0.3, 5.0}), {-0.0080687288890096194195, -0.20035021388395180723}, 1e-12);
}

TEST(Trigamma, MatchesFiniteDifferenceOfDigamma) {
  const Complex z{1.0, 2.0};
  const double h = 1e-5;
  const Complex fd = (sf::digamma(z + h) - sf::digamma(z - h)) / (2.0 * h);
  EXPECT_LE(std::abs(fd - sf::trigamma(z)), 1e-8);
}

TEST(Trigamma, RecurrenceProperty) {
  Gen gen(99);
  for (int i = 0; i < 2000; ++i) {
    const Complex z{gen.uniform(0.1, 100.0), gen.uniform(-100.0, 100.0)};
    const Complex t = sf::trigamma(z);
    EXPECT_LE(std::abs(sf::trigamma(z + 1.0) - t + 1.0 / (z * z)), 1e-12 * (1.0 + std::abs(t))) << z;
  }
}

TEST(DividedDifference, MatchesPlainDifferenceWhenWellSeparated) {
  Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const Complex x{gen.uniform(0.5, 60.0), gen.uniform(-40.0, 40.0)};
    const Complex y{gen.uniform(0.5, 60.0), gen.uniform(-40.0, 40.0)};
    if (std::abs(x - y) < 0.5) continue;
    const Complex plain = (sf::digamma(x) - sf::digamma(y)) / (x - y);
    expect_close(sf::digamma_divided_difference(x, y), plain, 1e-12);
  }
}

TEST(DividedDifference, ReducesToTrigammaAtCoincidence) {
  for (Complex z : {Complex{1.0, 0.0}, Complex{1.3, 2.0}, Complex{25.0, -7.0}, Complex{0.2, 0.0}}) {
    expect_close(sf::digamma_divided_difference(z, z), sf::trigamma(z), 1e-13);
  }
}

TEST(DividedDifference, ContinuousThroughCoincidence) {
  const Complex x{1.7, 0.0};
  for (double eps : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const Complex a = sf::digamma_divided_difference(x + eps, x - eps);
    const Complex b = sf::digamma_divided_difference(x + Complex{0, eps}, x - Complex{0, eps});
    expect_close(a, sf::trigamma(x), 4.0 * eps * eps + 1e-14);
    expect_close(b, sf::trigamma(x), 4.0 * eps * eps + 1e-14);
  }
}

TEST(Log1pComplex, SmallArgumentsKeepRelativeAccuracy) {
  const Complex u{1e-12, -3e-13};
  expect_close(sf::log1p_complex(u), u - 0.5 * u * u, 1e-15);
  expect_close(sf::log1p_complex(Complex{2.0, 3.0}), std::log(Complex{3.0, 3.0}), 1e-15);
}
