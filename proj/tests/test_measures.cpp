#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "ultrafid/errors.hpp"
#include "ultrafid/measures.hpp"

using namespace ultrafid;
using std::numbers::pi;

namespace {

// Stieltjes-inversion error slopes: |recovered - density| <= K eps on |x| <= 1.95.
// Measured, then rounded up; close to n / (2 pi).
constexpr double kStieltjesSlope[] = {0.16, 0.32, 0.48, 0.64, 0.80, 0.96};

std::vector<double> open_unit_grid(int count) {
  std::vector<double> u;
  for (int i = 0; i < count; ++i) u.push_back((i + 0.5) / count);
  return u;
}

}  // namespace

TEST(Density, ClosedForm) {
  EXPECT_NEAR(density_ultra(UltraIndex(1), 0.0), 1.0 / pi, 1e-15);
  EXPECT_NEAR(density_ultra(UltraIndex(2), 0.0), 4.0 / (3.0 * pi), 1e-15);
  EXPECT_EQ(density_ultra(UltraIndex(3), 2.0), 0.0);
  EXPECT_EQ(density_ultra(UltraIndex(3), -2.5), 0.0);
  for (int n = 1; n <= 10; ++n)
    for (double x : {0.1, 0.9, 1.7}) EXPECT_EQ(density_ultra(UltraIndex(n), x), density_ultra(UltraIndex(n), -x));
}

TEST(Density, UnitMass) {
  for (int n = 1; n <= 8; ++n) {
    const DensityGrid g = density_grid(UltraIndex(n), linspace(-2.0, 2.0, 1 << 16));
    // The square-root edge of n = 1 limits the trapezoid rule to O(h^1.5).
    EXPECT_NEAR(g.trapezoid_mass(), 1.0, n == 1 ? 1e-6 : 1e-12) << n;
  }
}

TEST(DensityGrid, Validation) {
  EXPECT_THROW(DensityGrid({0.0, 1.0}, {1.0}), DomainError);
  EXPECT_THROW(DensityGrid({1.0, 0.0}, {1.0, 1.0}), DomainError);
  EXPECT_THROW(DensityGrid({0.0, 1.0}, {1.0, -1.0}), DomainError);
  EXPECT_DOUBLE_EQ(DensityGrid({0.0, 2.0}, {1.0, 1.0}).trapezoid_mass(), 2.0);
  EXPECT_THROW((void)linspace(0.0, 1.0, 1), DomainError);
  const auto xs = linspace(-1.0, 1.0, 5);
  EXPECT_EQ(xs.front(), -1.0);
  EXPECT_EQ(xs.back(), 1.0);
  EXPECT_EQ(xs[2], 0.0);
}

TEST(StieltjesInversion, NamedPoints) {
  EXPECT_NEAR(stieltjes_invert(UltraIndex(2), 0.5, 1e-6), density_ultra(UltraIndex(2), 0.5), 1e-5);
  EXPECT_NEAR(stieltjes_invert(UltraIndex(3), 1.9, 1e-6), density_ultra(UltraIndex(3), 1.9), 1e-4);
  EXPECT_THROW((void)stieltjes_invert(UltraIndex(1), 2.0, 1e-6), DomainError);
  EXPECT_THROW((void)stieltjes_invert(UltraIndex(1), 0.0, 0.0), DomainError);
}

TEST(StieltjesInversion, ErrorLinearInEps) {
  for (int n = 1; n <= 6; ++n)
    for (double eps : {1e-4, 1e-5, 1e-6}) {
      double worst = 0.0;
      for (double x : linspace(-1.95, 1.95, 391))
        worst = std::max(worst, std::abs(stieltjes_invert(UltraIndex(n), x, eps) - density_ultra(UltraIndex(n), x)));
      EXPECT_LE(worst, kStieltjesSlope[n - 1] * eps) << n << ' ' << eps;
    }
}

TEST(Beta, ExactHalfIntegerValues) {
  const ExactBeta half = beta_exact(BetaParams(1, 1));
  EXPECT_EQ(half.pi_power, 1);
  EXPECT_EQ(half.coefficient, 1);
  EXPECT_NEAR(half.value(), pi, 1e-15);
  const ExactBeta three_halves = beta_exact(BetaParams(3, 3));
  EXPECT_EQ(three_halves.coefficient, Rational(1, 8));
  EXPECT_EQ(beta_exact(BetaParams(2, 4)).pi_power, 0);
  EXPECT_EQ(beta_exact(BetaParams(2, 4)).coefficient, Rational(1, 2));  // B(1, 2)
  EXPECT_EQ(beta_exact(BetaParams(1, 2)).coefficient, 2);               // B(1/2, 1) = 2
  EXPECT_NEAR(beta_density(BetaParams(1, 1), 0.5), 2.0 / pi, 1e-15);
  EXPECT_NEAR(beta_density(BetaParams(3, 3), 0.5), 4.0 / pi, 1e-15);
  EXPECT_NEAR(beta_density(BetaParams(5, 5), 0.5), 16.0 / (3.0 * pi), 1e-15);
  EXPECT_THROW(BetaParams(0, 1), DomainError);
  EXPECT_THROW((void)beta_density(BetaParams(1, 1), 1.0), DomainError);
}

TEST(Beta, ExactValueMatchesLgamma) {
  for (int a = 1; a <= 21; ++a)
    for (int b = 1; b <= 21; ++b) {
      const double ref = std::exp(std::lgamma(0.5 * a) + std::lgamma(0.5 * b) - std::lgamma(0.5 * (a + b)));
      EXPECT_NEAR(beta_exact(BetaParams(a, b)).value() / ref, 1.0, 1e-12) << a << ' ' << b;
    }
}

TEST(Beta, PushforwardsMatchDensities) {
  const auto u = open_unit_grid(200);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_LT(check_beta_symmetric(UltraIndex(n), u), 1e-12) << n;
    const BetaSquareResidual sq = check_beta_square(UltraIndex(n), u);
    EXPECT_LT(sq.square, 1e-12) << n;
    EXPECT_LT(sq.complement, 1e-12) << n;
    EXPECT_EQ(sq.max(), std::max(sq.square, sq.complement));
  }
  const std::vector<double> bad{0.0};
  EXPECT_THROW((void)check_beta_symmetric(UltraIndex(1), bad), DomainError);
}

TEST(Beta, PushforwardsHaveUnitMass) {
  for (int n = 1; n <= 8; ++n) {
    const PushforwardMass m = pushforward_mass(UltraIndex(n));
    EXPECT_NEAR(m.symmetric, 1.0, 1e-12);
    EXPECT_NEAR(m.square, 1.0, 1e-12);
    EXPECT_NEAR(m.complement, 1.0, 1e-12);
  }
}

TEST(Moments, SemicircleMomentsAreCatalan) {
  const auto cat = oracle::catalan_segner(9);
  for (unsigned k = 0; k <= 8; ++k) EXPECT_NEAR(moment(UltraIndex(1), 2 * k), double(cat[k]), 1e-10 * cat[k]) << k;
}

TEST(Moments, SecondMomentAndOddMoments) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_NEAR(moment(UltraIndex(n), 2), 2.0 / (n + 1.0), 1e-10) << n;
    EXPECT_NEAR(moment(UltraIndex(n), 0), 1.0, 1e-12);
    EXPECT_EQ(moment(UltraIndex(n), 3), 0.0);
  }
  // Fourth moment against the test-side Simpson oracle.
  for (int n = 1; n <= 6; ++n) {
    const double m4 = oracle::simpson(
        [n](double th) { return std::pow(2.0 * std::cos(th), 4) * std::pow(2.0 * std::sin(th), 2 * n); }, 0.0, pi, 4000);
    EXPECT_NEAR(moment(UltraIndex(n), 4), m4 / oracle::ultra_mass_integral(n), 1e-10) << n;
  }
  EXPECT_TRUE(moment_quadrature(UltraIndex(4), 6).converged);
}

TEST(Poincare, PinnedSupDistances) {
  const std::vector<UltraIndex> ns{UltraIndex(50), UltraIndex(1), UltraIndex(2), UltraIndex(5),
                                   UltraIndex(10), UltraIndex(20), UltraIndex(2)};
  const ConvergenceReport r = poincare_report(ns, linspace(-6.0, 6.0, 2401));
  ASSERT_EQ(r.entries.size(), 6u);
  const double pinned[] = {0.081238, 0.052410, 0.025556, 0.013783, 0.007174, 0.002942};
  const int order[] = {1, 2, 5, 10, 20, 50};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.entries[i].n, order[i]);
    EXPECT_NEAR(r.entries[i].sup_distance, pinned[i], 1e-6) << order[i];
  }
  EXPECT_TRUE(r.strictly_decreasing());
  EXPECT_LT(r.entries.back().sup_distance, 0.01);
}

TEST(Poincare, DecreasingDetection) {
  ConvergenceReport r;
  r.entries = {{1, 0.3}, {2, 0.2}, {3, 0.2}};
  EXPECT_FALSE(r.strictly_decreasing());
  r.entries.pop_back();
  EXPECT_TRUE(r.strictly_decreasing());
}
