#pragma once

// Density-level facts about the ultraspherical laws: the closed-form density,
// Stieltjes inversion of G_n, the Beta push-forwards, moments and the
// convergence of the normalised densities to the standard Gaussian.

#include <span>
#include <vector>

#include "ultrafid/exact_kernel.hpp"
#include "ultrafid/quadrature.hpp"

namespace ultrafid {

/// c_n (4 - x^2)^(n - 1/2) on [-2, 2], zero elsewhere.
[[nodiscard]] double density_ultra(UltraIndex n, double x);

/// Density samples on an ordered set of abscissae.
class DensityGrid {
 public:
  /// Throws DomainError on length mismatch, unordered abscissae or negative values.
  DensityGrid(std::vector<double> abscissae, std::vector<double> values);

  [[nodiscard]] std::span<const double> abscissae() const noexcept { return x_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return v_; }
  [[nodiscard]] double trapezoid_mass() const noexcept;

 private:
  std::vector<double> x_;
  std::vector<double> v_;
};

[[nodiscard]] DensityGrid density_grid(UltraIndex n, std::span<const double> xs);

/// Uniform grid of `count` points on [lo, hi]; count >= 2.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, int count);

/// -Im G_n(x + i eps) / pi, for |x| < 2 and eps > 0.
[[nodiscard]] double stieltjes_invert(UltraIndex n, double x, double eps);

/// Beta parameters restricted to positive half-integers, stored doubled.
class BetaParams {
 public:
  /// alpha = twice_alpha / 2, beta = twice_beta / 2; both doubled values must be >= 1.
  BetaParams(int twice_alpha, int twice_beta);

  [[nodiscard]] int twice_alpha() const noexcept { return a2_; }
  [[nodiscard]] int twice_beta() const noexcept { return b2_; }
  [[nodiscard]] double alpha() const noexcept { return 0.5 * a2_; }
  [[nodiscard]] double beta() const noexcept { return 0.5 * b2_; }

 private:
  int a2_;
  int b2_;
};

/// B(alpha, beta) = coefficient * pi^pi_power exactly, pi_power in {0, 1}.
struct ExactBeta {
  Rational coefficient;
  int pi_power = 0;
  [[nodiscard]] double value() const;
};

[[nodiscard]] ExactBeta beta_exact(const BetaParams& p);

/// u^(alpha-1) (1-u)^(beta-1) / B(alpha, beta) for 0 < u < 1.
[[nodiscard]] double beta_density(const BetaParams& p, double u);

/// max_u |4 density_ultra(n, 2 - 4u) - Beta(n+1/2, n+1/2)(u)|: the law of (2 - X)/4.
[[nodiscard]] double check_beta_symmetric(UltraIndex n, std::span<const double> grid);

struct BetaSquareResidual {
  double square = 0.0;      // X^2/4 against Beta(1/2, n+1/2)
  double complement = 0.0;  // 1 - X^2/4 against Beta(n+1/2, 1/2)
  [[nodiscard]] double max() const noexcept { return square > complement ? square : complement; }
};

[[nodiscard]] BetaSquareResidual check_beta_square(UltraIndex n, std::span<const double> grid);

/// Total mass of the push-forward densities on (0, 1), integrated after u = sin^2(phi).
struct PushforwardMass {
  double symmetric = 0.0;
  double square = 0.0;
  double complement = 0.0;
};
[[nodiscard]] PushforwardMass pushforward_mass(UltraIndex n);

/// Quadrature of t^order against density_ultra; odd orders are zero by symmetry.
[[nodiscard]] QuadratureResult moment_quadrature(UltraIndex n, unsigned order);
[[nodiscard]] double moment(UltraIndex n, unsigned order);

struct ConvergenceEntry {
  int n = 1;
  double sup_distance = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;  // sorted by n
  [[nodiscard]] bool strictly_decreasing() const noexcept;
};

/// sup over x_grid of |s_n density_ultra(n, s_n x) - exp(-x^2/2)/sqrt(2 pi)|
/// with s_n the standard deviation of the law.
[[nodiscard]] ConvergenceReport poincare_report(std::span<const UltraIndex> ns,
                                                std::span<const double> x_grid);

}  // namespace ultrafid
