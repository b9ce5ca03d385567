#include "ultrafid/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ultrafid/errors.hpp"
#include "ultrafid/transforms.hpp"

namespace ultrafid {

using std::numbers::pi;

double density_ultra(UltraIndex n, double x) {
  if (!(std::abs(x) < 2.0)) return 0.0;
  return coefficients(n).norm * std::pow(4.0 - x * x, n.value() - 0.5);
}

DensityGrid::DensityGrid(std::vector<double> abscissae, std::vector<double> values)
    : x_(std::move(abscissae)), v_(std::move(values)) {
  if (x_.size() != v_.size()) throw DomainError("density grid length mismatch");
  if (!std::is_sorted(x_.begin(), x_.end())) throw DomainError("density abscissae must be ordered");
  if (std::any_of(v_.begin(), v_.end(), [](double v) { return !(v >= 0.0); }))
    throw DomainError("density values must be nonnegative");
}

double DensityGrid::trapezoid_mass() const noexcept {
  double mass = 0.0;
  for (std::size_t i = 1; i < x_.size(); ++i) mass += 0.5 * (x_[i] - x_[i - 1]) * (v_[i] + v_[i - 1]);
  return mass;
}

DensityGrid density_grid(UltraIndex n, std::span<const double> xs) {
  std::vector<double> values;
  values.reserve(xs.size());
  for (double x : xs) values.push_back(density_ultra(n, x));
  return DensityGrid({xs.begin(), xs.end()}, std::move(values));
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw DomainError("linspace needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

double stieltjes_invert(UltraIndex n, double x, double eps) {
  if (!(std::abs(x) < 2.0)) throw DomainError("Stieltjes inversion needs |x| < 2");
  if (!(eps > 0.0)) throw DomainError("Stieltjes inversion needs eps > 0");
  return -gn_closed(n, SlitPlanePoint(x, eps)).imag() / pi;
}

// ---------------------------------------------------------------------------
// Beta laws with half-integer parameters

BetaParams::BetaParams(int twice_alpha, int twice_beta) : a2_(twice_alpha), b2_(twice_beta) {
  if (twice_alpha < 1 || twice_beta < 1) throw DomainError("Beta parameters must be positive");
}

namespace {

// Gamma(k/2) = coefficient * sqrt(pi)^(k odd).
struct HalfGamma {
  Rational coefficient;
  int sqrt_pi = 0;
};

HalfGamma half_gamma(int twice) {
  if (twice % 2 == 0) return {Rational(factorial(static_cast<unsigned>(twice / 2 - 1))), 0};
  const int k = (twice - 1) / 2;  // Gamma(k + 1/2) = (2k-1)!! sqrt(pi) / 2^k
  BigInt den = 1;
  den <<= static_cast<unsigned>(k);
  return {Rational(double_factorial(2 * k - 1), den), 1};
}

}  // namespace

double ExactBeta::value() const {
  return coefficient.convert_to<double>() * (pi_power == 1 ? pi : 1.0);
}

ExactBeta beta_exact(const BetaParams& p) {
  const HalfGamma a = half_gamma(p.twice_alpha());
  const HalfGamma b = half_gamma(p.twice_beta());
  const HalfGamma ab = half_gamma(p.twice_alpha() + p.twice_beta());
  const int sqrt_pi = a.sqrt_pi + b.sqrt_pi - ab.sqrt_pi;  // 0 or 2
  return {a.coefficient * b.coefficient / ab.coefficient, sqrt_pi / 2};
}

double beta_density(const BetaParams& p, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("Beta density needs 0 < u < 1");
  return std::pow(u, p.alpha() - 1.0) * std::pow(1.0 - u, p.beta() - 1.0) / beta_exact(p).value();
}

namespace {

void require_unit_grid(std::span<const double> grid) {
  if (grid.empty()) throw DomainError("Beta check grid is empty");
  for (double u : grid)
    if (!(u > 0.0 && u < 1.0)) throw DomainError("Beta check grid must lie in (0, 1)");
}

double symmetric_pushforward(UltraIndex n, double u) { return 4.0 * density_ultra(n, 2.0 - 4.0 * u); }

// Both branches x = +-2 sqrt(u) fold onto u = x^2/4.
double square_pushforward(UltraIndex n, double u) {
  const double r = std::sqrt(u);
  return 2.0 * density_ultra(n, 2.0 * r) / r;
}

}  // namespace

double check_beta_symmetric(UltraIndex n, std::span<const double> grid) {
  require_unit_grid(grid);
  const BetaParams target(2 * n.value() + 1, 2 * n.value() + 1);
  double worst = 0.0;
  for (double u : grid)
    worst = std::max(worst, std::abs(symmetric_pushforward(n, u) - beta_density(target, u)));
  return worst;
}

BetaSquareResidual check_beta_square(UltraIndex n, std::span<const double> grid) {
  require_unit_grid(grid);
  const BetaParams square(1, 2 * n.value() + 1);
  const BetaParams complement(2 * n.value() + 1, 1);
  BetaSquareResidual r;
  for (double u : grid) {
    r.square = std::max(r.square, std::abs(square_pushforward(n, u) - beta_density(square, u)));
    r.complement =
        std::max(r.complement, std::abs(square_pushforward(n, 1.0 - u) - beta_density(complement, u)));
  }
  return r;
}

PushforwardMass pushforward_mass(UltraIndex n) {
  const GaussRule rule = gauss_legendre(96, 0.0, 0.5 * pi);
  PushforwardMass m;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phi = rule.nodes[i];
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double u = s * s;
    const double jac = 2.0 * s * c * rule.weights[i];
    m.symmetric += symmetric_pushforward(n, u) * jac;
    m.square += square_pushforward(n, u) * jac;
    m.complement += square_pushforward(n, c * c) * jac;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Moments and the Gaussian limit

QuadratureResult moment_quadrature(UltraIndex n, unsigned order) {
  if (order % 2 == 1) return {0.0, 0.0, 0, true};
  const double cn = coefficients(n).norm;
  const int two_n = 2 * n.value();
  const int k = static_cast<int>(order);
  auto integrand = [&](double theta) -> Complex {
    return cn * std::pow(2.0 * std::cos(theta), k) * std::pow(2.0 * std::sin(theta), two_n);
  };
  return integrate_even_periodic(integrand, 1e-14, 16, 8);
}

double moment(UltraIndex n, unsigned order) { return moment_quadrature(n, order).value.real(); }

bool ConvergenceReport::strictly_decreasing() const noexcept {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!(entries[i].sup_distance < entries[i - 1].sup_distance)) return false;
  return true;
}

ConvergenceReport poincare_report(std::span<const UltraIndex> ns, std::span<const double> x_grid) {
  if (ns.empty() || x_grid.empty()) throw DomainError("convergence report needs nonempty inputs");
  std::vector<UltraIndex> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * pi);
  ConvergenceReport report;
  for (UltraIndex n : sorted) {
    const double sigma = std::sqrt(moment(n, 2));
    double sup = 0.0;
    for (double x : x_grid) {
      const double normalised = sigma * density_ultra(n, sigma * x);
      sup = std::max(sup, std::abs(normalised - inv_sqrt_2pi * std::exp(-0.5 * x * x)));
    }
    report.entries.push_back({n.value(), sup});
  }
  return report;
}

}  // namespace ultrafid
