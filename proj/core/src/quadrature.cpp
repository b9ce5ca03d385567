#include "ultrafid/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ultrafid/errors.hpp"

namespace ultrafid {

QuadratureResult integrate_even_periodic(const std::function<Complex(double)>& h, double abs_tol,
                                         int max_doublings, int initial_points) {
  using std::numbers::pi;
  if (initial_points < 2) throw DomainError("periodic trapezoid needs at least 2 points");

  int n = initial_points;
  Complex sum = 0.0;
  for (int j = 0; j < n; ++j) sum += h(2.0 * pi * j / n);
  Complex estimate = sum * (pi / n);

  QuadratureResult result;
  result.evaluations = n;
  for (int level = 0; level < max_doublings; ++level) {
    Complex mid = 0.0;
    for (int j = 0; j < n; ++j) mid += h(2.0 * pi * (j + 0.5) / n);
    result.evaluations += n;
    const Complex refined = 0.5 * estimate + mid * (pi / (2.0 * n));
    result.error_estimate = std::abs(refined - estimate);
    estimate = refined;
    n *= 2;
    if (result.error_estimate <= abs_tol) {
      result.converged = true;
      break;
    }
  }
  result.value = estimate;
  return result;
}

GaussRule gauss_legendre(int n, double a, double b) {
  using std::numbers::pi;
  if (n < 1) throw DomainError("Gauss-Legendre rule needs n >= 1");
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

Complex contour_derivative(const std::function<Complex(Complex)>& f, Complex z, int order,
                           double radius, int nodes) {
  using std::numbers::pi;
  if (order < 0) throw DomainError("derivative order must be nonnegative");
  if (nodes <= order) throw DomainError("contour needs more nodes than the derivative order");
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double phi = 2.0 * pi * j / nodes;
    const Complex unit = std::polar(1.0, phi);
    acc += f(z + radius * unit) * std::polar(1.0, -order * phi);
  }
  double scale = 1.0;
  for (int k = 2; k <= order; ++k) scale *= k;
  return acc * (scale / (nodes * std::pow(radius, order)));
}

}  // namespace ultrafid
