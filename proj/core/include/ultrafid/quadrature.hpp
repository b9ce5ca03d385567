#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ultrafid {

using Complex = std::complex<double>;

struct QuadratureResult {
  Complex value;
  // |I_2N - I_N| at the last doubling; an upper bound for a spectrally converging rule.
  double error_estimate = 0.0;
  int evaluations = 0;
  // False when the doubling cap was hit before reaching the target (precision warning).
  bool converged = false;
};

/// Integral over [0, pi] of an even, 2*pi-periodic integrand h(theta), computed
/// as half of the full-period trapezoid rule and doubled until successive
/// estimates agree to `abs_tol`.
[[nodiscard]] QuadratureResult integrate_even_periodic(const std::function<Complex(double)>& h,
                                                       double abs_tol, int max_doublings,
                                                       int initial_points = 16);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; nodes by Newton on P_n.
[[nodiscard]] GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// k-th derivative of an analytic f at z from Cauchy's integral formula on the
/// circle |zeta - z| = radius, sampled at `nodes` equispaced points.
[[nodiscard]] Complex contour_derivative(const std::function<Complex(Complex)>& f, Complex z,
                                         int order, double radius, int nodes);

}  // namespace ultrafid
