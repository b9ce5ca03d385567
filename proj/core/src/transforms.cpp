#include "ultrafid/transforms.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "ultrafid/errors.hpp"

namespace ultrafid {

using std::numbers::pi;

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::upper:
      return "upper";
    case Region::lower:
      return "lower";
    case Region::gap:
      return "gap";
  }
  return "?";
}

SlitPlanePoint::SlitPlanePoint(Complex z) : z_(z), region_(Region::gap) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("slit-plane point must be finite");
  if (z.imag() > 0.0) {
    region_ = Region::upper;
  } else if (z.imag() < 0.0) {
    region_ = Region::lower;
  } else {
    if (std::abs(z.real()) > 2.0)
      throw DomainError("real point outside [-2, 2] lies on the cut");
    // Normalise -0.0 so that branch functions see the limit from above.
    z_ = Complex(z.real(), 0.0);
  }
}

// ---------------------------------------------------------------------------
// Coefficient cache

namespace {

std::unique_ptr<UltraCoefficients> make_coefficients(UltraIndex n) {
  auto c = std::make_unique<UltraCoefficients>();
  c->n = n.value();
  c->scaled_norm = scaled_norm_const(n).convert_to<double>();
  c->norm = c->scaled_norm / (2.0 * pi);
  c->q = build_Q(n).to_double();
  c->p = build_P(n).to_double();
  const auto b = build_uniformized(n).to_double();
  for (std::size_t j = 1; j < b.size(); j += 2) c->odd.push_back(b[j]);
  return c;
}

template <typename T>
T horner(const std::vector<double>& coeffs, T x) {
  T acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// B_n(g) = g * sum_j odd[j] (g^2)^j
Complex eval_odd(const std::vector<double>& odd, Complex g) { return g * horner(odd, g * g); }

// B_n'(g) = sum_j (2j+1) odd[j] (g^2)^j
Complex eval_odd_derivative(const std::vector<double>& odd, Complex g) {
  const Complex g2 = g * g;
  Complex acc = 0.0;
  for (std::size_t j = odd.size(); j-- > 0;) acc = acc * g2 + static_cast<double>(2 * j + 1) * odd[j];
  return acc;
}

// s(z) with the asymptotic branch; for real z the sign of the zero imaginary
// part selects the side of the cut.
Complex branch_sqrt(Complex z) { return std::sqrt(z - 2.0) * std::sqrt(z + 2.0); }

}  // namespace

const UltraCoefficients& coefficients(UltraIndex n) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<UltraCoefficients>> table;
  {
    std::shared_lock lock(mutex);
    if (auto it = table.find(n.value()); it != table.end()) return *it->second;
  }
  auto built = make_coefficients(n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = table.try_emplace(n.value(), std::move(built));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Semicircle

Complex sqrt_asym(Complex z) {
  if (z.imag() == 0.0 && std::abs(z.real()) <= 2.0)
    throw DomainError("sqrt(z^2 - 4) is cut along [-2, 2]");
  return branch_sqrt(z);
}

Complex g1_continued(const SlitPlanePoint& point) {
  const Complex z = point.value();
  const Complex s = branch_sqrt(z);
  if (point.region() == Region::lower) return 0.5 * (z + s);
  // (z - s)/2 rewritten as 2/(z + s), which does not cancel for large |z|.
  return 2.0 / (z + s);
}

Complex g1_offcut(Complex z) {
  const Complex s = sqrt_asym(z);
  return 2.0 / (z + s);
}

// ---------------------------------------------------------------------------
// G_n

Complex gn_closed(UltraIndex n, const SlitPlanePoint& z) {
  return eval_odd(coefficients(n).odd, g1_continued(z));
}

Complex gn_closed_qp(UltraIndex n, const SlitPlanePoint& z) {
  const auto& c = coefficients(n);
  const Complex v = z.value();
  const Complex v2 = v * v;
  return horner(c.q, v2) * g1_continued(z) + v * horner(c.p, v2);
}

Complex gn_recurrence(UltraIndex n, const SlitPlanePoint& z) {
  const Complex v = z.value();
  const Complex four_minus = 4.0 - v * v;
  Complex g = g1_continued(z);
  for (int k = 1; k < n.value(); ++k) {
    const double a = (k + 1.0) / (2.0 * (2.0 * k + 1.0));
    g = a * (four_minus * g + v);
  }
  return g;
}

Complex gn_upper_boundary(UltraIndex n, double x) {
  if (std::abs(x) <= 2.0) return gn_closed(n, SlitPlanePoint(x, 0.0));
  return eval_odd(coefficients(n).odd, g1_offcut(Complex(x, 0.0)));
}

QuadratureResult gn_quadrature(UltraIndex n, Complex z, const Tolerances& tol) {
  if (!(z.imag() > 0.0)) throw DomainError("quadrature oracle requires Im z > 0");
  const int two_n = 2 * n.value();
  const double cn = coefficients(n).norm;
  auto integrand = [&](double theta) -> Complex {
    return cn * std::pow(2.0 * std::sin(theta), two_n) / (z - 2.0 * std::cos(theta));
  };
  return integrate_even_periodic(integrand, tol.quadrature_abs, tol.quadrature_max_doublings);
}

QuadratureResult gn_quadrature_boundary(UltraIndex n, double x, const Tolerances& tol) {
  if (!(std::abs(x) < 2.0)) throw DomainError("boundary quadrature requires |x| < 2");
  const int m = n.value();
  const double cn = coefficients(n).norm;
  const double c0 = 0.5 * x;
  const double b = 1.0 - c0 * c0;
  const double four_m = std::pow(4.0, m);
  // (F(theta) - F(theta0)) / (x - 2 cos theta) with F = (2 sin theta)^(2m),
  // written as 4^m (c0 + c)/2 * sum_k A^k B^(m-1-k) to avoid the removable 0/0.
  auto integrand = [&](double theta) -> Complex {
    const double c = std::cos(theta);
    const double a = 1.0 - c * c;
    double sum = 0.0;
    double ak = 1.0;
    for (int k = 0; k < m; ++k) {
      sum += ak * std::pow(b, m - 1 - k);
      ak *= a;
    }
    return cn * four_m * 0.5 * (c0 + c) * sum;
  };
  QuadratureResult r =
      integrate_even_periodic(integrand, tol.quadrature_abs, tol.quadrature_max_doublings);
  // The principal value of int_0^pi dtheta / (x - 2 cos theta) vanishes for |x| < 2.
  r.value += Complex(0.0, -pi * cn * std::pow(4.0 - x * x, m - 0.5));
  return r;
}

Complex gn_derivative(UltraIndex n, const SlitPlanePoint& z) {
  if (z.region() == Region::gap && std::abs(z.value().real()) == 2.0)
    throw SingularityError("G_n' is singular at z = +-2");
  const Complex g = g1_continued(z);
  const Complex g2 = g * g;
  return eval_odd_derivative(coefficients(n).odd, g) * g2 / (g2 - 1.0);
}

// ---------------------------------------------------------------------------
// Identities

IdentityResidual check_derivative_identity(UltraIndex n, const SlitPlanePoint& z) {
  const double half = 0.5 * (n.value() + 1);
  const Complex lhs = gn_derivative(n.next(), z);
  const Complex rhs = half * (1.0 - z.value() * gn_closed(n, z));
  return {z.value(), std::abs(lhs - rhs), "derivative-identity"};
}

IdentityResidual check_moment_expansion(unsigned k, Complex z, const Tolerances& tol) {
  if (!(z.imag() > 0.0)) throw DomainError("moment expansion check requires Im z > 0");
  const int two_k = 2 * static_cast<int>(k);
  auto integrand = [&](double theta) -> Complex {
    const double s = std::sin(theta);
    return std::pow(2.0 * std::cos(theta), two_k) * 4.0 * s * s / (z - 2.0 * std::cos(theta));
  };
  const QuadratureResult q =
      integrate_even_periodic(integrand, tol.quadrature_abs, tol.quadrature_max_doublings);
  const Complex lhs = q.value / (2.0 * pi);

  Complex rhs = std::pow(z, two_k) * g1_continued(SlitPlanePoint(z));
  for (unsigned j = 0; j < k; ++j)
    rhs -= catalan(j).convert_to<double>() * std::pow(z, 2 * static_cast<int>(k - j) - 1);
  return {z, std::abs(lhs - rhs), "moment-expansion"};
}

IdentityResidual check_recurrence(UltraIndex n, const SlitPlanePoint& z) {
  return {z.value(), std::abs(gn_recurrence(n, z) - gn_closed(n, z)), "recurrence-vs-closed"};
}

double distance_to_cut(Complex z) noexcept {
  const double x = z.real();
  const double y = std::abs(z.imag());
  const double right = x >= 2.0 ? y : std::hypot(x - 2.0, y);
  const double left = x <= -2.0 ? y : std::hypot(x + 2.0, y);
  return std::min(right, left);
}

Complex gn_higher_derivative(UltraIndex n, const SlitPlanePoint& z, int order,
                             const Tolerances& tol) {
  if (order == 0) return gn_closed(n, z);
  const double d = distance_to_cut(z.value());
  if (d < tol.contour_min_distance)
    throw DomainError("contour centre too close to the cut");
  const double radius = std::min(tol.contour_max_radius, 0.5 * d);
  auto f = [n](Complex w) { return gn_closed(n, SlitPlanePoint(w)); };
  return contour_derivative(f, z.value(), order, radius, tol.contour_nodes);
}

PowerConstantEstimate estimate_power_constant(UltraIndex n, std::span<const SlitPlanePoint> sample,
                                              const Tolerances& tol) {
  if (sample.size() < 2) throw DomainError("power-constant estimate needs at least two points");
  const int m = n.value();
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double fact = factorial(static_cast<unsigned>(m)).convert_to<double>();

  PowerConstantEstimate est;
  est.ratios.reserve(sample.size());
  Complex mean = 0.0;
  for (const auto& z : sample) {
    const Complex deriv = gn_higher_derivative(n, z, m - 1, tol);
    const Complex r = sign * fact * deriv / std::pow(g1_continued(z), m);
    est.ratios.push_back(r);
    mean += r;
  }
  mean /= static_cast<double>(sample.size());
  est.value = mean.real();
  for (const auto& r : est.ratios) est.spread = std::max(est.spread, std::abs(r - mean));
  return est;
}

}  // namespace ultrafid
