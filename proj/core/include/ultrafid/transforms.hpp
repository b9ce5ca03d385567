#pragma once

// Cauchy transforms of the ultraspherical laws on the slit plane
// C \ ((-inf, -2] U [2, +inf)).
//
// G_1 is the semicircle transform continued through the gap (-2, 2) into the
// lower half-plane, so that it maps the whole slit plane into the closed lower
// half-plane and satisfies g^2 - z g + 1 = 0. G_n is evaluated as an odd
// polynomial in g = G_1(z) (see build_uniformized), which is free of the
// cancellation suffered by Q_n(z^2) g + z P_n(z^2) at large |z|.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ultrafid/config.hpp"
#include "ultrafid/exact_kernel.hpp"
#include "ultrafid/quadrature.hpp"

namespace ultrafid {

enum class Region { upper, lower, gap };

[[nodiscard]] const char* to_string(Region r) noexcept;

/// A finite point of the slit plane tagged by where it sits. Real points with
/// |x| <= 2 are tagged `gap` and stand for limits from the upper half-plane;
/// the endpoints +-2 are admitted as boundary limits.
class SlitPlanePoint {
 public:
  /// Throws DomainError for non-finite input or real |x| > 2.
  explicit SlitPlanePoint(Complex z);
  SlitPlanePoint(double re, double im) : SlitPlanePoint(Complex(re, im)) {}

  [[nodiscard]] Complex value() const noexcept { return z_; }
  [[nodiscard]] Region region() const noexcept { return region_; }

 private:
  Complex z_;
  Region region_;
};

/// Floating-point coefficient tables derived once per n from the exact kernel.
struct UltraCoefficients {
  int n = 1;
  double scaled_norm = 1.0;  // 2*pi*c_n
  double norm = 0.0;         // c_n
  std::vector<double> q;     // Q_n, ascending powers of X
  std::vector<double> p;     // P_n
  std::vector<double> odd;   // B_n(g) = sum_j odd[j] g^(2j+1)
};

/// Cached per n; safe for concurrent readers.
[[nodiscard]] const UltraCoefficients& coefficients(UltraIndex n);

/// s(z) with s^2 = z^2 - 4, cut exactly [-2, 2] and s(z)/z -> 1 at infinity.
[[nodiscard]] Complex sqrt_asym(Complex z);

/// Semicircle transform continued through (-2, 2): (z - s)/2 above and on the
/// gap, (z + s)/2 below.
[[nodiscard]] Complex g1_continued(const SlitPlanePoint& z);

/// The ordinary Cauchy transform of the semicircle law off [-2, 2], continued
/// through the real rays; satisfies G(conj z) = conj G(z).
[[nodiscard]] Complex g1_offcut(Complex z);

/// G_n via the uniformised odd polynomial in G_1.
[[nodiscard]] Complex gn_closed(UltraIndex n, const SlitPlanePoint& z);

/// The literal form Q_n(z^2) G_1(z) + z P_n(z^2) with Horner evaluation.
/// Loses accuracy like |z|^(2n-3) * eps for large |z| above the cut.
[[nodiscard]] Complex gn_closed_qp(UltraIndex n, const SlitPlanePoint& z);

/// Forward iteration of G_{k+1} = a_k ((4 - z^2) G_k + z) from G_1.
[[nodiscard]] Complex gn_recurrence(UltraIndex n, const SlitPlanePoint& z);

/// Limit of G_n from the upper half-plane at any real x (used for the
/// boundary curve G_n(R)); for |x| > 2 this is the real value of the standard transform.
[[nodiscard]] Complex gn_upper_boundary(UltraIndex n, double x);

/// Direct numerical integral of c_n (4 - t^2)^(n - 1/2) / (z - t) over [-2, 2]
/// after t = 2 cos(theta). Requires Im z > 0.
[[nodiscard]] QuadratureResult gn_quadrature(UltraIndex n, Complex z,
                                             const Tolerances& tol = kDefaultTolerances);

/// Boundary value G_n(x + i0) for |x| < 2 by quadrature: principal value by
/// singularity subtraction plus -i pi c_n (4 - x^2)^(n - 1/2).
[[nodiscard]] QuadratureResult gn_quadrature_boundary(UltraIndex n, double x,
                                                      const Tolerances& tol = kDefaultTolerances);

/// Analytic derivative of gn_closed, using dG_1/dz = g^2 / (g^2 - 1).
/// Throws SingularityError at z = +-2.
[[nodiscard]] Complex gn_derivative(UltraIndex n, const SlitPlanePoint& z);

struct IdentityResidual {
  Complex point;
  double residual = 0.0;
  std::string identity;
};

/// |G'_{n+1}(z) - (n+1)/2 (1 - z G_n(z))|
[[nodiscard]] IdentityResidual check_derivative_identity(UltraIndex n, const SlitPlanePoint& z);

/// Residual of
///   (1/2pi) int t^(2k) sqrt(4 - t^2) / (z - t) dt = z^(2k) G_1(z) - sum_{j<k} C_j z^(2(k-j)-1)
/// with the left side by quadrature. Requires Im z > 0.
[[nodiscard]] IdentityResidual check_moment_expansion(unsigned k, Complex z,
                                                      const Tolerances& tol = kDefaultTolerances);

/// |gn_recurrence - gn_closed| at z.
[[nodiscard]] IdentityResidual check_recurrence(UltraIndex n, const SlitPlanePoint& z);

/// Distance from z to the rays (-inf, -2] and [2, +inf).
[[nodiscard]] double distance_to_cut(Complex z) noexcept;

/// (n-1)-st derivative of G_n by Cauchy's formula on a circle that stays
/// inside the slit plane.
[[nodiscard]] Complex gn_higher_derivative(UltraIndex n, const SlitPlanePoint& z, int order,
                                           const Tolerances& tol = kDefaultTolerances);

struct PowerConstantEstimate {
  double value = 0.0;   // mean of the ratio (real part; the ratio is real)
  double spread = 0.0;  // max |ratio - mean|
  std::vector<Complex> ratios;
};

/// Ratio r(z) = (-1)^n n! G_n^(n-1)(z) / G_1(z)^n over a sample; constancy of
/// r is the derivative-power identity. Needs at least two points, each at
/// distance >= contour_min_distance from the cut.
[[nodiscard]] PowerConstantEstimate estimate_power_constant(
    UltraIndex n, std::span<const SlitPlanePoint> sample, const Tolerances& tol = kDefaultTolerances);

}  // namespace ultrafid
