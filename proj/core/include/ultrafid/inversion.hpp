#pragma once

// Global inverse of G_n on the lower half-plane and the Voiculescu transform.
//
// The inverse is built by path continuation. Every w in the open lower-right
// quadrant lies on exactly one segment from -it to n/(2n-1) + t; the preimage
// of -it is found on the imaginary axis, and a predictor-corrector walk along
// the segment carries it to w. The left quadrant follows from the symmetry
// G_n(-conj z) = -conj G_n(z) of a symmetric law.

#include <complex>

#include "ultrafid/config.hpp"
#include "ultrafid/exact_kernel.hpp"
#include "ultrafid/quadrature.hpp"

namespace ultrafid {

struct SegmentLocation {
  double t = 0.0;      // segment parameter, > 0
  double sigma = 0.0;  // position along the segment, in (0, 1)
};

/// Unique (t, sigma) with w = (1 - sigma)(-i t) + sigma (n/(2n-1) + t).
/// Throws DomainError unless Re w > 0 and Im w < 0.
[[nodiscard]] SegmentLocation locate_segment(UltraIndex n, Complex w);

/// The point i*y with G_n(i*y) = i*v, for v < 0.
[[nodiscard]] Complex invert_on_axis(UltraIndex n, double v,
                                     const Tolerances& tol = kDefaultTolerances);

struct InversionResult {
  Complex preimage;
  Complex target;
  int steps = 0;             // accepted continuation steps (0 for seeded or axis solves)
  int max_newton_iters = 0;  // largest corrector count over the accepted steps
  double final_residual = 0.0;
};

/// G_n^{-1}(w) for Im w < 0, with the preimage in the domain on which G_n is conformal.
[[nodiscard]] InversionResult g_inverse(UltraIndex n, Complex w,
                                        const Tolerances& tol = kDefaultTolerances);

/// phi_n(z) = G_n^{-1}(1/z) - z for Im z > 0.
[[nodiscard]] Complex voiculescu(UltraIndex n, Complex z,
                                 const Tolerances& tol = kDefaultTolerances);

}  // namespace ultrafid
