#pragma once

namespace ultrafid {

// All numerical thresholds live here so that certificates are reproducible
// from a single record.
struct Tolerances {
  // Absolute target for the periodic trapezoid quadrature oracle.
  double quadrature_abs = 1e-12;
  // Largest number of interval doublings before the quadrature gives up.
  int quadrature_max_doublings = 18;

  // Newton residual |G(z) - w| accepted by the inverters, scaled by max(1, |w|).
  double inversion_residual = 1e-12;
  // Corrector iterations before a continuation step is halved.
  int newton_max_iters = 5;
  // Relative floor for |G'(z)| * max(1, |z|)^2 below which a step is halved.
  double derivative_floor = 1e-8;
  // Initial continuation step as a fraction of the path length.
  double initial_step_fraction = 1.0 / 64.0;
  // Smallest admissible step fraction before continuation is declared failed.
  double min_step_fraction = 1e-12;
  // Targets with |w| below this radius try the two-term asymptotic seed first.
  double seed_radius = 0.1;
  // |Re w| below this routes to the imaginary-axis inverter.
  double axis_band = 1e-12;
  // Iteration cap for the imaginary-axis inverter.
  int axis_max_iters = 400;

  // Contour-integral derivatives: trapezoid nodes and largest circle radius.
  int contour_nodes = 128;
  double contour_max_radius = 0.25;
  // Smallest admissible distance from a contour centre to the cut.
  double contour_min_distance = 1e-3;

  // Free infinite divisibility verdict threshold for max Im phi.
  double certificate = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace ultrafid
