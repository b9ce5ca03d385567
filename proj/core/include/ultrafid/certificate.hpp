#pragma once

#include <string>
#include <vector>

#include "ultrafid/config.hpp"
#include "ultrafid/exact_kernel.hpp"
#include "ultrafid/quadrature.hpp"

namespace ultrafid {

/// Polar grid in the upper half-plane: nr log-spaced radii in [r_min, r_max]
/// (endpoints included) times ntheta angles pi (j + 1/2) / ntheta.
struct GridSpec {
  double r_min = 1e-2;
  double r_max = 1e2;
  int nr = 64;
  int ntheta = 64;
};

/// Throws DomainError for non-positive radii, r_min > r_max or counts < 1.
[[nodiscard]] std::vector<Complex> upper_polar_grid(const GridSpec& spec);

/// Evidence for free infinite divisibility: Im phi_n sampled on a grid in C+.
struct Certificate {
  int n = 1;
  GridSpec spec;
  std::vector<Complex> grid;
  std::vector<double> im_phi;
  double max_im_phi = 0.0;
  Complex argmax;
  bool pass = false;
  double tolerance = 1e-9;
};

/// Evaluates Im voiculescu(n, z) on the grid; pass iff the maximum is <= tol.certificate.
[[nodiscard]] Certificate fid_certificate(UltraIndex n, const GridSpec& spec,
                                          const Tolerances& tol = kDefaultTolerances);

/// {"schema":1, "n", "tolerance", "grid":{...}, "max_im_phi", "argmax":[re,im], "verdict"}
[[nodiscard]] std::string to_json(const Certificate& cert);

}  // namespace ultrafid
