#include "ultrafid/certificate.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "ultrafid/errors.hpp"
#include "ultrafid/inversion.hpp"
#include "ultrafid/parallel.hpp"
#include "ultrafid/transforms.hpp"

namespace ultrafid {

std::vector<Complex> upper_polar_grid(const GridSpec& spec) {
  if (!(spec.r_min > 0.0) || !(spec.r_max >= spec.r_min))
    throw DomainError("grid radii must satisfy 0 < r_min <= r_max");
  if (spec.nr < 1 || spec.ntheta < 1) throw DomainError("grid counts must be positive");
  std::vector<Complex> grid;
  grid.reserve(static_cast<std::size_t>(spec.nr) * spec.ntheta);
  const double log_min = std::log(spec.r_min);
  const double log_span = std::log(spec.r_max) - log_min;
  for (int i = 0; i < spec.nr; ++i) {
    const double r = spec.nr == 1 ? spec.r_min : std::exp(log_min + log_span * i / (spec.nr - 1));
    for (int j = 0; j < spec.ntheta; ++j)
      grid.push_back(std::polar(r, std::numbers::pi * (j + 0.5) / spec.ntheta));
  }
  return grid;
}

Certificate fid_certificate(UltraIndex n, const GridSpec& spec, const Tolerances& tol) {
  Certificate cert;
  cert.n = n.value();
  cert.spec = spec;
  cert.tolerance = tol.certificate;
  cert.grid = upper_polar_grid(spec);
  if (cert.grid.empty()) throw DomainError("certificate grid is empty");

  (void)coefficients(n);  // warm the cache before fanning out
  cert.im_phi.assign(cert.grid.size(), 0.0);
  parallel_for(cert.grid.size(),
               [&](std::size_t i) { cert.im_phi[i] = voiculescu(n, cert.grid[i], tol).imag(); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < cert.im_phi.size(); ++i)
    if (cert.im_phi[i] > cert.im_phi[best]) best = i;
  cert.max_im_phi = cert.im_phi[best];
  cert.argmax = cert.grid[best];
  cert.pass = cert.max_im_phi <= cert.tolerance;
  return cert;
}

std::string to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = cert.n;
  j["tolerance"] = cert.tolerance;
  j["grid"] = {{"r_min", cert.spec.r_min},
               {"r_max", cert.spec.r_max},
               {"nr", cert.spec.nr},
               {"ntheta", cert.spec.ntheta}};
  j["max_im_phi"] = cert.max_im_phi;
  j["argmax"] = {cert.argmax.real(), cert.argmax.imag()};
  j["verdict"] = cert.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace ultrafid
