#include "ultrafid/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "ultrafid/errors.hpp"
#include "ultrafid/transforms.hpp"

namespace ultrafid {

namespace {

// Points on the real rays |x| >= 2 are outside the domain (and +-2 are critical).
bool admissible(Complex z) { return !(z.imag() == 0.0 && std::abs(z.real()) >= 2.0); }

// True when the straight move a -> b passes through a forbidden ray.
bool crosses_cut(Complex a, Complex b) {
  if (!admissible(a) || !admissible(b)) return true;
  const double ya = a.imag();
  const double yb = b.imag();
  if ((ya > 0.0 && yb > 0.0) || (ya < 0.0 && yb < 0.0)) return false;
  if (ya == 0.0 || yb == 0.0) return false;  // endpoint already checked to be in the gap
  const double x = a.real() + (b.real() - a.real()) * ya / (ya - yb);
  return std::abs(x) >= 2.0;
}

Complex eval(UltraIndex n, Complex z) { return gn_closed(n, SlitPlanePoint(z)); }
Complex eval_derivative(UltraIndex n, Complex z) { return gn_derivative(n, SlitPlanePoint(z)); }

struct Correction {
  Complex z;
  int iters = 0;
  double residual = 0.0;
  bool ok = false;
};

// Damped Newton for G_n(z) = target that refuses to cross the cut.
Correction newton_correct(UltraIndex n, Complex z, Complex target, int max_iters, double tol) {
  Correction c{z, 0, std::abs(eval(n, z) - target), false};
  while (c.residual > tol && c.iters < max_iters) {
    const Complex gp = eval_derivative(n, c.z);
    if (gp == 0.0 || !std::isfinite(std::abs(gp))) return c;
    Complex dz = (eval(n, c.z) - target) / gp;
    bool moved = false;
    for (int damp = 0; damp < 12; ++damp, dz *= 0.5) {
      const Complex trial = c.z - dz;
      if (crosses_cut(c.z, trial)) continue;
      const double r = std::abs(eval(n, trial) - target);
      if (r < c.residual) {
        c.z = trial;
        c.residual = r;
        moved = true;
        break;
      }
    }
    ++c.iters;
    if (!moved) return c;
  }
  c.ok = c.residual <= tol;
  return c;
}

// Extra Newton steps, kept only while the residual keeps dropping, to reach
// the rounding floor rather than just the tolerance.
void polish(UltraIndex n, Complex& z, Complex target, double& residual) {
  for (int i = 0; i < 4; ++i) {
    const Complex gp = eval_derivative(n, z);
    const Complex trial = z - (eval(n, z) - target) / gp;
    if (crosses_cut(z, trial)) return;
    const double r = std::abs(eval(n, trial) - target);
    if (!(r < residual)) return;
    z = trial;
    residual = r;
  }
}

double edge_value(UltraIndex n) {
  const double m = n.value();
  return m / (2.0 * m - 1.0);
}

std::optional<InversionResult> try_seeded(UltraIndex n, Complex w, const Tolerances& tol) {
  const double m2 = 2.0 / (n.value() + 1.0);
  const Complex seed = 1.0 / w + m2 * w;
  const double goal = tol.inversion_residual * std::max(1.0, std::abs(w));
  Correction c = newton_correct(n, seed, w, 4 * tol.newton_max_iters, goal);
  // G_n is injective on the upper half-plane, so a solution there is the preimage.
  if (!c.ok || !(c.z.imag() > 0.0)) return std::nullopt;
  polish(n, c.z, w, c.residual);
  return InversionResult{c.z, w, 0, c.iters, c.residual};
}

InversionResult continue_along_segment(UltraIndex n, Complex w, const Tolerances& tol) {
  const SegmentLocation loc = locate_segment(n, w);
  const Complex start(0.0, -loc.t);
  const Complex delta = w - start;

  Complex z = invert_on_axis(n, -loc.t, tol);
  double done = 0.0;
  double h = tol.initial_step_fraction;
  int steps = 0;
  int max_iters = 0;

  while (done < 1.0) {
    if (h < tol.min_step_fraction)
      throw ContinuationError("continuation stalled at fraction " + std::to_string(done) +
                              " for n = " + std::to_string(n.value()));
    h = std::min(h, 1.0 - done);
    const bool last = done + h >= 1.0;
    const Complex target = last ? w : start + (done + h) * delta;

    const Complex gp = eval_derivative(n, z);
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(gp) * scale * scale < tol.derivative_floor) {
      h *= 0.5;
      continue;
    }
    const Complex predicted = z + (target - eval(n, z)) / gp;
    if (crosses_cut(z, predicted)) {
      h *= 0.5;
      continue;
    }
    const double goal = tol.inversion_residual * std::max(1.0, std::abs(target));
    Correction c = newton_correct(n, predicted, target, tol.newton_max_iters, goal);
    if (!c.ok || crosses_cut(z, c.z)) {
      h *= 0.5;
      continue;
    }
    z = c.z;
    done = last ? 1.0 : done + h;
    ++steps;
    max_iters = std::max(max_iters, c.iters);
    if (c.iters <= 2) h = std::min(2.0 * h, tol.initial_step_fraction);
  }

  double residual = std::abs(eval(n, z) - w);
  polish(n, z, w, residual);
  return {z, w, steps, max_iters, residual};
}

}  // namespace

SegmentLocation locate_segment(UltraIndex n, Complex w) {
  const double u = w.real();
  const double b = -w.imag();
  if (!(u > 0.0) || !(b > 0.0))
    throw DomainError("segment location needs Re w > 0 and Im w < 0");
  const double a = edge_value(n);
  // sigma (a + t) = u and (1 - sigma) t = b  =>  t^2 + (a - u - b) t - a b = 0.
  const double p = a - u - b;
  const double root = std::sqrt(p * p + 4.0 * a * b);
  const double t = p >= 0.0 ? 2.0 * a * b / (p + root) : 0.5 * (root - p);
  return {t, u / (a + t)};
}

Complex invert_on_axis(UltraIndex n, double v, const Tolerances& tol) {
  if (!(v < 0.0) || !std::isfinite(v)) throw DomainError("axis inversion needs v < 0");
  // h(y) = Im G_n(iy) is strictly increasing from -inf to 0, with h'(y) = G_n'(iy).
  auto h = [n](double y) { return eval(n, Complex(0.0, y)).imag(); };
  auto dh = [n](double y) { return eval_derivative(n, Complex(0.0, y)).real(); };
  const double goal = tol.inversion_residual * std::max(1.0, std::abs(v));

  double y = -1.0 / v;  // G_n(z) ~ 1/z
  double f = h(y) - v;
  double lo = y;
  double hi = y;
  double step = std::max(1.0, std::abs(y));
  int iters = 0;
  if (f > 0.0) {
    do {
      lo -= step;
      step *= 2.0;
      if (++iters > tol.axis_max_iters) throw ConvergenceError("axis bracket search failed");
    } while (h(lo) - v > 0.0);
  } else {
    do {
      hi += step;
      step *= 2.0;
      if (++iters > tol.axis_max_iters) throw ConvergenceError("axis bracket search failed");
    } while (h(hi) - v < 0.0);
  }

  // Newton safeguarded by the bracket [lo, hi].
  for (int it = 0; it < tol.axis_max_iters; ++it) {
    if (std::abs(f) <= goal) {
      double best = std::abs(f);
      for (int extra = 0; extra < 3; ++extra) {
        const double trial = y - f / dh(y);
        const double ft = h(trial) - v;
        if (!(std::abs(ft) < best)) break;
        y = trial;
        f = ft;
        best = std::abs(ft);
      }
      return {0.0, y};
    }
    if (f > 0.0) hi = y; else lo = y;
    const double d = dh(y);
    double next = (d > 0.0) ? y - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == y) break;
    y = next;
    f = h(y) - v;
  }
  if (std::abs(f) <= goal) return {0.0, y};
  throw ConvergenceError("axis inversion did not converge for v = " + std::to_string(v));
}

InversionResult g_inverse(UltraIndex n, Complex w, const Tolerances& tol) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw DomainError("inversion target must be finite");
  if (!(w.imag() < 0.0)) throw DomainError("inversion target must lie in the lower half-plane");

  if (std::abs(w.real()) < tol.axis_band) {
    const Complex z = invert_on_axis(n, w.imag(), tol);
    return {z, w, 0, 0, std::abs(eval(n, z) - w)};
  }
  if (w.real() < 0.0) {
    InversionResult r = g_inverse(n, -std::conj(w), tol);
    r.preimage = -std::conj(r.preimage);
    r.target = w;
    r.final_residual = std::abs(eval(n, r.preimage) - w);
    return r;
  }
  if (std::abs(w) < tol.seed_radius) {
    if (auto seeded = try_seeded(n, w, tol)) return *seeded;
  }
  InversionResult r = continue_along_segment(n, w, tol);
  if (!admissible(r.preimage)) throw ContinuationError("preimage landed on the cut");
  if (r.final_residual > tol.inversion_residual * std::max(1.0, std::abs(w)))
    throw ConvergenceError("inversion residual above tolerance");
  return r;
}

Complex voiculescu(UltraIndex n, Complex z, const Tolerances& tol) {
  if (!(z.imag() > 0.0)) throw DomainError("Voiculescu transform needs Im z > 0");
  return g_inverse(n, 1.0 / z, tol).preimage - z;
}

}  // namespace ultrafid
