#include <gtest/gtest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "ultrafid/certificate.hpp"
#include "ultrafid/errors.hpp"
#include "ultrafid/inversion.hpp"
#include "ultrafid/transforms.hpp"

using namespace ultrafid;

namespace {

const Complex I(0.0, 1.0);

Complex G(int n, Complex z) { return gn_closed(UltraIndex(n), SlitPlanePoint(z)); }

// Lower half-plane points on a polar grid: radii log-spaced, angles -pi (j + 1/2)/m.
std::vector<Complex> lower_grid(int nr, int ntheta, double r_min, double r_max) {
  std::vector<Complex> out;
  for (int i = 0; i < nr; ++i) {
    const double r = r_min * std::pow(r_max / r_min, i / (nr - 1.0));
    for (int j = 0; j < ntheta; ++j) out.push_back(std::polar(r, -std::numbers::pi * (j + 0.5) / ntheta));
  }
  return out;
}

}  // namespace

TEST(LocateSegment, HalfMinusHalfI) {
  const SegmentLocation s = locate_segment(UltraIndex(1), Complex(0.5, -0.5));
  EXPECT_NEAR(s.t, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.sigma, 0.5 / (1.0 + 1.0 / std::sqrt(2.0)), 1e-15);
}

TEST(LocateSegment, ReconstructsTarget) {
  for (int n = 1; n <= 8; ++n) {
    const double a = n / (2.0 * n - 1.0);
    for (Complex w : lower_grid(16, 16, 1e-6, 1e6)) {
      if (w.real() <= 0.0) continue;
      const SegmentLocation s = locate_segment(UltraIndex(n), w);
      EXPECT_GT(s.t, 0.0);
      EXPECT_GT(s.sigma, 0.0);
      EXPECT_LT(s.sigma, 1.0);
      const Complex back = (1.0 - s.sigma) * Complex(0.0, -s.t) + s.sigma * (a + s.t);
      EXPECT_LT(std::abs(back - w), 1e-14 * std::abs(w)) << n << ' ' << w;
    }
  }
}

TEST(LocateSegment, Limits) {
  // Near the negative imaginary axis sigma -> 0 and t -> |w|.
  const SegmentLocation s = locate_segment(UltraIndex(2), Complex(1e-9, -3.0));
  EXPECT_NEAR(s.t, 3.0, 1e-8);
  EXPECT_LT(s.sigma, 1e-9);
  EXPECT_THROW((void)locate_segment(UltraIndex(1), Complex(-0.5, -0.5)), DomainError);
  EXPECT_THROW((void)locate_segment(UltraIndex(1), Complex(0.5, 0.5)), DomainError);
  EXPECT_THROW((void)locate_segment(UltraIndex(1), Complex(0.0, -0.5)), DomainError);
}

TEST(InvertOnAxis, NamedValues) {
  EXPECT_NEAR(std::abs(invert_on_axis(UltraIndex(1), -1.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(invert_on_axis(UltraIndex(1), -2.0) + 1.5 * I), 0.0, 1e-13);
  const Complex z = invert_on_axis(UltraIndex(2), -0.4);
  EXPECT_EQ(z.real(), 0.0);
  EXPECT_LT(std::abs(G(2, z) - Complex(0.0, -0.4)), 1e-13);
  EXPECT_THROW((void)invert_on_axis(UltraIndex(1), 0.0), DomainError);
}

TEST(InvertOnAxis, MonotoneAlongAxis) {
  for (int n = 1; n <= 8; ++n) {
    double prev = -INFINITY;
    for (int i = 1; i <= 200; ++i) {
      const double v = -10.0 + 10.0 * i / 201.0;
      const double y = invert_on_axis(UltraIndex(n), v).imag();
      EXPECT_GT(y, prev) << n << ' ' << v;
      prev = y;
    }
  }
}

TEST(GInverse, ExplicitSemicircleInverse) {
  for (Complex w : lower_grid(24, 24, 1e-2, 1e1)) {
    const InversionResult r = g_inverse(UltraIndex(1), w);
    EXPECT_LT(std::abs(r.preimage - (w + 1.0 / w)), 1e-12 * std::max(1.0, std::abs(w + 1.0 / w))) << w;
  }
}

TEST(GInverse, RoundTripAndDiagnostics) {
  for (int n = 1; n <= 8; ++n)
    for (Complex w : lower_grid(12, 12, 1e-2, 1e1)) {
      const InversionResult r = g_inverse(UltraIndex(n), w);
      EXPECT_EQ(r.target, w);
      EXPECT_LT(std::abs(G(n, r.preimage) - w), 1e-12 * std::max(1.0, std::abs(w))) << n << ' ' << w;
      EXPECT_LE(r.final_residual, 1e-12 * std::max(1.0, std::abs(w)));
      EXPECT_LE(r.max_newton_iters, kDefaultTolerances.newton_max_iters);
    }
}

TEST(GInverse, PreimageSideMatchesTargetSide) {
  for (int n = 1; n <= 6; ++n)
    for (Complex w : lower_grid(8, 16, 1e-2, 1e1)) {
      const Complex z = g_inverse(UltraIndex(n), w).preimage;
      if (std::abs(w.real()) > 1e-9) EXPECT_EQ(std::signbit(z.real()), std::signbit(w.real())) << n << ' ' << w;
    }
}

TEST(GInverse, MirrorSymmetry) {
  for (int n = 1; n <= 6; ++n)
    for (Complex w : lower_grid(8, 16, 1e-2, 1e1)) {
      const Complex a = g_inverse(UltraIndex(n), -std::conj(w)).preimage;
      const Complex b = -std::conj(g_inverse(UltraIndex(n), w).preimage);
      EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST(GInverse, Injectivity) {
  // Distinct targets have distinct preimages: the inverse is the branch on which G_n is conformal.
  for (int n = 1; n <= 4; ++n) {
    const auto ws = lower_grid(10, 10, 1e-2, 1e1);
    std::vector<Complex> zs;
    for (Complex w : ws) zs.push_back(g_inverse(UltraIndex(n), w).preimage);
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) EXPECT_GT(std::abs(zs[i] - zs[j]), 1e-8);
  }
}

TEST(GInverse, RejectsClosedUpperHalfPlane) {
  EXPECT_THROW((void)g_inverse(UltraIndex(1), Complex(0.3, 0.0)), DomainError);
  EXPECT_THROW((void)g_inverse(UltraIndex(1), Complex(0.3, 0.1)), DomainError);
}

TEST(Voiculescu, SemicircleIsOneOverZ) {
  EXPECT_LT(std::abs(voiculescu(UltraIndex(1), I) + I), 1e-12);
  EXPECT_LT(std::abs(voiculescu(UltraIndex(1), Complex(2.0, 3.0)) - Complex(2.0, -3.0) / 13.0), 1e-12);
}

TEST(Voiculescu, ImaginaryAxisStaysOnAxis) {
  for (double y : {0.05, 0.3, 1.0, 4.0, 30.0}) {
    const Complex phi = voiculescu(UltraIndex(2), Complex(0.0, y));
    EXPECT_LT(std::abs(phi.real()), 1e-12);
    EXPECT_LT(phi.imag(), 0.0);
  }
  EXPECT_THROW((void)voiculescu(UltraIndex(2), Complex(1.0, 0.0)), DomainError);
}

TEST(Voiculescu, FarFieldIsVarianceOverZ) {
  // phi(z) = m2 / z + O(z^-3) for a centred law.
  for (int n = 1; n <= 6; ++n) {
    const Complex z(30.0, 80.0);
    EXPECT_LT(std::abs(voiculescu(UltraIndex(n), z) * z - 2.0 / (n + 1.0)), 1e-3) << n;
  }
}

TEST(Certificate, SemicirclePassesAndReportsJson) {
  const GridSpec spec{1e-2, 1e2, 12, 12};
  const Certificate c = fid_certificate(UltraIndex(1), spec);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.grid.size(), 144u);
  EXPECT_EQ(c.im_phi.size(), 144u);
  EXPECT_LE(c.max_im_phi, 0.0);
  const auto j = nlohmann::json::parse(to_json(c));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("n"), 1);
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("grid").at("nr"), 12);
  EXPECT_EQ(j.at("grid").at("ntheta"), 12);
  EXPECT_DOUBLE_EQ(j.at("max_im_phi").get<double>(), c.max_im_phi);
  EXPECT_EQ(j.at("argmax").size(), 2u);
}

TEST(Certificate, ArgmaxIsAGridPoint) {
  const Certificate c = fid_certificate(UltraIndex(3), GridSpec{1e-1, 1e1, 6, 8});
  bool found = false;
  for (std::size_t i = 0; i < c.grid.size(); ++i)
    if (c.grid[i] == c.argmax) {
      found = true;
      EXPECT_EQ(c.im_phi[i], c.max_im_phi);
    }
  EXPECT_TRUE(found);
}

TEST(Certificate, ToleranceDecidesVerdict) {
  Tolerances strict;
  strict.certificate = -1.0;  // demands Im phi <= -1 everywhere
  EXPECT_FALSE(fid_certificate(UltraIndex(1), GridSpec{1e-1, 1e1, 4, 4}, strict).pass);
}

TEST(Certificate, GridValidation) {
  EXPECT_THROW((void)upper_polar_grid(GridSpec{0.0, 1.0, 4, 4}), DomainError);
  EXPECT_THROW((void)upper_polar_grid(GridSpec{2.0, 1.0, 4, 4}), DomainError);
  EXPECT_THROW((void)upper_polar_grid(GridSpec{1e-2, 1e2, 0, 4}), DomainError);
  const auto g = upper_polar_grid(GridSpec{1.0, 1.0, 1, 3});
  ASSERT_EQ(g.size(), 3u);
  for (Complex z : g) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
    EXPECT_GT(z.imag(), 0.0);
  }
}
