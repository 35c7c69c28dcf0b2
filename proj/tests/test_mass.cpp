#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "handleforge/mass.hpp"

using namespace hf;

namespace {
// independent 50-digit references
constexpr double kC2_ref = 6.1723225392609751;           // 4 cosh(1)
constexpr double kSigma2_ref = -50.796754038225402;      // -(4 cosh 1)^2 * 4/3
constexpr double kHypH_ref = 6.3772300272152975;         // n sqrt(-K) coth(sqrt(-K)), r0 = 1
constexpr double kDecM1_lhs = 1.9825229461161606;        // kappa=-1, H0=-1
constexpr double kDecM1_rhs = 1.1752011936438015;
constexpr double kDec0_lhs = 3.5256035809314044;         // kappa=-1, H0=0
constexpr double kDec3_lhs = 7.1548454853771357;         // kappa=-1, H0=3
constexpr double kPimpleTmc1 = 315.823090198;            // n=2, K=1 (ell = 15875)
}  // namespace

TEST_CASE("constant stack") {
  const MassConstants mc = build_constants(3, -6.0, -6.0, -1.0);
  CHECK(mc.c0 == 4.0);
  CHECK(mc.c1 == doctest::Approx(kC2_ref).epsilon(1e-14));
  CHECK(mc.c2 == doctest::Approx(kC2_ref).epsilon(1e-14));
  CHECK(mc.sigma2 == doctest::Approx(kSigma2_ref).epsilon(1e-14));
  CHECK(std::fabs(mc.sigma2) > 6.0);

  // kappa -> 0^-: the sigma0 branch takes over
  const MassConstants small = build_constants(3, -6.0, -6.0, -1e-9);
  CHECK(small.c0 == doctest::Approx(std::sqrt(4.5)).epsilon(1e-12));

  CHECK_THROWS_AS(build_constants(3, 1.0, -6.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(build_constants(3, -6.0, -6.0, 0.5), std::domain_error);
}

TEST_CASE("hyperbolic sphere mean curvature") {
  CHECK(hyp_sphere_H(3, kSigma2_ref, 1.0) == doctest::Approx(kHypH_ref).epsilon(1e-13));
  // r0 -> infinity: coth -> 1 (equal to the limit up to roundoff from r0 ~ 60)
  const double limit = 3.0 * std::sqrt(-kSigma2_ref / 12.0);
  CHECK(hyp_sphere_H(3, kSigma2_ref, 60.0) == doctest::Approx(limit).epsilon(1e-13));
  double prev = 1e300;
  for (double r0 : {0.5, 1.0, 2.0, 5.0}) {
    const double H = hyp_sphere_H(3, kSigma2_ref, r0);
    CHECK(H > limit);
    CHECK(H < prev);
    prev = H;
  }
  // sigma2 = -n(n+1): K = -1, H = n coth(r0)
  CHECK(hyp_sphere_H(3, -12.0, 0.7) == doctest::Approx(3.0 / std::tanh(0.7)).epsilon(1e-14));
  CHECK_THROWS_AS(hyp_sphere_H(3, 1.0, 1.0), std::domain_error);
}

TEST_CASE("DEC jump margins") {
  // spot values at kappa = -1 with c0 = 4|kappa|
  const double ch = std::cosh(1.0), sh = std::sinh(1.0);
  auto lhs = [&](double H0) {
    return ch * H0 + sh * 4.0 - (sh + std::max(H0, 0.0) / 3.0);
  };
  CHECK(lhs(-1.0) == doctest::Approx(kDecM1_lhs).epsilon(1e-14));
  CHECK(lhs(0.0) == doctest::Approx(kDec0_lhs).epsilon(1e-14));
  CHECK(lhs(3.0) == doctest::Approx(kDec3_lhs).epsilon(1e-14));
  CHECK(lhs(-1.0) >= kDecM1_rhs);

  // full sweep per the stated grids; the minimum sits at whichever end of
  // [kappa, 10] binds (the kappa end for small |kappa|, the top otherwise)
  for (double kappa : {-1.0, -0.5, -0.1, -0.01}) {
    std::vector<double> grid(401);
    for (int i = 0; i <= 400; ++i) grid[i] = kappa + (10.0 - kappa) * i / 400.0;
    const MarginReport rep = dec_jump_check(kappa, grid);
    CHECK(rep.pass);
    CHECK(rep.min_margin > 0.0);
    CHECK((rep.arg_min == doctest::Approx(kappa) || rep.arg_min == doctest::Approx(10.0)));
  }
  // at the bottom H0 = kappa the raw margin is |kappa| (2 sinh 1 - cosh 1)
  const double raw = lhs(-1.0) - sh * 1.0;
  CHECK(raw == doctest::Approx(2.0 * sh - ch).epsilon(1e-13));
  CHECK_THROWS_AS(dec_jump_check(0.5, {1.0}), std::domain_error);
  CHECK_THROWS_AS(dec_jump_check(-1.0, {-2.0}), std::domain_error);
}

TEST_CASE("lambda asymptotic and hyperbolic rotation") {
  CHECK(lambda_asymptotic(-100.0, -1.0, 1.0) == doctest::Approx(11.0).epsilon(1e-15));
  CHECK(lambda_asymptotic(-4.0, -7.0, 2.0) == doctest::Approx(16.0).epsilon(1e-15));
  // monotone nondecreasing in -sigma0 and -kappa
  CHECK(lambda_asymptotic(-9.0, -1.0, 1.0) <= lambda_asymptotic(-16.0, -1.0, 1.0));
  CHECK(lambda_asymptotic(-9.0, -1.0, 1.0) <= lambda_asymptotic(-9.0, -5.0, 1.0));

  const auto id = hyperbolic_rotation(0.0, {2.0, 3.0});
  CHECK(id[0] == 2.0);
  CHECK(id[1] == 3.0);
  // det F_theta = cosh^2 - sinh^2 = 1: areas preserved along orbits
  for (double theta : {-1.0, 0.5}) {
    const double det = std::cosh(theta) * std::cosh(theta) - std::sinh(theta) * std::sinh(theta);
    CHECK(det == doctest::Approx(1.0).epsilon(1e-15));
    // the corner-jump computation at theta = -1: second component is sinh(1) H0
    const auto v = hyperbolic_rotation(-1.0, {5.0, 4.0 * std::cosh(1.0) / std::cosh(1.0)});
    (void)v;
  }
  // F_{-1} applied to (H0, c0) gives (cosh H0 + sinh c0, sinh H0 + cosh c0)
  const auto w = hyperbolic_rotation(-1.0, {2.0, 4.0});
  CHECK(w[0] == doctest::Approx(2.0 * std::cosh(1.0) + 4.0 * std::sinh(1.0)).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(2.0 * std::sinh(1.0) + 4.0 * std::cosh(1.0)).epsilon(1e-14));
}

TEST_CASE("pimple configuration") {
  const PimpleConfig cfg = pimple(2, 1.0);
  CHECK(cfg.ell == 15875);  // floor((8 pi)^3)
  CHECK(cfg.r == doctest::Approx(1.5831434944e-3).epsilon(1e-9));
  CHECK(cfg.tmc_lb == doctest::Approx(kPimpleTmc1).epsilon(1e-9));
  CHECK(cfg.tmc_lb >= 1.0);
  CHECK(cfg.vol_ub <= 1.0);
  CHECK(cfg.diam_ub <= 1.0);

  for (double K : {10.0, 100.0}) {
    const PimpleConfig c = pimple(2, K);
    CHECK(c.tmc_lb >= K);
    CHECK(c.vol_ub <= 1.0 / K);
    CHECK(c.diam_ub <= 1.0 / K);
  }
  // scaling in n
  const PimpleConfig c3 = pimple(3, 1.0);
  CHECK(c3.tmc_lb >= 1.0);
  // K too small fails the smallness gate 20 r <= 1/K
  CHECK_THROWS_AS(pimple(2, 1e-4), std::domain_error);
}

TEST_CASE("h0 is positive and piecewise affine") {
  const MassConstants mc = build_constants(3, -6.0, -6.0, -1.0);
  CHECK(mc.h0(-5.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(mc.h0(0.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(mc.h0(3.0) == doctest::Approx(std::sinh(1.0) + 1.0).epsilon(1e-14));
  CHECK(mc.h0(-5.0) > 0.0);
}
