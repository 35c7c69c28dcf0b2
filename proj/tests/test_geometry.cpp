#include <cmath>

#include "doctest.h"
#include "handleforge/geometry.hpp"
#include "handleforge/quadrature.hpp"

using namespace hf;

namespace {
// independent 50-digit references
constexpr double kLambda2_001_0001 = 56.234132519034908;
constexpr double kD_005 = 1.4652285787996153;
constexpr double kD_002 = 1.4898838226728277;
constexpr double kD_001 = 1.4960609847988813;
constexpr double kD_0001 = 1.4998321237991937;
}  // namespace

TEST_CASE("principal curvatures on the xi graph") {
  const double rho = 0.01;
  auto [l1, l2] = principal_curvatures(xi_prime(rho, 0.001), xi_second(rho, 0.001), 0.001);
  CHECK(l2 == doctest::Approx(kLambda2_001_0001).epsilon(1e-13));
  CHECK(l2 == doctest::Approx(-4.0 * l1).epsilon(1e-13));  // the defining ratio

  // flat segment
  auto [f1, f2] = principal_curvatures(0.0, 0.0, 0.3);
  CHECK(f1 == 0.0);
  CHECK(f2 == 0.0);

  // cylinder
  const CurvaturePoint cyl = cylinder_point(0.1, 3);
  CHECK(cyl.lambda1 == 0.0);
  CHECK(cyl.lambda2 == doctest::Approx(1e4).epsilon(1e-15));
  CHECK(cyl.H == doctest::Approx(2e4).epsilon(1e-15));
  CHECK(cyl.normA == doctest::Approx(std::sqrt(2.0) * 1e4).epsilon(1e-15));
  CHECK(cyl.scal == doctest::Approx(2e8).epsilon(1e-15));
}

TEST_CASE("shape invariant contracts") {
  for (int k : {2, 3, 5, 7}) {
    for (double l1 : {-3.0, -0.2, 0.0, 1.5}) {
      for (double l2 : {0.1, 2.0}) {
        const auto inv = shape_invariants(l1, l2, k);
        CHECK(inv.H == doctest::Approx(l1 + (k - 1) * l2).epsilon(1e-15));
        CHECK(inv.normA * inv.normA ==
              doctest::Approx(l1 * l1 + (k - 1) * l2 * l2).epsilon(1e-14));
        // Gauss: scal = H^2 - |A|^2 along the lambda expansion
        CHECK(inv.scal ==
              doctest::Approx(inv.H * inv.H - inv.normA * inv.normA).epsilon(1e-12));
      }
    }
  }
  // inner-graph ratios for k = 3
  const double rho = 0.01;
  const CurvaturePoint cp = curvature_point(rho, 0.001, 3);
  CHECK(cp.H / cp.normA == doctest::Approx(7.0 / std::sqrt(33.0)).epsilon(1e-13));
  CHECK(cp.scal / (cp.normA * cp.normA) == doctest::Approx(16.0 / 33.0).epsilon(1e-13));
}

TEST_CASE("normal components") {
  auto [nt1, ntan1] = normal_components(-1.0);  // f' = -1 at r = 4 rho^4
  CHECK(nt1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(ntan1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  auto [nt0, ntan0] = normal_components(0.0);
  CHECK(nt0 == 1.0);
  CHECK(ntan0 == 0.0);
  // nu_t^2 + nu_tan^2 = 1
  for (double d1 : {-50.0, -0.3, 0.0, 0.2, 4.0}) {
    auto [nt, ntan] = normal_components(d1);
    CHECK(nt * nt + ntan * ntan == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Gauss consistency against the warped-product route") {
  // scal from H^2 - |A|^2 equals the lambda expansion on a dense grid
  const double rho = 0.01;
  for (int k : {2, 3, 4, 7}) {
    for (int i = 0; i <= 200; ++i) {
      const double r = 1e-7 * std::pow(0.19 / 1e-7, i / 200.0);
      const CurvaturePoint cp = curvature_point(rho, r, k);
      const double expansion = 2.0 * (k - 1) * cp.lambda1 * cp.lambda2 +
                               (k - 1) * (k - 2) * cp.lambda2 * cp.lambda2;
      CHECK(std::fabs(cp.scal - expansion) <=
            1e-10 * std::max(1.0, std::fabs(expansion)));
    }
  }
}

TEST_CASE("vertical-tangent matching: lambda2 -> rho^-4 at the corner") {
  // lambda2 rho^4 = (1 + (w/rho)^2)^{-5/2}, so the gap shrinks like (w/rho)^2
  const double rho = 0.01;
  double prev_gap = 1e300;
  for (double wfrac : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    const double w = std::sqrt(std::sqrt(rho)) * wfrac;  // shrink toward the corner
    const double r = r_of_w(rho, w);
    auto [l1, l2] = principal_curvatures(xi_prime_from_w(rho, w), xi_second_from_w(rho, w), r);
    (void)l1;
    const double gap = std::fabs(l2 * std::pow(rho, 4.0) - 1.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-8);
}

TEST_CASE("arc length d_rho: values, range and two routes") {
  const double R = 0.5;
  const struct { double rho, d; } cases[] = {
      {0.05, kD_005}, {0.02, kD_002}, {0.01, kD_001}, {0.001, kD_0001}};
  for (const auto& c : cases) {
    const ArcLengthResult a = arc_length_d(c.rho, R, 1e-12);
    CHECK(a.value == doctest::Approx(c.d).epsilon(1e-12));
    CHECK(a.value > 1.0);
    CHECK(a.value < 1.0 + R);
    CHECK(std::fabs(a.antiderivative_route - a.quadrature_route) < 1e-9);
    CHECK(a.quadrature_error < 1e-9);
  }
  CHECK_THROWS_AS(arc_length_d(0.2, 0.5, 1e-12), std::domain_error);
  // cylinder contribution is exactly 1 - a_rho: strip it and compare
  const ArcLengthResult a = arc_length_d(0.01, R, 1e-12);
  const double graph_only = a.value - (1.0 - a_rho(0.01));
  CHECK(graph_only > R);
  CHECK(graph_only < R + 2.0 * a_rho(0.01));
}

TEST_CASE("handle curve parametrization") {
  const double rho = 0.01, R = 0.5;
  HandleCurve c(rho, R);
  CHECK(c.length() == doctest::Approx(kD_001).epsilon(1e-12));
  CHECK(c.r_of_tau(0.0) == doctest::Approx(R).epsilon(1e-15));
  CHECK(c.t_of_tau(c.length()) == doctest::Approx(1.0).epsilon(1e-12));

  // tau_of_r and r_of_tau invert each other across all segments
  for (double r : {0.45, 0.22, 0.15, 0.101, 0.05, 0.001, 1e-5, 3e-8}) {
    const double tau = c.tau_of_r(r);
    CHECK(c.r_of_tau(tau) == doctest::Approx(r).epsilon(1e-10));
  }
  // r monotone non-increasing in tau
  double prev = R + 1e-9;
  for (int i = 0; i <= 400; ++i) {
    const double tau = c.length() * i / 400.0;
    const double r = c.r_of_tau(tau);
    CHECK(r <= prev + 1e-12);
    prev = r;
  }
  // dt/dtau in [0,1], = 1 on the cylinder, 0 on the flat slice
  CHECK(c.dt_dtau(0.1) == 0.0);
  CHECK(c.dt_dtau(c.length() - 0.1) == 1.0);
  const double tau_mid = c.tau_of_r(1e-4);
  CHECK(c.dt_dtau(tau_mid) > 0.0);
  CHECK(c.dt_dtau(tau_mid) < 1.0);
}

TEST_CASE("warped_form sampling") {
  const RevolutionCurve rc = warped_form(0.01, 0.5, 120, 30);
  CHECK(rc.cylinder_radius == doctest::Approx(1e-8).epsilon(1e-15));
  CHECK(rc.total_length == doctest::Approx(kD_001).epsilon(1e-12));
  for (size_t i = 1; i < rc.tau.size(); ++i) {
    CHECK(rc.tau[i] >= rc.tau[i - 1] - 1e-12);   // tau increases
    CHECK(rc.r[i] <= rc.r[i - 1] + 1e-12);       // radius non-increasing
  }
  CHECK(rc.r.back() == doctest::Approx(1e-8).epsilon(1e-15));
}
