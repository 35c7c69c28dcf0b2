#include <cmath>

#include "doctest.h"
#include "handleforge/estimates.hpp"

using namespace hf;

TEST_CASE("cbar instances") {
  CHECK(cbar(3) == 486.0);
  CHECK(cbar(2) == 468.0);
  CHECK(cbar(7) == 558.0);
  CHECK_THROWS_AS(cbar(1), std::domain_error);
}

TEST_CASE("five-part estimate at rho = 0.01") {
  for (int k : {2, 3, 4}) {
    HandleParams p;
    p.rho = 0.01;
    p.k = k;
    p.n = std::max(k, 3);
    p.R = 0.5;
    const auto reports = check_prop_euclidean(p);
    CHECK(reports[0].pass);  // structure
    CHECK(reports[1].pass);  // pinching
    CHECK(reports[2].pass);  // min{H^2, scal} (vacuous for k = 2)
    CHECK(reports[3].pass);  // normal deflection
    CHECK(reports[4].pass);  // outer |A| and scal
    if (k >= 3) CHECK(reports[2].min_margin > 0.0);
  }
}

TEST_CASE("item (iii) margin structure at r = rho^2") {
  // lambda2(rho^2) = rho^{-3/2} exactly, so scal = (k-1)(k-5/2) rho^{-3} there
  const double rho = 0.01;
  const int k = 3;
  const CurvaturePoint cp = curvature_point(rho, rho * rho, k);
  CHECK(cp.lambda2 == doctest::Approx(std::pow(rho, -1.5)).epsilon(1e-12));
  CHECK(cp.scal == doctest::Approx((k - 1) * (k - 2.5) * std::pow(rho, -3.0)).epsilon(1e-12));
  CHECK(cp.scal > 0.5 * std::pow(rho, -3.0));
}

TEST_CASE("k = 2 skips the scal claims but keeps the H claim") {
  HandleParams p;
  p.rho = 0.01;
  p.k = 2;
  p.n = 3;
  p.R = 0.5;
  const auto reports = check_prop_euclidean(p);
  CHECK(reports[1].pass);
  CHECK(reports[2].pass);  // reported pass, nothing claimed
  CHECK(reports[2].min_margin == 0.0);
}

TEST_CASE("outer |A| respects the sharper proof bound too") {
  // |A| <= 3 sqrt(2(k+24)) rho^{3/8} on [sqrt(rho), 2 sqrt(rho)]
  for (double rho : {0.04, 0.01}) {
    for (int k : {3, 4}) {
      const double bound = 3.0 * std::sqrt(2.0 * (k + 24.0)) * std::pow(rho, 0.375);
      const double sq = std::sqrt(rho);
      for (int i = 0; i <= 400; ++i) {
        const double r = sq + sq * i / 400.0;
        CHECK(curvature_point(rho, r, k).normA <= bound);
      }
    }
  }
}

TEST_CASE("raw margins for (ii)-(iii) grow as rho decreases at fixed r/rho^2") {
  const int k = 3;
  for (double x : {0.25, 1.0}) {
    double prev_ii = -1e300, prev_iii = -1e300;
    for (double rho : {0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001}) {
      const CurvaturePoint cp = curvature_point(rho, x * rho * rho, k);
      const double m_ii = cp.H - 0.5 * cp.normA;
      const double m_iii = std::min(cp.H * cp.H, cp.scal) - 0.5 * std::pow(rho, -3.0);
      CHECK(m_ii > prev_ii);
      CHECK(m_iii > prev_iii);
      prev_ii = m_ii;
      prev_iii = m_iii;
    }
  }
}

TEST_CASE("inner H/|A| ratio is the exact constant") {
  for (int k : {2, 3, 5, 7}) CHECK(inner_ratio_deviation(0.01, k) < 1e-10);
}

TEST_CASE("length bounds: range always, derivative bound only at small rho") {
  // range + quadrature agreement hold on the coarse grid
  const auto coarse = check_length_bounds({0.05, 0.01, 0.001}, 0.5);
  CHECK(coarse[0].pass);
  // the FD bound |d d/d rho| < rho^{1/4} genuinely fails at these scales
  // (the a_rho term contributes ~3.08 rho^{3/8}); the crossover sits near 1.2e-4
  CHECK(!coarse[1].pass);
  const double crossover = length_bound_crossover(0.5, 1e-6, 1e-2);
  CHECK(crossover > 1.0e-4);
  CHECK(crossover < 1.5e-4);

  // below the crossover the bound holds with margin
  const auto fine = check_length_bounds({8e-5, 2e-5, 5e-6}, 0.02);
  CHECK(fine[0].pass);
  CHECK(fine[1].pass);

  // degenerate rho = R^2/4 is rejected
  CHECK_THROWS_AS(check_length_bounds({0.0625}, 0.5), std::domain_error);
}

TEST_CASE("FD length derivative against the independent reference") {
  // 50-digit FD reference at rho = 0.01, R = 0.5: -0.53747
  const double dd = length_derivative_fd(0.01, 0.5);
  CHECK(dd == doctest::Approx(-0.53747074).epsilon(1e-5));
}
