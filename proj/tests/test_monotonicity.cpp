#include <cmath>

#include "doctest.h"
#include "handleforge/conformal.hpp"
#include "handleforge/monotonicity.hpp"

using namespace hf;

TEST_CASE("bump function support and normalization") {
  CHECK(bump_beta(0.0) == 1.0);
  CHECK(bump_beta(0.3) == 0.0);
  CHECK(bump_beta(-0.3) == 0.0);
  CHECK(bump_beta(0.25) == 0.0);
  CHECK(bump_beta(0.1) > 0.0);
  CHECK(bump_beta(0.1) == bump_beta(-0.1));
  // int beta = 1/4 for the quintic cutoff (2 * (1/4) * int_0^1 eta)
  CHECK(bump_beta_integral() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("reparametrization family basics") {
  EuclidReparam rep(0.01, 0.5);
  const double d1 = rep.d(0.01);

  // phi_{rho1,rho1} = id and q(rho1) = 0
  CHECK(rep.q(0.01) == doctest::Approx(0.0).epsilon(1e-14));
  for (double tau : {0.0, 0.3, 0.5, 1.0, d1}) {
    CHECK(rep.phi(0.01, tau) == doctest::Approx(tau).epsilon(1e-13));
  }

  // endpoints map to endpoints for every rho
  for (double rho : {0.008, 0.005, 0.002}) {
    CHECK(rep.phi(rho, 0.0) == 0.0);
    CHECK(rep.phi(rho, d1) == doctest::Approx(rep.d(rho)).epsilon(1e-12));
    // dphi/dtau = 1 exactly off the bump support [1/4, 3/4]
    CHECK(rep.dphi_dtau(rho, 0.2) == 1.0);
    CHECK(rep.dphi_dtau(rho, 0.8) == 1.0);
    CHECK(rep.dphi_dtau(rho, 0.5) != 1.0);
    // strict positivity and the |dphi/dtau - 1| <= |q| max(beta) envelope
    for (int i = 0; i <= 100; ++i) {
      const double tau = d1 * i / 100.0;
      const double dp = rep.dphi_dtau(rho, tau);
      CHECK(dp > 0.0);
      CHECK(std::fabs(dp - 1.0) <= std::fabs(rep.q(rho)) + 1e-15);
    }
  }

  // q is continuous in rho (FD continuity)
  const double h = 1e-6;
  CHECK(std::fabs(rep.q(0.005 + h) - rep.q(0.005 - h)) < 1e-4);
}

TEST_CASE("pullback entries are positive and match the warp") {
  EuclidReparam rep(0.01, 0.5);
  for (double tau : {0.0, 0.1, 0.5, 1.0, 1.4}) {
    const auto at = rep.pullback(0.005, tau);
    CHECK(at.dtau2_coeff > 0.0);
    CHECK(at.warp > 0.0);
    // warp = r_rho(phi(tau))^2
    const double r = rep.curve(0.005).r_of_tau(
        std::min(rep.phi(0.005, tau), rep.d(0.005)));
    CHECK(at.warp == doctest::Approx(r * r).epsilon(1e-12));
  }
}

TEST_CASE("warp radius grows with rho at fixed tau on the graph zone") {
  // the bend starts earlier and descends slower for larger rho
  EuclidReparam rep(0.01, 0.5);
  const double tau = 0.35;  // inside the graph region for rho in [0.002, 0.01]
  double prev = 0.0;
  for (double rho : {0.002, 0.005, 0.01}) {
    const double r = rep.curve(rho).r_of_tau(rep.phi(rho, tau));
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("monotonicity sweep passes in the validated small-rho regime") {
  const std::vector<double> grid = {2e-5, 1.5e-5, 1e-5, 7e-6, 5e-6};
  const MonoReport rep = check_monotone_euclidean(2e-5, grid, 200, 0.02, 0.5);
  CHECK(rep.pass);
  CHECK(rep.min_fd >= -1e-8);
  CHECK(rep.frac_strict >= 0.99);
}

TEST_CASE("monotonicity fails at rho1 = 0.01 near the bump center") {
  // at these scales 8|d d/d rho| > 1/2 and the dtau^2 entry decreases faster
  // than the e^{rho/2} factor compensates
  const std::vector<double> grid = {0.01, 0.005};
  const MonoReport rep = check_monotone_euclidean(0.01, grid, 64, 0.5, 0.5);
  CHECK(!rep.pass);
  CHECK(rep.worst_entry == 0);  // dtau^2 coefficient
  CHECK(rep.worst_tau > 0.25);
  CHECK(rep.worst_tau < 0.75);
}

TEST_CASE("exponent sensitivity: exponent 0 loses strictness on the flat zone") {
  const std::vector<double> grid = {2e-5, 1e-5, 5e-6};
  const MonoReport strict = check_monotone_euclidean(2e-5, grid, 200, 0.02, 0.5);
  const MonoReport zero = check_monotone_euclidean(2e-5, grid, 200, 0.02, 0.0);
  CHECK(strict.frac_strict > zero.frac_strict);
  // the smallest passing exponent on this grid is positive
  const double c =
      smallest_passing_exponent(2e-5, grid, 200, 0.02, {0.0, 1e-3, 1e-2, 0.1, 0.25, 0.5});
  CHECK(c > 0.0);
  CHECK(c <= 0.5);
}

TEST_CASE("final conformal path: monotone in s, scal bounded below") {
  // The scal bound needs the blend-zone estimate Cbar rho^{3/4} < rho^{1/4},
  // i.e. rho1 below ~(2 Cbar)^{-2}; 1e-6 leaves a factor-2 margin for k = 3.
  const double rho1 = 1e-6;
  const std::vector<double> s_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  const FinalPathReport rep =
      final_path_metrics(rho1, rho1, 1.0 / 3.0, 3, 5, s_grid, 300, 0.02);
  CHECK(rep.monotone.pass);
  // d/ds[(1-s)u + 2s] = 2 - u >= 1 - rho1 > 0
  CHECK(rep.monotone.min_margin >= 1.0 - rho1);
  CHECK(rep.scal_bound.pass);

  // at rho1 = 0.01 the outer blend zone genuinely dips below -rho1^{1/4}
  // (its fiber scal is of size Cbar rho^{3/4} >> rho^{1/4} there)
  const FinalPathReport big = final_path_metrics(0.01, 0.01, 1.0 / 3.0, 3, 5, s_grid, 300, 0.5);
  CHECK(big.monotone.pass);
  CHECK(!big.scal_bound.pass);

  // s = 1: constant conformal factor, scal scales by e^{-rho1} 2^{-4/(n-2)};
  // FD in s of the metric entries stays positive
  HandleCurve curve(rho1, 0.02);
  const ConformalData cd(5, rho1, 1.0 / 3.0);
  for (double tau : {0.001, 0.005, 0.4}) {
    const double t = curve.t_of_tau(tau);
    auto entry = [&](double s) {
      const double w = (1.0 - s) * cd.u(t) + 2.0 * s;
      return std::exp(rho1) * std::pow(w, 4.0 / 3.0) * curve.r_of_tau(tau) * curve.r_of_tau(tau);
    };
    const double fd = (entry(0.5 + 1e-5) - entry(0.5 - 1e-5)) / 2e-5;
    CHECK(fd > 0.0);
  }
}
