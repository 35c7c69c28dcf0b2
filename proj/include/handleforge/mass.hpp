#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "handleforge/report.hpp"

namespace hf {

/// The constant stack behind the corner-jump estimate:
///   c0 = max{4|kappa|, sqrt(n|sigma0|/(n+1)), sqrt(n|sigma1|/(n+1))/cosh(1)},
///   c1 = c2 = cosh(1) c0,  sigma2 = -c2^2 (n+1)/n,
///   K = sigma2/(n(n+1)),
///   h0(H) = |kappa| sinh(1) + max(H, 0)/3.
struct MassConstants {
  int n;
  double sigma0;
  double sigma1;
  double kappa;
  double c0;
  double c1;
  double c2;
  double sigma2;
  double K;
  double r0;

  double h0(double H) const;
};

/// Builds and asserts the invariants c0 >= 4|kappa|, |sigma2| > max{|sigma0|,
/// |sigma1|}, c_i^2 (n+1)/n >= -sigma_i; throws std::logic_error on violation.
MassConstants build_constants(int n, double sigma0, double sigma1, double kappa,
                              double r0 = 1.0);

/// Mean curvature of a distance sphere of radius r0 in hyperbolic space with
/// scalar curvature sigma2 < 0: n sqrt(-K) coth(r0 sqrt(-K)), K = sigma2/(n(n+1)).
double hyp_sphere_H(int n, double sigma2, double r0);

/// Verifies the combined corner-jump inequality
///   cosh(1) H0 + sinh(1) c0 - h0(H0) >= sinh(1) |H0|   with c0 = 4|kappa|
/// over the H0 grid (all H0 >= kappa).
MarginReport dec_jump_check(double kappa, const std::vector<double>& H0_grid);

/// Growth of the fill-in constant: C0 (max{sqrt(-sigma0), -kappa} + 1).
double lambda_asymptotic(double sigma0, double kappa, double C0);

/// Hyperbolic rotation F_theta = [[cosh, -sinh], [-sinh, cosh]] applied to a
/// spacetime mean-curvature vector (H, c).
std::array<double, 2> hyperbolic_rotation(double theta, const std::array<double, 2>& v);

/// The many-tiny-spheres configuration: ell spheres of radius r joined by
/// tubes, with total mean curvature at least K under volume and diameter at
/// most 1/K.
struct PimpleConfig {
  int n;
  double K;
  double c_n;        // vol(S^n)
  std::uint64_t ell; // number of outer spheres, floor((2 c_n K)^{2n-1})
  double r;          // sphere radius (2 c_n K)^{-2}
  double tmc_lb;     // n c_n ell r^{n-1} / 2
  double vol_ub;     // ell c_n r^n + 1/(2K)
  double diam_ub;    // 12 r
};

/// Throws std::domain_error if K is too small (needs 20 r <= 1/K); throws
/// std::logic_error if a derived bound fails (tmc_lb >= K, vol_ub <= 1/K,
/// diam_ub <= 1/K).
PimpleConfig pimple(int n, double K);

}  // namespace hf
