#pragma once

#include <array>
#include <vector>

#include "handleforge/handle.hpp"
#include "handleforge/report.hpp"

namespace hf {

/// The sweep constant from the handle estimates: C-bar = 18k + 432.
double cbar(int k);

struct PropGrids {
  int points_per_segment = 200;
};

/// Verifies the five handle estimates on their stated radius ranges:
///   (i)   structure: flat for r >= 2 sqrt(rho); cylinder above height a_rho;
///         a_rho < 2 rho
///   (ii)  H > |A|/2 on [rho^4, sqrt(rho)] (k >= 2), scal > |A|^2/3 (k >= 3)
///   (iii) min{H^2, scal} > rho^{-3}/2 on [rho^4, rho^2] and on the cylinder
///         (k >= 3)
///   (iv)  |nu_tan| < Cbar sqrt(rho) on [rho^2, R]
///   (v)   |A| < Cbar rho^{3/8} and scal > -Cbar rho^{3/4} on
///         [sqrt(rho), 2 sqrt(rho)]
/// Claims outside their k-range are reported pass with the margin of the
/// claims that do apply (H-part only for k = 2).
std::array<MarginReport, 5> check_prop_euclidean(const HandleParams& params,
                                                 const PropGrids& grids = {});

/// Equality check H/|A| = (4k-5)/sqrt(16k-15) on [rho^4, sqrt(rho)]; returns
/// the max absolute deviation over the grid.
double inner_ratio_deviation(double rho, int k, int n_points = 200);

/// d_rho bounds: 1 < d_rho < 1 + R and |d d_rho / d rho| < rho^{1/4} with the
/// derivative by central differences (step max(1e-6, 1e-4 rho)).
std::array<MarginReport, 2> check_length_bounds(const std::vector<double>& rho_grid, double R);

/// FD derivative of d_rho (memoizes nothing; callers sweep).
double length_derivative_fd(double rho, double R);

/// Largest rho at which |d d_rho/d rho| = rho^{1/4} (bisection); the
/// length-derivative bound holds strictly below this value.
double length_bound_crossover(double R, double rho_lo = 1e-6, double rho_hi = 1e-2);

}  // namespace hf
