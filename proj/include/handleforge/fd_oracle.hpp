#pragma once

#include <functional>
#include <string>
#include <vector>

#include "handleforge/geometry.hpp"

namespace hf {

/// Result of one closed-form vs finite-difference comparison.
struct OracleReport {
  std::string quantity;
  std::string grid;
  double max_rel_err = 0.0;
  double argmax_r = 0.0;
  double fd_step = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct OracleError : std::runtime_error {
  OracleReport report;
  explicit OracleError(OracleReport r)
      : std::runtime_error("oracle comparison failed for " + r.quantity +
                           " (max rel err " + std::to_string(r.max_rel_err) + ")"),
        report(std::move(r)) {}
};

/// Central second-order stencils from value samples alone.
double fd_d1(const std::function<double(double)>& fn, double x, double h);
double fd_d2(const std::function<double(double)>& fn, double x, double h);

/// Step rule h = max(1e-8, 1e-5 * r).
double default_h(double r);

struct FdDerivatives {
  std::vector<double> d1;
  std::vector<double> d2;
};

/// Derivative estimates on a grid; throws if a stencil would leave [lo, hi].
FdDerivatives fd_derivatives(const std::function<double(double)>& fn,
                             const std::vector<double>& grid, double lo, double hi,
                             const std::function<double(double)>& h_rule);

/// Curvatures recomputed from profile VALUES only, using the substituted
/// variable w = sqrt(sqrt(r)-rho^2) near the vertical tangent (the profile is
/// analytic in w there, raw FD in r is not usable).
CurvaturePoint fd_curvature_point(const std::function<double(double)>& value_fn,
                                  double rho, double r, int k, bool use_w_substitution);

/// Max relative deviation between closed-form and FD values over a grid.
OracleReport compare(const std::string& quantity, const std::vector<double>& grid,
                     const std::vector<double>& closed, const std::vector<double>& fd,
                     double tol);

/// Measured order of convergence of the FD error against closed-form values,
/// from steps h and h/2 (slope = log2 of the error ratio).
double fd_convergence_order(const std::function<double(double)>& fn, double closed_d1,
                            double x, double h0);

}  // namespace hf
