#include "handleforge/fd_oracle.hpp"

#include <cmath>

namespace hf {

double fd_d1(const std::function<double(double)>& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

double fd_d2(const std::function<double(double)>& fn, double x, double h) {
  return (fn(x + h) - 2.0 * fn(x) + fn(x - h)) / (h * h);
}

double default_h(double r) { return std::max(1e-8, 1e-5 * r); }

FdDerivatives fd_derivatives(const std::function<double(double)>& fn,
                             const std::vector<double>& grid, double lo, double hi,
                             const std::function<double(double)>& h_rule) {
  FdDerivatives out;
  out.d1.reserve(grid.size());
  out.d2.reserve(grid.size());
  for (double x : grid) {
    const double h = h_rule(x);
    if (x - h < lo || x + h > hi)
      throw std::domain_error("fd_derivatives: stencil leaves the domain at r = " +
                              std::to_string(x));
    out.d1.push_back(fd_d1(fn, x, h));
    out.d2.push_back(fd_d2(fn, x, h));
  }
  return out;
}

CurvaturePoint fd_curvature_point(const std::function<double(double)>& value_fn,
                                  double rho, double r, int k, bool use_w_substitution) {
  double d1, d2;
  if (use_w_substitution) {
    // Sample the profile as a function of w; r(w) = (w^2+rho^2)^2 is part of
    // the oracle's own change of variables, not of the profile under test.
    // A wide stencil with one Richardson pass keeps the chain-rule division
    // by (dr/dw)^2 from amplifying value roundoff; the step stays inside
    // w > 0 and below the blend seam at r = sqrt(rho).
    const double w0 = w_of_r(rho, r);
    auto g = [&](double w) { return value_fn(r_of_w(rho, w)); };
    const double w_seam = w_of_r(rho, std::min(std::sqrt(rho), 1.0));
    double h = 0.3 * w0;
    if (w0 < w_seam) h = std::min(h, 0.45 * (w_seam - w0));
    const double g1 = (4.0 * fd_d1(g, w0, 0.5 * h) - fd_d1(g, w0, h)) / 3.0;
    const double g2 = (4.0 * fd_d2(g, w0, 0.5 * h) - fd_d2(g, w0, h)) / 3.0;
    const double rp = 4.0 * w0 * (w0 * w0 + rho * rho);
    const double rpp = 4.0 * (3.0 * w0 * w0 + rho * rho);
    d1 = g1 / rp;
    d2 = (g2 - d1 * rpp) / (rp * rp);
  } else {
    // the second difference needs a larger step than the first to stay above
    // the cancellation floor
    d1 = fd_d1(value_fn, r, default_h(r));
    d2 = fd_d2(value_fn, r, std::max(1e-6, 3e-4 * r));
  }
  auto [l1, l2] = principal_curvatures(d1, d2, r);
  auto inv = shape_invariants(l1, l2, k);
  auto [nt, ntan] = normal_components(d1);
  return {r, l1, l2, inv.H, inv.normA, inv.scal, nt, ntan};
}

OracleReport compare(const std::string& quantity, const std::vector<double>& grid,
                     const std::vector<double>& closed, const std::vector<double>& fd,
                     double tol) {
  OracleReport rep;
  rep.quantity = quantity;
  rep.grid = std::to_string(grid.size()) + " points in [" +
             std::to_string(grid.front()) + ", " + std::to_string(grid.back()) + "]";
  rep.tol = tol;
  for (size_t i = 0; i < grid.size(); ++i) {
    const double scale = std::max(std::fabs(closed[i]), 1.0);
    const double err = std::fabs(closed[i] - fd[i]) / scale;
    if (err > rep.max_rel_err) {
      rep.max_rel_err = err;
      rep.argmax_r = grid[i];
    }
  }
  rep.pass = rep.max_rel_err < tol;
  return rep;
}

double fd_convergence_order(const std::function<double(double)>& fn, double closed_d1,
                            double x, double h0) {
  const double e0 = std::fabs(fd_d1(fn, x, h0) - closed_d1);
  const double e1 = std::fabs(fd_d1(fn, x, 0.5 * h0) - closed_d1);
  if (e1 == 0.0) return 2.0;
  return std::log2(e0 / e1);
}

}  // namespace hf
