#include "handleforge/estimates.hpp"

#include <cmath>

namespace hf {

double cbar(int k) {
  if (k < 2) throw std::domain_error("cbar: k must be >= 2");
  return 18.0 * k + 432.0;
}

namespace {

struct MarginAcc {
  double min_margin = 1e300;
  double arg = 0.0;
  void take(double margin, double at) {
    if (margin < min_margin) {
      min_margin = margin;
      arg = at;
    }
  }
};

// normalized margin for a claim LHS > RHS
double nmargin(double lhs, double rhs) { return (lhs - rhs) / std::max(std::fabs(rhs), 1.0); }

}  // namespace

std::array<MarginReport, 5> check_prop_euclidean(const HandleParams& params,
                                                 const PropGrids& grids) {
  const double rho = params.rho;
  const int k = params.k;
  const int n_pts = grids.points_per_segment;
  const double sq = std::sqrt(rho);
  const double r4 = rho * rho * rho * rho;
  const double rho3 = rho * rho * rho;
  const double Cb = cbar(k);
  const double r_out = std::min(params.R, 1.0);

  std::array<MarginReport, 5> out;

  // (i) structural: a_rho < 2 rho, f == 0 beyond 2 sqrt(rho) (sampled), and
  // the cylinder radius below height 2 rho.
  {
    MarginAcc acc;
    const double a = a_rho(rho);
    acc.take(nmargin(2.0 * rho, a), r4);  // a < 2 rho
    for (int i = 0; i <= n_pts; ++i) {
      const double r = 2.0 * sq + (r_out - 2.0 * sq) * double(i) / n_pts;
      acc.take(nmargin(0.0, std::fabs(f(rho, r))), r);  // exact flatness: margin 0 allowed
    }
    // the graph tops out at height a_rho, below 2 rho, so every slice above
    // 2 rho meets the handle in the cylinder alone
    out[0] = {"prop-i", rho, k, r4, r_out, acc.min_margin, acc.arg, acc.min_margin >= 0.0};
  }

  // (ii) on [rho^4, sqrt(rho)]
  {
    MarginAcc acc;
    for (int i = 0; i <= n_pts; ++i) {
      // log-spaced in w to resolve the corner
      const double w_hi = w_of_r(rho, sq);
      const double w_lo = w_hi * 1e-8;
      const double w = w_hi * std::pow(w_lo / w_hi, double(i) / n_pts);
      const double r = r_of_w(rho, w);
      auto [l1, l2] = principal_curvatures(xi_prime_from_w(rho, w), xi_second_from_w(rho, w), r);
      auto inv = shape_invariants(l1, l2, k);
      acc.take(nmargin(inv.H, 0.5 * inv.normA), r);
      if (k >= 3) acc.take(nmargin(inv.scal, inv.normA * inv.normA / 3.0), r);
    }
    out[1] = {"prop-ii", rho, k, r4, sq, acc.min_margin, acc.arg, acc.min_margin > 0.0};
  }

  // (iii) on [rho^4, rho^2] plus the cylinder (k >= 3 only)
  {
    MarginAcc acc;
    if (k >= 3) {
      const double rhs = 0.5 / rho3;
      for (int i = 0; i <= n_pts; ++i) {
        const double w_hi = w_of_r(rho, rho * rho);
        const double w_lo = w_hi * 1e-8;
        const double w = w_hi * std::pow(w_lo / w_hi, double(i) / n_pts);
        const double r = r_of_w(rho, w);
        auto [l1, l2] = principal_curvatures(xi_prime_from_w(rho, w), xi_second_from_w(rho, w), r);
        auto inv = shape_invariants(l1, l2, k);
        acc.take(nmargin(std::min(inv.H * inv.H, inv.scal), rhs), r);
      }
      const CurvaturePoint cyl = cylinder_point(rho, k);
      acc.take(nmargin(std::min(cyl.H * cyl.H, cyl.scal), rhs), r4);
      out[2] = {"prop-iii", rho, k, r4, rho * rho, acc.min_margin, acc.arg, acc.min_margin > 0.0};
    } else {
      out[2] = {"prop-iii", rho, k, r4, rho * rho, 0.0, 0.0, true};  // not claimed for k = 2
    }
  }

  // (iv) |nu_tan| < Cbar sqrt(rho) for r in [rho^2, R]
  {
    MarginAcc acc;
    const double lhs_bound = Cb * sq;
    for (int i = 0; i <= n_pts; ++i) {
      const double r = rho * rho * std::pow(r_out / (rho * rho), double(i) / n_pts);
      auto [nt, ntan] = normal_components(f_prime(rho, std::min(r, r_out)));
      (void)nt;
      acc.take(nmargin(lhs_bound, ntan), r);
    }
    out[3] = {"prop-iv", rho, k, rho * rho, r_out, acc.min_margin, acc.arg, acc.min_margin > 0.0};
  }

  // (v) |A| < Cbar rho^{3/8} and scal > -Cbar rho^{3/4} on [sqrt(rho), 2 sqrt(rho)]
  {
    MarginAcc acc;
    const double bA = Cb * std::pow(rho, 0.375);
    const double bS = -Cb * std::pow(rho, 0.75);
    for (int i = 0; i <= n_pts; ++i) {
      const double r = sq + sq * double(i) / n_pts;
      const CurvaturePoint cp = curvature_point(rho, r, k);
      acc.take(nmargin(bA, cp.normA), r);
      acc.take(nmargin(cp.scal, bS), r);
    }
    out[4] = {"prop-v", rho, k, sq, 2.0 * sq, acc.min_margin, acc.arg, acc.min_margin > 0.0};
  }

  return out;
}

double inner_ratio_deviation(double rho, int k, int n_points) {
  const double target = (4.0 * k - 5.0) / std::sqrt(16.0 * k - 15.0);
  const double w_hi = w_of_r(rho, std::sqrt(rho));
  const double w_lo = w_hi * 1e-8;
  double worst = 0.0;
  for (int i = 0; i <= n_points; ++i) {
    const double w = w_hi * std::pow(w_lo / w_hi, double(i) / n_points);
    const double r = r_of_w(rho, w);
    auto [l1, l2] = principal_curvatures(xi_prime_from_w(rho, w), xi_second_from_w(rho, w), r);
    auto inv = shape_invariants(l1, l2, k);
    worst = std::max(worst, std::fabs(inv.H / inv.normA - target));
  }
  return worst;
}

double length_derivative_fd(double rho, double R) {
  // step rule max(1e-6, 1e-4 rho), capped so the stencil stays in (0, R^2/4]
  const double h = std::min(std::max(1e-6, 1e-4 * rho), 0.5 * rho);
  const double dp = arc_length_d(rho + h, R).value;
  const double dm = arc_length_d(rho - h, R).value;
  return (dp - dm) / (2.0 * h);
}

std::array<MarginReport, 2> check_length_bounds(const std::vector<double>& rho_grid, double R) {
  for (double rho : rho_grid)
    if (!(rho < R * R / 4.0))
      throw std::domain_error("check_length_bounds: need rho < R^2/4 on the whole grid");

  MarginAcc range_acc, deriv_acc;
  for (double rho : rho_grid) {
    const double d = arc_length_d(rho, R).value;
    range_acc.take(nmargin(d, 1.0), rho);
    range_acc.take(nmargin(1.0 + R, d), rho);
    const double dd = length_derivative_fd(rho, R);
    deriv_acc.take(nmargin(std::pow(rho, 0.25), std::fabs(dd)), rho);
  }
  std::array<MarginReport, 2> out;
  out[0] = {"length-range", rho_grid.front(), 0, 0.0, R,
            range_acc.min_margin, range_acc.arg, range_acc.min_margin > 0.0};
  out[1] = {"length-deriv", rho_grid.front(), 0, 0.0, R,
            deriv_acc.min_margin, deriv_acc.arg, deriv_acc.min_margin > 0.0};
  return out;
}

double length_bound_crossover(double R, double rho_lo, double rho_hi) {
  auto margin = [&](double rho) {
    return std::pow(rho, 0.25) - std::fabs(length_derivative_fd(rho, R));
  };
  double lo = rho_lo, hi = rho_hi;
  if (margin(lo) <= 0.0) throw std::domain_error("length_bound_crossover: bound fails at rho_lo");
  if (margin(hi) >= 0.0) return hi;  // bound holds on the whole bracket
  for (int it = 0; it < 60; ++it) {
    const double mid = std::sqrt(lo * hi);
    (margin(mid) > 0.0 ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace hf
