#pragma once

#include <utility>
#include <vector>

#include "handleforge/profile.hpp"

namespace hf {

/// Pointwise extrinsic/intrinsic data of the rotationally symmetric
/// hypersurface.  lambda2 has multiplicity k-1; scal is the intrinsic scalar
/// curvature via the flat-ambient Gauss equation scal = H^2 - |A|^2.
struct CurvaturePoint {
  double r = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double H = 0.0;
  double normA = 0.0;
  double scal = 0.0;
  double nu_t = 1.0;    // <nu, d/dt>, upward graph normal
  double nu_tan = 0.0;  // |nu^T|
};

/// Principal curvatures of the graph of f at radius r:
///   lambda1 = -f''/(1+f'^2)^{3/2},  lambda2 = -f'/(r sqrt(1+f'^2)).
std::pair<double, double> principal_curvatures(double f_d1, double f_d2, double r);
std::pair<double, double> principal_curvatures(const PiecewiseProfile& profile, double r);

/// H, |A|, scal from the principal curvatures (k >= 2).
struct ShapeInvariants {
  double H;
  double normA;
  double scal;
};
ShapeInvariants shape_invariants(double lambda1, double lambda2, int k);

/// Normal decomposition: nu_tan = |f'|/sqrt(1+f'^2), nu_t = 1/sqrt(1+f'^2).
std::pair<double, double> normal_components(double f_d1);

/// Full curvature sample at radius r on the graph part (needs r > rho^4).
CurvaturePoint curvature_point(double rho, double r, int k);
/// Curvature data on the straight cylinder r = rho^4 (lambda1 = 0, nu_t = 0).
CurvaturePoint cylinder_point(double rho, int k);

// ---------------------------------------------------------------------------
// Arc length of the generating curve.
//
// The closed-form antiderivative of sqrt(1+xi'^2) on the pure-xi segment is
//   F(r) = r^{1/4} sqrt(sqrt(r)-rho^2) (sqrt(r) + (3/2) rho^2)
//          + (3/2) rho^4 arsinh(sqrt(sqrt(r)-rho^2)/rho),
// normalized so F(rho^4) = 0.
// ---------------------------------------------------------------------------
double arc_antiderivative(double rho, double r);
double arc_antiderivative_from_w(double rho, double w);

struct ArcLengthResult {
  double value = 0.0;            // d_rho
  double quadrature_error = 0.0; // error estimate of the numeric part
  double antiderivative_route = 0.0;  // d_rho with the xi-part from F
  double quadrature_route = 0.0;      // d_rho fully by adaptive quadrature
};

/// d_rho = integral_{rho^4}^{R} sqrt(1+f'^2) dr + (1 - a_rho), computed along
/// two routes (closed-form antiderivative on [rho^4, sqrt(rho)] vs adaptive
/// quadrature in the substituted variable w).  Throws QuadratureError if the
/// tolerance is not met.
ArcLengthResult arc_length_d(double rho, double R, double quadrature_tol = 1e-12);

// ---------------------------------------------------------------------------
// HandleCurve: arc-length parametrization of the generating curve.
//
// tau = 0 at radius R on the flat slice; tau increases inward; the radius
// r(tau) is non-increasing and reaches rho^4 at the corner, after which the
// curve runs down the cylinder to t = 1.  Total length equals d_rho.
// ---------------------------------------------------------------------------
class HandleCurve {
 public:
  HandleCurve(double rho, double R);

  double rho() const { return rho_; }
  double R() const { return R_; }
  double length() const { return d_; }           // d_rho
  double tau_corner() const { return tau_corner_; }

  double tau_of_r(double r) const;  // r in [rho^4, R]
  double r_of_tau(double tau) const;
  double t_of_tau(double tau) const;   // height coordinate
  double dt_dtau(double tau) const;    // in [0, 1]
  double d2t_dtau2(double tau) const;
  double dr_dtau(double tau) const;    // in [-1, 0]

 private:
  double blend_cumlen(double r) const;  // arc length of blend segment on [r, 2*sqrt(rho)]

  double rho_;
  double R_;
  double a_;
  double sqrho_;
  double tau_flat_end_;    // R - 2*sqrt(rho)
  double blend_len_;       // arc length over [sqrt(rho), 2*sqrt(rho)]
  double tau_blend_end_;
  double xi_len_;          // arc length over [rho^4, sqrt(rho)] (= F(sqrt(rho)))
  double tau_corner_;
  double d_;
  // cumulative Gauss-Legendre table for the blend segment
  std::vector<double> panel_r_;    // panel breakpoints, descending from 2*sqrt(rho)
  std::vector<double> panel_cum_;  // cumulative arc length from 2*sqrt(rho) down to panel_r_[i]
};

/// Monotone arc-length sampling of the generating curve (graph + cylinder).
struct RevolutionCurve {
  std::vector<double> tau;
  std::vector<double> r;
  std::vector<double> t;
  double total_length = 0.0;
  double cylinder_radius = 0.0;
};

/// Samples the curve with n_graph points on the graph part (log-spaced in
/// w near the corner) and n_cyl on the cylinder.
RevolutionCurve warped_form(double rho, double R, int n_graph = 200, int n_cyl = 50);

}  // namespace hf
