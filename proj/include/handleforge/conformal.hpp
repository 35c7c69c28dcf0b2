#pragma once

#include <vector>

#include "handleforge/handle.hpp"
#include "handleforge/report.hpp"

namespace hf {

/// The conformal factor u(t) = 1 + t * kappa_tilde * eta(t/alpha - 1) with
/// kappa_tilde = (n-2) kappa / (2n).  u == 1 + t kappa_tilde for t <= alpha,
/// u == 1 for t >= 2 alpha, and 1 <= u <= 1 + kappa_tilde <= 2 throughout.
struct ConformalData {
  int n;
  double kappa;
  double alpha;
  double kappa_tilde;

  ConformalData(int n_, double kappa_, double alpha_);

  double u(double t) const;
  double du(double t) const;
  double d2u(double t) const;
};

/// Mean curvature after the conformal change g -> u^{4/(n-2)} g:
///   H_kappa = u^{-2/(n-2)} (H_g + (2n/(n-2)) <nu, dt> u^{-1} du/dt).
double conformal_H(double H_g, double nu_t, double u, double du_dt, int n);

/// Scalar curvature after the conformal change, for u depending on t only:
///   scal_kappa = u^{-(n+2)/(n-2)} ( u scal_g
///                - (4(n-1)/(n-2)) (1 - <nu,dt>^2) d2u/dt2
///                + (4(n-1)/(n-2)) H_g <nu,dt> du/dt ).
/// Reduces to c^{-4/(n-2)} scal_g for constant u = c.
double conformal_scal(double scal_g, double H_g, double nu_t, double u, double du_dt,
                      double d2u_dt2, int n);

/// rho_0(kappa): the largest rho at which the positivity argument of the
/// mean-curvature estimate is run, min{rho1, ((1-alpha) kappa / 2)^4}.
double rho0_for(double kappa, double alpha, double rho1);

struct FlatTheoremReport {
  MarginReport H_margin;     // min of H(Sigma,g_kappa) - ((1-alpha) kappa - rho^{1/4})
  MarginReport scal_margin;  // min of scal(Sigma,g_{rho,kappa}) + rho1^{1/4}
  MarginReport inner_H;      // min of H - u^{-2/(n-2)} (rho^{-3/2}/8 - C5) on [rho^4, rho^2]
};

/// Pointwise verification of the flat-fiber-model bending estimates
///   H(Sigma_rho, g_kappa) > (1-alpha) kappa - rho^{1/4}
///   scal(Sigma_rho, g_{rho,kappa}) > -rho1^{1/4}
/// along the whole handle (flat slice, graph, cylinder), with rho1 = rho.
FlatTheoremReport theorem_flat_check(const HandleParams& params, int points_per_segment = 200);

}  // namespace hf
