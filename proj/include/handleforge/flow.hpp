#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "handleforge/report.hpp"

namespace hf {

/// vol(S^n, g_round) = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_volume(int n);

/// Rotationally symmetric round-sphere path zeta(t) = lambda(t)^2 g_round on
/// S^n, t in [0,1], with lower scalar bound s.  Membership in the admissible
/// class requires lambda > 0, lambda' > 0 and scal_zeta = n(n-1)/lambda^2 > s
/// pointwise.
struct RoundPath {
  int n;
  std::function<double(double)> lambda;
  std::function<double(double)> lambda_d1;
  std::function<double(double)> lambda_d2;
  double s = 0.0;

  /// Throws std::domain_error if the path leaves the admissible class on a
  /// dense t-grid.
  void validate(int n_check = 256) const;
};

/// Ambient quantities of the slice S^n x {t} in (S^n x [0,1], dt^2 + zeta(t)):
///   Hbar = n lambda'/lambda, |Abar|^2 = n (lambda'/lambda)^2,
///   scal_zeta = n(n-1)/lambda^2,
///   scal_gbar = n(n-1)(1 - lambda'^2)/lambda^2 - 2n lambda''/lambda.
struct AmbientQuantities {
  double Hbar;
  double normAbar_sq;
  double scal_zeta;
  double scal_gbar;
};
AmbientQuantities ambient_quantities(const RoundPath& path, double t);

struct FlowBlowupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accepted-step trajectory of the lapse u(t).
struct FlowTrajectory {
  std::vector<double> t;
  std::vector<double> u;
  std::vector<double> dudt;  // RHS at the accepted nodes
  double u_at(double t) const;  // cubic Hermite dense output
};

/// Integrates the spatially constant reduction of the prescribed-scalar flow
///   Hbar du/dt = (s - scal_zeta) u^3 / 2 + (scal_zeta - scal_gbar) u / 2
/// with an embedded Dormand-Prince 5(4) pair; throws FlowBlowupError if u
/// loses positivity or the step collapses.
FlowTrajectory solve_u(const RoundPath& path, double u0, double tol = 1e-10);

/// Total mean curvature of the slice under g~ = u^2 dt^2 + zeta(t):
///   TMC(t) = n c(n) lambda^{n-1} lambda' / u.
double total_mean_curvature(const RoundPath& path, const FlowTrajectory& traj, double t);

/// Strict TMC increase across every accepted step (no tolerance slack).
MarginReport check_monotone(const RoundPath& path, const FlowTrajectory& traj);

/// CSV rows "t,u,H,TMC" at the accepted nodes (H = Hbar/u).
std::string flow_csv(const RoundPath& path, const FlowTrajectory& traj);

}  // namespace hf
