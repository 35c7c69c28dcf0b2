#include "handleforge/conformal.hpp"

#include <cmath>

namespace hf {

ConformalData::ConformalData(int n_, double kappa_, double alpha_)
    : n(n_), kappa(kappa_), alpha(alpha_), kappa_tilde((n_ - 2) * kappa_ / (2.0 * n_)) {
  if (n < 3) throw std::domain_error("ConformalData: n must be >= 3");
  if (kappa < 0.0) throw std::domain_error("ConformalData: kappa must be >= 0");
  if (!(alpha > 0.0 && alpha <= 1.0 / 3.0))
    throw std::domain_error("ConformalData: alpha must lie in (0, 1/3]");
}

double ConformalData::u(double t) const {
  return 1.0 + t * kappa_tilde * eta(t / alpha - 1.0);
}

double ConformalData::du(double t) const {
  const double s = t / alpha - 1.0;
  return kappa_tilde * eta(s) + (t / alpha) * kappa_tilde * eta_d1(s);
}

double ConformalData::d2u(double t) const {
  const double s = t / alpha - 1.0;
  return 2.0 * kappa_tilde * eta_d1(s) / alpha + t * kappa_tilde * eta_d2(s) / (alpha * alpha);
}

double conformal_H(double H_g, double nu_t, double u, double du_dt, int n) {
  if (!(u > 0.0)) throw std::domain_error("conformal_H: u must be positive");
  const double pre = std::pow(u, -2.0 / (n - 2.0));
  return pre * (H_g + (2.0 * n / (n - 2.0)) * nu_t * du_dt / u);
}

double conformal_scal(double scal_g, double H_g, double nu_t, double u, double du_dt,
                      double d2u_dt2, int n) {
  if (!(u > 0.0)) throw std::domain_error("conformal_scal: u must be positive");
  const double c = 4.0 * (n - 1.0) / (n - 2.0);
  const double pre = std::pow(u, -(n + 2.0) / (n - 2.0));
  return pre * (u * scal_g - c * (1.0 - nu_t * nu_t) * d2u_dt2 + c * H_g * nu_t * du_dt);
}

double rho0_for(double kappa, double alpha, double rho1) {
  const double gate = std::pow((1.0 - alpha) * kappa / 2.0, 4.0);
  return std::min(rho1, gate);
}

FlatTheoremReport theorem_flat_check(const HandleParams& params, int points_per_segment) {
  const double rho = params.rho;
  const int n = params.n;
  const ConformalData cd(n, params.kappa, params.alpha);

  GridSpec grid;
  grid.per_graph_segment = points_per_segment;
  Handle handle = Handle::build(params, grid);
  const auto samples = handle.sample();

  const double rhs_H = (1.0 - params.alpha) * params.kappa - std::pow(rho, 0.25);
  const double rhs_scal = -std::pow(rho, 0.25);  // rho1 = rho, scal(M) = 0
  const double c1 = 0.125;                        // inner-region constant
  const double C5 = 6.0 * n / (params.alpha * (n - 2.0));

  double mH = 1e300, aH = 0.0, mS = 1e300, aS = 0.0, mI = 1e300, aI = 0.0;
  for (const auto& s : samples) {
    const double u = cd.u(s.t);
    const double du = cd.du(s.t);
    const double d2u = cd.d2u(s.t);
    const double Hk = conformal_H(s.point.H, s.point.nu_t, u, du, n);
    const double Sk = conformal_scal(s.point.scal, s.point.H, s.point.nu_t, u, du, d2u, n);
    if (Hk - rhs_H < mH) { mH = Hk - rhs_H; aH = s.r; }
    if (Sk - rhs_scal < mS) { mS = Sk - rhs_scal; aS = s.r; }
    if (s.tag == SegmentTag::graph_xi && s.r <= rho * rho) {
      const double lower = std::pow(u, -2.0 / (n - 2.0)) * (c1 * std::pow(rho, -1.5) - C5);
      if (Hk - lower < mI) { mI = Hk - lower; aI = s.r; }
    }
  }
  FlatTheoremReport out;
  const double nH = std::max(std::fabs(rhs_H), 1.0);
  const double nS = std::max(std::fabs(rhs_scal), 1.0);
  out.H_margin = {"flat-thm-H", rho, params.k, 0.0, params.R, mH / nH, aH, mH > 0.0};
  out.scal_margin = {"flat-thm-scal", rho, params.k, 0.0, params.R, mS / nS, aS, mS > 0.0};
  out.inner_H = {"flat-thm-inner-H", rho, params.k, 0.0, rho * rho, mI, aI, mI > 0.0};
  return out;
}

}  // namespace hf
