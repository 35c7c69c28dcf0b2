#include "handleforge/monotonicity.hpp"

#include <array>
#include <cmath>

#include "handleforge/conformal.hpp"
#include "handleforge/quadrature.hpp"
#include "handleforge/warped.hpp"

namespace hf {

double bump_beta(double x) { return eta(4.0 * x) * eta(-4.0 * x); }

double bump_beta_integral() {
  static const double value = integrate([](double x) { return bump_beta(x); }, -0.25, 0.25,
                                        1e-14).value;
  return value;
}

namespace {
// int_0^tau beta(s - 1/2) ds; beta is supported in [1/4, 3/4] after the shift
double beta_cumulative(double tau) {
  if (tau <= 0.25) return 0.0;
  if (tau >= 0.75) return bump_beta_integral();
  return integrate([](double s) { return bump_beta(s - 0.5); }, 0.25, tau, 1e-14).value;
}
}  // namespace

EuclidReparam::EuclidReparam(double rho1, double R) : rho1_(rho1), R_(R) {
  if (!(rho1 > 0.0 && rho1 <= R * R / 4.0))
    throw std::domain_error("EuclidReparam: need 0 < rho1 <= R^2/4");
  beta_int_ = bump_beta_integral();
}

const HandleCurve& EuclidReparam::curve(double rho) const {
  auto it = curves_.find(rho);
  if (it == curves_.end())
    it = curves_.emplace(rho, std::make_unique<HandleCurve>(rho, R_)).first;
  return *it->second;
}

double EuclidReparam::d(double rho) const { return curve(rho).length(); }

double EuclidReparam::q(double rho) const { return (d(rho1_) - d(rho)) / beta_int_; }

double EuclidReparam::phi(double rho, double tau) const {
  return tau - q(rho) * beta_cumulative(tau);
}

double EuclidReparam::dphi_dtau(double rho, double tau) const {
  return 1.0 - q(rho) * bump_beta(tau - 0.5);
}

double EuclidReparam::dphi_drho_fd(double rho, double tau, double h) const {
  return (phi(rho + h, tau) - phi(rho - h, tau)) / (2.0 * h);
}

EuclidReparam::WarpedMetricAt EuclidReparam::pullback(double rho, double tau) const {
  const double dp = dphi_dtau(rho, tau);
  double p = phi(rho, tau);
  const HandleCurve& c = curve(rho);
  p = std::min(std::max(p, 0.0), c.length());
  const double r = c.r_of_tau(p);
  return {tau, dp * dp, r * r};
}

MonoReport check_monotone_euclidean(double rho1, const std::vector<double>& rho_grid,
                                    int tau_points, double R, double exponent,
                                    bool keep_rows) {
  EuclidReparam rep(rho1, R);
  const double d1 = rep.d(rho1);

  MonoReport out;
  out.exponent = exponent;
  out.min_fd = 1e300;
  long strict = 0;
  for (double rho : rho_grid) {
    const double h = 1e-3 * rho;
    for (int i = 0; i <= tau_points; ++i) {
      const double tau = d1 * double(i) / tau_points;
      const auto up = rep.pullback(rho + h, tau);
      const auto dn = rep.pullback(rho - h, tau);
      const double eu = std::exp(exponent * (rho + h));
      const double ed = std::exp(exponent * (rho - h));
      const std::array<double, 2> fd = {(eu * up.dtau2_coeff - ed * dn.dtau2_coeff) / (2.0 * h),
                                        (eu * up.warp - ed * dn.warp) / (2.0 * h)};
      for (int e = 0; e < 2; ++e) {
        ++out.n_samples;
        if (fd[e] > 0.0) ++strict;
        if (fd[e] < out.min_fd) {
          out.min_fd = fd[e];
          out.worst_rho = rho;
          out.worst_tau = tau;
          out.worst_entry = e;
        }
        if (keep_rows) out.rows.push_back({rho, tau, double(e), fd[e]});
      }
    }
  }
  out.frac_strict = double(strict) / double(out.n_samples);
  out.pass = out.min_fd >= -1e-8 && out.frac_strict >= 0.99;
  return out;
}

double smallest_passing_exponent(double rho1, const std::vector<double>& rho_grid,
                                 int tau_points, double R,
                                 const std::vector<double>& exponents) {
  for (double c : exponents) {
    if (check_monotone_euclidean(rho1, rho_grid, tau_points, R, c).pass) return c;
  }
  return std::numeric_limits<double>::infinity();
}

FinalPathReport final_path_metrics(double rho1, double kappa, double alpha, int k, int n,
                                   const std::vector<double>& s_grid, int tau_points,
                                   double R) {
  const ConformalData cd(n, kappa, alpha);
  HandleCurve curve(rho1, R);
  const double cn = 4.0 * (n - 1) / (n - 2.0);
  const double exp_out = -(n + 2.0) / (n - 2.0);
  const double rhs = -std::pow(rho1, 0.25);

  double mono_min = 1e300, mono_arg = 0.0;
  double scal_min = 1e300, scal_arg = 0.0;
  for (double s : s_grid) {
    for (int i = 0; i <= tau_points; ++i) {
      const double tau = curve.length() * double(i) / tau_points;
      const double t = curve.t_of_tau(tau);
      const double tp = curve.dt_dtau(tau);
      const double tpp = curve.d2t_dtau2(tau);
      const double r = curve.r_of_tau(tau);
      const double rp = curve.dr_dtau(tau);

      const double u = cd.u(t);
      // d/ds [(1-s)u + 2s] = 2 - u >= 1 - rho1 > 0 drives strict monotonicity
      mono_min = std::min(mono_min, 2.0 - u);
      if (mono_min == 2.0 - u) mono_arg = tau;

      const double w = (1.0 - s) * u + 2.0 * s;
      const double wp = (1.0 - s) * cd.du(t) * tp;
      const double wpp = (1.0 - s) * (cd.d2u(t) * tp * tp + cd.du(t) * tpp);
      const double lap = wpp + (k - 1) * (rp / r) * wp;

      // flat fiber model: scal of the unconformal metric is the fiber scal
      double scal_base = 0.0;
      if (tau >= curve.tau_corner()) {
        scal_base = cylinder_point(rho1, k).scal;
      } else if (r < 2.0 * std::sqrt(rho1)) {
        const CurvaturePoint cp = curvature_point(rho1, r, k);
        scal_base = cp.scal;
      }
      const double scal_s =
          std::exp(-rho1) * std::pow(w, exp_out) * (w * scal_base - cn * lap);
      if (scal_s - rhs < scal_min) {
        scal_min = scal_s - rhs;
        scal_arg = tau;
      }
    }
  }
  FinalPathReport out;
  out.monotone = {"final-path-monotone", rho1, k, 0.0, 0.0, mono_min, mono_arg, mono_min > 0.0};
  out.scal_bound = {"final-path-scal", rho1, k, 0.0, 0.0, scal_min / std::max(std::fabs(rhs), 1.0),
                    scal_arg, scal_min > 0.0};
  return out;
}

}  // namespace hf
