#include "handleforge/mass.hpp"

#include <cmath>
#include <stdexcept>

#include "handleforge/flow.hpp"

namespace hf {

double MassConstants::h0(double H) const {
  return std::fabs(kappa) * std::sinh(1.0) + std::max(H, 0.0) / 3.0;
}

MassConstants build_constants(int n, double sigma0, double sigma1, double kappa, double r0) {
  if (sigma0 > 0.0 || sigma1 > 0.0)
    throw std::domain_error("build_constants: sigma0, sigma1 must be <= 0");
  if (!(kappa < 0.0)) throw std::domain_error("build_constants: kappa must be negative");
  if (!(r0 > 0.0)) throw std::domain_error("build_constants: r0 must be positive");
  MassConstants mc;
  mc.n = n;
  mc.sigma0 = sigma0;
  mc.sigma1 = sigma1;
  mc.kappa = kappa;
  mc.r0 = r0;
  const double ch = std::cosh(1.0);
  mc.c0 = std::max({4.0 * std::fabs(kappa), std::sqrt(n * std::fabs(sigma0) / (n + 1.0)),
                    std::sqrt(n * std::fabs(sigma1) / (n + 1.0)) / ch});
  mc.c1 = mc.c2 = ch * mc.c0;
  mc.sigma2 = -mc.c2 * mc.c2 * (n + 1.0) / n;
  mc.K = mc.sigma2 / (n * (n + 1.0));

  // invariants; a violation here means the formulas above are wrong
  if (!(mc.c0 >= 4.0 * std::fabs(kappa)))
    throw std::logic_error("build_constants: c0 >= 4|kappa| failed");
  if (!(std::fabs(mc.sigma2) > std::max(std::fabs(sigma0), std::fabs(sigma1))))
    throw std::logic_error("build_constants: |sigma2| dominance failed");
  const double sig[3] = {sigma0, sigma1, mc.sigma2};
  const double cs[3] = {mc.c0, mc.c1, mc.c2};
  for (int i = 0; i < 3; ++i)
    if (!(cs[i] * cs[i] * (n + 1.0) / n >= -sig[i] * (1.0 - 1e-15)))
      throw std::logic_error("build_constants: c_i^2 (n+1)/n >= -sigma_i failed");
  return mc;
}

double hyp_sphere_H(int n, double sigma2, double r0) {
  if (!(sigma2 < 0.0)) throw std::domain_error("hyp_sphere_H: sigma2 must be negative");
  if (!(r0 > 0.0)) throw std::domain_error("hyp_sphere_H: r0 must be positive");
  const double sK = std::sqrt(-sigma2 / (n * (n + 1.0)));
  return n * sK / std::tanh(r0 * sK);
}

MarginReport dec_jump_check(double kappa, const std::vector<double>& H0_grid) {
  if (!(kappa < 0.0)) throw std::domain_error("dec_jump_check: kappa must be negative");
  const double ch = std::cosh(1.0), sh = std::sinh(1.0);
  const double c0 = 4.0 * std::fabs(kappa);
  const double h0_base = std::fabs(kappa) * sh;

  MarginReport rep;
  rep.claim_id = "dec-jump";
  rep.rho = kappa;  // parameter column reused for kappa
  rep.min_margin = 1e300;
  for (double H0 : H0_grid) {
    if (H0 < kappa) throw std::domain_error("dec_jump_check: grid point below kappa");
    const double h0 = h0_base + std::max(H0, 0.0) / 3.0;
    const double lhs = ch * H0 + sh * c0 - h0;
    const double rhs = sh * std::fabs(H0);
    const double m = (lhs - rhs) / std::max(std::fabs(rhs), 1.0);
    if (m < rep.min_margin) {
      rep.min_margin = m;
      rep.arg_min = H0;
    }
  }
  rep.pass = rep.min_margin > 0.0;
  return rep;
}

double lambda_asymptotic(double sigma0, double kappa, double C0) {
  if (!(C0 > 0.0)) throw std::domain_error("lambda_asymptotic: C0 must be positive");
  return C0 * (std::max(std::sqrt(-sigma0), -kappa) + 1.0);
}

std::array<double, 2> hyperbolic_rotation(double theta, const std::array<double, 2>& v) {
  const double ch = std::cosh(theta), sh = std::sinh(theta);
  return {ch * v[0] - sh * v[1], -sh * v[0] + ch * v[1]};
}

PimpleConfig pimple(int n, double K) {
  if (n < 2) throw std::domain_error("pimple: n must be >= 2");
  if (!(K > 0.0)) throw std::domain_error("pimple: K must be positive");
  PimpleConfig cfg;
  cfg.n = n;
  cfg.K = K;
  cfg.c_n = sphere_volume(n);
  const double base = 2.0 * cfg.c_n * K;
  cfg.r = std::pow(base, -2.0);
  if (!(20.0 * cfg.r <= 1.0 / K))
    throw std::domain_error("pimple: K too small, needs 20 r <= 1/K");
  // The sphere count is rounded DOWN so the recomputed volume bound stays
  // exact; the total-mean-curvature slack factor n c_n^2 absorbs the rounding.
  cfg.ell = static_cast<std::uint64_t>(std::floor(std::pow(base, 2.0 * n - 1.0)));
  cfg.tmc_lb = 0.5 * n * cfg.c_n * double(cfg.ell) * std::pow(cfg.r, n - 1.0);
  cfg.vol_ub = double(cfg.ell) * cfg.c_n * std::pow(cfg.r, double(n)) + 0.5 / K;
  cfg.diam_ub = 12.0 * cfg.r;

  if (!(cfg.tmc_lb >= K)) throw std::logic_error("pimple: tmc_lb >= K failed");
  if (!(cfg.vol_ub <= 1.0 / K)) throw std::logic_error("pimple: vol_ub <= 1/K failed");
  if (!(cfg.diam_ub <= 1.0 / K)) throw std::logic_error("pimple: diam_ub <= 1/K failed");
  return cfg;
}

}  // namespace hf
