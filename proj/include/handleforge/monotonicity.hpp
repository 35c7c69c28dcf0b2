#pragma once

#include <map>
#include <memory>
#include <vector>

#include "handleforge/geometry.hpp"
#include "handleforge/report.hpp"

namespace hf {

/// Bump beta(x) = eta(4x) eta(-4x); supp beta in [-1/4, 1/4], beta(0) = 1.
double bump_beta(double x);
/// integral of beta over R (1/4 for the quintic cutoff; computed by quadrature).
double bump_beta_integral();

/// The reparametrization family phi_{rho1,rho}: [0, d_{rho1}] -> [0, d_rho],
///   phi(tau) = tau - q * int_0^tau beta(s - 1/2) ds,
///   q = (d_{rho1} - d_rho) / int beta,
/// together with the pulled-back warped metric entries.
class EuclidReparam {
 public:
  EuclidReparam(double rho1, double R);

  double rho1() const { return rho1_; }
  double R() const { return R_; }
  double d(double rho) const;           // memoized d_rho
  double q(double rho) const;
  double phi(double rho, double tau) const;
  double dphi_dtau(double rho, double tau) const;
  double dphi_drho_fd(double rho, double tau, double h) const;

  struct WarpedMetricAt {
    double tau;
    double dtau2_coeff;  // (d phi/d tau)^2
    double warp;         // r_rho(phi(tau))^2
  };
  WarpedMetricAt pullback(double rho, double tau) const;

  const HandleCurve& curve(double rho) const;

 private:
  double rho1_;
  double R_;
  double beta_int_;
  mutable std::map<double, std::unique_ptr<HandleCurve>> curves_;
};

/// Result of one monotonicity sweep.
struct MonoReport {
  double exponent = 0.5;
  double min_fd = 0.0;         // worst FD value of d/drho [e^{c rho} entry]
  double frac_strict = 0.0;    // fraction of samples with FD > 0
  long n_samples = 0;
  double worst_rho = 0.0;
  double worst_tau = 0.0;
  int worst_entry = 0;         // 0 = dtau^2 coefficient, 1 = warp
  bool pass = false;           // min_fd >= -1e-8 and frac_strict >= 0.99
  std::vector<std::array<double, 4>> rows;  // (rho, tau, entry, fd) for CSV
};

/// FD in rho of e^{c rho} * (each pulled-back metric entry) over a
/// (rho, tau) grid; the diagonal warped form makes the entrywise check the
/// positive-semidefiniteness check.  Central differences, step 1e-3 * rho.
MonoReport check_monotone_euclidean(double rho1, const std::vector<double>& rho_grid,
                                    int tau_points, double R, double exponent = 0.5,
                                    bool keep_rows = false);

/// Smallest exponent from `exponents` (ascending) for which the sweep passes;
/// returns +inf if none do.
double smallest_passing_exponent(double rho1, const std::vector<double>& rho_grid,
                                 int tau_points, double R,
                                 const std::vector<double>& exponents);

/// Final conformal path s -> e^{rho1} ((1-s) u + 2s)^{4/(n-2)} g_{rho1} in the
/// flat fiber model: strict s-monotonicity of the metric entries and the
/// lower scalar-curvature bound scal(g_s) >= -rho1^{1/4}.
struct FinalPathReport {
  MarginReport monotone;    // min over samples of d/ds entries (normalized by entry)
  MarginReport scal_bound;  // min over samples of scal(g_s) + rho1^{1/4}
};
FinalPathReport final_path_metrics(double rho1, double kappa, double alpha, int k, int n,
                                   const std::vector<double>& s_grid, int tau_points,
                                   double R);

}  // namespace hf
