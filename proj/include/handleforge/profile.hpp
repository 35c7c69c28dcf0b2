#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

/// Parameters of one bending handle.
///
/// rho   - handle scale, in (0, 1/10]
/// k     - codimension (>= 2); the profile is rotated over S^{k-1}
/// n     - ambient dimension (>= 3, k <= n); enters conformal exponents only
/// alpha - cutoff width of the conformal factor, in (0, 1/3]
/// kappa - boundary mean-curvature target (>= 0)
/// R     - tube radius, in (0, 2/sqrt(10)]; the bent region needs 2*sqrt(rho) < R
struct HandleParams {
  double rho = 0.01;
  int k = 3;
  int n = 3;
  double alpha = 1.0 / 3.0;
  double kappa = 0.0;
  double R = 0.5;

  double kappa_tilde() const { return (n - 2) * kappa / (2.0 * n); }

  /// Throws std::domain_error if any invariant fails (including a_rho < 2*rho).
  void validate() const;
};

// ---------------------------------------------------------------------------
// Cutoff eta: reversed quintic smoothstep.
//
// eta == 1 on (-inf,0], eta == 0 on [1,inf), with -2 <= eta' <= 0 and
// |eta''| <= 10 (actual extrema: |eta'|max = 1.875, |eta''|max = 10/sqrt(3)).
// ---------------------------------------------------------------------------
double eta(double s);
double eta_d1(double s);
double eta_d2(double s);

// ---------------------------------------------------------------------------
// Profile xi_rho on [rho^4, 1]:
//
//   xi(r)  = -(4/3) rho (sqrt(r)-rho^2)^{3/2} - 4 rho^3 sqrt(sqrt(r)-rho^2)
//   xi'(r) = -rho / sqrt(sqrt(r)-rho^2)
//   4 xi''(r) = -(1/r) xi'(r) (1 + xi'(r)^2)
//
// The substituted variable w = sqrt(sqrt(r)-rho^2) is exposed for callers that
// need well-conditioned evaluation near the vertical tangent at r = rho^4.
// ---------------------------------------------------------------------------
double xi(double rho, double r);
double xi_prime(double rho, double r);
double xi_second(double rho, double r);

double r_of_w(double rho, double w);       // r = (w^2 + rho^2)^2
double w_of_r(double rho, double r);       // w = sqrt(sqrt(r) - rho^2)
double xi_from_w(double rho, double w);
double xi_prime_from_w(double rho, double w);
double xi_second_from_w(double rho, double w);

/// a_rho = -xi(2*sqrt(rho)) > 0; satisfies a_rho < 2*rho for rho <= 1/10.
double a_rho(double rho);

// Inverse of xi: for t in [xi(rho,1), 0],
//   xi_inverse(t) = (rho^2 + 4 rho^2 B^2)^2,  B = sinh(arsinh(-3t/(8 rho^4))/3),
// with d/dt = -2B and d^2/dt^2 = 1/(4 rho^4 (1+4B^2)).
double xi_inverse(double rho, double t);
double xi_inverse_d1(double rho, double t);
double xi_inverse_d2(double rho, double t);

// ---------------------------------------------------------------------------
// Blended profile f_rho(r) = eta_rho(r) * (xi(r) + a_rho) with
// eta_rho(r) = eta((r - sqrt(rho))/sqrt(rho)).  f == xi + a_rho on
// [rho^4, sqrt(rho)] and f == 0 on [2*sqrt(rho), 1].
// ---------------------------------------------------------------------------
double eta_rho(double rho, double r);
double eta_rho_d1(double rho, double r);
double eta_rho_d2(double rho, double r);

double f(double rho, double r);
double f_prime(double rho, double r);
double f_second(double rho, double r);

// ---------------------------------------------------------------------------
// PiecewiseProfile: segment map of f_rho with closed-form value/d1/d2.
// ---------------------------------------------------------------------------
enum class SegmentTag { graph_xi, graph_blend, flat, cylinder_smooth };

const char* segment_tag_name(SegmentTag tag);

struct ProfileSegment {
  SegmentTag tag;
  double r_lo;
  double r_hi;
};

class PiecewiseProfile {
 public:
  PiecewiseProfile(double rho, double r_max);

  double rho() const { return rho_; }
  double r_min() const { return segments_.front().r_lo; }
  double r_max() const { return r_max_; }
  const std::vector<ProfileSegment>& segments() const { return segments_; }

  double value(double r) const;
  double d1(double r) const;
  double d2(double r) const;

 private:
  double rho_;
  double r_max_;
  std::vector<ProfileSegment> segments_;
};

}  // namespace hf
