#include "handleforge/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "handleforge/quadrature.hpp"

namespace hf {

std::pair<double, double> principal_curvatures(double f_d1, double f_d2, double r) {
  const double q = 1.0 + f_d1 * f_d1;
  const double lambda1 = -f_d2 / (q * std::sqrt(q));
  const double lambda2 = -f_d1 / (r * std::sqrt(q));
  return {lambda1, lambda2};
}

std::pair<double, double> principal_curvatures(const PiecewiseProfile& profile, double r) {
  return principal_curvatures(profile.d1(r), profile.d2(r), r);
}

ShapeInvariants shape_invariants(double lambda1, double lambda2, int k) {
  if (k < 2) throw std::domain_error("shape_invariants: k must be >= 2");
  const double H = lambda1 + (k - 1) * lambda2;
  const double normA = std::sqrt(lambda1 * lambda1 + (k - 1) * lambda2 * lambda2);
  const double scal = 2.0 * (k - 1) * lambda1 * lambda2 + (k - 1) * (k - 2) * lambda2 * lambda2;
  return {H, normA, scal};
}

std::pair<double, double> normal_components(double f_d1) {
  const double q = std::sqrt(1.0 + f_d1 * f_d1);
  return {1.0 / q, std::fabs(f_d1) / q};
}

CurvaturePoint curvature_point(double rho, double r, int k) {
  const double d1 = f_prime(rho, r);
  const double d2 = f_second(rho, r);
  auto [l1, l2] = principal_curvatures(d1, d2, r);
  auto inv = shape_invariants(l1, l2, k);
  auto [nt, ntan] = normal_components(d1);
  return {r, l1, l2, inv.H, inv.normA, inv.scal, nt, ntan};
}

CurvaturePoint cylinder_point(double rho, int k) {
  const double r4 = rho * rho * rho * rho;
  const double l2 = 1.0 / r4;
  auto inv = shape_invariants(0.0, l2, k);
  return {r4, 0.0, l2, inv.H, inv.normA, inv.scal, 0.0, 1.0};
}

double arc_antiderivative_from_w(double rho, double w) {
  const double sr = w * w + rho * rho;  // sqrt(r)
  return std::sqrt(sr) * w * (sr + 1.5 * rho * rho) +
         1.5 * rho * rho * rho * rho * std::asinh(w / rho);
}

double arc_antiderivative(double rho, double r) {
  return arc_antiderivative_from_w(rho, w_of_r(rho, r));
}

ArcLengthResult arc_length_d(double rho, double R, double quadrature_tol) {
  if (!(rho > 0.0 && rho <= 0.1)) throw std::domain_error("arc_length_d: rho outside (0, 1/10]");
  if (!(rho <= R * R / 4.0)) throw std::domain_error("arc_length_d: need rho <= R^2/4");
  const double sq = std::sqrt(rho);
  const double a = a_rho(rho);

  // Route 1: closed-form antiderivative on the pure-xi segment.
  const double xi_len_closed = arc_antiderivative(rho, sq);

  // Route 2: adaptive quadrature in w (removes the 1/sqrt singularity:
  // sqrt(1+xi'^2) dr = 4 (w^2+rho^2)^{3/2} dw).
  const double w_hi = w_of_r(rho, sq);
  QuadResult q_xi = integrate(
      [rho](double w) {
        const double s = w * w + rho * rho;
        return 4.0 * s * std::sqrt(s);
      },
      0.0, w_hi, quadrature_tol);

  // Blend segment (smooth, f' bounded) by adaptive quadrature in r.
  QuadResult q_blend = integrate(
      [rho](double r) {
        const double d1 = f_prime(rho, r);
        return std::sqrt(1.0 + d1 * d1);
      },
      sq, 2.0 * sq, quadrature_tol);

  if (!q_xi.converged || !q_blend.converged)
    throw QuadratureError("arc_length_d: quadrature tolerance not met");

  const double flat = R - 2.0 * sq;
  ArcLengthResult out;
  out.antiderivative_route = xi_len_closed + q_blend.value + flat + (1.0 - a);
  out.quadrature_route = q_xi.value + q_blend.value + flat + (1.0 - a);
  out.value = out.antiderivative_route;
  out.quadrature_error = q_xi.error + q_blend.error;
  return out;
}

// ---------------------------------------------------------------------------
// HandleCurve
// ---------------------------------------------------------------------------

namespace {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
const double kGlX[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                        0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                        0.9445750230732326, 0.9894009349916499};
const double kGlW[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                        0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                        0.0622535239386479, 0.0271524594117541};

double gl16(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * kGlX[i];
    s += kGlW[i] * (fn(c - x) + fn(c + x));
  }
  return s * h;
}

constexpr int kBlendPanels = 48;
}  // namespace

HandleCurve::HandleCurve(double rho, double R) : rho_(rho), R_(R) {
  if (!(rho > 0.0 && rho <= 0.1)) throw std::domain_error("HandleCurve: rho outside (0, 1/10]");
  if (!(2.0 * std::sqrt(rho) <= R)) throw std::domain_error("HandleCurve: need 2*sqrt(rho) <= R");
  a_ = a_rho(rho);
  sqrho_ = std::sqrt(rho);
  tau_flat_end_ = R - 2.0 * sqrho_;

  auto ds = [this](double r) {
    const double d1 = f_prime(rho_, r);
    return std::sqrt(1.0 + d1 * d1);
  };
  panel_r_.resize(kBlendPanels + 1);
  panel_cum_.resize(kBlendPanels + 1);
  panel_cum_[0] = 0.0;
  for (int i = 0; i <= kBlendPanels; ++i)
    panel_r_[i] = 2.0 * sqrho_ - (sqrho_ * i) / kBlendPanels;  // descending
  for (int i = 1; i <= kBlendPanels; ++i)
    panel_cum_[i] = panel_cum_[i - 1] + gl16(ds, panel_r_[i], panel_r_[i - 1]);
  blend_len_ = panel_cum_[kBlendPanels];
  tau_blend_end_ = tau_flat_end_ + blend_len_;
  xi_len_ = arc_antiderivative(rho_, sqrho_);
  tau_corner_ = tau_blend_end_ + xi_len_;
  d_ = tau_corner_ + (1.0 - a_);
}

double HandleCurve::blend_cumlen(double r) const {
  // arc length from 2*sqrt(rho) down to r in [sqrt(rho), 2*sqrt(rho)]
  auto ds = [this](double rr) {
    const double d1 = f_prime(rho_, rr);
    return std::sqrt(1.0 + d1 * d1);
  };
  const double step = sqrho_ / kBlendPanels;
  int i = static_cast<int>((panel_r_[0] - r) / step);
  i = std::clamp(i, 0, kBlendPanels - 1);
  // ensure r lies in [panel_r_[i+1], panel_r_[i]]
  while (i > 0 && r > panel_r_[i]) --i;
  while (i < kBlendPanels - 1 && r < panel_r_[i + 1]) ++i;
  return panel_cum_[i] + gl16(ds, r, panel_r_[i]);
}

double HandleCurve::tau_of_r(double r) const {
  const double r4 = rho_ * rho_ * rho_ * rho_;
  if (r > R_ || r < r4) throw std::domain_error("HandleCurve::tau_of_r: r outside [rho^4, R]");
  if (r >= 2.0 * sqrho_) return R_ - r;
  if (r >= sqrho_) return tau_flat_end_ + blend_cumlen(r);
  return tau_blend_end_ + (xi_len_ - arc_antiderivative(rho_, r));
}

double HandleCurve::r_of_tau(double tau) const {
  if (tau < 0.0 || tau > d_) throw std::domain_error("HandleCurve::r_of_tau: tau outside [0, d]");
  if (tau <= tau_flat_end_) return R_ - tau;
  if (tau >= tau_corner_) return rho_ * rho_ * rho_ * rho_;
  if (tau <= tau_blend_end_) {
    // Newton on tau_of_r; d tau / d r = -sqrt(1+f'^2)
    double r = 2.0 * sqrho_ - (tau - tau_flat_end_);  // slope ~ -1 start
    r = std::clamp(r, sqrho_, 2.0 * sqrho_);
    for (int it = 0; it < 60; ++it) {
      const double g = tau_of_r(r) - tau;
      if (std::fabs(g) < 1e-14 * std::max(1.0, tau)) break;
      const double d1 = f_prime(rho_, r);
      r += g / std::sqrt(1.0 + d1 * d1);
      r = std::clamp(r, sqrho_, 2.0 * sqrho_);
    }
    return r;
  }
  // xi segment: Newton in w on F(w) = xi_len - (tau - tau_blend_end),
  // F' = 4 (w^2+rho^2)^{3/2} > 0
  const double target = xi_len_ - (tau - tau_blend_end_);
  const double w_hi = w_of_r(rho_, sqrho_);
  double w = w_hi * std::max(1e-12, target / xi_len_);
  for (int it = 0; it < 80; ++it) {
    const double g = arc_antiderivative_from_w(rho_, w) - target;
    if (std::fabs(g) < 1e-15 * std::max(1.0, xi_len_)) break;
    const double s = w * w + rho_ * rho_;
    double wn = w - g / (4.0 * s * std::sqrt(s));
    if (wn < 0.0) wn = 0.5 * w;
    if (wn > w_hi) wn = 0.5 * (w + w_hi);
    w = wn;
  }
  return r_of_w(rho_, w);
}

double HandleCurve::t_of_tau(double tau) const {
  if (tau >= tau_corner_) return a_ + (tau - tau_corner_);
  if (tau <= tau_flat_end_) return 0.0;
  return f(rho_, r_of_tau(tau));
}

double HandleCurve::dt_dtau(double tau) const {
  if (tau >= tau_corner_) return 1.0;
  if (tau <= tau_flat_end_) return 0.0;
  const double d1 = f_prime(rho_, r_of_tau(tau));
  return std::fabs(d1) / std::sqrt(1.0 + d1 * d1);
}

double HandleCurve::d2t_dtau2(double tau) const {
  if (tau >= tau_corner_ || tau <= tau_flat_end_) return 0.0;
  const double r = r_of_tau(tau);
  const double d1 = f_prime(rho_, r);
  const double d2 = f_second(rho_, r);
  const double q = 1.0 + d1 * d1;
  // d/dtau [-f'/sqrt(1+f'^2)] with dr/dtau = -1/sqrt(1+f'^2)
  return d2 / (q * q);
}

double HandleCurve::dr_dtau(double tau) const {
  if (tau >= tau_corner_) return 0.0;
  if (tau <= tau_flat_end_) return -1.0;
  const double d1 = f_prime(rho_, r_of_tau(tau));
  return -1.0 / std::sqrt(1.0 + d1 * d1);
}

RevolutionCurve warped_form(double rho, double R, int n_graph, int n_cyl) {
  HandleCurve curve(rho, R);
  RevolutionCurve out;
  out.total_length = curve.length();
  out.cylinder_radius = rho * rho * rho * rho;

  // graph part: uniform in tau over the flat segment, log-spaced in w on the
  // bent segment so the rho^4 scale is resolved
  const double sq = std::sqrt(rho);
  const double w_hi = w_of_r(rho, 2.0 * sq);
  const double w_lo = w_hi * 1e-8;
  const int n_flat = std::max(2, n_graph / 4);
  const int n_bent = std::max(2, n_graph - n_flat);
  for (int i = 0; i < n_flat; ++i) {
    const double tau = (R - 2.0 * sq) * i / n_flat;
    out.tau.push_back(tau);
    out.r.push_back(R - tau);
    out.t.push_back(0.0);
  }
  for (int i = 0; i <= n_bent; ++i) {
    const double w = w_hi * std::pow(w_lo / w_hi, double(i) / n_bent);
    const double r = r_of_w(rho, w);
    out.tau.push_back(curve.tau_of_r(r));
    out.r.push_back(r);
    out.t.push_back(f(rho, r));
  }
  for (int i = 1; i <= n_cyl; ++i) {
    const double t = a_rho(rho) + (1.0 - a_rho(rho)) * i / n_cyl;
    out.tau.push_back(curve.tau_corner() + (t - a_rho(rho)));
    out.r.push_back(out.cylinder_radius);
    out.t.push_back(t);
  }
  return out;
}

}  // namespace hf
