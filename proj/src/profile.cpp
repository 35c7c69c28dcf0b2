#include "handleforge/profile.hpp"

#include <cmath>

namespace hf {

void HandleParams::validate() const {
  if (!(rho > 0.0 && rho <= 0.1))
    throw std::domain_error("HandleParams: rho must lie in (0, 1/10], got " + std::to_string(rho));
  if (k < 2) throw std::domain_error("HandleParams: k must be >= 2");
  if (n < 3) throw std::domain_error("HandleParams: n must be >= 3");
  if (k > n) throw std::domain_error("HandleParams: k must be <= n");
  if (!(alpha > 0.0 && alpha <= 1.0 / 3.0))
    throw std::domain_error("HandleParams: alpha must lie in (0, 1/3]");
  if (kappa < 0.0) throw std::domain_error("HandleParams: kappa must be >= 0");
  if (!(R > 0.0 && R <= 2.0 / std::sqrt(10.0)))
    throw std::domain_error("HandleParams: R must lie in (0, 2/sqrt(10)]");
  if (!(2.0 * std::sqrt(rho) < R))
    throw std::domain_error("HandleParams: need 2*sqrt(rho) < R");
  if (!(a_rho(rho) < 2.0 * rho))
    throw std::domain_error("HandleParams: a_rho >= 2*rho");  // unreachable for rho <= 1/10
}

double eta(double s) {
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return 0.0;
  return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double eta_d1(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double u = s * (s - 1.0);
  return -30.0 * u * u;
}

double eta_d2(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  return -60.0 * s * (2.0 * s - 1.0) * (s - 1.0);
}

static void check_xi_domain(double rho, double r) {
  // one-ulp slack at the lower end so r = rho^4 formed by rounding passes
  const double r4 = rho * rho * rho * rho;
  if (r < r4 * (1.0 - 1e-12) || r > 1.0)
    throw std::domain_error("xi: r outside [rho^4, 1]");
}

double w_of_r(double rho, double r) {
  check_xi_domain(rho, r);
  const double d = std::sqrt(r) - rho * rho;
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

double r_of_w(double rho, double w) {
  const double s = w * w + rho * rho;
  return s * s;
}

double xi_from_w(double rho, double w) {
  return -(4.0 / 3.0) * rho * w * w * w - 4.0 * rho * rho * rho * w;
}

double xi_prime_from_w(double rho, double w) {
  if (w == 0.0)
    throw std::domain_error("xi_prime: vertical tangent at r = rho^4");
  return -rho / w;
}

double xi_second_from_w(double rho, double w) {
  if (w == 0.0)
    throw std::domain_error("xi_second: vertical tangent at r = rho^4");
  const double sr = w * w + rho * rho;  // sqrt(r)
  return rho / (4.0 * sr * w * w * w);
}

double xi(double rho, double r) { return xi_from_w(rho, w_of_r(rho, r)); }
double xi_prime(double rho, double r) { return xi_prime_from_w(rho, w_of_r(rho, r)); }
double xi_second(double rho, double r) { return xi_second_from_w(rho, w_of_r(rho, r)); }

double a_rho(double rho) { return -xi(rho, 2.0 * std::sqrt(rho)); }

static double xi_inverse_B(double rho, double t) {
  const double rho4 = rho * rho * rho * rho;
  return std::sinh(std::asinh(-3.0 * t / (8.0 * rho4)) / 3.0);
}

static void check_xi_inverse_domain(double rho, double t) {
  // range of xi on [rho^4, 1] is [xi(1), 0]
  if (t > 0.0 || t < xi(rho, 1.0))
    throw std::domain_error("xi_inverse: t outside [xi(rho,1), 0]");
}

double xi_inverse(double rho, double t) {
  check_xi_inverse_domain(rho, t);
  const double B = xi_inverse_B(rho, t);
  const double s = rho * rho * (1.0 + 4.0 * B * B);
  return s * s;
}

double xi_inverse_d1(double rho, double t) {
  check_xi_inverse_domain(rho, t);
  return -2.0 * xi_inverse_B(rho, t);
}

double xi_inverse_d2(double rho, double t) {
  check_xi_inverse_domain(rho, t);
  const double B = xi_inverse_B(rho, t);
  const double rho4 = rho * rho * rho * rho;
  return 1.0 / (4.0 * rho4 * (1.0 + 4.0 * B * B));
}

double eta_rho(double rho, double r) {
  const double sq = std::sqrt(rho);
  return eta((r - sq) / sq);
}

double eta_rho_d1(double rho, double r) {
  const double sq = std::sqrt(rho);
  return eta_d1((r - sq) / sq) / sq;
}

double eta_rho_d2(double rho, double r) {
  const double sq = std::sqrt(rho);
  return eta_d2((r - sq) / sq) / rho;
}

double f(double rho, double r) {
  check_xi_domain(rho, r);
  if (r >= 2.0 * std::sqrt(rho)) return 0.0;
  return eta_rho(rho, r) * (xi(rho, r) + a_rho(rho));
}

double f_prime(double rho, double r) {
  check_xi_domain(rho, r);
  if (r >= 2.0 * std::sqrt(rho)) return 0.0;
  const double e = eta_rho(rho, r);
  const double e1 = eta_rho_d1(rho, r);
  return e1 * (xi(rho, r) + a_rho(rho)) + e * xi_prime(rho, r);
}

double f_second(double rho, double r) {
  check_xi_domain(rho, r);
  if (r >= 2.0 * std::sqrt(rho)) return 0.0;
  const double e = eta_rho(rho, r);
  const double e1 = eta_rho_d1(rho, r);
  const double e2 = eta_rho_d2(rho, r);
  return e2 * (xi(rho, r) + a_rho(rho)) + 2.0 * e1 * xi_prime(rho, r) + e * xi_second(rho, r);
}

const char* segment_tag_name(SegmentTag tag) {
  switch (tag) {
    case SegmentTag::graph_xi: return "graph-xi";
    case SegmentTag::graph_blend: return "graph-blend";
    case SegmentTag::flat: return "flat";
    case SegmentTag::cylinder_smooth: return "cylinder-smooth";
  }
  return "?";
}

PiecewiseProfile::PiecewiseProfile(double rho, double r_max) : rho_(rho), r_max_(r_max) {
  if (!(rho > 0.0 && rho <= 0.1))
    throw std::domain_error("PiecewiseProfile: rho outside (0, 1/10]");
  const double r4 = rho * rho * rho * rho;
  const double sq = std::sqrt(rho);
  if (r_max <= 2.0 * sq || r_max > 1.0)
    throw std::domain_error("PiecewiseProfile: r_max must lie in (2*sqrt(rho), 1]");
  segments_ = {{SegmentTag::graph_xi, r4, sq},
               {SegmentTag::graph_blend, sq, 2.0 * sq},
               {SegmentTag::flat, 2.0 * sq, r_max}};
}

double PiecewiseProfile::value(double r) const { return f(rho_, r); }
double PiecewiseProfile::d1(double r) const { return f_prime(rho_, r); }
double PiecewiseProfile::d2(double r) const { return f_second(rho_, r); }

}  // namespace hf
