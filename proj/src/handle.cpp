#include "handleforge/handle.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace hf {

namespace {

// C-infinity step 0 -> 1 on [0, 1]
double step01(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double p = std::exp(-1.0 / x), q = std::exp(-1.0 / (1.0 - x));
  return p / (p + q);
}

// tabletop bump: 0 -> 1 over [a, a+r], 1 until b-r, -> 0 at b
double tabletop(double s, double a, double b, double r) {
  return step01((s - a) / r) * (1.0 - step01((s - (b - r)) / r));
}

double gl16(const std::function<double(double)>& fn, double a, double b) {
  static const double X[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                              0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
  static const double W[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                              0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += W[i] * (fn(c - h * X[i]) + fn(c + h * X[i]));
  return s * h;
}

// Blend weight m(s) = 2 phi(s)/s^2 with phi'' = G.  G steps to 1 right after
// s = 0 and carries one small positive and one small negative tabletop whose
// amplitudes solve int G = 1 and int s G = 1/2 exactly.  Those two moments
// force m(1) = 1, m'(1) = m''(1) = 0, and G == 1 near s = 1 upgrades the seam
// to all orders; G == 0 near s = 0 does the same against the cylinder.  The
// plateau max(G) ~ 1.17 keeps the blended principal-curvature ratio inside
// the pinching inequalities (the scal inequality needs max G < 4/3).
class CapBlend {
 public:
  static const CapBlend& instance() {
    static CapBlend blend;
    return blend;
  }

  double G(double s) const {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return step01((s - kU0) / (kU1 - kU0)) + a1_ * tabletop(s, kT1a, kT1b, kTr) -
           a2_ * tabletop(s, kT2a, kT2b, kTr);
  }

  // value and first/second s-derivatives of m
  void m(double s, double& m0, double& m1, double& m2) const {
    if (s <= kU0) {
      m0 = m1 = m2 = 0.0;
      return;
    }
    double p0, p1;
    phi(std::min(s, 1.0), p0, p1);
    if (s > 1.0) {  // G == 1 beyond the seam
      const double e = s - 1.0;
      p0 += p1 * e + 0.5 * e * e;
      p1 += e;
    }
    const double s2 = s * s;
    m0 = 2.0 * p0 / s2;
    m1 = 2.0 * p1 / s2 - 4.0 * p0 / (s2 * s);
    m2 = 2.0 * G(s) / s2 - 8.0 * p1 / (s2 * s) + 12.0 * p0 / (s2 * s2);
  }

 private:
  static constexpr double kU0 = 0.01, kU1 = 0.06;
  static constexpr double kT1a = 0.04, kT1b = 0.42;
  static constexpr double kT2a = 0.55, kT2b = 0.92;
  static constexpr double kTr = 0.08;
  static constexpr int kN = 2048;

  CapBlend() {
    auto U = [](double s) { return step01((s - kU0) / (kU1 - kU0)); };
    auto T1 = [](double s) { return tabletop(s, kT1a, kT1b, kTr); };
    auto T2 = [](double s) { return tabletop(s, kT2a, kT2b, kTr); };
    auto integ = [](const std::function<double(double)>& fn) {
      double v = 0.0;
      for (int p = 0; p < 64; ++p) v += gl16(fn, p / 64.0, (p + 1) / 64.0);
      return v;
    };
    const double d0 = integ([&](double s) { return 1.0 - U(s); });
    const double d1 = integ([&](double s) { return s * (1.0 - U(s)); });
    const double I1 = integ(T1), J1 = integ([&](double s) { return s * T1(s); });
    const double I2 = integ(T2), J2 = integ([&](double s) { return s * T2(s); });
    const double det = -I1 * J2 + I2 * J1;
    a1_ = (-d0 * J2 + I2 * d1) / det;
    a2_ = (I1 * d1 - d0 * J1) / det;

    phi1_[0] = phi0_[0] = 0.0;
    for (int i = 1; i <= kN; ++i) {
      const double s0 = double(i - 1) / kN, s1 = double(i) / kN;
      auto g = [this](double s) { return G(s); };
      phi1_[i] = phi1_[i - 1] + gl16(g, s0, s1);
      phi0_[i] = phi0_[i - 1] + phi1_[i - 1] * (s1 - s0) +
                 gl16([&](double s) { return (s1 - s) * G(s); }, s0, s1);
    }
  }

  void phi(double s, double& p0, double& p1) const {
    const int i = std::min(int(s * kN), kN - 1);
    const double si = double(i) / kN;
    auto g = [this](double x) { return G(x); };
    p1 = phi1_[i] + gl16(g, si, s);
    p0 = phi0_[i] + phi1_[i] * (s - si) + gl16([&](double x) { return (s - x) * G(x); }, si, s);
  }

  double a1_ = 0.0, a2_ = 0.0;
  std::array<double, kN + 1> phi0_{}, phi1_{};
};

}  // namespace

double CornerCap::omega(double dt) const {
  const double r4 = rho * rho * rho * rho;
  const double D = xi_inverse(rho, dt) - r4;
  double m0, m1, m2;
  CapBlend::instance().m(-dt / w, m0, m1, m2);
  return r4 + m0 * D;
}

double CornerCap::omega_d1(double dt) const {
  const double r4 = rho * rho * rho * rho;
  const double D = xi_inverse(rho, dt) - r4;
  const double Dp = xi_inverse_d1(rho, dt);
  double m0, m1, m2;
  CapBlend::instance().m(-dt / w, m0, m1, m2);
  return -m1 / w * D + m0 * Dp;
}

double CornerCap::omega_d2(double dt) const {
  const double r4 = rho * rho * rho * rho;
  const double D = xi_inverse(rho, dt) - r4;
  const double Dp = xi_inverse_d1(rho, dt);
  const double Dpp = xi_inverse_d2(rho, dt);
  double m0, m1, m2;
  CapBlend::instance().m(-dt / w, m0, m1, m2);
  return m2 / (w * w) * D - 2.0 * m1 / w * Dp + m0 * Dpp;
}

CurvaturePoint CornerCap::curvature(double dt, int k) const {
  const double om = omega(dt);
  const double d1 = omega_d1(dt);
  const double d2 = omega_d2(dt);
  const double q = 1.0 + d1 * d1;
  const double l1 = -d2 / (q * std::sqrt(q));
  const double l2 = 1.0 / (om * std::sqrt(q));
  auto inv = shape_invariants(l1, l2, k);
  // the generating curve runs over the axis here, so nu_t and nu_tan swap roles
  const double nu_t = std::fabs(d1) / std::sqrt(q);
  return {om, l1, l2, inv.H, inv.normA, inv.scal, nu_t, 1.0 / std::sqrt(q)};
}

Handle::Handle(const HandleParams& p)
    : params_(p),
      profile_(p.rho, p.R),
      curve_(p.rho, p.R),
      a_(a_rho(p.rho)),
      r4_(p.rho * p.rho * p.rho * p.rho) {}

Handle Handle::build(const HandleParams& params, const GridSpec& grid) {
  params.validate();
  Handle h(params);
  h.grid_ = grid;
  return h;
}

double Handle::default_blend_halfwidth() const {
  // inside the quadratic zone of the corner: blended-zone margins are then
  // rho-independent (the width (a - f(rho^2))/8 reaches radii where the
  // inverse profile has already flattened and the blend fails verification)
  return r4_;
}

Handle Handle::smooth_corner(std::optional<double> blend_halfwidth) const {
  const double rho = params_.rho;
  const double w = blend_halfwidth.value_or(default_blend_halfwidth());
  const double w_max = (a_ - f(rho, rho * rho)) / 4.0;
  if (!(w > 0.0 && w < w_max))
    throw std::domain_error("smooth_corner: blend halfwidth must lie in (0, (a-f(rho^2))/4)");

  Handle out = *this;
  out.cap_ = CornerCap{rho, a_, w};

  // Re-verify the pinching inequalities on the blended zone.  The cap sits at
  // radii <= rho^2, so items (i), (iv), (v) are untouched; (ii) and (iii) are
  // checked on a dense grid in dt = t - a.
  const int k = params_.k;
  const int n_check = 512;
  double worst_ii = 1e300, worst_iii = 1e300;
  double t_ii = 0.0, t_iii = 0.0;
  for (int i = 0; i <= n_check; ++i) {
    const double dt = -w * double(i) / n_check;
    const CurvaturePoint cp = out.cap_->curvature(dt, k);
    const double m_H = (cp.H - 0.5 * cp.normA) / std::max(0.5 * cp.normA, 1.0);
    double m = m_H;
    if (k >= 3) {
      const double m_scal = (cp.scal - cp.normA * cp.normA / 3.0) /
                            std::max(cp.normA * cp.normA / 3.0, 1.0);
      m = std::min(m, m_scal);
    }
    if (m < worst_ii) { worst_ii = m; t_ii = a_ + dt; }
    if (k >= 3) {
      const double rhs = 0.5 / (rho * rho * rho);
      const double m3 = (std::min(cp.H * cp.H, cp.scal) - rhs) / rhs;
      if (m3 < worst_iii) { worst_iii = m3; t_iii = a_ + dt; }
    }
  }
  if (worst_ii <= 0.0)
    throw BlendVerificationError("H > |A|/2 (and scal > |A|^2/3) on blend zone", worst_ii, t_ii);
  if (k >= 3 && worst_iii <= 0.0)
    throw BlendVerificationError("min{H^2, scal} > rho^-3/2 on blend zone", worst_iii, t_iii);
  return out;
}

std::vector<HandleSample> Handle::sample(const GridSpec& grid) const {
  std::vector<HandleSample> out;
  const double rho = params_.rho;
  const double R = params_.R;
  const int k = params_.k;
  const double sq = std::sqrt(rho);

  // graph segments, log-spaced in w so the rho^4 scale is resolved
  auto push_graph = [&](double w_lo, double w_hi, int n, SegmentTag tag) {
    for (int i = 0; i <= n; ++i) {
      const double w = w_hi * std::pow(w_lo / w_hi, double(i) / n);
      const double r = r_of_w(rho, w);
      double fd1, fd2;
      if (r > sq) {
        fd1 = f_prime(rho, r);
        fd2 = f_second(rho, r);
      } else {
        fd1 = xi_prime_from_w(rho, w);
        fd2 = xi_second_from_w(rho, w);
      }
      auto [l1, l2] = principal_curvatures(fd1, fd2, r);
      auto inv = shape_invariants(l1, l2, k);
      auto [nt, ntan] = normal_components(fd1);
      out.push_back({curve_.tau_of_r(r), r, f(rho, r), tag,
                     {r, l1, l2, inv.H, inv.normA, inv.scal, nt, ntan}});
    }
  };

  // cut the graph at the cap boundary when smoothed
  double w_min;
  if (cap_) {
    w_min = w_of_r(rho, xi_inverse(rho, -cap_->w));
  } else {
    w_min = std::sqrt(rho) * rho * 1e-5;
  }
  push_graph(w_min, w_of_r(rho, sq), grid.per_graph_segment, SegmentTag::graph_xi);
  push_graph(w_of_r(rho, sq), w_of_r(rho, 2.0 * sq), grid.per_graph_segment,
             SegmentTag::graph_blend);

  // flat part
  const int n_flat = std::max(2, grid.per_graph_segment / 4);
  for (int i = 0; i <= n_flat; ++i) {
    const double r = 2.0 * sq + (R - 2.0 * sq) * double(i) / n_flat;
    auto inv = shape_invariants(0.0, 0.0, k);
    out.push_back({curve_.tau_of_r(std::min(r, R)), r, 0.0, SegmentTag::flat,
                   {r, 0.0, 0.0, inv.H, inv.normA, inv.scal, 1.0, 0.0}});
  }

  // cap (smoothed corner), sampled in dt = t - a; tau taken from the
  // unsmoothed curve (the parametrizations differ by O(w) there)
  if (cap_) {
    for (int i = 0; i <= grid.per_cap; ++i) {
      const double dt = -cap_->w * (1.0 - double(i) / grid.per_cap);
      CurvaturePoint cp = cap_->curvature(dt, k);
      const double tau = curve_.tau_of_r(std::max(cp.r, r4_));
      out.push_back({tau, cp.r, a_ + dt, SegmentTag::cylinder_smooth, cp});
    }
  }

  // cylinder
  for (int i = 0; i <= grid.per_cylinder; ++i) {
    const double t = a_ + (1.0 - a_) * double(i) / grid.per_cylinder;
    out.push_back({curve_.tau_corner() + (t - a_), r4_, t, SegmentTag::cylinder_smooth,
                   cylinder_point(rho, k)});
  }
  return out;
}

std::string Handle::to_json(int n_curve_points) const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["params"] = {{"rho", params_.rho}, {"k", params_.k},     {"n", params_.n},
                 {"alpha", params_.alpha}, {"kappa", params_.kappa}, {"R", params_.R}};
  j["a_rho"] = a_;
  j["cylinder_radius"] = r4_;
  j["smoothed"] = smoothed();
  if (cap_) j["blend_halfwidth"] = cap_->w;
  RevolutionCurve rc = warped_form(params_.rho, params_.R, n_curve_points, n_curve_points / 4);
  nlohmann::json curve = nlohmann::json::array();
  for (size_t i = 0; i < rc.tau.size(); ++i)
    curve.push_back({{"tau", rc.tau[i]}, {"r", rc.r[i]}, {"t", rc.t[i]}});
  j["curve"] = curve;
  j["total_length"] = rc.total_length;
  return j.dump(2);
}

}  // namespace hf
