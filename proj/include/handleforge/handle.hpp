#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "handleforge/geometry.hpp"
#include "handleforge/profile.hpp"

namespace hf {

/// Thrown by smooth_corner when the blended zone violates the pinching or
/// min{H^2, scal} inequalities (blend too aggressive).
struct BlendVerificationError : std::runtime_error {
  double worst_margin;
  double t_at;
  std::string claim;
  BlendVerificationError(std::string claim_, double margin, double t)
      : std::runtime_error("corner blend violates " + claim_ + " (margin " +
                           std::to_string(margin) + " at t = " + std::to_string(t) + ")"),
        worst_margin(margin),
        t_at(t),
        claim(std::move(claim_)) {}
};

/// C-infinity corner cap over t in [a_rho - w, a_rho]: the inverse-graph
/// deviation D(t) = xi_inverse(t - a_rho) - rho^4 is scaled by a designed
/// blend weight m((a_rho - t)/w) that is identically 0 near the cylinder end
/// and identically 1 near the graph seam, i.e. a convex combination of the
/// graph profile and the constant rho^4.  All evaluators take the height
/// offset dt = t - a_rho in [-w, 0] so that tiny rho stays well-conditioned.
struct CornerCap {
  double rho;
  double a;
  double w;           // blend halfwidth in height coordinates
  double t_lo() const { return a - w; }
  double t_hi() const { return a; }

  double omega(double dt) const;
  double omega_d1(double dt) const;
  double omega_d2(double dt) const;

  /// Principal curvatures of the revolution surface r = omega(t):
  ///   lambda1 = -omega''/(1+omega'^2)^{3/2}, lambda2 = 1/(omega sqrt(1+omega'^2)).
  CurvaturePoint curvature(double dt, int k) const;
};

struct HandleSample {
  double tau;
  double r;
  double t;
  SegmentTag tag;
  CurvaturePoint point;
};

struct GridSpec {
  int per_graph_segment = 200;
  int per_cap = 64;
  int per_cylinder = 32;
};

/// The assembled bending hypersurface: graph of f_rho over the annulus
/// [rho^4, R] glued to the cylinder {r = rho^4} x [a_rho, 1], optionally with
/// the C^1 corner at t = a_rho replaced by a verified C-infinity cap.
class Handle {
 public:
  static Handle build(const HandleParams& params, const GridSpec& grid = {});

  const HandleParams& params() const { return params_; }
  const PiecewiseProfile& profile() const { return profile_; }
  const HandleCurve& curve() const { return curve_; }
  double a() const { return a_; }
  double cylinder_radius() const { return r4_; }
  bool smoothed() const { return cap_.has_value(); }
  const CornerCap& cap() const { return *cap_; }

  /// Curvature sampling over the whole handle (graph, cap if present, cylinder)
  /// at the density fixed by build(), or denser if requested.
  std::vector<HandleSample> sample() const { return sample(grid_); }
  std::vector<HandleSample> sample(const GridSpec& grid) const;

  /// JSON: params + sampled revolution curve (schema_version 1).
  std::string to_json(int n_curve_points = 128) const;

  /// Returns a copy with the corner smoothed over [a - w, a] and the pinching
  /// inequalities re-verified on the blended zone; throws
  /// BlendVerificationError on failure.  Default w = rho^4.
  Handle smooth_corner(std::optional<double> blend_halfwidth = std::nullopt) const;

  /// Default blend halfwidth rho^4 (the quadratic zone of the corner); the
  /// precondition for any caller-chosen width is w < (a_rho - f(rho^2))/4.
  double default_blend_halfwidth() const;

 private:
  Handle(const HandleParams& p);

  HandleParams params_;
  PiecewiseProfile profile_;
  HandleCurve curve_;
  double a_;
  double r4_;
  GridSpec grid_;
  std::optional<CornerCap> cap_;
};

}  // namespace hf
