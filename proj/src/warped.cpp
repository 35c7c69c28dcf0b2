#include "handleforge/warped.hpp"

namespace hf {

double warped_scal(const std::vector<WarpedFiberValues>& fibers) {
  double scal = 0.0;
  double cross = 0.0;  // sum over a of m_a f_a'/f_a
  for (const auto& fb : fibers) {
    const double lp = fb.f_d1 / fb.f;
    scal += fb.fiber_scal / (fb.f * fb.f) - 2.0 * fb.dim * fb.f_d2 / fb.f -
            fb.dim * (fb.dim - 1) * lp * lp;
    cross += fb.dim * lp;
  }
  // subtract sum_{a != b} m_a m_b lp_a lp_b = cross^2 - sum_a m_a^2 lp_a^2
  double sq = 0.0;
  for (const auto& fb : fibers) {
    const double lp = fb.f_d1 / fb.f;
    sq += double(fb.dim) * fb.dim * lp * lp;
  }
  return scal - (cross * cross - sq);
}

double warped_scal_fd(const std::vector<WarpedFiber>& fibers, double sigma, double h) {
  // fourth-order central stencils
  std::vector<WarpedFiberValues> vals;
  vals.reserve(fibers.size());
  for (const auto& fb : fibers) {
    const double f2m = fb.f(sigma - 2.0 * h);
    const double f1m = fb.f(sigma - h);
    const double f0 = fb.f(sigma);
    const double f1p = fb.f(sigma + h);
    const double f2p = fb.f(sigma + 2.0 * h);
    const double d1 = (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h);
    const double d2 = (-f2p + 16.0 * f1p - 30.0 * f0 + 16.0 * f1m - f2m) / (12.0 * h * h);
    vals.push_back({f0, d1, d2, fb.dim, fb.fiber_scal});
  }
  return warped_scal(vals);
}

}  // namespace hf
