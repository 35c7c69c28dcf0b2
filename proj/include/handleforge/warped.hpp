#pragma once

#include <functional>
#include <vector>

namespace hf {

/// One fiber of a multiply warped product dsigma^2 + sum_a f_a(sigma)^2 g_a.
struct WarpedFiber {
  std::function<double(double)> f;  // warp factor f_a(sigma) > 0
  int dim;                          // fiber dimension m_a
  double fiber_scal;                // scal(g_a) of the unit fiber
};

/// Scalar curvature of dsigma^2 + sum_a f_a^2 g_a at sigma, with the warp
/// derivatives taken by central finite differences (oracle use):
///
///   scal = sum_a [ scal_a/f_a^2 - 2 m_a f_a''/f_a - m_a(m_a-1)(f_a'/f_a)^2 ]
///          - sum_{a != b} m_a m_b (f_a'/f_a)(f_b'/f_b)
double warped_scal_fd(const std::vector<WarpedFiber>& fibers, double sigma, double h);

/// Same with caller-supplied derivatives (closed-form use).
struct WarpedFiberValues {
  double f;
  double f_d1;
  double f_d2;
  int dim;
  double fiber_scal;
};
double warped_scal(const std::vector<WarpedFiberValues>& fibers);

}  // namespace hf
