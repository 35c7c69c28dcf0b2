#pragma once

#include <functional>
#include <stdexcept>

namespace hf {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // accumulated error estimate
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 7-15 on [a, b].  Bisects intervals until the local
/// K15-G7 error estimate meets tol (absolute, scaled per subinterval).
QuadResult integrate(const std::function<double(double)>& fn, double a, double b,
                     double tol = 1e-12, int max_depth = 48);

/// Same, but throws QuadratureError if the tolerance was not met.
double integrate_checked(const std::function<double(double)>& fn, double a, double b,
                         double tol = 1e-12);

}  // namespace hf
