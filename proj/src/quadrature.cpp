#include "handleforge/quadrature.hpp"

#include <cmath>

namespace hf {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& fn, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = fn(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = fn(c - x) + fn(c + x);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  const double diff = std::fabs((resk - resg) * h);
  // QUADPACK-style sharpened error estimate
  const double err = diff * std::sqrt(std::min(1.0, 200.0 * diff));
  return {resk * h, err > 0.0 ? err : diff};
}

constexpr int kMaxEvaluations = 2'000'000;

void adapt(const std::function<double(double)>& fn, double a, double b, double tol,
           int depth, QuadResult& out) {
  Panel p = gk15(fn, a, b);
  out.evaluations += 15;
  if (p.error <= tol || depth <= 0 || out.evaluations > kMaxEvaluations) {
    out.value += p.value;
    out.error += p.error;
    if (p.error > tol) out.converged = false;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(fn, a, c, 0.5 * tol, depth - 1, out);
  adapt(fn, c, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& fn, double a, double b,
                     double tol, int max_depth) {
  QuadResult out;
  out.converged = true;
  if (a == b) return out;
  adapt(fn, a, b, tol, max_depth, out);
  return out;
}

double integrate_checked(const std::function<double(double)>& fn, double a, double b,
                         double tol) {
  QuadResult r = integrate(fn, a, b, tol);
  if (!r.converged)
    throw QuadratureError("adaptive quadrature did not reach the requested tolerance");
  return r.value;
}

}  // namespace hf
