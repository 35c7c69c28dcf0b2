#include "handleforge/flow.hpp"

#include <algorithm>
#include <cmath>

#include "handleforge/report.hpp"

namespace hf {

double sphere_volume(int n) {
  if (n < 1) throw std::domain_error("sphere_volume: n must be >= 1");
  return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

void RoundPath::validate(int n_check) const {
  if (n < 2) throw std::domain_error("RoundPath: n must be >= 2");
  for (int i = 0; i <= n_check; ++i) {
    const double t = double(i) / n_check;
    const double l = lambda(t);
    const double lp = lambda_d1(t);
    if (!(l > 0.0)) throw std::domain_error("RoundPath: lambda must be positive");
    if (!(lp > 0.0)) throw std::domain_error("RoundPath: lambda' must be positive");
    const double scal_zeta = n * (n - 1.0) / (l * l);
    if (!(scal_zeta > s))
      throw std::domain_error("RoundPath: scal_zeta must stay above the bound s");
  }
}

AmbientQuantities ambient_quantities(const RoundPath& path, double t) {
  if (t < 0.0 || t > 1.0) throw std::domain_error("ambient_quantities: t outside [0,1]");
  const double l = path.lambda(t);
  const double lp = path.lambda_d1(t);
  const double lpp = path.lambda_d2(t);
  const int n = path.n;
  AmbientQuantities q;
  q.Hbar = n * lp / l;
  q.normAbar_sq = n * (lp / l) * (lp / l);
  q.scal_zeta = n * (n - 1.0) / (l * l);
  q.scal_gbar = n * (n - 1.0) * (1.0 - lp * lp) / (l * l) - 2.0 * n * lpp / l;
  return q;
}

namespace {

double flow_rhs(const RoundPath& path, double t, double u) {
  const AmbientQuantities q = ambient_quantities(path, t);
  return (0.5 * (path.s - q.scal_zeta) * u * u * u +
          0.5 * (q.scal_zeta - q.scal_gbar) * u) /
         q.Hbar;
}

// Dormand-Prince 5(4) coefficients
const double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
const double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
const double kB5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
const double kB4[7] = {5179.0 / 57600, 0.0,       7571.0 / 16695, 393.0 / 640,
                       -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

}  // namespace

double FlowTrajectory::u_at(double tq) const {
  if (t.empty()) throw std::domain_error("FlowTrajectory: empty");
  if (tq <= t.front()) return u.front();
  if (tq >= t.back()) return u.back();
  const auto it = std::upper_bound(t.begin(), t.end(), tq);
  const size_t i = size_t(it - t.begin()) - 1;
  const double h = t[i + 1] - t[i];
  const double x = (tq - t[i]) / h;
  const double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
  const double h10 = x * (1 - x) * (1 - x);
  const double h01 = x * x * (3 - 2 * x);
  const double h11 = x * x * (x - 1);
  return h00 * u[i] + h10 * h * dudt[i] + h01 * u[i + 1] + h11 * h * dudt[i + 1];
}

FlowTrajectory solve_u(const RoundPath& path, double u0, double tol) {
  if (!(u0 > 0.0)) throw std::domain_error("solve_u: u0 must be positive");
  path.validate();

  FlowTrajectory traj;
  double t = 0.0, u = u0;
  double h = 1e-3;
  traj.t.push_back(t);
  traj.u.push_back(u);
  traj.dudt.push_back(flow_rhs(path, t, u));

  int rejects_in_row = 0;
  while (t < 1.0) {
    // cap the step so the cubic Hermite dense output stays interpolation-tight
    h = std::min({h, 1.0 - t, 0.005});
    double k[7];
    k[0] = traj.dudt.back();
    for (int i = 1; i < 7; ++i) {
      double ui = u;
      for (int j = 0; j < i; ++j) ui += h * kA[i][j] * k[j];
      if (!(ui > 0.0)) throw FlowBlowupError("solve_u: u lost positivity inside a stage");
      k[i] = flow_rhs(path, std::min(t + kC[i] * h, 1.0), ui);
    }
    double u5 = u, u4 = u;
    for (int i = 0; i < 7; ++i) {
      u5 += h * kB5[i] * k[i];
      u4 += h * kB4[i] * k[i];
    }
    const double err = std::fabs(u5 - u4);
    const double scale = tol * std::max(1.0, std::fabs(u));
    if (err <= scale || h <= 1e-14) {
      t += h;
      u = u5;
      if (!(u > 0.0)) throw FlowBlowupError("solve_u: u lost positivity");
      traj.t.push_back(t);
      traj.u.push_back(u);
      traj.dudt.push_back(flow_rhs(path, t, u));
      rejects_in_row = 0;
    } else if (++rejects_in_row > 60) {
      throw FlowBlowupError("solve_u: step control failed to converge");
    }
    const double fac = err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 2.0;
    h *= std::clamp(fac, 0.2, 5.0);
  }
  return traj;
}

double total_mean_curvature(const RoundPath& path, const FlowTrajectory& traj, double t) {
  const double l = path.lambda(t);
  const double lp = path.lambda_d1(t);
  return path.n * sphere_volume(path.n) * std::pow(l, path.n - 1) * lp / traj.u_at(t);
}

MarginReport check_monotone(const RoundPath& path, const FlowTrajectory& traj) {
  double min_increase = 1e300;
  double arg = 0.0;
  for (size_t i = 0; i + 1 < traj.t.size(); ++i) {
    const double a = total_mean_curvature(path, traj, traj.t[i]);
    const double b = total_mean_curvature(path, traj, traj.t[i + 1]);
    if (b - a < min_increase) {
      min_increase = b - a;
      arg = traj.t[i];
    }
  }
  MarginReport rep;
  rep.claim_id = "tmc-strictly-increasing";
  rep.min_margin = min_increase;
  rep.arg_min = arg;
  rep.pass = min_increase > 0.0;
  return rep;
}

std::string flow_csv(const RoundPath& path, const FlowTrajectory& traj) {
  std::string out = "t,u,H,TMC\n";
  for (size_t i = 0; i < traj.t.size(); ++i) {
    const AmbientQuantities q = ambient_quantities(path, traj.t[i]);
    out += format_float(traj.t[i]) + "," + format_float(traj.u[i]) + "," +
           format_float(q.Hbar / traj.u[i]) + "," +
           format_float(total_mean_curvature(path, traj, traj.t[i])) + "\n";
  }
  return out;
}

}  // namespace hf
