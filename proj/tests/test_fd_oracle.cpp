#include <cmath>

#include "doctest.h"
#include "handleforge/fd_oracle.hpp"

using namespace hf;

TEST_CASE("stencils are exact on low-degree polynomials") {
  auto quad = [](double x) { return x * x; };
  CHECK(fd_d1(quad, 3.0, 1e-4) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(fd_d2(quad, 3.0, 1e-4) == doctest::Approx(2.0).epsilon(1e-6));
  auto constant = [](double) { return 7.0; };
  CHECK(fd_d1(constant, 1.0, 1e-5) == 0.0);
  CHECK(fd_d2(constant, 1.0, 1e-5) == 0.0);
}

TEST_CASE("fd_derivatives respects the domain") {
  auto fn = [](double x) { return x * x * x; };
  std::vector<double> grid = {0.5, 0.9};
  auto h_rule = [](double) { return 0.2; };
  CHECK_THROWS_AS(fd_derivatives(fn, grid, 0.0, 1.0, h_rule), std::domain_error);
  auto ok = fd_derivatives(fn, grid, 0.0, 2.0, h_rule);
  CHECK(ok.d1[0] == doctest::Approx(0.79).epsilon(1e-10));  // 3x^2 + h^2
}

TEST_CASE("profile derivative recovery") {
  const double rho = 0.01;
  auto value_fn = [rho](double r) { return f(rho, r); };
  const double d1_fd = fd_d1(value_fn, 0.01, default_h(0.01));
  CHECK(std::fabs(d1_fd - (-0.031638599858416633)) < 1e-6);
  // the same through the curvature oracle
  const CurvaturePoint est = fd_curvature_point(value_fn, rho, 0.01, 3, false);
  const CurvaturePoint ref = curvature_point(rho, 0.01, 3);
  CHECK(est.lambda2 == doctest::Approx(ref.lambda2).epsilon(1e-7));
  CHECK(est.lambda1 == doctest::Approx(ref.lambda1).epsilon(1e-6));
}

TEST_CASE("w-substitution tames the vertical tangent") {
  const double rho = 0.01;
  auto value_fn = [rho](double r) { return f(rho, r); };
  // close to r = rho^4, raw FD in r is useless but the substituted oracle works
  const double r = r_of_w(rho, 1e-3 * std::sqrt(rho));
  const CurvaturePoint est = fd_curvature_point(value_fn, rho, r, 3, true);
  const CurvaturePoint ref = curvature_point(rho, r, 3);
  CHECK(std::fabs(est.lambda2 - ref.lambda2) / std::fabs(ref.lambda2) < 1e-7);
  CHECK(std::fabs(est.H - ref.H) / std::fabs(ref.H) < 1e-7);
}

TEST_CASE("cylinder segment matches exactly up to roundoff") {
  // constant-radius profile: derivatives identically zero
  auto cyl = [](double) { return 0.25; };
  const double d1 = fd_d1(cyl, 0.5, 1e-5);
  const double d2 = fd_d2(cyl, 0.5, 1e-5);
  CHECK(d1 == 0.0);
  CHECK(d2 == 0.0);
}

TEST_CASE("compare report carries location and step") {
  std::vector<double> grid = {1.0, 2.0, 3.0};
  std::vector<double> a = {1.0, 5.0, 2.0};
  std::vector<double> b = {1.0, 5.0001, 2.0};
  OracleReport rep = compare("demo", grid, a, b, 1e-6);
  CHECK(!rep.pass);
  CHECK(rep.argmax_r == 2.0);
  CHECK(rep.max_rel_err == doctest::Approx(1e-4 / 5.0).epsilon(1e-6));
  OracleReport ok = compare("demo", grid, a, a, 1e-12);
  CHECK(ok.pass);
}

TEST_CASE("mutation sensitivity: corrupted closed form is detected") {
  const double rho = 0.01;
  auto value_fn = [rho](double r) { return f(rho, r); };
  std::vector<double> grid, closed, est;
  for (int i = 0; i <= 100; ++i) {
    const double r = 1e-6 * std::pow(0.09 / 1e-6, i / 100.0);
    grid.push_back(r);
    closed.push_back(curvature_point(rho, r, 3).lambda1);
    est.push_back(fd_curvature_point(value_fn, rho, r, 3, true).lambda1);
  }
  CHECK(compare("lambda1", grid, closed, est, 1e-6).pass);
  for (auto& v : closed) v *= 1.0 + 1e-3;
  CHECK(!compare("lambda1 (corrupted)", grid, closed, est, 1e-6).pass);
}

TEST_CASE("FD error decreases at second order on smooth segments") {
  const double rho = 0.01;
  auto value_fn = [rho](double r) { return f(rho, r); };
  for (double r : {0.005, 0.02, 0.06}) {
    const double order = fd_convergence_order(value_fn, f_prime(rho, r), r, 1e-3 * r);
    CHECK(order >= 1.8);
  }
}
