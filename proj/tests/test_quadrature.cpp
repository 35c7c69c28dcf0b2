#include <cmath>

#include "doctest.h"
#include "handleforge/quadrature.hpp"

using namespace hf;

TEST_CASE("polynomials and smooth integrands") {
  auto r1 = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-13);
  CHECK(r1.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r1.converged);

  auto r2 = integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-13);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-13));

  // oscillatory, needs subdivision
  auto r3 = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, 1e-12);
  CHECK(r3.value == doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("integrable endpoint behavior after substitution") {
  // 1/sqrt singularity handled by the caller's change of variables:
  // int_0^1 dx/sqrt(x) = 2 becomes int_0^1 2 dw after x = w^2
  auto direct = integrate([](double w) { return 2.0; }, 0.0, 1.0, 1e-13);
  CHECK(direct.value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("tolerance failure throws in checked mode") {
  // a genuinely nasty integrand at an unreachable tolerance and tiny depth budget
  auto r = integrate([](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0, 0.0, 4);
  CHECK(!r.converged);
  CHECK_THROWS_AS(
      integrate_checked([](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0, 0.0),
      QuadratureError);
}
