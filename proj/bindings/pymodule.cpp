#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "handleforge/acceptance.hpp"
#include "handleforge/conformal.hpp"
#include "handleforge/estimates.hpp"
#include "handleforge/flow.hpp"
#include "handleforge/mass.hpp"
#include "handleforge/monotonicity.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_core, m) {
  m.doc() = "handleforge: curvature toolkit for bending-handle hypersurfaces";

  // profile layer
  m.def("xi", &hf::xi, py::arg("rho"), py::arg("r"));
  m.def("xi_prime", &hf::xi_prime, py::arg("rho"), py::arg("r"));
  m.def("xi_second", &hf::xi_second, py::arg("rho"), py::arg("r"));
  m.def("xi_inverse", &hf::xi_inverse, py::arg("rho"), py::arg("t"));
  m.def("a_rho", &hf::a_rho, py::arg("rho"));
  m.def("f", &hf::f, py::arg("rho"), py::arg("r"));
  m.def("f_prime", &hf::f_prime, py::arg("rho"), py::arg("r"));
  m.def("f_second", &hf::f_second, py::arg("rho"), py::arg("r"));
  m.def("eta", &hf::eta, py::arg("s"));

  // geometry layer
  py::class_<hf::CurvaturePoint>(m, "CurvaturePoint")
      .def_readonly("r", &hf::CurvaturePoint::r)
      .def_readonly("lambda1", &hf::CurvaturePoint::lambda1)
      .def_readonly("lambda2", &hf::CurvaturePoint::lambda2)
      .def_readonly("H", &hf::CurvaturePoint::H)
      .def_readonly("normA", &hf::CurvaturePoint::normA)
      .def_readonly("scal", &hf::CurvaturePoint::scal)
      .def_readonly("nu_t", &hf::CurvaturePoint::nu_t)
      .def_readonly("nu_tan", &hf::CurvaturePoint::nu_tan);
  m.def("curvature_point", &hf::curvature_point, py::arg("rho"), py::arg("r"), py::arg("k"));
  m.def("cylinder_point", &hf::cylinder_point, py::arg("rho"), py::arg("k"));
  m.def(
      "principal_curvatures",
      [](double d1, double d2, double r) { return hf::principal_curvatures(d1, d2, r); },
      py::arg("f_d1"), py::arg("f_d2"), py::arg("r"));
  m.def("arc_length_d",
        [](double rho, double R, double tol) {
          const auto a = hf::arc_length_d(rho, R, tol);
          return py::dict("value"_a = a.value, "quadrature_error"_a = a.quadrature_error,
                          "antiderivative_route"_a = a.antiderivative_route,
                          "quadrature_route"_a = a.quadrature_route);
        },
        py::arg("rho"), py::arg("R"), py::arg("tol") = 1e-12);

  // estimates
  m.def("cbar", &hf::cbar, py::arg("k"));
  m.def("length_derivative_fd", &hf::length_derivative_fd, py::arg("rho"), py::arg("R"));

  // conformal layer
  m.def("conformal_H", &hf::conformal_H, py::arg("H_g"), py::arg("nu_t"), py::arg("u"),
        py::arg("du_dt"), py::arg("n"));
  m.def("conformal_scal", &hf::conformal_scal, py::arg("scal_g"), py::arg("H_g"),
        py::arg("nu_t"), py::arg("u"), py::arg("du_dt"), py::arg("d2u_dt2"), py::arg("n"));

  // flow
  m.def("sphere_volume", &hf::sphere_volume, py::arg("n"));
  m.def(
      "solve_flow",
      [](int n, double s, double u0, double tol) {
        hf::RoundPath path{n, [](double t) { return 1.0 + t; }, [](double) { return 1.0; },
                           [](double) { return 0.0; }, s};
        const auto traj = hf::solve_u(path, u0, tol);
        const double tmc0 = hf::total_mean_curvature(path, traj, 0.0);
        const double tmc1 = hf::total_mean_curvature(path, traj, 1.0);
        return py::dict("t"_a = traj.t, "u"_a = traj.u, "tmc0"_a = tmc0, "tmc1"_a = tmc1);
      },
      py::arg("n") = 2, py::arg("s") = 0.0, py::arg("u0") = 0.5, py::arg("tol") = 1e-10);

  // mass layer
  py::class_<hf::MassConstants>(m, "MassConstants")
      .def_readonly("c0", &hf::MassConstants::c0)
      .def_readonly("c1", &hf::MassConstants::c1)
      .def_readonly("c2", &hf::MassConstants::c2)
      .def_readonly("sigma2", &hf::MassConstants::sigma2)
      .def_readonly("K", &hf::MassConstants::K)
      .def("h0", &hf::MassConstants::h0, py::arg("H"));
  m.def("build_constants", &hf::build_constants, py::arg("n"), py::arg("sigma0"),
        py::arg("sigma1"), py::arg("kappa"), py::arg("r0") = 1.0);
  m.def("hyp_sphere_H", &hf::hyp_sphere_H, py::arg("n"), py::arg("sigma2"), py::arg("r0"));
  m.def("lambda_asymptotic", &hf::lambda_asymptotic, py::arg("sigma0"), py::arg("kappa"),
        py::arg("C0"));
  py::class_<hf::PimpleConfig>(m, "PimpleConfig")
      .def_readonly("ell", &hf::PimpleConfig::ell)
      .def_readonly("r", &hf::PimpleConfig::r)
      .def_readonly("tmc_lb", &hf::PimpleConfig::tmc_lb)
      .def_readonly("vol_ub", &hf::PimpleConfig::vol_ub)
      .def_readonly("diam_ub", &hf::PimpleConfig::diam_ub);
  m.def("pimple", &hf::pimple, py::arg("n"), py::arg("K"));
}
