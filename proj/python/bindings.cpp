#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spiral/errors.hpp"
#include "spiral/geometry.hpp"
#include "spiral/hard_wall.hpp"
#include "spiral/oracle.hpp"
#include "spiral/oscillator_spectrum.hpp"
#include "spiral/special_functions.hpp"

namespace py = pybind11;
using namespace spiral;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectrum, wavefunctions and numerical checks for the spiral-dislocation oscillator";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<RootFindingError>(m, "RootFindingError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<DislocationParams>(m, "DislocationParams")
      .def(py::init([](double beta, double mass, double omega) {
             return DislocationParams{beta, mass, omega};
           }),
           py::arg("beta") = 0.0, py::arg("mass") = 1.0, py::arg("omega") = 1.0)
      .def_readwrite("beta", &DislocationParams::beta)
      .def_readwrite("mass", &DislocationParams::mass)
      .def_readwrite("omega", &DislocationParams::omega)
      .def("__repr__", [](const DislocationParams& p) {
        return "DislocationParams(beta=" + std::to_string(p.beta) +
               ", mass=" + std::to_string(p.mass) + ", omega=" + std::to_string(p.omega) + ")";
      });

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init([](int n, int l, double k) { return QuantumNumbers{n, l, k}; }),
           py::arg("n") = 0, py::arg("l") = 0, py::arg("k") = 0.0)
      .def_readwrite("n", &QuantumNumbers::n)
      .def_readwrite("l", &QuantumNumbers::l)
      .def_readwrite("k", &QuantumNumbers::k);

  py::class_<RadialState>(m, "RadialState")
      .def_readonly("qn", &RadialState::qn)
      .def_readonly("params", &RadialState::params)
      .def_readonly("energy", &RadialState::energy)
      .def_readonly("lambda_", &RadialState::lambda)
      .def_readonly("norm_constant", &RadialState::norm_constant);

  py::class_<HardWallConfig>(m, "HardWallConfig")
      .def(py::init([](double r0, const DislocationParams& p, int l, double k) {
             return HardWallConfig{r0, p, l, k};
           }),
           py::arg("r0"), py::arg("params"), py::arg("l") = 0, py::arg("k") = 0.0)
      .def_readwrite("r0", &HardWallConfig::r0)
      .def_readwrite("params", &HardWallConfig::params)
      .def_readwrite("l", &HardWallConfig::l)
      .def_readwrite("k", &HardWallConfig::k)
      .def_property_readonly("x0", &HardWallConfig::x0)
      .def_property_readonly("effective_radius", &HardWallConfig::effective_radius);

  py::class_<OracleConfig>(m, "OracleConfig")
      .def(py::init<>())
      .def_readwrite("r_min", &OracleConfig::r_min)
      .def_readwrite("r_max", &OracleConfig::r_max)
      .def_readwrite("h", &OracleConfig::h)
      .def_readwrite("e_tol", &OracleConfig::e_tol)
      .def_readwrite("max_bisections", &OracleConfig::max_bisections)
      .def_readwrite("wall_radius", &OracleConfig::wall_radius);

  m.def("metric_at", [](const DislocationParams& p, double r) {
    const MetricAtPoint g = metric_at(p, r);
    return py::make_tuple(g.g, g.g_inv, g.det_g);
  }, "(g, g_inv, det_g) at radius r");
  m.def("laplacian_coefficients", [](const DislocationParams& p, double r) {
    const LaplacianCoefficients c = laplacian_coefficients(p, r);
    py::dict d;
    d["d_rr"] = c.d_rr;
    d["d_r"] = c.d_r;
    d["d_rphi"] = c.d_rphi;
    d["d_phiphi"] = c.d_phiphi;
    d["d_phi"] = c.d_phi;
    return d;
  });

  m.def("kummer_1f1", [](double a, double b, double x) {
    return kummer_1f1(make_hypergeom_args(a, b, x));
  }, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("kummer_1f1_asymptotic", [](double a, double b, double x) {
    return kummer_1f1_asymptotic(make_hypergeom_args(a, b, x));
  }, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("kummer_1f1_cosine", &kummer_1f1_cosine, py::arg("a"), py::arg("b"), py::arg("x0"));
  m.def("gamma_fn", &gamma_fn, py::arg("z"));

  m.def("energy_level", &energy_level, py::arg("params"), py::arg("qn"));
  m.def("lambda_of_energy", &lambda_of_energy, py::arg("params"), py::arg("k"), py::arg("energy"));
  m.def("x_of_r", &x_of_r, py::arg("params"), py::arg("r"));
  m.def("make_bound_state", &make_bound_state, py::arg("params"), py::arg("qn"));
  m.def("radial_f", &radial_f, py::arg("state"), py::arg("r"));
  m.def("radial_R", &radial_R, py::arg("state"), py::arg("r"));
  m.def("full_wavefunction", &full_wavefunction, py::arg("state"), py::arg("r"), py::arg("phi"),
        py::arg("z"));
  m.def("normalize", [](const RadialState& s) { return normalize(s); }, py::arg("state"));
  m.def("hamiltonian_residual", [](const RadialState& s, double h, double r_min, double r_max) {
    return hamiltonian_residual(s, {h, r_min, r_max});
  }, py::arg("state"), py::arg("h") = 1e-3, py::arg("r_min") = 0.5, py::arg("r_max") = 0.0);

  m.def("approx_energy", &approx_energy, py::arg("cfg"), py::arg("n"));
  m.def("exact_energy", [](const HardWallConfig& c, int n) { return exact_energy(c, n); },
        py::arg("cfg"), py::arg("n"));
  m.def("boundary_value", &boundary_value, py::arg("cfg"), py::arg("energy"));

  m.def("shoot", [](const DislocationParams& p, int l, double k, double e, const OracleConfig& c) {
    const ShootResult r = shoot(p, l, k, e, c);
    return py::make_tuple(r.terminal_value, r.nodes);
  }, py::arg("params"), py::arg("l"), py::arg("k"), py::arg("energy"),
     py::arg("cfg") = OracleConfig{});
  m.def("find_eigenvalue", &find_eigenvalue, py::arg("params"), py::arg("l"), py::arg("k"),
        py::arg("n"), py::arg("cfg") = OracleConfig{});

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
