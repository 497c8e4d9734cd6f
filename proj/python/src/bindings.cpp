#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qha/config.hpp"
#include "qha/convolution.hpp"
#include "qha/errors.hpp"
#include "qha/localization.hpp"
#include "qha/representation.hpp"
#include "qha/suites.hpp"

namespace py = pybind11;
using namespace qha;

namespace {

Symbol make_symbol(const std::function<cplx(cplx)>& f, double sup_bound) {
  return Symbol{[f](DiskPoint z) { return f(z.value()); }, sup_bound};
}

OperatorMatrix as_operator(const Eigen::MatrixXcd& m) { return OperatorMatrix(m); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum harmonic analysis on the Bergman space of the unit disk";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ArithmeticError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<>())
      .def_static("from_entries", &GroupElement::from_entries, py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &GroupElement::a)
      .def_property_readonly("b", &GroupElement::b)
      .def("inverse", &GroupElement::inverse)
      .def("__mul__", [](const GroupElement& g, const GroupElement& h) { return g * h; })
      .def("__repr__", [](const GroupElement& g) {
        std::ostringstream os;
        os << "GroupElement(a=" << g.a() << ", b=" << g.b() << ")";
        return os.str();
      });

  m.def("lift_tau", [](cplx w) { return lift_tau(DiskPoint(w)); }, py::arg("w"));
  m.def("rotation", [](double phi) { return RotationElement{phi}.embed(); }, py::arg("phi"));
  m.def("act", [](const GroupElement& g, cplx z) { return act(g, DiskPoint(z)).value(); }, py::arg("g"),
        py::arg("z"));
  m.def("cocycle", [](const GroupElement& g, cplx z) { return cocycle(g, DiskPoint(z)); }, py::arg("g"),
        py::arg("z"));
  m.def("tau", &tau, py::arg("w"), py::arg("z"));
  m.def("pseudo_dist", [](cplx z, cplx w) { return pseudo_dist(DiskPoint(z), DiskPoint(w)); });

  py::class_<DiskQuadrature>(m, "DiskQuadrature")
      .def(py::init<int, int, double>(), py::arg("radial_order") = kDefaultRadialOrder,
           py::arg("angular_order") = kDefaultAngularOrder, py::arg("radius") = 1.0)
      .def_property_readonly("radial_order", &DiskQuadrature::radial_order)
      .def_property_readonly("angular_order", &DiskQuadrature::angular_order)
      .def("__len__", &DiskQuadrature::size);

  py::class_<GroupQuadrature>(m, "GroupQuadrature")
      .def(py::init([](const DiskQuadrature& base, int circle_order) { return GroupQuadrature{base, circle_order}; }),
           py::arg("base") = DiskQuadrature(), py::arg("circle_order") = kDefaultCircleOrder);

  m.def("kernel_vector", [](cplx z, int degree) { return kernel_vector(DiskPoint(z), TruncatedSpace(degree)).coeffs(); },
        py::arg("z"), py::arg("degree"));
  m.def(
      "toeplitz_matrix",
      [](const std::function<cplx(cplx)>& a, double sup_bound, int degree, const DiskQuadrature& q) {
        return toeplitz_matrix(make_symbol(a, sup_bound), TruncatedSpace(degree), q).entries();
      },
      py::arg("symbol"), py::arg("sup_bound"), py::arg("degree"), py::arg("q") = DiskQuadrature());
  m.def("op_norm", [](const Eigen::MatrixXcd& s) { return op_norm(s); });
  m.def("trace_norm", [](const Eigen::MatrixXcd& s) { return trace_norm(as_operator(s)); });

  m.def("pi_matrix", [](const GroupElement& g, int degree) { return pi_block(g, degree + 1, degree + 1); },
        py::arg("g"), py::arg("degree"));
  m.def(
      "schur_pairing",
      [](const Eigen::VectorXcd& f1, const Eigen::VectorXcd& f2, const Eigen::VectorXcd& f3,
         const Eigen::VectorXcd& f4, const GroupQuadrature& gq, double cutoff) {
        const SchurEstimate e =
            schur_pairing(SpaceVector(f1), SpaceVector(f2), SpaceVector(f3), SpaceVector(f4), gq, cutoff);
        return py::dict(py::arg("truncated") = e.truncated, py::arg("tail") = e.tail, py::arg("value") = e.value());
      },
      py::arg("f1"), py::arg("f2"), py::arg("f3"), py::arg("f4"), py::arg("gq") = GroupQuadrature{},
      py::arg("cutoff") = 0.999);

  m.def(
      "conv_symbol_op",
      [](const std::function<cplx(cplx)>& a, double sup_bound, const Eigen::MatrixXcd& s, const GroupQuadrature& gq) {
        return conv_symbol_op(make_symbol(a, sup_bound), as_operator(s), gq).entries();
      },
      py::arg("symbol"), py::arg("sup_bound"), py::arg("S"), py::arg("gq") = GroupQuadrature{});

  m.def(
      "i_functional",
      [](const Eigen::MatrixXcd& s, double r, double beta, const DiskQuadrature& q) {
        return i_functional(as_operator(s), r, beta, default_z_grid(), q);
      },
      py::arg("S"), py::arg("r"), py::arg("beta") = kDefaultBeta, py::arg("q") = DiskQuadrature());
  m.def(
      "s_br",
      [](const Eigen::MatrixXcd& s, double r, const DiskQuadrature& q, double cutoff) {
        return s_br(as_operator(s), r, q, cutoff).entries();
      },
      py::arg("S"), py::arg("r"), py::arg("q") = DiskQuadrature(), py::arg("cutoff") = 0.999);
  m.def(
      "s_g",
      [](const Eigen::MatrixXcd& s, const DiskQuadrature& q, double cutoff) {
        return s_g(as_operator(s), q, cutoff).entries();
      },
      py::arg("S"), py::arg("q") = DiskQuadrature(), py::arg("cutoff") = 0.999);
  m.def(
      "convergence_experiment",
      [](const Eigen::MatrixXcd& s, const std::vector<double>& r_grid, double beta, const DiskQuadrature& q,
         double cutoff) {
        const OperatorMatrix S = as_operator(s);
        const LocalizationProfile p = localization_profile(S, beta, r_grid, default_z_grid(), q);
        py::list rows;
        for (const ConvergenceRow& row : convergence_experiment(S, p, q, cutoff)) {
          rows.append(py::dict(py::arg("r") = row.r, py::arg("err_opnorm") = row.err_opnorm,
                               py::arg("i_s") = row.i_s, py::arg("i_sstar") = row.i_sstar,
                               py::arg("bound") = row.bound, py::arg("bound_ok") = row.bound_ok));
        }
        return rows;
      },
      py::arg("S"), py::arg("r_grid"), py::arg("beta") = kDefaultBeta, py::arg("q") = DiskQuadrature(),
      py::arg("cutoff") = 0.999);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("truncation_degree", &RunConfig::truncation_degree)
      .def_readwrite("radial_order", &RunConfig::radial_order)
      .def_readwrite("angular_order", &RunConfig::angular_order)
      .def_readwrite("circle_order", &RunConfig::circle_order)
      .def_readwrite("cutoff", &RunConfig::cutoff)
      .def_readwrite("beta", &RunConfig::beta)
      .def_readwrite("r_grid", &RunConfig::r_grid)
      .def_readwrite("seed", &RunConfig::seed);
  m.def("load_config", &load_config, py::arg("path"));
  m.def(
      "run_suite",
      [](const std::string& name, const RunConfig& config) {
        const SuiteResult r = run_suite(name, config);
        py::list checks;
        for (const Check& c : r.checks) {
          checks.append(py::dict(py::arg("name") = c.name, py::arg("value") = c.value,
                                 py::arg("reference") = c.reference, py::arg("tolerance") = c.tolerance,
                                 py::arg("pass") = c.pass()));
        }
        return py::dict(py::arg("passed") = r.passed(), py::arg("checks") = checks, py::arg("csv") = r.csv);
      },
      py::arg("name"), py::arg("config") = RunConfig{});
}
