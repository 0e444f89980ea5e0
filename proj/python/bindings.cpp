#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dtheta/coefficients.hpp"
#include "dtheta/critical_line.hpp"
#include "dtheta/error.hpp"
#include "dtheta/field.hpp"
#include "dtheta/inverse_theta.hpp"
#include "dtheta/steen.hpp"
#include "dtheta/theta.hpp"
#include "dtheta/zeta.hpp"

namespace py = pybind11;
using namespace dtheta;

PYBIND11_MODULE(_dtheta, m) {
  m.doc() = "Dedekind zeta theta relations";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<NumericError>(m, "NumericError", error.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", error.ptr());

  py::class_<FieldDescriptor>(m, "Field")
      .def_property_readonly("r1", &FieldDescriptor::r1)
      .def_property_readonly("r2", &FieldDescriptor::r2)
      .def_property_readonly("degree", &FieldDescriptor::degree)
      .def_property_readonly("disc", &FieldDescriptor::disc)
      .def_property_readonly("name", &FieldDescriptor::name)
      .def_property_readonly("h", [](const FieldDescriptor& f) { return f.constants().h; })
      .def_property_readonly("c", [](const FieldDescriptor& f) { return f.constants().c; })
      .def("__repr__", [](const FieldDescriptor& f) {
        return "<Field " + f.name() + " r1=" + std::to_string(f.r1()) + " r2=" + std::to_string(f.r2()) +
               " D=" + std::to_string(f.disc()) + ">";
      });

  m.def("field", &resolve_field, py::arg("spec"), "Builtin name (Q, sqrt5, cubic7, ...) or character file");
  m.def("dedekind_zeta", [](const FieldDescriptor& f, cplx s) { return dedekind_zeta(s, f); }, py::arg("field"),
        py::arg("s"));
  m.def("riemann_zeta", &riemann_zeta, py::arg("s"));
  m.def("ideal_coeffs", [](const FieldDescriptor& f, std::size_t n) { return ideal_coeffs(f, n).values; },
        py::arg("field"), py::arg("n"));
  m.def("moebius_coeffs", [](const FieldDescriptor& f, int k, std::size_t n) { return moebius_coeffs(f, k, n).values; },
        py::arg("field"), py::arg("k"), py::arg("n"));

  m.def("z_tilde", [](int r1, int r2, cplx x) { return z_tilde(r1, r2, x); }, py::arg("r1"), py::arg("r2"),
        py::arg("x"));
  m.def("z_shifted", [](int r1, int r2, cplx x) { return z_shifted(r1, r2, x); }, py::arg("r1"), py::arg("r2"),
        py::arg("x"));

  py::class_<ThetaReport>(m, "ThetaReport")
      .def_readonly("x", &ThetaReport::x)
      .def_readonly("lhs", &ThetaReport::lhs)
      .def_readonly("rhs", &ThetaReport::rhs)
      .def_readonly("rel_error", &ThetaReport::rel_error)
      .def_readonly("terms_used", &ThetaReport::terms_used);
  m.def("w_theta", [](const FieldDescriptor& f, int k, cplx x) { return w_theta(f, k, x); }, py::arg("field"),
        py::arg("k"), py::arg("x"));
  m.def("check_theta", [](const FieldDescriptor& f, int k, cplx x) { return check_theta(f, k, x); },
        py::arg("field"), py::arg("k"), py::arg("x"));

  py::class_<InverseReport>(m, "InverseReport")
      .def_readonly("x", &InverseReport::x)
      .def_readonly("lhs", &InverseReport::lhs)
      .def_readonly("rhs", &InverseReport::rhs)
      .def_readonly("residual", &InverseReport::residual)
      .def_readonly("rel_error", &InverseReport::rel_error)
      .def_readonly("zeros_used", &InverseReport::zeros_used)
      .def_readonly("zero_tail_estimate", &InverseReport::zero_tail_estimate);

  const auto zero_list = [](const std::vector<double>& gammas) {
    validate_zeros(gammas);
    ZeroList z;
    z.gammas = gammas;
    z.source = "python";
    return z;
  };
  m.def("load_zeros", [](const std::string& path) { return load_zeros(path).gammas; }, py::arg("path"));
  m.def("check_inverse_theta",
        [zero_list](const FieldDescriptor& f, int k, cplx x, const std::vector<double>& zeros) {
          return check_inverse_theta(f, k, x, zero_list(zeros));
        },
        py::arg("field"), py::arg("k"), py::arg("x"), py::arg("zeros"));
  m.def("hlr_check",
        [zero_list](double x, const std::vector<double>& zeros, std::size_t cutoff, bool smooth) {
          HlrOptions o;
          o.cutoff = cutoff;
          o.smooth = smooth;
          return hlr_check(x, zero_list(zeros), o);
        },
        py::arg("x"), py::arg("zeros"), py::arg("cutoff") = 1000000, py::arg("smooth") = true);
  m.def("dgv_check",
        [zero_list](const FieldDescriptor& f, double x, const std::vector<double>& zeros) {
          return dgv_check(f, x, zero_list(zeros));
        },
        py::arg("field"), py::arg("x"), py::arg("zeros"));

  m.def("big_xi", &big_xi, py::arg("field"), py::arg("t"));
  m.def("scan_zeros",
        [](const FieldDescriptor& f, double a, double b, double step) { return scan_zeros(f, a, b, step).zeros; },
        py::arg("field"), py::arg("t_min"), py::arg("t_max"), py::arg("step") = 0.02);
  m.def("phi_residual", [](const FieldDescriptor& f, cplx z) { return phi_identity_check(f, z).residual; },
        py::arg("field"), py::arg("z"));
}
