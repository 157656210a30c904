#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "golab/cli_ops.hpp"
#include "golab/errors.hpp"

namespace py = pybind11;

namespace {

// results cross the boundary as canonical JSON text; the python package
// parses them into plain dicts
std::string rootsys_show(const std::string& type, int rank) {
  return golab::cliops::rootsys_show(type, rank).dump();
}

std::string flag_describe(const std::string& type, int rank, const std::vector<int>& painted) {
  return golab::cliops::flag_describe(type, rank, painted).dump();
}

std::string space_decompose(const std::string& config_text, const std::string& format) {
  return golab::cliops::space_decompose(config_text, format).dump();
}

py::tuple space_check(const std::string& config_text, const std::string& which,
                      const std::string& format, int samples, unsigned long long seed) {
  auto outcome = golab::cliops::space_check(config_text, which, format, samples, seed);
  return py::make_tuple(outcome.holds, outcome.report.dump());
}

std::string lemmas_verify(int rank_max) {
  return golab::cliops::lemmas_verify(rank_max).dump();
}

}  // namespace

PYBIND11_MODULE(_golab, m) {
  m.doc() = "exact workbench for geodesic orbit metrics on compact homogeneous spaces";

  // translators run newest-first: register the base before the refinements
  py::register_exception<golab::Error>(m, "GolabError", PyExc_RuntimeError);
  py::register_exception<golab::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<golab::InvalidRank>(m, "InvalidRank", PyExc_ValueError);
  py::register_exception<golab::InvariantViolation>(m, "InvariantViolation", PyExc_ValueError);

  m.def("rootsys_show_json", &rootsys_show, py::arg("type"), py::arg("rank"),
        "root system data as a JSON string");
  m.def("flag_describe_json", &flag_describe, py::arg("type"), py::arg("rank"),
        py::arg("painted"), "painted-diagram partition as a JSON string (painted is 1-based)");
  m.def("space_decompose_json", &space_decompose, py::arg("config_text"),
        py::arg("format") = "auto", "tangent decomposition report as a JSON string");
  m.def("space_check_json", &space_check, py::arg("config_text"), py::arg("which"),
        py::arg("format") = "auto", py::arg("samples") = 200, py::arg("seed") = 1,
        "(holds, report_json) for which in {go, natred, normal, necform}");
  m.def("lemmas_verify_json", &lemmas_verify, py::arg("rank_max") = 5,
        "lemma sweep report as a JSON string");
}
