#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qchar/errors.hpp"
#include "qchar/serialize.hpp"

namespace py = pybind11;
using namespace qchar;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded characters of KR-module fusion products";

  py::register_exception<IdentityViolation>(m, "IdentityViolation", PyExc_ArithmeticError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def(
      "character_json",
      [](int rank, int level, const std::string& n) { return character_json(graded_character(NVector::parse(n, rank, level))).dump(); },
      py::arg("rank"), py::arg("level"), py::arg("n"));

  m.def(
      "verify_json",
      [](const std::string& suite, int rank, int bound, int order) {
        SuiteOptions opt;
        opt.rank = rank;
        opt.bound = bound;
        opt.order = order;
        std::vector<CheckReport> reps;
        {
          py::gil_scoped_release release;
          reps = run_suite(suite, opt);
        }
        return reports_json(suite, reps).dump();
      },
      py::arg("suite"), py::arg("rank") = 0, py::arg("bound") = 0, py::arg("order") = 20);

  m.def("suite_names", &suite_names);
}
