#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlverify/errors.hpp"
#include "hlverify/hall_littlewood.hpp"
#include "hlverify/identities.hpp"
#include "hlverify/pfaffian.hpp"

namespace py = pybind11;

namespace {

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

std::vector<std::string> x_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of Hall-Littlewood torus-integral identities";

  py::register_exception<hlv::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<hlv::DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<hlv::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<hlv::ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.def("catalog", []() { return loads(hlv::catalog_json()); }, "Registered identities as a list of dicts.");

  m.def(
      "verify",
      [](const std::string& identity, int n, const hlv::Weight& lambda, const hlv::Weight& mu, int m_rank, int order,
         bool timing) {
        hlv::Instance in{identity, n, m_rank, lambda, mu, order};
        hlv::Report r;
        {
          py::gil_scoped_release release;
          r = hlv::verify(in);
        }
        return loads(hlv::report_json(r, timing));
      },
      py::arg("identity"), py::arg("n"), py::arg("lam") = hlv::Weight{}, py::arg("mu") = hlv::Weight{},
      py::arg("m") = 0, py::arg("order") = 12, py::arg("timing") = false,
      "Check one instance; returns the JSON record as a dict.");

  m.def(
      "sweep",
      [](const std::string& identity, int n, int m_rank, int max_weight, int max_parts, int order, int jobs,
         bool timing) {
        const auto instances = hlv::sweep_instances(identity, n, m_rank, max_weight, max_parts, order);
        for (auto i : instances) hlv::prepare(i);
        std::vector<hlv::Report> reports;
        {
          py::gil_scoped_release release;
          reports = hlv::run_pool(instances, jobs);
        }
        py::list out;
        for (const auto& r : reports) out.append(loads(hlv::report_json(r, timing)));
        return out;
      },
      py::arg("identity"), py::arg("n"), py::arg("m") = 0, py::arg("max_weight") = 4, py::arg("max_parts") = 3,
      py::arg("order") = 12, py::arg("jobs") = 1, py::arg("timing") = false);

  m.def(
      "hall_littlewood",
      [](const hlv::Weight& w, int order) {
        const auto names = x_names(static_cast<int>(w.size()));
        return hlv::hl_full(w, hlv::slots_vars(static_cast<int>(w.size())), names, order).poly.str();
      },
      py::arg("weight"), py::arg("order") = 12, "P_w(x_1..x_N; t) with t = s^2, printed.");

  m.def(
      "pfaffian_a",
      [](const hlv::Weight& lambda, int order) { return hlv::pfaffian(hlv::build_a_matrix(lambda, order)).str(); },
      py::arg("lam"), py::arg("order") = 12, "Pf[a_jk(lambda)] as a polynomial in alpha.");

  m.def(
      "constant_term_check",
      [](const std::string& identity, int n, const hlv::Weight& lambda, int order) {
        hlv::Instance in{identity, n, 0, lambda, {}, order};
        const hlv::LhsValue v = hlv::lhs_build(in);
        return py::make_tuple(v.value.str(), v.s_shift);
      },
      py::arg("identity"), py::arg("n"), py::arg("lam"), py::arg("order") = 12,
      "Normalized left side as (series, s_shift): the value is s^-s_shift * series.");
}
