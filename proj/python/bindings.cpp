#include "gwb/cli.hpp"
#include "gwb/index.hpp"
#include "gwb/oracle.hpp"
#include "gwb/parse.hpp"
#include "gwb/report.hpp"
#include "gwb/rules.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gwb;

namespace {

py::dict result_dict(const EvalResult& r) {
  py::dict d;
  const auto v = numeric_value(r);
  if (std::holds_alternative<Exact>(r))
    d["kind"] = "exact";
  else if (const auto* z = std::get_if<Zero>(&r)) {
    d["kind"] = "zero";
    d["reason"] = z->reason;
  } else {
    d["kind"] = "symbolic";
    d["residual"] = describe(r);
  }
  d["value"] = v ? py::object(py::str(v->to_string())) : py::object(py::none());
  return d;
}

InvariantQuery make_query(const std::string& manifold, const std::string& cls, const std::string& insertions,
                          int points, int genus) {
  const auto m = parse::manifold(manifold);
  InvariantQuery q{m, parse::curve(m, cls), genus, parse::insertions(m, insertions)};
  for (int i = 0; i < points; ++i) q.insertions.push_back(Insertion::point(m.n()));
  return q;
}

}  // namespace

PYBIND11_MODULE(_gwblowup, m) {
  m.doc() = "Exact genus-zero invariants of P^n and its point blow-ups";

  py::register_exception<parse::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Oracle>(m, "Oracle")
      .def(py::init<>())
      .def("kontsevich", [](Oracle& o, int d) { return o.kontsevich_p2(d).to_string(); }, py::arg("d"))
      .def("blowup", [](Oracle& o, std::int64_t a, std::int64_t b) { return o.wdvv_f1(a, b).to_string(); },
           py::arg("a"), py::arg("b"))
      .def("evaluate",
           [](Oracle& o, const std::string& manifold, const std::string& cls, const std::string& insertions,
              int points, int genus) { return result_dict(o.evaluate(make_query(manifold, cls, insertions, points, genus))); },
           py::arg("manifold"), py::arg("cls"), py::arg("insertions") = "", py::arg("points") = 0,
           py::arg("genus") = 0)
      .def("verify",
           [](Oracle& o, const std::string& rule, int lo, int hi) {
             const auto report = rules::verify_rule(rules::rule_from_string(rule), {lo, hi}, o);
             std::vector<std::string> rows;
             for (const auto& row : report.rows) rows.push_back(report::to_json(row).dump());
             return rows;
           },
           py::arg("rule"), py::arg("lo") = 1, py::arg("hi") = 6)
      .def("cache_size", [](const Oracle& o) { return o.memo().size(); });

  m.def("index_sum", &index::index_sum, py::arg("n"), py::arg("nu"), py::arg("c1A"), py::arg("g"));
  m.def(
      "index_plus",
      [](const std::string& scenario, int n, int g_plus, int l_plus, std::int64_t sum_k, int nu) {
        return index::index_plus(index::scenario_from_string(scenario), n, g_plus, l_plus, sum_k, nu).value;
      },
      py::arg("scenario"), py::arg("n"), py::arg("g_plus"), py::arg("l_plus"), py::arg("sum_k"), py::arg("nu"));
  m.def(
      "index_minus",
      [](const std::string& scenario, int n, std::int64_t c1A, int g, int g_plus, int l_plus, int nu,
         std::int64_t sum_k) {
        return index::index_minus(n, c1A, g, g_plus, l_plus, nu, sum_k, index::scenario_from_string(scenario)).value;
      },
      py::arg("scenario"), py::arg("n"), py::arg("c1A"), py::arg("g"), py::arg("g_plus"), py::arg("l_plus"),
      py::arg("nu"), py::arg("sum_k"));
  m.def("c1", [](const std::string& manifold, const std::string& cls) {
    const auto mf = parse::manifold(manifold);
    return c1_eval(mf, parse::curve(mf, cls));
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
