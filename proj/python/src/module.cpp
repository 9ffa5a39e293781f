#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtorsor/pairing.hpp"
#include "qtorsor/report_io.hpp"
#include "qtorsor/suites.hpp"

namespace py = pybind11;
using namespace qtorsor;

namespace {

py::dict report_dict(const VerifyReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["q"] = r.q;
  py::dict params, details;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  for (const auto& [k, v] : r.details) details[py::str(k)] = v;
  d["params"] = params;
  d["defect"] = r.defect;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["hard"] = r.hard;
  d["seconds"] = r.seconds ? py::object(py::float_(*r.seconds)) : py::object(py::none());
  d["method"] = r.method;
  d["details"] = details;
  d["error"] = r.error.empty() ? py::object(py::none()) : py::object(py::str(r.error));
  d["note"] = r.note.empty() ? py::object(py::none()) : py::object(py::str(r.note));
  return d;
}

Sign sign_of(const std::string& tag) {
  if (tag == "+") return Sign::Plus;
  if (tag == "0") return Sign::Zero;
  throw py::value_error("tag must be '+' or '0'");
}

}  // namespace

PYBIND11_MODULE(_qtorsor, m) {
  m.doc() = "exact and numeric checks for the SU_q(2) / E_q(2) Morita torsor";
  m.attr("__version__") = kVersion;

  m.def("list_suites", [] {
    py::list out;
    for (const auto& s : suite_registry()) {
      py::dict d;
      d["name"] = s.name;
      d["group"] = s.group;
      d["exact"] = s.exact;
      d["hard"] = s.hard;
      d["tolerance"] = s.tolerance;
      d["default_q"] = s.default_q;
      d["summary"] = s.summary;
      out.append(d);
    }
    return out;
  });

  m.def(
      "run_suite",
      [](const std::string& name, std::optional<std::string> q, int N, int M, int W, int series_terms,
         const std::string& precision, std::optional<double> tolerance) {
        RunConfig cfg;
        cfg.ctx.trunc = {N, M, W};
        cfg.ctx.series_terms = series_terms;
        cfg.ctx.precision = precision;
        if (q) cfg.q = {*q};
        cfg.suites = {name};
        if (tolerance) cfg.ctx.tolerances[name] = *tolerance;
        try {
          validate(cfg);
        } catch (const ConfigError& e) {
          throw py::value_error(e.what());
        }
        const SuiteInfo& info = find_suite(name);
        std::optional<QPoint> point;
        if (!info.exact) point.emplace(q ? *q : info.default_q.front());
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(info, cfg.ctx, point);
        }
        return report_dict(r);
      },
      py::arg("name"), py::arg("q") = py::none(), py::arg("N") = 24, py::arg("M") = 32, py::arg("W") = 16,
      py::arg("series_terms") = 30, py::arg("precision") = "double", py::arg("tolerance") = py::none(),
      "Run one suite; q defaults to the suite's first default point.");

  m.def(
      "pair",
      [](const std::string& tag, int mm, int n, int l, int r, int s, int t, std::optional<std::string> q) {
        ExactScalar v = pair_closed(sign_of(tag), UqMonomial{mm, n, l}, PolMonomial{r, s, t});
        py::dict d;
        d["exact"] = v.str();
        if (q) {
          auto z = QPoint(*q).eval(v);
          d["value"] = py::make_tuple(z.real(), z.imag());
        }
        return d;
      },
      py::arg("tag"), py::arg("m"), py::arg("n"), py::arg("l"), py::arg("r"), py::arg("s"), py::arg("t"),
      py::arg("q") = py::none(), "Closed-form pairing <K^m E^n F^l, a^r b^s b*^t> in the given tag.");

  m.def("pairing_csv", [](int grid, const std::string& q) { return pairing_csv(grid, QPoint(q)); }, py::arg("grid"),
        py::arg("q"));
  m.def("g_entry_csv", [](int gmax, const std::string& q) { return g_entry_csv(gmax, QPoint(q)); }, py::arg("gmax"),
        py::arg("q"));
}
