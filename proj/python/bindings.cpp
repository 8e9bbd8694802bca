#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylscope/acceptance.hpp"
#include "weylscope/catalog.hpp"
#include "weylscope/magnetic.hpp"
#include "weylscope/suites.hpp"

namespace py = pybind11;
using namespace weylscope;

namespace {

py::dict criterion_dict(const CriterionResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["title"] = r.title;
  d["pass"] = r.pass;
  d["runtime_s"] = r.runtime_s;
  d["detail"] = r.detail;
  py::dict v;
  for (const auto& q : r.values) v[py::str(q.name)] = q.value;
  d["values"] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_weylscope, m) {
  m.doc() = "Weyl calculus, Bargmann transforms and rank-one decompositions on desk-scale grids";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("phase_names", &phase_names);
  m.def("suite_names", &suite_names);
  m.def("order_names", [] {
    std::vector<std::string> n;
    for (const auto& e : order_registry()) n.push_back(e.name);
    return n;
  });

  m.def(
      "weyl_kernel",
      [](const std::string& symbol, int N, double L) {
        return symbol_to_kernel(SymbolSpec::parse(symbol).sample(weyl_phase_grid(RealGrid(1, L, N)))).entries;
      },
      py::arg("symbol"), py::arg("N") = 128, py::arg("L") = 8.0, "Kernel K(x_i, y_j) on the function grid.");

  m.def(
      "apply_weyl",
      [](const std::string& symbol, const std::string& function, int N, double L) {
        const RealGrid g(1, L, N);
        return apply_weyl(SymbolSpec::parse(symbol).sample(weyl_phase_grid(g)), FunctionSpec::parse(function).sample(g))
            .values;
      },
      py::arg("symbol"), py::arg("function"), py::arg("N") = 128, py::arg("L") = 8.0);

  m.def(
      "grid_nodes", [](int N, double L) { return RealGrid(1, L, N).axis_nodes(); }, py::arg("N") = 128,
      py::arg("L") = 8.0);

  m.def(
      "stilde_norm",
      [](const std::string& symbol, const std::string& order, int N, double L) {
        return stilde_norm(SymbolSpec::parse(symbol).sample(PhaseGrid::square(RealGrid(1, L, N))), order_by_name(order))
            .value;
      },
      py::arg("symbol"), py::arg("order") = "one", py::arg("N") = 64, py::arg("L") = 6.0);

  m.def(
      "mod_norm",
      [](const std::string& function, const std::string& p, const std::string& phase, int N, double L) {
        return mod_norm(FunctionSpec::parse(function).sample(RealGrid(1, L, N)), pnorm_from_string(p),
                        phase_by_name(phase), default_box());
      },
      py::arg("function"), py::arg("p") = "2", py::arg("phase") = "radial", py::arg("N") = 128, py::arg("L") = 8.0);

  m.def(
      "rank_one",
      [](const std::string& symbol, const std::string& u, const std::string& v, int nodes, double radius,
         const std::string& phase) {
        const RealGrid g(1, 8.0, 128);
        const auto& p = phase_by_name(phase);
        const auto a = SymbolSpec::parse(symbol);
        const auto uu = FunctionSpec::parse(u).sample(g), vv = FunctionSpec::parse(v).sample(g);
        const auto q = RankOneQuadrature::make(radius, nodes, chart_jacobian(p, phi_weight(p)));
        const auto r = rank_one_reconstruct(a.sample(PhaseGrid::square(RealGrid(1, 6.0, 64))), uu, vv, q, p);
        const cd exact = apply_weyl(a.sample(weyl_phase_grid(g)), uu).inner(vv);
        py::dict d;
        d["value"] = r.value;
        d["oracle"] = exact;
        d["rel_error"] = std::abs(r.value - exact) / std::abs(exact);
        d["tail_flag"] = r.tail_flag;
        return d;
      },
      py::arg("symbol"), py::arg("u"), py::arg("v"), py::arg("nodes") = 16, py::arg("radius") = 5.0,
      py::arg("phase") = "radial");

  m.def(
      "run_suite",
      [](const std::vector<std::string>& suites, const std::string& corpus) {
        SuiteConfig cfg;
        cfg.suites = suites;
        cfg.corpus = corpus;
        return report_json(run_suite(cfg));
      },
      py::arg("suites"), py::arg("corpus") = "default", "report.json text for the selected suites.");

  m.def(
      "run_criterion", [](int id) { return criterion_dict(run_criterion(id)); }, py::arg("id"));
}
