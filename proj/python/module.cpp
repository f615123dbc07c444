#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgereg/betti.hpp"
#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/json_io.hpp"
#include "edgereg/verify.hpp"

namespace py = pybind11;
using namespace edgereg;

namespace {

res::BettiOptions options_for(const std::string& field) {
  res::BettiOptions o;
  o.field = res::Field::parse(field);
  return o;
}

algebra::MonomialIdeal edge_power(const std::string& g6, int k) {
  if (k < 1) throw std::invalid_argument("power must be at least 1");
  return algebra::power(algebra::edge_ideal(graph::from_graph6(g6)), k);
}

// Betti table as {(i, j): beta}.
py::dict as_dict(const res::BettiTable& t) {
  py::dict d;
  for (const auto& [key, beta] : t.entries()) d[py::make_tuple(key.first, key.second)] = beta;
  return d;
}

verify::Context context_for(const std::string& field) {
  verify::Context ctx;
  ctx.options.field = res::Field::parse(field);
  return ctx;
}

std::string report_line(const verify::Report& r) { return verify::to_json_line(r); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("betti_table", [](const std::string& g6, int k, const std::string& field) {
    return as_dict(res::betti_table(edge_power(g6, k), options_for(field)));
  }, py::arg("graph6"), py::arg("power") = 1, py::arg("field") = "Q");

  m.def("ideal_betti_table", [](const std::string& ideal, int vars, const std::string& field) {
    return as_dict(res::betti_table(algebra::parse_ideal(ideal, vars), options_for(field)));
  }, py::arg("ideal"), py::arg("variables"), py::arg("field") = "Q");

  m.def("regularity", [](const std::string& g6, int k, const std::string& field) {
    return res::regularity(edge_power(g6, k), options_for(field));
  }, py::arg("graph6"), py::arg("power") = 1, py::arg("field") = "Q");

  m.def("projective_dimension", [](const std::string& g6, int k, const std::string& field) {
    return res::projective_dimension(edge_power(g6, k), options_for(field));
  }, py::arg("graph6"), py::arg("power") = 1, py::arg("field") = "Q");

  m.def("canonical_graph6", [](const std::string& g6) { return graph::canonical_graph6(graph::from_graph6(g6)); });
  m.def("edges", [](const std::string& g6) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : graph::from_graph6(g6).edges()) out.emplace_back(e.u, e.v);
    return out;
  });
  m.def("from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
    graph::Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return graph::to_graph6(g);
  });
  m.def("s_suspension", [](const std::string& g6, const std::vector<int>& s) {
    return graph::to_graph6(graph::s_suspension(graph::from_graph6(g6), graph::VertexSet::from_vector(s)));
  });
  m.def("induced_matching_number", [](const std::string& g6) {
    return graph::induced_matching_number(graph::from_graph6(g6));
  });

  m.def("check_froberg", [](const std::string& g6, const std::string& field) {
    return report_line(verify::check_froberg(graph::from_graph6(g6), context_for(field)));
  }, py::arg("graph6"), py::arg("field") = "Q");
  m.def("check_main2", [](const std::string& g6, const std::vector<int>& s, int k_max, const std::string& field) {
    return report_line(verify::check_main2(graph::from_graph6(g6), graph::VertexSet::from_vector(s), k_max,
                                           context_for(field)));
  }, py::arg("graph6"), py::arg("s"), py::arg("k_max") = 3, py::arg("field") = "Q");
  m.def("check_betti_splitting", [](const std::string& i, const std::string& j, const std::string& k, int vars) {
    return report_line(verify::check_betti_splitting(algebra::parse_ideal(i, vars), algebra::parse_ideal(j, vars),
                                                     algebra::parse_ideal(k, vars), verify::Context{}));
  }, py::arg("I"), py::arg("J"), py::arg("K"), py::arg("variables"));
}
