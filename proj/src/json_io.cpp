#include "edgereg/json_io.hpp"

#include <algorithm>

namespace edgereg {

using nlohmann::json;

json to_json(const res::BettiTable& table) {
  json out;
  out["field"] = table.field().name();
  json entries = json::array();
  for (const auto& [key, beta] : table.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
  out["entries"] = std::move(entries);
  if (!table.empty()) {
    out["reg"] = table.regularity();
    out["pd"] = table.projective_dimension();
  }
  if (table.has_multigraded()) {
    json multi = json::array();
    for (const auto& [key, beta] : table.multigraded()) {
      multi.push_back({{"i", key.first}, {"multidegree", key.second.to_string()}, {"beta", beta}});
    }
    out["multi"] = std::move(multi);
  }
  return out;
}

res::BettiTable betti_table_from_json(const json& j) {
  res::BettiTable table(res::Field::parse(j.at("field").get<std::string>()));
  for (const auto& e : j.at("entries")) {
    table.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<std::uint64_t>());
  }
  return table;
}

json to_json(const algebra::MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return gens;
}

json to_json(const res::EngineCaps& caps) {
  return {{"lattice_elements", caps.lattice_elements},
          {"order_complex_faces", caps.order_complex_faces},
          {"taylor_generators", caps.taylor_generators},
          {"linear_quotient_generators", caps.linear_quotient_generators},
          {"linear_quotient_budget_ms", caps.linear_quotient_budget.count()}};
}

json to_json(graph::VertexSet s) { return s.to_vector(); }

}  // namespace edgereg
