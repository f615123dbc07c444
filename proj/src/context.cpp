#include "edgereg/context.hpp"

#include <stdexcept>

#include "edgereg/canonical.hpp"
#include "edgereg/json_io.hpp"

namespace edgereg::verify {

std::optional<std::string> MemoryStore::get(const std::string& key) {
  std::lock_guard lock(mutex_);
  auto it = data_.find(key);
  if (it == data_.end()) return std::nullopt;
  return it->second;
}

void MemoryStore::put(const std::string& key, const std::string& value) {
  std::lock_guard lock(mutex_);
  data_[key] = value;
}

res::BettiTable Context::table(const algebra::MonomialIdeal& ideal) const {
  return res::betti_table(ideal, options);
}

std::string Context::edge_power_key(const graph::Graph& g, int k) const {
  const char* method = options.method == res::IntervalMethod::coatom_crosscut ? "crosscut" : "order";
  return "edge_power|" + graph::canonical_graph6(g) + "|k=" + std::to_string(k) + "|field=" + options.field.name() +
         "|method=" + method + "|lattice=" + std::to_string(options.caps.lattice_elements) +
         "|faces=" + std::to_string(options.caps.order_complex_faces);
}

res::BettiTable Context::edge_power_table(const graph::Graph& g, int k) const {
  if (k < 1) throw std::invalid_argument("edge ideal power must be at least 1");
  std::string key;
  if (store) {
    key = edge_power_key(g, k);
    if (auto hit = store->get(key)) return betti_table_from_json(nlohmann::json::parse(*hit));
  }
  auto graded_options = options;
  graded_options.multigraded = false;
  auto table = res::betti_table(algebra::power(algebra::edge_ideal(g), k), graded_options);
  if (store) store->put(key, to_json(table).dump());
  return table;
}

int Context::edge_power_regularity(const graph::Graph& g, int k) const {
  return edge_power_table(g, k).regularity();
}

nlohmann::json Context::caps_json() const { return to_json(options.caps); }

}  // namespace edgereg::verify
