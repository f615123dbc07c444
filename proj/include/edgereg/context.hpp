#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"

namespace edgereg::verify {

/// Key/value store for serialized Betti tables. Implementations must be
/// safe to call from several threads.
class TableStore {
 public:
  virtual ~TableStore() = default;
  virtual std::optional<std::string> get(const std::string& key) = 0;
  virtual void put(const std::string& key, const std::string& value) = 0;
};

class MemoryStore final : public TableStore {
 public:
  std::optional<std::string> get(const std::string& key) override;
  void put(const std::string& key, const std::string& value) override;

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::string> data_;
};

/// Field, caps and optional result store shared by all verifiers.
/// Tables of edge-ideal powers are looked up by the canonical form of the
/// graph, since isomorphic graphs have identical graded Betti tables.
struct Context {
  res::BettiOptions options;
  std::shared_ptr<TableStore> store = std::make_shared<MemoryStore>();

  res::BettiTable table(const algebra::MonomialIdeal& ideal) const;
  /// Graded table of I(g)^k (k >= 1).
  res::BettiTable edge_power_table(const graph::Graph& g, int k) const;
  int edge_power_regularity(const graph::Graph& g, int k) const;

  /// Cache key for I(g)^k under these options.
  std::string edge_power_key(const graph::Graph& g, int k) const;
  std::string field_name() const { return options.field.name(); }
  nlohmann::json caps_json() const;
};

}  // namespace edgereg::verify
