#include "edgereg/scan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/json_io.hpp"
#include "edgereg/parallel.hpp"
#include "edgereg/verify.hpp"

namespace edgereg::verify {

using nlohmann::json;
using edgereg::to_json;

std::string to_string(Conjecture c) {
  switch (c) {
    case Conjecture::np: return "np";
    case Conjecture::general_np: return "general_np";
    case Conjecture::newconj2: return "newconj2";
  }
  return "np";
}

Conjecture conjecture_from_string(const std::string& s) {
  if (s == "np") return Conjecture::np;
  if (s == "general_np" || s == "generalnp") return Conjecture::general_np;
  if (s == "newconj2") return Conjecture::newconj2;
  throw ParseError("unknown conjecture '" + s + "'");
}

namespace {

struct Item {
  std::vector<Report> reports;
  bool filtered = false;
};

Context other_field(const Context& ctx) {
  Context other = ctx;
  other.options.field = ctx.options.field.is_rationals() ? res::Field::prime_field(2) : res::Field::rationals();
  return other;
}

Report base_report(const ScanConfig& config, const graph::Graph& g, const Context& ctx) {
  Report r;
  r.statement = to_string(config.conjecture);
  r.instance = {{"graph6", graph::to_graph6(g)}, {"n", g.vertex_count()}, {"kmax", config.k_max}};
  r.field = ctx.field_name();
  r.caps = ctx.caps_json();
  return r;
}

void skip(Report& r, std::string reason) {
  r.verdict = Verdict::skipped;
  r.reason = std::move(reason);
  r.witness = nullptr;
}

// Checks reg(I(g)^k) = 2k for k in [from, to]; leaves r untouched on success.
bool check_linear_range(Report& r, const graph::Graph& g, int from, int to, const ScanConfig& config,
                        const Context& ctx) {
  for (int k = from; k <= to; ++k) {
    const auto table = ctx.edge_power_table(g, k);
    r.details["reg"][std::to_string(k)] = table.regularity();
    if (config.compare_fields) {
      const auto other = other_field(ctx).edge_power_table(g, k);
      if (other.entries() != table.entries()) {
        r.details["field_dependent"].push_back({{"k", k}, {"other", to_json(other)}});
      }
    }
    if (table.regularity() != 2 * k) {
      r.verdict = Verdict::fail;
      r.reason = "reg(I^k) != 2k";
      r.witness = {{"k", k}, {"reg", table.regularity()}, {"table", to_json(table)}};
      return false;
    }
  }
  return true;
}

void probe(Report& r, const graph::Graph& g, const Context& ctx) {
  json rows = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto h = graph::induced_subgraph(g, g.vertices().without(v));
    rows.push_back({{"vertex", v}, {"reg", h.edge_count() == 0 ? json(nullptr) : json(ctx.edge_power_regularity(h, 1))}});
  }
  r.details["deletions"] = std::move(rows);
}

// False when a cap was hit; r is then a skip.
template <class Body>
bool guarded(Report& r, Body&& body) {
  try {
    body();
    return true;
  } catch (const CapExceeded& e) {
    skip(r, std::string("cap exceeded: ") + e.what());
    return false;
  }
}

// Smallest c such that reg(I^k) = 2k for every c <= k <= k_max.
std::optional<int> estimate_cg(const graph::Graph& g, int k_max, const Context& ctx) {
  std::optional<int> c;
  for (int k = k_max; k >= 1; --k) {
    if (ctx.edge_power_regularity(g, k) != 2 * k) break;
    c = k;
  }
  return c;
}

Item scan_newconj2(const ScanConfig& config, const graph::Graph& g, const Context& ctx) {
  Item item;
  Report head = base_report(config, g, ctx);
  std::optional<int> cg;
  bool in_family = true;
  const bool head_ok = guarded(head, [&] {
    cg = config.c_g ? config.c_g : estimate_cg(g, config.k_max, ctx);
    if (!cg) {
      in_family = false;
      return;
    }
    for (int k = *cg; k <= config.k_max; ++k) {
      if (ctx.edge_power_regularity(g, k) != 2 * k) {
        in_family = false;
        return;
      }
    }
  });
  if (!head_ok) {
    item.reports.push_back(std::move(head));
    return item;
  }
  if (!in_family) {
    item.filtered = true;
    return item;
  }

  std::vector<graph::Graph> extensions;
  const bool extensions_ok = guarded(head, [&] {
    std::set<std::string> seen;
    for (auto& ext : enumerate_im_reg_extensions(g, ctx)) {
      if (seen.insert(graph::canonical_graph6(ext)).second) extensions.push_back(std::move(ext));
    }
  });
  if (!extensions_ok) {
    item.reports.push_back(std::move(head));
    return item;
  }
  for (const auto& ext : extensions) {
    Report r = base_report(config, g, ctx);
    r.instance["extension"] = graph::to_graph6(ext);
    r.instance["cg"] = *cg;
    if (!config.c_g) r.details["cg_estimated"] = true;
    guarded(r, [&] {
      if (check_linear_range(r, ext, *cg, config.k_max, config, ctx)) r.verdict = Verdict::pass;
    });
    item.reports.push_back(std::move(r));
  }
  return item;
}

Item scan_one(const ScanConfig& config, const graph::Graph& g, const Context& ctx) {
  Item item;
  if (g.edge_count() == 0 || !graph::is_gap_free(g)) {
    item.filtered = true;
    return item;
  }
  if (config.conjecture == Conjecture::newconj2) return scan_newconj2(config, g, ctx);

  Report r = base_report(config, g, ctx);
  bool in_family = true;
  guarded(r, [&] {
    const int reg = ctx.edge_power_regularity(g, 1);
    const auto wanted = config.conjecture == Conjecture::np ? config.reg_filter.value_or(3) : config.reg_filter;
    if (wanted && reg != *wanted) {
      in_family = false;
      return;
    }
    r.details["reg"]["1"] = reg;
    if (config.probe_deletions) probe(r, g, ctx);
    const int from = config.conjecture == Conjecture::np ? 2 : std::max(reg - 1, 1);
    if (from > config.k_max) {
      skip(r, "k range [" + std::to_string(from) + ", " + std::to_string(config.k_max) + "] is empty");
      return;
    }
    if (check_linear_range(r, g, from, config.k_max, config, ctx)) r.verdict = Verdict::pass;
  });
  if (!in_family) {
    item.filtered = true;
    return item;
  }
  item.reports.push_back(std::move(r));
  return item;
}

}  // namespace

ScanResult scan_conjecture(const ScanConfig& config, const std::vector<graph::Graph>& family, const Context& ctx) {
  if (config.k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (config.c_g && *config.c_g < 1) throw std::invalid_argument("c_G must be at least 1");
  ScanResult result;
  result.considered = family.size();
  if (family.empty()) return result;
  auto items = parallel_map(family, [&](const graph::Graph& g) { return scan_one(config, g, ctx); }, config.threads);
  for (auto& item : items) {
    if (item.filtered) ++result.filtered;
    for (auto& r : item.reports) result.reports.push_back(std::move(r));
  }
  sort_reports(result.reports);
  return result;
}

}  // namespace edgereg::verify
