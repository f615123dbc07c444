#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgereg/context.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/report.hpp"

namespace edgereg::verify {

enum class Conjecture {
  np,          // gap-free, reg 3: reg(I^k) = 2k for k >= 2
  general_np,  // gap-free, reg r: reg(I^k) = 2k for k >= r - 1
  newconj2,    // invariant extensions keep reg(I^k) = 2k for k >= c_G
};

std::string to_string(Conjecture c);
/// "np", "general_np" (or "generalnp"), "newconj2". Throws ParseError.
Conjecture conjecture_from_string(const std::string& s);

struct ScanConfig {
  Conjecture conjecture = Conjecture::np;
  int k_max = 2;
  /// Only graphs with this reg(I(G)) are checked; np defaults to 3.
  std::optional<int> reg_filter;
  /// newconj2 threshold; estimated from the powers up to k_max when unset.
  std::optional<int> c_g;
  /// Record reg of every one-vertex-deleted induced subgraph.
  bool probe_deletions = false;
  /// Recompute each checked table over the other supported field and flag
  /// differences.
  bool compare_fields = false;
  unsigned threads = 0;
};

struct ScanResult {
  std::vector<Report> reports;  // sorted
  std::size_t considered = 0;   // graphs read
  std::size_t filtered = 0;     // graphs outside the conjecture's family
};

ScanResult scan_conjecture(const ScanConfig& config, const std::vector<graph::Graph>& family, const Context& ctx);

}  // namespace edgereg::verify
