#include <doctest.h>

#include <set>

#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/scan.hpp"
#include "edgereg/verify.hpp"

using namespace edgereg::verify;
namespace graph = edgereg::graph;

namespace {

std::string dump(const ScanResult& r) {
  std::string out;
  for (const auto& rep : r.reports) out += to_json_line(rep) + "\n";
  return out;
}

}  // namespace

TEST_CASE("conjecture names") {
  CHECK(conjecture_from_string("np") == Conjecture::np);
  CHECK(conjecture_from_string("generalnp") == Conjecture::general_np);
  CHECK(to_string(conjecture_from_string("general_np")) == "general_np");
  CHECK(to_string(Conjecture::newconj2) == "newconj2");
  CHECK_THROWS_AS(conjecture_from_string("riemann"), edgereg::ParseError);
}

TEST_CASE("empty family") {
  const auto r = scan_conjecture({}, {}, Context{});
  CHECK(r.reports.empty());
  CHECK(r.considered == 0);
}

TEST_CASE("np scan up to 5 vertices") {
  ScanConfig cfg;
  cfg.k_max = 2;
  const auto family = graph::enumerate_graphs(2, 5, true);
  const auto r = scan_conjecture(cfg, family, Context{});
  CHECK(r.considered == family.size());
  CHECK(r.reports.size() + r.filtered == family.size());
  REQUIRE_FALSE(r.reports.empty());
  for (const auto& rep : r.reports) {
    REQUIRE(rep.passed());
    CHECK(rep.details["reg"]["1"] == 3);
    CHECK(rep.details["reg"]["2"] == 4);
  }
  // C5 is the only gap-free graph on at most 5 vertices with reg 3.
  CHECK(r.reports.size() == 1);
  CHECK(r.reports.front().instance["graph6"] == graph::canonical_graph6(graph::cycle(5)));
}

TEST_CASE("thread count does not change the bytes") {
  ScanConfig cfg;
  cfg.conjecture = Conjecture::general_np;
  cfg.k_max = 2;
  const auto family = graph::enumerate_graphs(2, 6, true);
  cfg.threads = 1;
  const auto one = scan_conjecture(cfg, family, Context{});
  cfg.threads = 4;
  const auto four = scan_conjecture(cfg, family, Context{});
  CHECK(dump(one) == dump(four));
  CHECK(one.filtered == four.filtered);
}

TEST_CASE("general form on co-chordal graphs") {
  ScanConfig cfg;
  cfg.conjecture = Conjecture::general_np;
  cfg.k_max = 3;
  std::vector<graph::Graph> cochordal;
  for (const auto& g : graph::enumerate_graphs(2, 5, true)) {
    if (graph::is_chordal(graph::complement(g))) cochordal.push_back(g);
  }
  const auto r = scan_conjecture(cfg, cochordal, Context{});
  CHECK(r.filtered == 0);  // co-chordal graphs are gap-free
  CHECK(r.reports.size() == cochordal.size());
  for (const auto& rep : r.reports) {
    REQUIRE(rep.passed());
    CHECK(rep.details["reg"]["1"] == 2);
    CHECK(rep.details["reg"]["3"] == 6);
  }

  cfg.k_max = 1;
  cfg.reg_filter = 3;
  const auto empty_range = scan_conjecture(cfg, {graph::cycle(5)}, Context{});
  REQUIRE(empty_range.reports.size() == 1);
  CHECK(empty_range.reports.front().skipped());
}

TEST_CASE("filters") {
  ScanConfig cfg;
  const auto r = scan_conjecture(cfg, {graph::Graph(4, {{0, 1}, {2, 3}}), graph::empty_graph(3), graph::cycle(4)}, Context{});
  CHECK(r.reports.empty());
  CHECK(r.filtered == 3);
  cfg.k_max = 0;
  CHECK_THROWS_AS(scan_conjecture(cfg, {graph::cycle(4)}, Context{}), std::invalid_argument);
}

TEST_CASE("field comparison and deletion probes") {
  ScanConfig cfg;
  cfg.compare_fields = true;
  cfg.probe_deletions = true;
  const auto r = scan_conjecture(cfg, {graph::cycle(5)}, Context{});
  REQUIRE(r.reports.size() == 1);
  const auto& rep = r.reports.front();
  CHECK(rep.passed());
  CHECK_FALSE(rep.details.contains("field_dependent"));
  REQUIRE(rep.details["deletions"].size() == 5);
  for (const auto& row : rep.details["deletions"]) CHECK(row["reg"] == 2);  // C5 minus a vertex is P4
}

TEST_CASE("extension scan") {
  ScanConfig cfg;
  cfg.conjecture = Conjecture::newconj2;
  cfg.c_g = 2;
  cfg.k_max = 3;
  const auto r = scan_conjecture(cfg, {graph::cycle(5)}, Context{});
  REQUIRE_FALSE(r.reports.empty());
  std::set<std::string> seen;
  for (const auto& rep : r.reports) {
    CHECK(rep.instance["cg"] == 2);
    CHECK_FALSE(rep.skipped());
    const auto ext = graph::from_graph6(rep.instance["extension"].get<std::string>());
    CHECK(ext.vertex_count() == 6);
    CHECK(is_im_reg_invariant_extension(graph::cycle(5), ext, Context{}));
    CHECK(seen.insert(graph::canonical_graph6(ext)).second);
  }

  cfg.c_g.reset();
  const auto estimated = scan_conjecture(cfg, {graph::cycle(5)}, Context{});
  REQUIRE_FALSE(estimated.reports.empty());
  CHECK(estimated.reports.front().details["cg_estimated"] == true);
  CHECK(estimated.reports.front().instance["cg"] == 2);
}
