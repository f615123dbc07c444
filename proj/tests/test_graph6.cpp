#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "oracles.hpp"

using namespace edgereg::graph;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// Decoding by the textbook description, one bit at a time.
Graph decode_slowly(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (bits[k]) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(empty_graph(2)) == "A?");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(cycle(4)) == "Cl");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(cycle(5)) == "Dhc");
  CHECK(from_graph6("Dhc") == cycle(5));
  CHECK(from_graph6(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("graph6 round trip") {
  std::mt19937 rng(3);
  for (int n = 0; n <= 62; ++n) {
    for (double p : {0.1, 0.5, 0.9}) {
      const auto g = oracle::random_graph(rng, n, p);
      const auto s = to_graph6(g);
      REQUIRE(s.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
      REQUIRE(from_graph6(s) == g);
      REQUIRE(decode_slowly(s) == g);
    }
  }
  for (int n : {63, 64}) {
    const auto g = oracle::random_graph(rng, n, 0.5);
    const auto s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == g);
  }
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(from_graph6(""), edgereg::ParseError);
  CHECK_THROWS_AS(from_graph6("C"), edgereg::ParseError);  // missing adjacency byte
  CHECK_THROWS_AS(from_graph6("Clx"), edgereg::ParseError);  // trailing byte
  CHECK_THROWS_AS(from_graph6("Bx"), edgereg::ParseError);  // nonzero padding bits
  CHECK_THROWS_AS(from_graph6("A\x7f"), edgereg::ParseError);  // byte above 126
}

TEST_CASE("graph6 streams skip blank lines") {
  std::istringstream in("A_\n\nBw\n  \nCl\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[2] == cycle(4));
}

TEST_CASE("canonical form is a labelling invariant") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 9;
    const auto g = oracle::random_graph(rng, n, 0.45);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    const auto cg = canonical_form(g);
    REQUIRE(cg.graph6 == canonical_graph6(h));
    REQUIRE(are_isomorphic(g, h));
    std::vector<int> old_to_new(cg.labelling.size());
    for (std::size_t i = 0; i < cg.labelling.size(); ++i) old_to_new[static_cast<std::size_t>(cg.labelling[i])] = static_cast<int>(i);
    REQUIRE(relabel(g, old_to_new) == cg.graph);
  }
  CHECK_FALSE(are_isomorphic(path(4), star(3)));
  CHECK_FALSE(are_isomorphic(cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(enumerate_graphs(9), edgereg::CapExceeded);

  const auto all = enumerate_graphs(1, 6, true);
  CHECK(std::all_of(all.begin(), all.end(), [](const Graph& g) { return g.edge_count() > 0; }));
  CHECK(all.size() == (1 + 3 + 10 + 33 + 155));
}

TEST_CASE("enumeration matches labelled brute force up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) g.add_edge(pairs[i].first, pairs[i].second);
      }
      // Slow isomorphism test by trying every permutation.
      bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) {
        if (r.edge_count() != g.edge_count()) return false;
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
          if (relabel(g, perm) == r) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
      });
      if (!seen) reps.push_back(g);
    }
    const auto enumerated = enumerate_graphs(n);
    REQUIRE(reps.size() == enumerated.size());
    std::set<std::string> a, b;
    for (const auto& g : reps) a.insert(canonical_graph6(g));
    for (const auto& g : enumerated) b.insert(to_graph6(g));
    CHECK(a == b);
  }
}
