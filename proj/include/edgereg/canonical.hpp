#pragma once

#include <string>
#include <vector>

#include "edgereg/graph.hpp"

namespace edgereg::graph {

inline constexpr int kMaxEnumerationVertices = 8;

struct CanonicalForm {
  Graph graph;                 // relabelled copy of the input
  std::vector<int> labelling;  // labelling[new] = old vertex
  std::string graph6;          // to_graph6(graph); doubles as the cache key
};

/// Exact canonical labelling: vertices are split into cells by iterated
/// degree refinement, then every cell-respecting relabelling is searched for
/// the lexicographically smallest upper-triangle adjacency string, with
/// prefix pruning.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of graphs on exactly
/// n vertices, sorted by graph6. Throws CapExceeded for n > 8.
std::vector<Graph> enumerate_graphs(int n);
/// All classes with min_n <= n <= max_n, optionally only those with an edge.
std::vector<Graph> enumerate_graphs(int min_n, int max_n, bool require_edge);

}  // namespace edgereg::graph
