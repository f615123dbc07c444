#include "edgereg/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"

namespace edgereg::graph {

namespace {

// Iterated colour refinement starting from degrees. Colours are ranks of
// isomorphism-invariant signatures, so the induced cell order is invariant.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u : g.neighbors(v).to_vector()) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [key, value] : rank) value = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> cell_of_position;  // candidates per position
  std::vector<int> current;
  std::vector<std::uint64_t> current_cols;
  std::vector<int> best;
  std::vector<std::uint64_t> best_cols;
  std::uint64_t used = 0;

  // Column p of the relabelled upper triangle: bit (63 - i) set iff the
  // vertices at positions i < p and p are adjacent. Numeric order on
  // columns equals lexicographic order on the graph6 bit string.
  std::uint64_t column(int p, int v) const {
    std::uint64_t c = 0;
    for (int i = 0; i < p; ++i)
      if (g.has_edge(current[i], v)) c |= std::uint64_t{1} << (63 - i);
    return c;
  }

  // -1, 0, +1 comparing current[0..p] with best[0..p].
  int compare_prefix(int p) const {
    for (int i = 1; i <= p; ++i) {
      if (current_cols[i] != best_cols[i]) return current_cols[i] < best_cols[i] ? -1 : 1;
    }
    return 0;
  }

  void run(int p) {
    if (p == n) {
      if (best.empty() || compare_prefix(n - 1) < 0) {
        best = current;
        best_cols = current_cols;
      }
      return;
    }
    for (int v : cell_of_position[p]) {
      if ((used >> v) & 1U) continue;
      current[p] = v;
      current_cols[p] = column(p, v);
      if (!best.empty() && compare_prefix(p) > 0) continue;
      used |= std::uint64_t{1} << v;
      run(p + 1);
      used &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  CanonicalForm out;
  if (n == 0) {
    out.graph = g;
    out.graph6 = to_graph6(g);
    return out;
  }
  const auto colour = refine_colours(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  CanonicalSearch search{g, n, {}, std::vector<int>(n), std::vector<std::uint64_t>(n, 0), {}, {}, 0};
  search.cell_of_position.resize(n);
  for (int p = 0; p < n; ++p) {
    for (int v = 0; v < n; ++v)
      if (colour[v] == colour[order[p]]) search.cell_of_position[p].push_back(v);
  }
  search.run(0);

  out.labelling = search.best;
  out.graph = induced_subgraph(g, std::span<const int>(out.labelling));
  out.graph6 = to_graph6(out.graph);
  return out;
}

std::string canonical_graph6(const Graph& g) { return canonical_form(g).graph6; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph6(a) == canonical_graph6(b);
}

namespace {

std::vector<std::vector<Graph>> enumerate_levels(int max_n) {
  if (max_n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (max_n > kMaxEnumerationVertices) {
    throw CapExceeded("internal enumeration is limited to " + std::to_string(kMaxEnumerationVertices) +
                      " vertices; supply a graph6 stream instead");
  }
  std::vector<std::vector<Graph>> levels{{Graph(0)}};
  for (int m = 1; m <= max_n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& h : levels.back()) {
      const std::uint64_t limit = std::uint64_t{1} << h.vertex_count();
      for (std::uint64_t bits = 0; bits < limit; ++bits) {
        auto form = canonical_form(extend_by_vertex(h, VertexSet(bits)));
        next.try_emplace(std::move(form.graph6), std::move(form.graph));
      }
    }
    auto& level = levels.emplace_back();
    level.reserve(next.size());
    for (auto& [key, h] : next) level.push_back(std::move(h));
  }
  return levels;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) { return std::move(enumerate_levels(n).back()); }

std::vector<Graph> enumerate_graphs(int min_n, int max_n, bool require_edge) {
  std::vector<Graph> out;
  if (max_n < min_n) return out;
  auto levels = enumerate_levels(max_n);
  for (int n = std::max(min_n, 0); n <= max_n; ++n) {
    for (auto& h : levels[n]) {
      if (!require_edge || h.edge_count() > 0) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace edgereg::graph
