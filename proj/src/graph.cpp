#include "edgereg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edgereg::graph {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

template <typename F>
void for_each_vertex(std::uint64_t bits, F&& f) {
  while (bits != 0) {
    const int v = std::countr_zero(bits);
    bits &= bits - 1;
    f(v);
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::from_vector(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
    s = s.with(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_vertex(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("loops are not allowed: " + std::to_string(a));
}

Graph::Graph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(vertex_count));
  }
  adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw std::invalid_argument("invalid vertex " + std::to_string(v) + " for graph on " +
                                std::to_string(vertex_count()) + " vertices");
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed: " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for_each_vertex(adj_[u] & ~((bit(u) << 1) - 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

int Graph::degree(int v) const { return neighbors(v).size(); }

bool Graph::has_isolated_vertices() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t row) { return row == 0; });
}

// ---------------------------------------------------------------------------
// builders

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph anticycle(int n) {
  if (n < 3) throw std::invalid_argument("anticycle needs n >= 3");
  return complement(cycle(n));
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph claw() { return star(3); }

Graph cricket() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// ---------------------------------------------------------------------------
// basic operations

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, std::span<const int> w) {
  const int m = static_cast<int>(w.size());
  Graph h(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (w[i] == w[j]) throw std::invalid_argument("repeated vertex in induced subgraph");
      if (g.has_edge(w[i], w[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.is_subset_of(g.vertices())) throw std::invalid_argument("vertex subset is not contained in V(g)");
  const auto list = w.to_vector();
  return induced_subgraph(g, std::span<const int>(list));
}

VertexSet neighborhood(const Graph& g, int v) { return g.neighbors(v); }

int degree(const Graph& g, int v) { return g.degree(v); }

// ---------------------------------------------------------------------------
// chordality

std::vector<int> maximum_cardinality_search(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<int> order;
  order.reserve(n);
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!visited.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited = visited.with(best);
    order.push_back(best);
    for (int u : (g.neighbors(best) - visited).to_vector()) ++weight[u];
  }
  return order;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] >= 0) return false;
    position[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    VertexSet later;
    for (int u : g.neighbors(v).to_vector())
      if (position[u] > i) later = later.with(u);
    if (later.empty()) continue;
    int parent = -1;
    for (int u : later.to_vector())
      if (parent < 0 || position[u] < position[parent]) parent = u;
    if (!(later.without(parent)).is_subset_of(g.neighbors(parent))) return false;
  }
  return true;
}

bool is_chordal(const Graph& g) {
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

// ---------------------------------------------------------------------------
// matchings

namespace {

struct MatchingSearch {
  const Graph& g;
  int best = 0;

  // Vertices in `alive` are still available; branches on the lowest live
  // vertex that still has a live neighbour.
  void run(VertexSet alive, int current) {
    int v = -1;
    int live_with_edges = 0;
    for (int u : alive.to_vector()) {
      if (!(g.neighbors(u) & alive).empty()) {
        ++live_with_edges;
        if (v < 0) v = u;
      }
    }
    if (current + live_with_edges / 2 <= best) return;
    if (v < 0) {
      best = std::max(best, current);
      return;
    }
    for (int u : (g.neighbors(v) & alive).to_vector()) run(alive.without(v).without(u), current + 1);
    run(alive.without(v), current);
  }
};

struct InducedMatchingSearch {
  const Graph& g;
  std::vector<Edge> best;
  std::vector<Edge> current;

  void run(VertexSet alive) {
    int v = -1;
    int live_with_edges = 0;
    for (int u : alive.to_vector()) {
      const int d = (g.neighbors(u) & alive).size();
      if (d > 0) {
        ++live_with_edges;
        if (v < 0 || d < (g.neighbors(v) & alive).size()) v = u;
      }
    }
    if (current.size() + live_with_edges / 2 <= best.size()) return;
    if (v < 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // v covered by the matching through some live neighbour u: the closed
    // neighbourhoods of u and v leave the search.
    for (int u : (g.neighbors(v) & alive).to_vector()) {
      const VertexSet removed = g.neighbors(v) | g.neighbors(u) | VertexSet{}.with(v).with(u);
      current.emplace_back(v, u);
      run(alive - removed);
      current.pop_back();
    }
    run(alive.without(v));
  }
};

}  // namespace

int matching_number(const Graph& g) {
  MatchingSearch search{g};
  search.run(g.vertices(), 0);
  return search.best;
}

std::vector<Edge> maximum_induced_matching(const Graph& g) {
  if (g.edge_count() == 0) throw std::domain_error("induced matching number is undefined for an edgeless graph");
  InducedMatchingSearch search{g, {}, {}};
  search.run(g.vertices());
  std::sort(search.best.begin(), search.best.end());
  return search.best;
}

int induced_matching_number(const Graph& g) { return static_cast<int>(maximum_induced_matching(g).size()); }

bool is_gap_free(const Graph& g) { return induced_matching_number(g) == 1; }

std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g) {
  const auto es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const auto& e1 = es[a];
      const auto& e2 = es[b];
      if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
      const bool bridged = g.has_edge(e1.u, e2.u) || g.has_edge(e1.u, e2.v) || g.has_edge(e1.v, e2.u) ||
                           g.has_edge(e1.v, e2.v);
      if (!bridged) return std::make_pair(e1, e2);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// induced patterns

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// Tries every assignment of pattern vertices to `chosen` respecting degrees.
bool matches_pattern(const Graph& g, std::span<const int> chosen, const Graph& pattern) {
  const int k = pattern.vertex_count();
  const Graph sub = induced_subgraph(g, chosen);
  if (sub.edge_count() != pattern.edge_count() || sorted_degrees(sub) != sorted_degrees(pattern)) return false;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (sub.degree(perm[i]) != pattern.degree(i)) ok = false;
      for (int j = i + 1; j < k && ok; ++j) ok = sub.has_edge(perm[i], perm[j]) == pattern.has_edge(i, j);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

template <typename F>
bool for_each_subset_of_size(int n, int k, F&& f) {
  std::vector<int> chosen(k);
  std::iota(chosen.begin(), chosen.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(std::span<const int>(chosen))) return true;
    int i = k - 1;
    while (i >= 0 && chosen[i] == n - k + i) --i;
    if (i < 0) return false;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

// The complement of the induced subgraph is one cycle through all of it.
bool induces_anticycle(const Graph& g, std::span<const int> chosen) {
  const Graph c = complement(induced_subgraph(g, chosen));
  const int k = c.vertex_count();
  for (int v = 0; v < k; ++v)
    if (c.degree(v) != 2) return false;
  int prev = -1;
  int cur = 0;
  int steps = 0;
  do {
    const auto nb = c.neighbors(cur).to_vector();
    const int next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != 0);
  return steps == k;
}

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& pattern) {
  std::optional<std::vector<int>> found;
  for_each_subset_of_size(g.vertex_count(), pattern.vertex_count(), [&](std::span<const int> chosen) {
    if (!matches_pattern(g, chosen, pattern)) return false;
    found.emplace(chosen.begin(), chosen.end());
    return true;
  });
  return found;
}

bool has_induced_claw(const Graph& g) { return find_induced_copy(g, claw()).has_value(); }

bool has_induced_cricket(const Graph& g) { return find_induced_copy(g, cricket()).has_value(); }

std::optional<int> find_induced_anticycle(const Graph& g) {
  for (int l = 5; l <= g.vertex_count(); ++l) {
    if (for_each_subset_of_size(g.vertex_count(), l, [&](std::span<const int> c) { return induces_anticycle(g, c); })) {
      return l;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// independent sets, covers, extensions

bool is_independent_set(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("vertex subset is not contained in V(g)");
  for (int v : s.to_vector())
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, VertexSet u) {
  if (!u.is_subset_of(g.vertices())) throw std::invalid_argument("vertex subset is not contained in V(g)");
  for (const auto& e : g.edges())
    if (!u.contains(e.u) && !u.contains(e.v)) return false;
  return true;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    if (is_independent_set(g, VertexSet(bits))) out.emplace_back(bits);
  }
  return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  // Complements of maximal independent sets.
  std::vector<VertexSet> out;
  const VertexSet all = g.vertices();
  for (VertexSet s : independent_sets(g)) {
    bool maximal = true;
    for (int v : (all - s).to_vector()) {
      if ((g.neighbors(v) & s).empty()) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(all - s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph extend_by_vertex(const Graph& g, VertexSet neighbors) {
  const int n = g.vertex_count();
  if (!neighbors.is_subset_of(g.vertices())) throw std::invalid_argument("neighbourhood is not contained in V(g)");
  Graph h(n + 1);
  for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
  for (int v : neighbors.to_vector()) h.add_edge(v, n);
  return h;
}

Graph s_suspension(const Graph& g, VertexSet s) {
  if (!is_independent_set(g, s)) throw std::invalid_argument("S-suspension requires an independent set");
  if (s == g.vertices()) throw std::invalid_argument("S = V(G) would leave the suspension vertex isolated");
  return extend_by_vertex(g, g.vertices() - s);
}

std::vector<Graph> one_vertex_extensions(const Graph& g) {
  if (g.vertex_count() >= kMaxVertices) throw std::invalid_argument("graph already has the maximum vertex count");
  if (g.vertex_count() > 20) throw std::invalid_argument("too many extensions to enumerate");
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
  out.reserve(limit - 1);
  for (std::uint64_t bits = 1; bits < limit; ++bits) out.push_back(extend_by_vertex(g, VertexSet(bits)));
  return out;
}

}  // namespace edgereg::graph
