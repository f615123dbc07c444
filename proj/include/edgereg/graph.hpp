#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace edgereg::graph {

inline constexpr int kMaxVertices = 64;

/// A subset of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);
  static VertexSet from_vector(std::span<const int> vertices);
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered pair of distinct vertices, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 0..n-1. Value type; adjacency is kept as
/// one bitmask row per vertex, so n is limited to 64.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(vertex_count()); }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;
  VertexSet neighbors(int v) const;
  int degree(int v) const;
  bool has_isolated_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::uint64_t> adj_;
};

// Builders. Vertex i is the variable x_i, counting from 0.
Graph cycle(int n);
Graph anticycle(int n);
Graph path(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph star(int leaves);
Graph claw();
/// Vertex 0 is the degree-4 center, 3 and 4 are the adjacent leaves.
Graph cricket();

Graph complement(const Graph& g);
/// Vertices of w are re-indexed to 0..|w|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet w);
/// Vertices are re-indexed in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> w);

VertexSet neighborhood(const Graph& g, int v);
int degree(const Graph& g, int v);

bool is_chordal(const Graph& g);
/// Maximum-cardinality-search visit order (first visited first).
std::vector<int> maximum_cardinality_search(const Graph& g);
/// True iff `order` (first eliminated first) is a perfect elimination ordering.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const int> order);

int matching_number(const Graph& g);
/// Throws std::domain_error for an edgeless graph.
int induced_matching_number(const Graph& g);
/// A maximum induced matching, for witnesses.
std::vector<Edge> maximum_induced_matching(const Graph& g);
/// Throws std::domain_error for an edgeless graph.
bool is_gap_free(const Graph& g);
/// Two disjoint edges with no edge of g meeting both, if any.
std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g);

/// Some vertex subset inducing a copy of `pattern`, if one exists.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& pattern);
bool has_induced_claw(const Graph& g);
bool has_induced_cricket(const Graph& g);

bool is_independent_set(const Graph& g, VertexSet s);
bool is_vertex_cover(const Graph& g, VertexSet u);
/// All independent sets, including the empty set, in increasing bitmask order.
std::vector<VertexSet> independent_sets(const Graph& g);
/// Inclusion-minimal vertex covers, in increasing bitmask order.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

/// G^S: adds vertex z = n adjacent to every vertex outside s.
Graph s_suspension(const Graph& g, VertexSet s);
/// Adds vertex z = n adjacent exactly to `neighbors`.
Graph extend_by_vertex(const Graph& g, VertexSet neighbors);
/// All 2^n - 1 extensions by a vertex with nonempty neighborhood, ordered by
/// the neighborhood bitmask.
std::vector<Graph> one_vertex_extensions(const Graph& g);

/// Smallest l >= 5 such that some l-subset induces anticycle(l).
std::optional<int> find_induced_anticycle(const Graph& g);

}  // namespace edgereg::graph
