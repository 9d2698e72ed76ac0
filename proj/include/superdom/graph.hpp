#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superdom/vertex_set.hpp"

namespace superdom {

/// An undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised when a construction would exceed kMaxVertices.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Graphs are immutable once constructed. Every constructor validates that
/// rows are loop-free, symmetric and confined to the low n bits.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n, std::string label = {});
  Graph(int n, std::span<const Edge> edges, std::string label = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string label = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

  /// Builds from explicit adjacency rows; throws std::invalid_argument if the
  /// rows are not a simple undirected graph.
  static Graph from_rows(std::vector<VertexSet> rows, std::string label = {});

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  const std::string& label() const noexcept { return label_; }
  Graph with_label(std::string label) const;

  VertexSet vertices() const noexcept { return VertexSet::full(order()); }
  /// N(v). Throws std::out_of_range.
  VertexSet neighbours(int v) const;
  /// N[v] = N(v) ∪ {v}.
  VertexSet closed_neighbours(int v) const;
  /// Unchecked N(v) for inner loops.
  VertexSet row(int v) const noexcept { return adj_[v]; }
  std::span<const VertexSet> rows() const noexcept { return adj_; }

  int degree(int v) const;
  int max_degree() const noexcept;
  int size() const noexcept;  // |E|
  bool has_edge(int u, int v) const;
  bool is_universal(int v) const;

  VertexSet universal_vertices() const noexcept;
  VertexSet isolated_vertices() const noexcept;
  /// No edges (N_n). The 0- and 1-vertex graphs count as edgeless.
  bool is_edgeless() const noexcept { return size() == 0; }
  bool is_complete() const noexcept;

  /// Edges in lexicographic (u, v) order with u < v.
  std::vector<Edge> edges() const;
  /// Sorted degree sequence.
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
  std::string label_;
};

// Free-function forms of the basic queries.
inline VertexSet neighbourhood(const Graph& g, int v) { return g.neighbours(v); }
inline VertexSet closed_neighbourhood(const Graph& g, int v) { return g.closed_neighbours(v); }
inline bool is_universal(const Graph& g, int v) { return g.is_universal(v); }

/// Subgraph induced by s, vertices renumbered in ascending order of s.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Maximal connected vertex sets, ordered by smallest element.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct LineGraph {
  Graph graph;
  /// edges[i] is the edge of the source graph represented by vertex i.
  std::vector<Edge> edges;
};
/// L(g): one vertex per edge of g (lexicographic order), adjacent when the
/// edges share an endpoint. Throws CapacityError above kMaxVertices edges.
LineGraph line_graph(const Graph& g);

// ---- Constructors -------------------------------------------------------

/// P_n on 0-1-...-(n-1).
Graph make_path(int n);
/// C_n on 0-1-...-(n-1)-0, n >= 3.
Graph make_cycle(int n);
Graph make_complete(int n);
/// N_n, the edgeless graph.
Graph make_empty(int n);
/// K_{r,t}: the r-side is 0..r-1, the t-side r..r+t-1.
Graph make_complete_bipartite(int r, int t);
/// K_{p1,...,pk}, parts laid out consecutively.
Graph make_complete_multipartite(std::span<const int> parts);
/// K_r ⊙ K_1: clique vertices 0..r-1, pendant of i is r+i.
Graph make_corona_k1(int r);
/// Disjoint union, components laid out consecutively.
Graph disjoint_union(std::span<const Graph> parts);

enum class GraphKind {
  path,
  cycle,
  complete,
  empty,
  complete_bipartite,
  complete_multipartite,
  corona_k1,
};

GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);
/// Dispatches to the make_* constructors; sizes are validated per kind.
Graph construct(GraphKind kind, std::span<const int> sizes);

}  // namespace superdom
