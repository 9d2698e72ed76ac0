#pragma once

#include <span>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

/// Position of a product vertex: copy index (vertex of the first factor)
/// and the vertex inside that copy.
struct Coord {
  int copy = 0;
  int inner = 0;
  friend constexpr bool operator==(const Coord&, const Coord&) = default;
};

/// Lexicographic product G∘{H_0, ..., H_{n-1}} with its coordinate map.
///
/// Vertices are numbered copy-major: copy i occupies the contiguous range
/// [offset(i), offset(i) + h_order(i)). The uniform product G∘H is the same
/// structure with every H_i equal to H.
class ProductGraph {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const Graph& first_factor() const noexcept { return g_; }
  const Graph& copy_factor(int i) const { return hs_.at(static_cast<std::size_t>(i)); }
  int g_order() const noexcept { return g_.order(); }
  int h_order(int i) const { return copy_factor(i).order(); }
  int offset(int i) const { return offsets_.at(static_cast<std::size_t>(i)); }

  Coord coord_of(int v) const;
  int index_of(Coord c) const;
  /// All product vertices of copy i.
  VertexSet copy_vertices(int i) const;

 private:
  friend ProductGraph lex_product(const Graph& g, std::span<const Graph> hs);

  Graph graph_;
  Graph g_;
  std::vector<Graph> hs_;
  std::vector<int> offsets_;
  std::vector<Coord> coords_;
};

/// G∘ℋ. `hs` has either g.order() entries or exactly one (replicated).
/// Throws std::invalid_argument on a count mismatch or a zero-order factor
/// and CapacityError when the product exceeds kMaxVertices.
ProductGraph lex_product(const Graph& g, std::span<const Graph> hs);
ProductGraph lex_product(const Graph& g, const Graph& h);

/// G + H, built as K_2∘{G, H}.
ProductGraph join(const Graph& g, const Graph& h);

/// W_{u_i} = {h : (u_i, h) ∈ W}, reindexed to 0..h_order(i)-1.
VertexSet project(const ProductGraph& p, VertexSet w, int copy);

}  // namespace superdom
