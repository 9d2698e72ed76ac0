#include "superdom/products.hpp"

#include <array>

namespace superdom {

Coord ProductGraph::coord_of(int v) const {
  if (v < 0 || v >= graph_.order()) throw std::out_of_range("product vertex out of range");
  return coords_[static_cast<std::size_t>(v)];
}

int ProductGraph::index_of(Coord c) const {
  if (c.copy < 0 || c.copy >= g_order()) throw std::out_of_range("copy index out of range");
  if (c.inner < 0 || c.inner >= h_order(c.copy)) throw std::out_of_range("inner index out of range");
  return offsets_[static_cast<std::size_t>(c.copy)] + c.inner;
}

VertexSet ProductGraph::copy_vertices(int i) const {
  const int lo = offset(i);
  return VertexSet(low_bits(lo + h_order(i)) & ~low_bits(lo));
}

ProductGraph lex_product(const Graph& g, std::span<const Graph> hs) {
  const int n = g.order();
  if (hs.size() != 1 && static_cast<int>(hs.size()) != n) {
    throw std::invalid_argument("lex_product needs one factor per vertex of G or a single factor");
  }
  ProductGraph p;
  p.g_ = g;
  p.hs_.reserve(static_cast<std::size_t>(n));
  int total = 0;
  for (int i = 0; i < n; ++i) {
    const Graph& h = hs.size() == 1 ? hs[0] : hs[static_cast<std::size_t>(i)];
    if (h.order() == 0) throw std::invalid_argument("lex_product factor has zero order");
    p.hs_.push_back(h);
    p.offsets_.push_back(total);
    total += h.order();
  }
  if (total > kMaxVertices) {
    throw CapacityError("product order " + std::to_string(total) + " exceeds the vertex cap");
  }

  std::vector<VertexSet> copies;
  copies.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) copies.push_back(p.copy_vertices(i));

  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(total));
  for (int i = 0; i < n; ++i) {
    VertexSet across;
    for (int k : g.row(i)) across = across | copies[static_cast<std::size_t>(k)];
    const Graph& h = p.hs_[static_cast<std::size_t>(i)];
    for (int j = 0; j < h.order(); ++j) {
      rows.emplace_back((h.row(j).bits() << p.offsets_[static_cast<std::size_t>(i)]) | across.bits());
      p.coords_.push_back({i, j});
    }
  }
  std::string label;
  if (!g.label().empty()) {
    label = g.label() + "o";
    if (hs.size() == 1) {
      label += hs[0].label();
    } else {
      label += "{";
      for (std::size_t i = 0; i < hs.size(); ++i) label += (i ? "," : "") + hs[i].label();
      label += "}";
    }
  }
  p.graph_ = Graph::from_rows(std::move(rows), label);
  return p;
}

ProductGraph lex_product(const Graph& g, const Graph& h) {
  return lex_product(g, std::span<const Graph>(&h, 1));
}

ProductGraph join(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("join factors need order >= 1");
  const std::array<Graph, 2> hs{g, h};
  return lex_product(make_complete(2), hs);
}

VertexSet project(const ProductGraph& p, VertexSet w, int copy) {
  if (copy < 0 || copy >= p.g_order()) throw std::out_of_range("copy index out of range");
  return VertexSet((w.bits() >> p.offset(copy)) & low_bits(p.h_order(copy)));
}

}  // namespace superdom
