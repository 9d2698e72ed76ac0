#include <gtest/gtest.h>

#include "superdom/harness.hpp"
#include "superdom/products.hpp"

using namespace superdom;

TEST(LexProduct, AdjacencyRule) {
  // (a,x) ~ (b,y) iff ab ∈ E(G), or a = b and xy ∈ E(H).
  const Graph g = make_path(3);
  const Graph h = make_path(3);
  const ProductGraph p = lex_product(g, h);
  ASSERT_EQ(p.graph().order(), 9);
  for (int v = 0; v < 9; ++v) {
    for (int w = 0; w < 9; ++w) {
      if (v == w) continue;
      const Coord a = p.coord_of(v);
      const Coord b = p.coord_of(w);
      const bool expected = g.has_edge(a.copy, b.copy) || (a.copy == b.copy && h.has_edge(a.inner, b.inner));
      EXPECT_EQ(p.graph().has_edge(v, w), expected);
    }
  }
  EXPECT_EQ(p.graph().size(), 2 * 9 + 3 * 2);
}

TEST(LexProduct, CoordinatesAreCopyMajor) {
  const Graph h0 = make_complete(2);
  const Graph h1 = make_path(3);
  const Graph hs[] = {h0, h1};
  const ProductGraph p = lex_product(make_complete(2), hs);
  EXPECT_EQ(p.graph().order(), 5);
  EXPECT_EQ(p.offset(1), 2);
  EXPECT_EQ(p.coord_of(3), (Coord{1, 1}));
  EXPECT_EQ(p.index_of({1, 2}), 4);
  EXPECT_EQ(p.copy_vertices(1), VertexSet::of({2, 3, 4}));
  EXPECT_THROW(p.coord_of(5), std::out_of_range);
  EXPECT_THROW(p.index_of({0, 2}), std::out_of_range);
}

TEST(LexProduct, Errors) {
  const Graph hs[] = {make_path(2), make_path(2)};
  EXPECT_THROW(lex_product(make_path(3), hs), std::invalid_argument);
  EXPECT_THROW(lex_product(make_path(2), Graph(0)), std::invalid_argument);
  EXPECT_THROW(lex_product(make_complete(9), make_complete(8)), CapacityError);
}

TEST(Join, IsK2Product) {
  const ProductGraph j = join(make_path(4), make_empty(2));
  EXPECT_EQ(j.graph().order(), 6);
  EXPECT_EQ(j.graph().size(), 3 + 8);
  EXPECT_EQ(join(make_empty(2), make_empty(3)).graph(), make_complete_bipartite(2, 3));
  EXPECT_EQ(join(make_complete(2), make_complete(3)).graph(), make_complete(5));
}

TEST(Project, ShiftsIntoCopy) {
  const ProductGraph p = lex_product(make_path(3), make_path(4));
  const VertexSet w = VertexSet::of({0, 5, 6, 11});
  EXPECT_EQ(project(p, w, 0), VertexSet::of({0}));
  EXPECT_EQ(project(p, w, 1), VertexSet::of({1, 2}));
  EXPECT_EQ(project(p, w, 2), VertexSet::of({3}));
}

TEST(LexProduct, ConnectivityFollowsG) {
  // Over small G and nonempty connected H, G∘H is connected iff G is.
  const Graph h = make_path(2);
  for (const Graph& g : Corpus::enumerated_range(1, 4).materialize()) {
    EXPECT_EQ(is_connected(lex_product(g, h).graph()), is_connected(g));
    EXPECT_EQ(connected_components(lex_product(g, h).graph()).size(), connected_components(g).size());
  }
}
