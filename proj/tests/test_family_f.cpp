#include <gtest/gtest.h>

#include "superdom/family_f.hpp"
#include "superdom/harness.hpp"
#include "superdom/solvers.hpp"

using namespace superdom;

TEST(FamilyF, ExampleWithTwoLayers) {
  // V1={a,b}, V1'={a'}, V2={x,y}, V2'={x',y'}.
  const Graph g = construct_family_f({2, 2}, {1, 2});
  EXPECT_EQ(g.order(), 7);
  const auto d = recognize_family_f(g);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->clique_sizes(), (std::vector<int>{2, 2}));
  EXPECT_EQ(d->empty_sizes(), (std::vector<int>{1, 2}));
  EXPECT_EQ(d->cliques[0], VertexSet::of({0, 1}));
  EXPECT_EQ(d->empties[0], VertexSet::of({2}));
  EXPECT_TRUE(validate_decomposition(g, *d));
  EXPECT_TRUE(satisfies_neighbourhood_laws(g, *d));
  EXPECT_EQ(gamma_sp(g).value, g.order() - 1);
}

TEST(FamilyF, SmallCases) {
  EXPECT_FALSE(recognize_family_f(make_cycle(4)));
  EXPECT_FALSE(recognize_family_f(make_path(4)));
  const auto star = recognize_family_f(make_complete_bipartite(1, 3));
  ASSERT_TRUE(star);
  EXPECT_EQ(star->clique_sizes(), std::vector<int>{1});
  EXPECT_EQ(star->empty_sizes(), std::vector<int>{3});
  const auto k4 = recognize_family_f(make_complete(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->k_prime(), 0);
  EXPECT_TRUE(recognize_family_f(make_complete(1)));
}

TEST(FamilyF, RejectsDisconnected) {
  EXPECT_THROW(recognize_family_f(make_empty(2)), DisconnectedGraphError);
  EXPECT_THROW(recognize_family_f(Graph(0)), DisconnectedGraphError);
}

TEST(FamilyF, ConstructValidation) {
  EXPECT_THROW(construct_family_f({}, {}), std::invalid_argument);
  EXPECT_THROW(construct_family_f({1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(construct_family_f({1, 1, 1}, {1}), std::invalid_argument);
  EXPECT_THROW(construct_family_f({2, 0}, {1}), std::invalid_argument);
}

TEST(FamilyF, CanonicalShape) {
  EXPECT_EQ(canonical_shape({2, 2}, {1, 1}), (std::pair{std::vector<int>{2, 3}, std::vector<int>{1}}));
  EXPECT_EQ(canonical_shape({2, 2}, {1, 2}), (std::pair{std::vector<int>{2, 2}, std::vector<int>{1, 2}}));
  EXPECT_EQ(canonical_shape({3}, {}), (std::pair{std::vector<int>{3}, std::vector<int>{}}));
  // P3 built as V1={0}, V1'={1}, V2={2} is the star K_{1,2}.
  EXPECT_EQ(canonical_shape({1, 1}, {1}), (std::pair{std::vector<int>{1}, std::vector<int>{2}}));
  EXPECT_EQ(canonical_shape({2, 3, 1}, {1, 2}), (std::pair{std::vector<int>{2, 3}, std::vector<int>{1, 3}}));
  EXPECT_EQ(canonical_shape({1}, {}), (std::pair{std::vector<int>{1}, std::vector<int>{}}));
}

TEST(FamilyF, RoundTripAllShapesUpToNine) {
  // Every shape with total order <= 9 and at most three clique layers.
  int shapes = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int kp = k - 1; kp <= k; ++kp) {
      const int parts = k + kp;
      std::vector<int> sizes(static_cast<std::size_t>(parts), 1);
      while (true) {
        int total = 0;
        for (int s : sizes) total += s;
        if (total <= 9) {
          std::vector<int> c;
          std::vector<int> e;
          for (int i = 0; i < parts; ++i) (i < k ? c : e).push_back(sizes[static_cast<std::size_t>(i)]);
          const Graph g = construct_family_f(c, e);
          const auto d = recognize_family_f(g);
          ASSERT_TRUE(d);
          const auto [cc, ce] = canonical_shape(c, e);
          EXPECT_EQ(d->clique_sizes(), cc);
          EXPECT_EQ(d->empty_sizes(), ce);
          EXPECT_TRUE(satisfies_neighbourhood_laws(g, *d));
          EXPECT_FALSE(has_induced_p4_or_c4(g));
          if (g.order() >= 2) EXPECT_EQ(gamma_sp(g).value, g.order() - 1);
          ++shapes;
        }
        int i = 0;
        while (i < parts && sizes[static_cast<std::size_t>(i)] == 9) sizes[static_cast<std::size_t>(i++)] = 1;
        if (i == parts) break;
        ++sizes[static_cast<std::size_t>(i)];
      }
    }
  }
  EXPECT_GT(shapes, 100);
}

TEST(FamilyF, EquivalenceOnConnectedGraphsUpToSix) {
  // Independent oracle counts of connected graphs with gamma_sp = n-1.
  const int expected[] = {1, 4, 23, 166, 1437};
  for (int n = 2; n <= 6; ++n) {
    int members = 0;
    for (const Graph& g : Corpus::enumerated(n, CorpusFilter::connected).materialize()) {
      const bool member = is_gamma_sp_n_minus_1(g);
      EXPECT_EQ(member, gamma_sp(g).value == n - 1);
      members += member ? 1 : 0;
    }
    EXPECT_EQ(members, expected[n - 2]) << n;
  }
}

TEST(InducedP4C4, Detection) {
  EXPECT_TRUE(has_induced_p4_or_c4(make_path(4)));
  EXPECT_TRUE(has_induced_p4_or_c4(make_cycle(4)));
  EXPECT_TRUE(has_induced_p4_or_c4(make_cycle(5)));
  EXPECT_FALSE(has_induced_p4_or_c4(make_complete(5)));
  EXPECT_FALSE(has_induced_p4_or_c4(make_complete_bipartite(1, 4)));
  EXPECT_FALSE(has_induced_p4_or_c4(make_cycle(3)));
}

TEST(NeighbourhoodLaws, DetectBrokenDecomposition) {
  const Graph g = construct_family_f({2, 2}, {1, 2});
  FDecomposition d = *recognize_family_f(g);
  std::swap(d.empties[0], d.empties[1]);
  EXPECT_FALSE(validate_decomposition(g, d));
  EXPECT_FALSE(satisfies_neighbourhood_laws(g, d));
}
