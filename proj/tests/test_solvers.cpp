#include <gtest/gtest.h>

#include <map>
#include <random>

#include "superdom/harness.hpp"
#include "superdom/products.hpp"
#include "superdom/solvers.hpp"

using namespace superdom;

namespace {

using Histogram = std::map<int, int>;

template <class F>
Histogram histogram(int n, F&& f) {
  Histogram h;
  for (const Graph& g : Corpus::enumerated(n).materialize()) ++h[f(g)];
  return h;
}

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST(GammaSp, NamedGraphs) {
  EXPECT_EQ(gamma_sp(make_cycle(5)).value, 3);
  EXPECT_EQ(gamma_sp(make_path(4)).value, 2);
  EXPECT_EQ(gamma_sp(make_complete_bipartite(2, 3)).value, 3);
  EXPECT_EQ(gamma_sp(make_empty(5)).value, 5);
  EXPECT_EQ(gamma_sp(make_complete(4)).value, 3);
  EXPECT_EQ(gamma_sp(make_complete(1)).value, 1);
  EXPECT_EQ(gamma_sp(Graph(0)).value, 0);
  EXPECT_EQ(gamma_sp(make_corona_k1(2)).value, 2);
}

TEST(GammaSp, ProductsFromIndependentOracle) {
  // Values from a Python brute force over the product definition.
  EXPECT_EQ(gamma_sp(lex_product(make_complete(3), make_path(3)).graph()).value, 7);
  EXPECT_EQ(gamma_sp(lex_product(make_cycle(4), make_path(4)).graph()).value, 12);
  EXPECT_EQ(gamma_sp(lex_product(make_path(5), make_path(3)).graph()).value, 11);
  EXPECT_EQ(gamma_sp(lex_product(make_complete_bipartite(2, 3), make_path(4)).graph()).value, 14);
  EXPECT_EQ(gamma_sp(lex_product(make_cycle(5), make_path(4)).graph()).value, 16);
  EXPECT_EQ(gamma_sp(lex_product(make_path(3), make_path(3)).graph()).value, 7);
  EXPECT_EQ(gamma_sp(lex_product(make_path(4), make_empty(2)).graph()).value, 6);
  EXPECT_EQ(gamma_sp(join(make_path(4), make_path(4)).graph()).value, 6);
  EXPECT_EQ(gamma_sp(join(make_empty(2), make_empty(3)).graph()).value, 3);
}

TEST(GammaSp, HistogramsMatchIndependentOracle) {
  const auto sp = [](const Graph& g) { return gamma_sp(g).value; };
  EXPECT_EQ(histogram(4, sp), (Histogram{{2, 18}, {3, 45}, {4, 1}}));
  EXPECT_EQ(histogram(5, sp), (Histogram{{3, 692}, {4, 331}, {5, 1}}));
  EXPECT_EQ(histogram(6, sp), (Histogram{{3, 2940}, {4, 26954}, {5, 2873}, {6, 1}}));
}

TEST(GammaSp, AgreesWithSubsetOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 14;
    const double p = 0.15 + 0.7 * (trial % 7) / 6.0;
    const Graph g = random_graph(n, rng, p);
    const InvariantValue fast = gamma_sp(g);
    EXPECT_EQ(fast.value, gamma_sp_oracle(g).value);
    EXPECT_EQ(fast.value, gamma_sp(g, GammaSpOptions{false}).value);
    EXPECT_TRUE(certifies(g, fast));
  }
}

TEST(GammaSp, WitnessComplementIsLexLeast) {
  for (const Graph& g : Corpus::enumerated(5).materialize()) {
    const InvariantValue v = gamma_sp(g);
    const VertexSet complement = v.witness.complement(g.order());
    for (std::uint64_t bits = 0; bits < 32; ++bits) {
      const VertexSet d(bits);
      if (d.size() == v.value && is_super_dominating(g, d)) {
        EXPECT_FALSE(lex_less(d.complement(5), complement));
      }
    }
  }
}

TEST(GammaSp, WitnessAssignment) {
  const InvariantValue v = gamma_sp(make_path(4));
  ASSERT_TRUE(v.super_witness);
  EXPECT_EQ(v.witness, VertexSet::of({1, 2}));
  EXPECT_EQ(v.super_witness->assignment, (std::vector<std::pair<int, int>>{{0, 1}, {3, 2}}));
  EXPECT_TRUE(is_super_dominating(make_path(4), VertexSet::of({0, 3})));
  EXPECT_FALSE(is_super_dominating(make_path(4), VertexSet::of({0, 1})));  // 3 has no neighbour in D
}

TEST(GammaSp, OracleCapacity) {
  EXPECT_THROW(gamma_sp_oracle(make_empty(25)), CapacityError);
}

TEST(OtherInvariants, NamedGraphs) {
  const Graph c6 = make_cycle(6);
  const Graph p5 = make_path(5);
  EXPECT_EQ(alpha(c6).value, 3);
  EXPECT_EQ(alpha_2(c6).value, 4);
  EXPECT_EQ(alpha(p5).value, 3);
  EXPECT_EQ(alpha_2(p5).value, 4);
  EXPECT_EQ(alpha_2(make_cycle(4)).value, 2);
  EXPECT_EQ(tau(c6).value, 3);
  EXPECT_EQ(rho(make_path(6)).value, 2);
  EXPECT_EQ(rho(make_path(3)).value, 1);
  EXPECT_EQ(gamma(c6).value, 2);
  EXPECT_EQ(gamma(make_path(4)).value, 2);
  EXPECT_THROW(alpha_k(c6, 0), std::invalid_argument);
}

TEST(OtherInvariants, HistogramsMatchIndependentOracle) {
  EXPECT_EQ(histogram(5, [](const Graph& g) { return gamma(g).value; }),
            (Histogram{{1, 256}, {2, 627}, {3, 130}, {4, 10}, {5, 1}}));
  EXPECT_EQ(histogram(5, [](const Graph& g) { return alpha(g).value; }),
            (Histogram{{1, 1}, {2, 387}, {3, 570}, {4, 65}, {5, 1}}));
  EXPECT_EQ(histogram(5, [](const Graph& g) { return alpha_2(g).value; }),
            (Histogram{{2, 26}, {3, 522}, {4, 450}, {5, 26}}));
  EXPECT_EQ(histogram(5, [](const Graph& g) { return tau(g).value; }),
            (Histogram{{0, 1}, {1, 65}, {2, 570}, {3, 387}, {4, 1}}));
  EXPECT_EQ(histogram(5, [](const Graph& g) { return rho(g).value; }),
            (Histogram{{1, 368}, {2, 530}, {3, 115}, {4, 10}, {5, 1}}));
}

TEST(OtherInvariants, WitnessesCertify) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + trial % 16, rng, 0.35);
    for (InvariantKind kind : {InvariantKind::gamma, InvariantKind::alpha, InvariantKind::alpha_2,
                               InvariantKind::tau, InvariantKind::rho}) {
      EXPECT_TRUE(certifies(g, compute_invariant(g, kind))) << to_string(kind);
    }
    EXPECT_EQ(alpha(g).value + tau(g).value, g.order());
  }
}

TEST(PrivateNeighbours, KnownExample) {
  // F_X(y) = {x ∈ X : N(x) ∩ X̄ = {y}}.
  const Graph k3 = make_complete(3);
  EXPECT_EQ(private_neighbours(k3, VertexSet::of({0, 1}), 2), VertexSet::of({0, 1}));
  EXPECT_EQ(private_neighbours(make_path(3), VertexSet::of({0}), 1), VertexSet::of({0}));
  EXPECT_EQ(private_neighbours(make_path(3), VertexSet::of({1}), 0), VertexSet{});
  EXPECT_THROW(private_neighbours(k3, VertexSet::of({0}), 0), std::invalid_argument);
}

TEST(InvariantNames, RoundTrip) {
  for (InvariantKind kind : {InvariantKind::gamma, InvariantKind::gamma_sp, InvariantKind::alpha,
                             InvariantKind::alpha_2, InvariantKind::alpha_k, InvariantKind::tau, InvariantKind::rho}) {
    EXPECT_EQ(parse_invariant_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_invariant_kind("omega"), std::invalid_argument);
}
