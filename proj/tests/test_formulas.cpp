#include <gtest/gtest.h>

#include "superdom/formulas.hpp"
#include "superdom/harness.hpp"
#include "superdom/products.hpp"
#include "superdom/solvers.hpp"

using namespace superdom;

namespace {

FactorInvariants inv(const Graph& g) { return FactorInvariants::of(g); }

int lex_exact(const Graph& g, const Graph& h) { return gamma_sp(lex_product(g, h).graph()).value; }

}  // namespace

TEST(MainUpper, Variants) {
  const auto b = bound_main_upper(inv(make_cycle(4)), inv(make_path(3)));
  ASSERT_TRUE(b);
  ASSERT_TRUE(b->sharper);
  EXPECT_EQ(*b->sharper, 10);
  EXPECT_EQ(b->binding(), 10);

  const Graph three_k2 = disjoint_union(std::vector<Graph>(3, make_complete(2)));
  const auto c = bound_main_upper(inv(make_complete(2)), inv(three_k2));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->general, 9);
  EXPECT_EQ(lex_exact(make_complete(2), three_k2), 9);

  // H = K2 is complete, so only the general variant applies: 3 >= γ_sp(K4) = 3.
  const auto k = bound_main_upper(inv(make_path(2)), inv(make_complete(2)));
  ASSERT_TRUE(k);
  EXPECT_FALSE(k->sharper);
  EXPECT_EQ(k->general, 3);
  EXPECT_EQ(lex_exact(make_path(2), make_complete(2)), 3);

  EXPECT_FALSE(bound_main_upper(inv(make_path(3)), inv(make_empty(3))));
}

TEST(TrivialLower, EqualityCharacterisation) {
  EXPECT_EQ(bound_trivial_lower(inv(make_complete(2)), inv(make_path(3))), 4);
  EXPECT_EQ(equality_trivial_lower(inv(make_complete(2)), inv(make_path(3))), true);
  EXPECT_EQ(lex_exact(make_complete(2), make_path(3)), 4);

  EXPECT_EQ(equality_trivial_lower(inv(make_complete(2)), inv(make_complete(3))), false);
  EXPECT_EQ(lex_exact(make_complete(2), make_complete(3)), 5);

  EXPECT_EQ(equality_trivial_lower(inv(make_path(3)), inv(make_path(3))), false);
  EXPECT_GT(lex_exact(make_path(3), make_path(3)), 6);

  EXPECT_FALSE(bound_trivial_lower(inv(make_complete(1)), inv(make_path(3))));
  EXPECT_FALSE(bound_trivial_lower(inv(make_path(3)), inv(make_empty(2))));
}

TEST(MinUpper, Examples) {
  EXPECT_EQ(bound_min_upper(inv(make_complete(3)), inv(make_path(4))), 10);
  EXPECT_EQ(lex_exact(make_complete(3), make_path(4)), 10);
  // Corona K_r⊙K1 with K_n': n(n'-1)+r is attained, 2rn'-r.
  const Graph corona = make_corona_k1(2);
  EXPECT_EQ(gamma_sp(corona).value, 2);
  EXPECT_EQ(bound_min_upper(inv(corona), inv(make_complete(2))), 2 * 2 * 2 - 2);
  EXPECT_EQ(lex_exact(corona, make_complete(2)), 6);
  EXPECT_FALSE(bound_min_upper(inv(make_complete(1)), inv(make_path(3))));
}

TEST(EmptyUpper, Examples) {
  EXPECT_EQ(bound_empty_upper(inv(make_path(4)), 2), 6);
  EXPECT_EQ(lex_exact(make_path(4), make_empty(2)), 6);
  const Graph two_k2 = disjoint_union(std::vector<Graph>(2, make_complete(2)));
  EXPECT_EQ(bound_empty_upper(inv(two_k2), 2), 4);
  EXPECT_EQ(lex_exact(two_k2, make_empty(2)), 4);
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(bound_empty_upper(inv(make_complete(n)), 3), 3 * n - 2);
  }
  EXPECT_FALSE(bound_empty_upper(inv(make_empty(3)), 2));
  EXPECT_FALSE(bound_empty_upper(inv(make_path(3)), 1));
}

TEST(ExactLex, ClosedForms) {
  EXPECT_EQ(exact_complete_lex(3, inv(make_path(3))), 7);
  EXPECT_EQ(exact_complete_lex(3, inv(make_path(4))), 10);
  EXPECT_FALSE(exact_complete_lex(3, inv(make_complete(3))));
  EXPECT_EQ(exact_bipartite_lex(2, 3, inv(make_path(4))), 14);
  EXPECT_EQ(exact_bipartite_lex(3, 2, inv(make_path(4))), 14);
  EXPECT_EQ(exact_cycle_lex(4, inv(make_path(4))), 12);
  EXPECT_EQ(exact_cycle_lex(4, inv(make_path(3))), 10);
  EXPECT_EQ(exact_cycle_lex(5, inv(make_path(3))), 12);
  EXPECT_EQ(exact_cycle_lex(5, inv(make_path(4))), 16);
  EXPECT_FALSE(exact_cycle_lex(3, inv(make_path(4))));
  EXPECT_FALSE(exact_cycle_lex(5, inv(make_complete(3))));  // γ_sp(K3) = n'-1 but complete
  EXPECT_EQ(exact_path_lex(5, inv(make_path(3))), 11);
  EXPECT_FALSE(exact_path_lex(4, inv(make_empty(3))));
}

TEST(ExactLex, LargeGap) {
  // P3 with 4K2: n' - γ_sp(H) = 4 > Δ+1 = 3.
  const Graph four_k2 = disjoint_union(std::vector<Graph>(4, make_complete(2)));
  EXPECT_EQ(exact_large_gap_lex(inv(make_path(3)), inv(four_k2)), 2 * 4 + 1 * 8);
  EXPECT_FALSE(exact_large_gap_lex(inv(make_path(3)), inv(make_path(4))));
}

TEST(ExactLex, FamilyDetection) {
  const auto c4 = detect_lex_families(make_cycle(4));
  ASSERT_EQ(c4.size(), 2U);  // C4 = K_{2,2}
  EXPECT_EQ(c4[0].family, LexFamily::complete_bipartite);
  EXPECT_EQ(c4[1].family, LexFamily::cycle);
  const auto k2 = detect_lex_families(make_complete(2));
  EXPECT_EQ(k2.size(), 3U);  // complete, K_{1,1}, P2
  EXPECT_TRUE(detect_lex_families(make_empty(3)).empty());
  const auto p4 = detect_lex_families(make_path(4));
  ASSERT_EQ(p4.size(), 1U);
  EXPECT_EQ(p4[0].family, LexFamily::path);
}

TEST(ExactJoin, Examples) {
  const JoinPrediction pp = exact_join(inv(make_path(4)), inv(make_path(4)));
  EXPECT_EQ(pp.theorem_id, "thm21");
  EXPECT_EQ(pp.value, 6);
  const JoinPrediction kp = exact_join(inv(make_complete(3)), inv(make_path(4)));
  EXPECT_EQ(kp.theorem_id, "thm22");
  EXPECT_EQ(kp.value, 5);
  const JoinPrediction np = exact_join(inv(make_empty(2)), inv(make_path(4)));
  EXPECT_EQ(np.theorem_id, "thm23");
  EXPECT_EQ(np.value, 4);
  EXPECT_EQ(exact_join(inv(make_empty(2)), inv(make_empty(3))).value, 3);
  EXPECT_EQ(exact_join(inv(make_complete(2)), inv(make_empty(3))).value, 4);
  for (auto [g, h] : {std::pair{make_path(4), make_path(4)}, std::pair{make_complete(3), make_path(4)},
                      std::pair{make_empty(2), make_path(4)}, std::pair{make_empty(2), make_empty(3)}}) {
    EXPECT_EQ(exact_join(inv(g), inv(h)).value, gamma_sp(join(g, h).graph()).value);
  }
}

TEST(Reduction, RecoversAlpha) {
  const ReductionTrace k2 = alpha_via_reduction(make_complete(2));
  EXPECT_EQ(k2.t, 3);
  EXPECT_EQ(k2.gamma_sp_h, 3);
  EXPECT_EQ(k2.product_order, 12);
  EXPECT_EQ(k2.gamma_sp_product, 9);
  EXPECT_EQ(k2.alpha, 1);
  const ReductionTrace p3 = alpha_via_reduction(make_path(3));
  EXPECT_EQ(p3.product_order, 24);
  EXPECT_EQ(p3.gamma_sp_product, 16);
  EXPECT_EQ(p3.alpha, 2);
  const ReductionTrace n2 = alpha_via_reduction(make_empty(2));
  EXPECT_EQ(n2.gamma_sp_product, 4);
  EXPECT_EQ(n2.alpha, 2);
  EXPECT_THROW(alpha_via_reduction(make_complete(7)), CapacityError);
}

TEST(BoundReport, SandwichOverSmallSweep) {
  for (const Graph& g : Corpus::enumerated_range(2, 3, CorpusFilter::connected).materialize()) {
    for (const Graph& h : Corpus::enumerated_range(2, 3, CorpusFilter::nonempty).materialize()) {
      const BoundReport r = lex_bound_report(g, h, true);
      EXPECT_TRUE(r.consistent()) << r.graph_id;
      EXPECT_FALSE(r.applicable.empty());
    }
  }
  const BoundReport j = join_bound_report(make_path(4), make_path(4), true);
  EXPECT_TRUE(j.consistent());
  EXPECT_EQ(j.gamma_sp_exact, 6);
}
