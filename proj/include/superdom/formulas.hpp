#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

/// Invariants of one factor graph that the product formulas consume.
/// Computed once per factor with the exact solvers.
struct FactorInvariants {
  int order = 0;
  int size = 0;
  int gamma_sp = 0;
  int alpha = 0;
  int alpha_2 = 0;
  int max_degree = 0;
  bool complete = false;
  bool edgeless = false;
  /// ρ(L(G)); empty when G has no edges or L(G) exceeds the vertex cap.
  std::optional<int> rho_line;

  static FactorInvariants of(const Graph& g);
};

// Every formula below returns std::nullopt ("inapplicable") when its
// hypotheses are not met, never an extrapolated number.

/// Upper bounds on γ_sp(G∘H) from an α(G)-set (general) and, when
/// γ_sp(H) = n'-1 and H is not complete, from an α_2(G)-set (sharper).
struct MainUpperBound {
  int general = 0;
  std::optional<int> sharper;
  int binding() const noexcept { return sharper ? std::min(general, *sharper) : general; }
};
/// Requires H nonempty (at least one edge).
std::optional<MainUpperBound> bound_main_upper(const FactorInvariants& g, const FactorInvariants& h);

/// n·γ_sp(H); requires n >= 2 and H nonempty.
std::optional<int> bound_trivial_lower(const FactorInvariants& g, const FactorInvariants& h);
/// The equality characterisation of the lower bound above: G ≅ K_2,
/// γ_sp(H) = n'-1 and H not complete. Same hypotheses.
std::optional<bool> equality_trivial_lower(const FactorInvariants& g, const FactorInvariants& h);

/// min{n(n'-1) + γ_sp(G), n'(n-1) + γ_sp(H)}; requires n, n' >= 2.
std::optional<int> bound_min_upper(const FactorInvariants& g, const FactorInvariants& h);

/// Upper bound on γ_sp(G∘N_{n'}): n·n' - 2ρ(L(G)); requires n' >= 2 and at
/// least one edge in G.
std::optional<int> bound_empty_upper(const FactorInvariants& g, int n_prime);

/// First-factor families with closed formulas for γ_sp(G∘H).
enum class LexFamily { complete, complete_bipartite, cycle, path, large_gap };

std::string_view to_string(LexFamily family);

/// γ_sp(K_n∘H) for noncomplete H, n >= 2.
std::optional<int> exact_complete_lex(int n, const FactorInvariants& h);
/// γ_sp(K_{r,t}∘H) for nonempty H; sides are reordered so r <= t, t >= 2.
std::optional<int> exact_bipartite_lex(int r, int t, const FactorInvariants& h);
/// γ_sp(C_n∘H), n >= 4, dispatched on γ_sp(H).
std::optional<int> exact_cycle_lex(int n, const FactorInvariants& h);
/// γ_sp(P_n∘H), n >= 2, dispatched on γ_sp(H).
std::optional<int> exact_path_lex(int n, const FactorInvariants& h);
/// α(G)γ_sp(H) + (n - α(G))n' when n' - γ_sp(H) > Δ(G) + 1.
std::optional<int> exact_large_gap_lex(const FactorInvariants& g, const FactorInvariants& h);

/// Which closed-form families G belongs to, by structure (labels ignored).
struct FamilyMatch {
  LexFamily family;
  int a = 0;  // n, or r for the bipartite case
  int b = 0;  // t for the bipartite case
};
std::vector<FamilyMatch> detect_lex_families(const Graph& g);

/// Closed-form value for a detected family (large_gap uses `g`).
std::optional<int> exact_lex(const FamilyMatch& match, const FactorInvariants& g, const FactorInvariants& h);

/// Classification of a join factor. K_1 counts as complete.
enum class JoinClass { complete, empty, general };
JoinClass classify_join_factor(const FactorInvariants& f);

struct JoinPrediction {
  std::string theorem_id;
  int value = 0;
};
/// γ_sp(G+H) from the classification of both factors. Total.
JoinPrediction exact_join(const FactorInvariants& g, const FactorInvariants& h);

/// Recovers α(G) from γ_sp(G∘tK_2) with t = Δ(G)+2.
struct ReductionTrace {
  int t = 0;
  int gamma_sp_h = 0;  // γ_sp(tK_2), computed
  int product_order = 0;
  int gamma_sp_product = 0;
  int alpha = 0;
};
/// Throws CapacityError if the product exceeds kMaxVertices and
/// std::logic_error if γ_sp of the product is not a multiple of t.
ReductionTrace alpha_via_reduction(const Graph& g);

enum class BoundKind { lower, upper, exact };
std::string_view to_string(BoundKind kind);

struct BoundEntry {
  std::string theorem_id;
  BoundKind kind = BoundKind::upper;
  int value = 0;
};

/// Every applicable bound and closed form for one product, plus the exact
/// value when requested.
struct BoundReport {
  std::string graph_id;
  int n = 0;
  int n_prime = 0;
  std::vector<BoundEntry> applicable;
  std::optional<int> gamma_sp_exact;

  /// lower <= exact <= upper and every exact entry equals the solver value.
  bool consistent() const;
};

BoundReport lex_bound_report(const Graph& g, const Graph& h, bool compute_exact);
BoundReport join_bound_report(const Graph& g, const Graph& h, bool compute_exact);

}  // namespace superdom
