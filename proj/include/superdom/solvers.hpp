#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

/// A super dominating set D with, for every u outside D, the vertex v ∈ D
/// whose only neighbour outside D is u.
struct SuperDomWitness {
  VertexSet dom_set;
  /// (u, v) pairs sorted by u; v is the smallest qualifying index.
  std::vector<std::pair<int, int>> assignment;
};

enum class InvariantKind { gamma, gamma_sp, alpha, alpha_2, alpha_k, tau, rho };

InvariantKind parse_invariant_kind(std::string_view name);
std::string_view to_string(InvariantKind kind);

/// Value of one invariant with a certificate. `witness` is the optimal set
/// (D for gamma_sp); `super_witness` is filled for gamma_sp only.
struct InvariantValue {
  InvariantKind kind = InvariantKind::gamma_sp;
  int k = 0;
  int value = 0;
  VertexSet witness;
  std::optional<SuperDomWitness> super_witness;
};

/// Witness if d is super dominating in g, std::nullopt otherwise.
std::optional<SuperDomWitness> is_super_dominating(const Graph& g, VertexSet d);

struct GammaSpOptions {
  /// Solve each connected component separately and sum the results.
  bool split_components = true;
};

/// γ_sp(g) by complement-descent search. The witness complement is the
/// lexicographically least complement of maximum size.
InvariantValue gamma_sp(const Graph& g, GammaSpOptions options = {});

/// Size of the largest feasible complement D̄ (so γ_sp = n - result).
int max_super_complement(const Graph& g, GammaSpOptions options = {});

/// Plain oracle: scans every subset in order of increasing size and returns
/// the first super dominating one. Throws CapacityError for n > 24.
InvariantValue gamma_sp_oracle(const Graph& g);
inline constexpr int kOracleMaxVertices = 24;

/// α_k: largest S whose induced subgraph has maximum degree <= k-1.
/// Throws std::invalid_argument for k < 1.
InvariantValue alpha_k(const Graph& g, int k);
inline InvariantValue alpha(const Graph& g) { return alpha_k(g, 1); }
inline InvariantValue alpha_2(const Graph& g) { return alpha_k(g, 2); }

/// Minimum vertex cover, by edge branching (independent of alpha_k).
InvariantValue tau(const Graph& g);

/// Maximum 2-packing: pairwise disjoint closed neighbourhoods.
InvariantValue rho(const Graph& g);

/// Domination number.
InvariantValue gamma(const Graph& g);

InvariantValue compute_invariant(const Graph& g, InvariantKind kind, int k = 1);

/// F_X(y) = {x ∈ X : N(x) ∩ X̄ = {y}}. Throws std::invalid_argument if y ∈ X.
VertexSet private_neighbours(const Graph& g, VertexSet x, int y);

// Certificate checkers.
bool is_dominating(const Graph& g, VertexSet d);
bool is_k_independent(const Graph& g, VertexSet s, int k);
bool is_vertex_cover(const Graph& g, VertexSet s);
bool is_two_packing(const Graph& g, VertexSet s);

/// Checks that `w` certifies `value` for its invariant.
bool certifies(const Graph& g, const InvariantValue& value);

}  // namespace superdom
