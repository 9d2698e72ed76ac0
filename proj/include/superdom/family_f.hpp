#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

/// Raised by the family-F routines on a disconnected input.
class DisconnectedGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Layered decomposition of a graph in the family F: cliques V_1..V_k and
/// independent companions V'_1..V'_{k'} with k' ∈ {k-1, k}.
///
/// Edges are exactly: every V_i is a clique, V_i is complete to V_j for all
/// i != j, and x ∈ V_i is adjacent to y ∈ V'_j iff i <= j. A shorter
/// companion list (k' = k-1) stands for an empty last companion, so every
/// stored set is nonempty.
struct FDecomposition {
  std::vector<VertexSet> cliques;
  std::vector<VertexSet> empties;

  int k() const noexcept { return static_cast<int>(cliques.size()); }
  int k_prime() const noexcept { return static_cast<int>(empties.size()); }
  std::vector<int> clique_sizes() const;
  std::vector<int> empty_sizes() const;
};

/// Peels universal vertices and their pendant companions layer by layer,
/// then validates the full edge set. Throws DisconnectedGraphError.
std::optional<FDecomposition> recognize_family_f(const Graph& g);

/// True when `d` is a structurally valid decomposition of g: disjoint
/// nonempty sets covering V(g), a legal k', and exactly the F edge set.
bool validate_decomposition(const Graph& g, const FDecomposition& d);

/// Checks the seven neighbourhood laws every F member satisfies, literally.
bool satisfies_neighbourhood_laws(const Graph& g, const FDecomposition& d);

/// Builds the F graph with the given layer sizes; V_1, V'_1, V_2, V'_2, ...
/// are laid out consecutively. Throws std::invalid_argument on an illegal
/// shape.
Graph construct_family_f(const std::vector<int>& clique_sizes, const std::vector<int>& empty_sizes);

/// The shape recognize_family_f reports for construct_family_f(c, e). A last
/// companion of a single vertex (k' = k) is itself universal in the last
/// layer, so it folds into V_k. A single-vertex last clique with k' = k-1
/// (k >= 2) sees exactly V_{k-1} among the remaining vertices, so it folds
/// into V'_{k-1}.
std::pair<std::vector<int>, std::vector<int>> canonical_shape(std::vector<int> clique_sizes,
                                                              std::vector<int> empty_sizes);

/// recognize_family_f(g).has_value(). For connected g with n >= 2 this is
/// equivalent to γ_sp(g) = n - 1.
bool is_gamma_sp_n_minus_1(const Graph& g);

/// Induced P4 or C4 on some 4-subset.
bool has_induced_p4_or_c4(const Graph& g);

}  // namespace superdom
