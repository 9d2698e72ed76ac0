#include "superdom/family_f.hpp"

#include <algorithm>
#include <stdexcept>

namespace superdom {

namespace {

std::vector<int> sizes_of(const std::vector<VertexSet>& sets) {
  std::vector<int> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(s.size());
  return out;
}

VertexSet union_range(const std::vector<VertexSet>& sets, std::size_t from, std::size_t to) {
  VertexSet out;
  for (std::size_t i = from; i < to && i < sets.size(); ++i) out = out | sets[i];
  return out;
}

}  // namespace

std::vector<int> FDecomposition::clique_sizes() const { return sizes_of(cliques); }
std::vector<int> FDecomposition::empty_sizes() const { return sizes_of(empties); }

std::optional<FDecomposition> recognize_family_f(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraphError("family F is defined for connected graphs");
  FDecomposition d;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    // Universal vertices of the remaining induced subgraph.
    VertexSet layer;
    for (int v : remaining) {
      if ((remaining - g.row(v)).without(v).empty()) layer = layer.with(v);
    }
    if (layer.empty()) return std::nullopt;
    VertexSet companions;
    for (int v : remaining - layer) {
      if ((g.row(v) & remaining) == layer) companions = companions.with(v);
    }
    d.cliques.push_back(layer);
    remaining = remaining - layer - companions;
    if (companions.empty()) {
      if (!remaining.empty()) return std::nullopt;
      break;
    }
    d.empties.push_back(companions);
  }
  if (!validate_decomposition(g, d)) return std::nullopt;
  return d;
}

bool validate_decomposition(const Graph& g, const FDecomposition& d) {
  const int k = d.k();
  const int kp = d.k_prime();
  if (k < 1 || (kp != k && kp != k - 1)) return false;
  VertexSet seen;
  for (const auto* family : {&d.cliques, &d.empties}) {
    for (VertexSet s : *family) {
      if (s.empty() || s.intersects(seen)) return false;
      seen = seen | s;
    }
  }
  if (seen != g.vertices()) return false;

  const VertexSet all_cliques = union_range(d.cliques, 0, d.cliques.size());
  for (int i = 0; i < k; ++i) {
    // x ∈ V_i: adjacent to every other clique vertex and to V'_j for j >= i.
    const VertexSet expected = all_cliques | union_range(d.empties, static_cast<std::size_t>(i), d.empties.size());
    for (int x : d.cliques[static_cast<std::size_t>(i)]) {
      if (g.row(x) != expected.without(x)) return false;
    }
  }
  for (int j = 0; j < kp; ++j) {
    const VertexSet expected = union_range(d.cliques, 0, static_cast<std::size_t>(j) + 1);
    for (int y : d.empties[static_cast<std::size_t>(j)]) {
      if (g.row(y) != expected) return false;
    }
  }
  return true;
}

bool satisfies_neighbourhood_laws(const Graph& g, const FDecomposition& d) {
  const auto& v = d.cliques;
  const auto& vp = d.empties;
  const std::size_t k = v.size();
  const std::size_t kp = vp.size();
  const VertexSet all_cliques = union_range(v, 0, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (int x : v[i]) {
      if (g.closed_neighbours(x) != (all_cliques | union_range(vp, i, kp))) return false;
      for (int y : v[i]) {
        if (g.closed_neighbours(x) != g.closed_neighbours(y)) return false;
      }
      for (std::size_t j = i + 1; j < k; ++j) {
        for (int y : v[j]) {
          if (!g.closed_neighbours(y).is_subset_of(g.closed_neighbours(x))) return false;
        }
      }
      // A companion's neighbourhood lies in the closed neighbourhood of
      // every clique vertex (the open form fails when x ∈ N(y)).
      for (std::size_t j = 0; j < kp; ++j) {
        for (int y : vp[j]) {
          if (!g.neighbours(y).is_subset_of(g.closed_neighbours(x))) return false;
          if (j < i && !g.neighbours(y).is_subset_of(g.neighbours(x))) return false;
        }
      }
    }
  }
  for (std::size_t j = 0; j < kp; ++j) {
    for (int y : vp[j]) {
      if (g.neighbours(y) != union_range(v, 0, j + 1)) return false;
      for (int z : vp[j]) {
        if (g.neighbours(y) != g.neighbours(z)) return false;
      }
      for (std::size_t l = j + 1; l < kp; ++l) {
        for (int z : vp[l]) {
          if (!g.neighbours(y).is_subset_of(g.neighbours(z))) return false;
        }
      }
    }
  }
  return true;
}

Graph construct_family_f(const std::vector<int>& clique_sizes, const std::vector<int>& empty_sizes) {
  const std::size_t k = clique_sizes.size();
  const std::size_t kp = empty_sizes.size();
  if (k < 1) throw std::invalid_argument("family F needs at least one clique layer");
  if (kp != k && kp + 1 != k) throw std::invalid_argument("family F needs k' = k or k' = k - 1");
  int n = 0;
  for (int s : clique_sizes) {
    if (s < 1) throw std::invalid_argument("family F layer sizes must be positive");
    n += s;
  }
  for (int s : empty_sizes) {
    if (s < 1) throw std::invalid_argument("family F layer sizes must be positive");
    n += s;
  }
  if (n > kMaxVertices) throw CapacityError("family F graph has " + std::to_string(n) + " vertices");

  std::vector<VertexSet> cliques(k);
  std::vector<VertexSet> empties(kp);
  int next = 0;
  auto take = [&next](int count) {
    VertexSet s;
    for (int i = 0; i < count; ++i) s = s.with(next++);
    return s;
  };
  for (std::size_t i = 0; i < k; ++i) {
    cliques[i] = take(clique_sizes[i]);
    if (i < kp) empties[i] = take(empty_sizes[i]);
  }

  std::vector<Edge> edges;
  const VertexSet all_cliques = union_range(cliques, 0, k);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexSet nbrs = all_cliques | union_range(empties, i, kp);
    for (int x : cliques[i]) {
      for (int y : nbrs) {
        if (x < y) edges.push_back({x, y});
      }
      for (int y : union_range(empties, i, kp)) {
        if (y < x) edges.push_back({y, x});
      }
    }
  }
  return Graph(n, edges, "F");
}

std::pair<std::vector<int>, std::vector<int>> canonical_shape(std::vector<int> clique_sizes,
                                                              std::vector<int> empty_sizes) {
  if (!clique_sizes.empty() && empty_sizes.size() == clique_sizes.size() && empty_sizes.back() == 1) {
    clique_sizes.back() += 1;
    empty_sizes.pop_back();
  } else if (clique_sizes.size() >= 2 && empty_sizes.size() + 1 == clique_sizes.size() && clique_sizes.back() == 1) {
    clique_sizes.pop_back();
    empty_sizes.back() += 1;
  }
  return {std::move(clique_sizes), std::move(empty_sizes)};
}

bool is_gamma_sp_n_minus_1(const Graph& g) { return recognize_family_f(g).has_value(); }

bool has_induced_p4_or_c4(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int e = c + 1; e < n; ++e) {
          const VertexSet s = VertexSet::of({a, b, c, e});
          int edges = 0;
          int max_deg = 0;
          int min_deg = 4;
          for (int v : s) {
            const int d = (g.row(v) & s).size();
            edges += d;
            max_deg = std::max(max_deg, d);
            min_deg = std::min(min_deg, d);
          }
          edges /= 2;
          // P4: three edges, degrees 1,1,2,2. C4: four edges, all degree 2.
          if (edges == 3 && max_deg == 2 && min_deg == 1) return true;
          if (edges == 4 && max_deg == 2 && min_deg == 2) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace superdom
