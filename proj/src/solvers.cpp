#include "superdom/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace superdom {

InvariantKind parse_invariant_kind(std::string_view name) {
  if (name == "gamma") return InvariantKind::gamma;
  if (name == "gamma_sp") return InvariantKind::gamma_sp;
  if (name == "alpha") return InvariantKind::alpha;
  if (name == "alpha_2") return InvariantKind::alpha_2;
  if (name == "alpha_k") return InvariantKind::alpha_k;
  if (name == "tau") return InvariantKind::tau;
  if (name == "rho") return InvariantKind::rho;
  throw std::invalid_argument("unknown invariant: " + std::string(name));
}

std::string_view to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::gamma: return "gamma";
    case InvariantKind::gamma_sp: return "gamma_sp";
    case InvariantKind::alpha: return "alpha";
    case InvariantKind::alpha_2: return "alpha_2";
    case InvariantKind::alpha_k: return "alpha_k";
    case InvariantKind::tau: return "tau";
    case InvariantKind::rho: return "rho";
  }
  return "?";
}

std::optional<SuperDomWitness> is_super_dominating(const Graph& g, VertexSet d) {
  d = d & g.vertices();
  const VertexSet outside = d.complement(g.order());
  SuperDomWitness w{d, {}};
  for (int u : outside) {
    bool found = false;
    for (int v : g.row(u) & d) {
      if ((g.row(v) & outside).size() == 1) {
        w.assignment.emplace_back(u, v);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

namespace {

// Depth-first search over complements D̄ restricted to `universe`, in
// ascending vertex order. Feasibility of a partial complement is hereditary:
// every u ∈ D̄ keeps a private candidate v ∉ D̄ with N(v) ∩ D̄ = {u}, and the
// candidate sets only shrink as D̄ grows.
class ComplementSearch {
 public:
  ComplementSearch(const Graph& g, VertexSet universe)
      : g_(g), universe_(universe), all_(g.vertices()) {}

  /// Lexicographically least feasible complement of exactly `target`
  /// vertices, if any.
  std::optional<VertexSet> find(int target) {
    target_ = target;
    found_ = VertexSet{};
    if (dfs(0, VertexSet{}, VertexSet{}, VertexSet{})) return found_;
    return std::nullopt;
  }

 private:
  // `once` holds vertices with exactly one neighbour in D̄, `touched` those
  // with at least one.
  bool dfs(int start, VertexSet dbar, VertexSet once, VertexSet touched) {
    if (dbar.size() == target_) {
      found_ = dbar;
      return true;
    }
    const VertexSet untouched = all_ - touched - dbar;
    const VertexSet rest = (universe_ - dbar) - VertexSet(low_bits(start));

    // Current private candidates of every chosen vertex.
    std::array<VertexSet, kMaxVertices> privates{};
    int chosen = 0;
    for (int u : dbar) privates[chosen++] = g_.row(u) & (once - dbar);

    // Vertices that could still join: each needs an untouched neighbour and
    // must leave every chosen vertex a private candidate outside its
    // closed neighbourhood.
    VertexSet addable;
    VertexSet future_privates;
    for (int x : rest) {
      const VertexSet own = g_.row(x) & untouched;
      if (own.empty()) continue;
      const VertexSet closed = g_.row(x).with(x);
      bool ok = true;
      for (int i = 0; i < chosen && ok; ++i) ok = !(privates[i] - closed).empty();
      if (!ok) continue;
      addable = addable.with(x);
      future_privates = future_privates | own;
    }
    const int extra = std::min({addable.size(), future_privates.size(), (addable | future_privates).size() / 2});
    if (dbar.size() + extra < target_) return false;

    for (int w : addable) {
      const VertexSet nw = g_.row(w);
      const VertexSet next_dbar = dbar.with(w);
      const VertexSet next_once = (once - nw) | (nw - touched);
      const VertexSet next_touched = touched | nw;
      bool ok = true;
      for (int u : next_dbar) {
        if ((g_.row(u) & (next_once - next_dbar)).empty()) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(w + 1, next_dbar, next_once, next_touched)) return true;
    }
    return false;
  }

  const Graph& g_;
  VertexSet universe_;
  VertexSet all_;
  int target_ = 0;
  VertexSet found_;
};

// Largest feasible complement inside `universe`, searching sizes downward
// from floor(|universe|/2): each u ∈ D̄ consumes a distinct private v ∈ D.
VertexSet best_complement(const Graph& g, VertexSet universe) {
  ComplementSearch search(g, universe);
  for (int k = universe.size() / 2; k >= 1; --k) {
    if (auto found = search.find(k)) return *found;
  }
  return {};
}

VertexSet optimal_complement(const Graph& g, GammaSpOptions options) {
  // Isolated vertices never lie in D̄.
  const VertexSet isolated = g.isolated_vertices();
  if (!options.split_components) return best_complement(g, g.vertices() - isolated);
  VertexSet out;
  for (VertexSet comp : connected_components(g)) {
    if (comp.size() >= 2) out = out | best_complement(g, comp);
  }
  return out;
}

}  // namespace

int max_super_complement(const Graph& g, GammaSpOptions options) {
  return optimal_complement(g, options).size();
}

InvariantValue gamma_sp(const Graph& g, GammaSpOptions options) {
  const VertexSet dbar = optimal_complement(g, options);
  const VertexSet d = dbar.complement(g.order());
  auto witness = is_super_dominating(g, d);
  if (!witness) throw std::logic_error("gamma_sp search produced an infeasible complement");
  return {InvariantKind::gamma_sp, 0, d.size(), d, std::move(witness)};
}

InvariantValue gamma_sp_oracle(const Graph& g) {
  const int n = g.order();
  if (n > kOracleMaxVertices) {
    throw CapacityError("gamma_sp_oracle is limited to " + std::to_string(kOracleMaxVertices) + " vertices");
  }
  for (int s = 0; s <= n; ++s) {
    // Gosper's hack: subsets of size s in increasing numeric order.
    std::uint64_t mask = low_bits(s);
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      if (auto w = is_super_dominating(g, VertexSet(mask))) {
        return {InvariantKind::gamma_sp, 0, s, VertexSet(mask), std::move(w)};
      }
      if (mask == 0) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("no super dominating set found");  // V(G) always qualifies
}

namespace {

// Include-first branch and bound for the largest S in which every vertex
// has at most k-1 neighbours inside S. Visiting "include" before "exclude"
// in vertex order means the first maximum found is lexicographically least.
class MaxSetSearch {
 public:
  MaxSetSearch(std::span<const VertexSet> rows, int k) : rows_(rows), k_(k) {}

  VertexSet run() {
    best_size_ = -1;
    rec(0, VertexSet{});
    return best_;
  }

 private:
  bool addable(int v, VertexSet s) const {
    const VertexSet inside = rows_[v] & s;
    if (inside.size() > k_ - 1) return false;
    for (int y : inside) {
      if ((rows_[y] & s).size() >= k_ - 1) return false;
    }
    return true;
  }

  void rec(int start, VertexSet s) {
    const int n = static_cast<int>(rows_.size());
    VertexSet cand;
    for (int v = start; v < n; ++v) {
      if (addable(v, s)) cand = cand.with(v);
    }
    if (cand.empty()) {
      if (s.size() > best_size_) {
        best_size_ = s.size();
        best_ = s;
      }
      return;
    }
    if (s.size() + cand.size() <= best_size_) return;
    const int v = cand.front();
    rec(v + 1, s.with(v));
    rec(v + 1, s);
  }

  std::span<const VertexSet> rows_;
  int k_;
  int best_size_ = -1;
  VertexSet best_;
};

// Greedy maximal matching among edges with both ends outside `covered`; its
// size is a lower bound on the vertices still needed to cover them.
int matching_lower_bound(const Graph& g, VertexSet covered) {
  VertexSet used = covered;
  int m = 0;
  for (int u : g.vertices() - covered) {
    if (used.contains(u)) continue;
    const VertexSet free = g.row(u) - used;
    if (!free.empty()) {
      used = used.with(u).with(free.front());
      ++m;
    }
  }
  return m;
}

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    best_size_ = g_.order() + 1;
    rec(0, VertexSet{});
    return best_;
  }

 private:
  void rec(int i, VertexSet cover) {
    if (cover.size() + matching_lower_bound(g_, cover) >= best_size_) return;
    const int n = g_.order();
    // Vertices already in the cover need no decision; one whose edges are
    // all covered would be redundant.
    while (i < n && (cover.contains(i) || (g_.row(i) - cover).empty())) ++i;
    if (i == n) {
      best_size_ = cover.size();
      best_ = cover;
      return;
    }
    rec(i + 1, cover.with(i));
    // Leaving i out forces all of its neighbours in.
    rec(i + 1, cover | g_.row(i));
  }

  const Graph& g_;
  int best_size_ = 0;
  VertexSet best_;
};

class DominatingSearch {
 public:
  explicit DominatingSearch(const Graph& g) : g_(g), spread_(g.max_degree() + 1) {}

  VertexSet run() {
    best_size_ = g_.order() + 1;
    rec(0, VertexSet{}, VertexSet{});
    return best_;
  }

 private:
  void rec(int i, VertexSet d, VertexSet dominated) {
    if (d.size() >= best_size_) return;
    const VertexSet open = g_.vertices() - dominated;
    if (open.empty()) {
      best_size_ = d.size();
      best_ = d;
      return;
    }
    const int n = g_.order();
    if (i == n) return;
    const VertexSet undecided(~low_bits(i) & low_bits(n));
    for (int w : open) {
      if (!g_.row(w).with(w).intersects(undecided)) return;
    }
    if (d.size() + (open.size() + spread_ - 1) / spread_ >= best_size_) return;
    rec(i + 1, d.with(i), dominated | g_.row(i).with(i));
    rec(i + 1, d, dominated);
  }

  const Graph& g_;
  int spread_;
  int best_size_ = 0;
  VertexSet best_;
};

}  // namespace

InvariantValue alpha_k(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("alpha_k needs k >= 1");
  const VertexSet s = MaxSetSearch(g.rows(), k).run();
  const InvariantKind kind = k == 1 ? InvariantKind::alpha : k == 2 ? InvariantKind::alpha_2 : InvariantKind::alpha_k;
  return {kind, k, s.size(), s, std::nullopt};
}

InvariantValue tau(const Graph& g) {
  const VertexSet s = CoverSearch(g).run();
  return {InvariantKind::tau, 0, s.size(), s, std::nullopt};
}

InvariantValue rho(const Graph& g) {
  // Two vertices conflict when their closed neighbourhoods meet, i.e. they
  // are at distance 1 or 2.
  std::vector<VertexSet> conflicts(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    VertexSet reach = g.row(v);
    for (int u : g.row(v)) reach = reach | g.row(u);
    conflicts[v] = reach.without(v);
  }
  const VertexSet s = MaxSetSearch(conflicts, 1).run();
  return {InvariantKind::rho, 0, s.size(), s, std::nullopt};
}

InvariantValue gamma(const Graph& g) {
  const VertexSet s = DominatingSearch(g).run();
  return {InvariantKind::gamma, 0, s.size(), s, std::nullopt};
}

InvariantValue compute_invariant(const Graph& g, InvariantKind kind, int k) {
  switch (kind) {
    case InvariantKind::gamma: return gamma(g);
    case InvariantKind::gamma_sp: return gamma_sp(g);
    case InvariantKind::alpha: return alpha_k(g, 1);
    case InvariantKind::alpha_2: return alpha_k(g, 2);
    case InvariantKind::alpha_k: return alpha_k(g, k);
    case InvariantKind::tau: return tau(g);
    case InvariantKind::rho: return rho(g);
  }
  throw std::invalid_argument("unknown invariant");
}

VertexSet private_neighbours(const Graph& g, VertexSet x, int y) {
  if (y < 0 || y >= g.order()) throw std::out_of_range("vertex out of range");
  if (x.contains(y)) throw std::invalid_argument("y must lie outside X");
  const VertexSet outside = x.complement(g.order());
  const VertexSet target = VertexSet::single(y);
  VertexSet out;
  for (int v : x & g.vertices()) {
    if ((g.row(v) & outside) == target) out = out.with(v);
  }
  return out;
}

bool is_dominating(const Graph& g, VertexSet d) {
  VertexSet covered = d;
  for (int v : d) covered = covered | g.row(v);
  return g.vertices().is_subset_of(covered);
}

bool is_k_independent(const Graph& g, VertexSet s, int k) {
  for (int v : s) {
    if ((g.row(v) & s).size() > k - 1) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, VertexSet s) {
  for (int v : g.vertices() - s) {
    if (!g.row(v).is_subset_of(s)) return false;
  }
  return true;
}

bool is_two_packing(const Graph& g, VertexSet s) {
  for (int u : s) {
    for (int v : s) {
      if (u < v && g.row(u).with(u).intersects(g.row(v).with(v))) return false;
    }
  }
  return true;
}

bool certifies(const Graph& g, const InvariantValue& value) {
  if (!value.witness.is_subset_of(g.vertices()) || value.witness.size() != value.value) return false;
  switch (value.kind) {
    case InvariantKind::gamma: return is_dominating(g, value.witness);
    case InvariantKind::gamma_sp: {
      if (!value.super_witness || value.super_witness->dom_set != value.witness) return false;
      const auto& a = value.super_witness->assignment;
      if (static_cast<int>(a.size()) != g.order() - value.value) return false;
      const VertexSet outside = value.witness.complement(g.order());
      VertexSet used;
      for (auto [u, v] : a) {
        if (!outside.contains(u) || !value.witness.contains(v) || used.contains(v)) return false;
        if ((g.row(v) & outside) != VertexSet::single(u)) return false;
        used = used.with(v);
      }
      return true;
    }
    case InvariantKind::alpha:
    case InvariantKind::alpha_2:
    case InvariantKind::alpha_k: return is_k_independent(g, value.witness, value.k);
    case InvariantKind::tau: return is_vertex_cover(g, value.witness);
    case InvariantKind::rho: return is_two_packing(g, value.witness);
  }
  return false;
}

}  // namespace superdom
