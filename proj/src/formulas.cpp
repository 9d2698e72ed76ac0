#include "superdom/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "superdom/io.hpp"
#include "superdom/products.hpp"
#include "superdom/solvers.hpp"

namespace superdom {

namespace {

constexpr int floor_div(int a, int b) { return a / b; }
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool nonempty(const FactorInvariants& f) { return !f.edgeless; }

}  // namespace

FactorInvariants FactorInvariants::of(const Graph& g) {
  FactorInvariants f;
  f.order = g.order();
  f.size = g.size();
  f.gamma_sp = superdom::gamma_sp(g).value;
  f.alpha = alpha_k(g, 1).value;
  f.alpha_2 = alpha_k(g, 2).value;
  f.max_degree = g.max_degree();
  f.complete = g.order() >= 1 && g.is_complete();
  f.edgeless = g.is_edgeless();
  if (f.size >= 1 && f.size <= kMaxVertices) f.rho_line = rho(line_graph(g).graph).value;
  return f;
}

std::optional<MainUpperBound> bound_main_upper(const FactorInvariants& g, const FactorInvariants& h) {
  if (!nonempty(h)) return std::nullopt;
  const int n = g.order;
  const int np = h.order;
  MainUpperBound out;
  out.general = g.alpha * h.gamma_sp + (n - g.alpha) * np;
  if (h.gamma_sp == np - 1 && !h.complete) out.sharper = n * np - g.alpha_2;
  return out;
}

std::optional<int> bound_trivial_lower(const FactorInvariants& g, const FactorInvariants& h) {
  if (g.order < 2 || !nonempty(h)) return std::nullopt;
  return g.order * h.gamma_sp;
}

std::optional<bool> equality_trivial_lower(const FactorInvariants& g, const FactorInvariants& h) {
  if (g.order < 2 || !nonempty(h)) return std::nullopt;
  const bool g_is_k2 = g.order == 2 && g.size == 1;
  return g_is_k2 && h.gamma_sp == h.order - 1 && !h.complete;
}

std::optional<int> bound_min_upper(const FactorInvariants& g, const FactorInvariants& h) {
  if (g.order < 2 || h.order < 2) return std::nullopt;
  const int n = g.order;
  const int np = h.order;
  return std::min(n * (np - 1) + g.gamma_sp, np * (n - 1) + h.gamma_sp);
}

std::optional<int> bound_empty_upper(const FactorInvariants& g, int n_prime) {
  if (n_prime < 2 || g.size == 0 || !g.rho_line) return std::nullopt;
  return g.order * n_prime - 2 * *g.rho_line;
}

std::string_view to_string(LexFamily family) {
  switch (family) {
    case LexFamily::complete: return "complete";
    case LexFamily::complete_bipartite: return "complete_bipartite";
    case LexFamily::cycle: return "cycle";
    case LexFamily::path: return "path";
    case LexFamily::large_gap: return "large_gap";
  }
  return "?";
}

std::optional<int> exact_complete_lex(int n, const FactorInvariants& h) {
  if (n < 2 || h.complete) return std::nullopt;
  const int np = h.order;
  if (h.gamma_sp == np - 1) return n * np - 2;
  if (h.gamma_sp <= np - 2) return np * (n - 1) + h.gamma_sp;
  return std::nullopt;
}

std::optional<int> exact_bipartite_lex(int r, int t, const FactorInvariants& h) {
  if (r > t) std::swap(r, t);
  if (r < 1 || t < 2 || !nonempty(h)) return std::nullopt;
  return t * h.gamma_sp + r * h.order;
}

std::optional<int> exact_cycle_lex(int n, const FactorInvariants& h) {
  if (n < 4 || !nonempty(h)) return std::nullopt;
  const int np = h.order;
  if (h.gamma_sp == np - 1 && !h.complete) return n * np - floor_div(2 * n, 3);
  if (h.gamma_sp <= np - 2) return floor_div(n, 2) * h.gamma_sp + np * ceil_div(n, 2);
  return std::nullopt;
}

std::optional<int> exact_path_lex(int n, const FactorInvariants& h) {
  if (n < 2 || !nonempty(h)) return std::nullopt;
  const int np = h.order;
  if (h.gamma_sp == np - 1 && !h.complete) return n * np - ceil_div(2 * n, 3);
  if (h.gamma_sp <= np - 2) return ceil_div(n, 2) * h.gamma_sp + np * floor_div(n, 2);
  return std::nullopt;
}

std::optional<int> exact_large_gap_lex(const FactorInvariants& g, const FactorInvariants& h) {
  if (h.order - h.gamma_sp <= g.max_degree + 1) return std::nullopt;
  return g.alpha * h.gamma_sp + (g.order - g.alpha) * h.order;
}

std::vector<FamilyMatch> detect_lex_families(const Graph& g) {
  std::vector<FamilyMatch> out;
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return out;
  if (g.is_complete()) out.push_back({LexFamily::complete, n, 0});

  // Complete bipartite: the non-neighbourhood of vertex 0 (plus 0 itself)
  // is one side and must be independent and fully joined to the rest.
  if (n >= 2) {
    const VertexSet side = g.row(0).complement(n);
    const VertexSet other = g.vertices() - side;
    bool ok = !other.empty();
    for (int v : side) ok = ok && g.row(v) == other;
    for (int v : other) ok = ok && g.row(v) == side;
    if (ok) {
      const int r = std::min(side.size(), other.size());
      const int t = std::max(side.size(), other.size());
      out.push_back({LexFamily::complete_bipartite, r, t});
    }
  }

  const auto degrees = g.degree_sequence();
  const bool two_regular = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 2; });
  if (n >= 3 && two_regular) out.push_back({LexFamily::cycle, n, 0});
  if (n >= 1 && g.size() == n - 1 && degrees.back() <= 2) out.push_back({LexFamily::path, n, 0});
  return out;
}

std::optional<int> exact_lex(const FamilyMatch& match, const FactorInvariants& g, const FactorInvariants& h) {
  switch (match.family) {
    case LexFamily::complete: return exact_complete_lex(match.a, h);
    case LexFamily::complete_bipartite: return exact_bipartite_lex(match.a, match.b, h);
    case LexFamily::cycle: return exact_cycle_lex(match.a, h);
    case LexFamily::path: return exact_path_lex(match.a, h);
    case LexFamily::large_gap: return exact_large_gap_lex(g, h);
  }
  return std::nullopt;
}

JoinClass classify_join_factor(const FactorInvariants& f) {
  if (f.complete) return JoinClass::complete;
  if (f.edgeless) return JoinClass::empty;
  return JoinClass::general;
}

JoinPrediction exact_join(const FactorInvariants& g, const FactorInvariants& h) {
  const int n = g.order;
  const int np = h.order;
  const JoinClass cg = classify_join_factor(g);
  const JoinClass ch = classify_join_factor(h);
  using C = JoinClass;
  if (cg == C::complete && ch == C::complete) return {"join-complete", n + np - 1};  // K_{n+n'}
  if (cg == C::empty && ch == C::empty) return {"join-bipartite", n + np - 2};       // K_{n,n'}, n,n' >= 2
  if (cg == C::complete && ch == C::empty) return {"join-KN", n + np - 1};
  if (cg == C::empty && ch == C::complete) return {"join-KN", n + np - 1};
  if (cg == C::complete) return {"thm22", n + h.gamma_sp};
  if (ch == C::complete) return {"thm22", np + g.gamma_sp};
  if (cg == C::empty) return {"thm23", std::min(np + n - 2, n + h.gamma_sp)};
  if (ch == C::empty) return {"thm23", std::min(n + np - 2, np + g.gamma_sp)};
  return {"thm21", std::min({n + np - 2, n + h.gamma_sp, np + g.gamma_sp})};
}

ReductionTrace alpha_via_reduction(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("reduction needs at least one vertex");
  ReductionTrace tr;
  tr.t = g.max_degree() + 2;
  tr.product_order = g.order() * 2 * tr.t;
  if (tr.product_order > kMaxVertices) {
    throw CapacityError("reduction product has " + std::to_string(tr.product_order) + " vertices");
  }
  const std::vector<Graph> pairs(static_cast<std::size_t>(tr.t), make_complete(2));
  const Graph h = disjoint_union(pairs);
  tr.gamma_sp_h = gamma_sp(h).value;
  const ProductGraph p = lex_product(g, h);
  tr.gamma_sp_product = gamma_sp(p.graph()).value;
  if (tr.gamma_sp_product % tr.t != 0) {
    throw std::logic_error("internal inconsistency: gamma_sp(G o tK2) = " + std::to_string(tr.gamma_sp_product) +
                           " is not a multiple of t = " + std::to_string(tr.t));
  }
  tr.alpha = 2 * g.order() - tr.gamma_sp_product / tr.t;
  return tr;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "?";
}

bool BoundReport::consistent() const {
  if (!gamma_sp_exact) return true;
  const int x = *gamma_sp_exact;
  return std::all_of(applicable.begin(), applicable.end(), [x](const BoundEntry& e) {
    switch (e.kind) {
      case BoundKind::lower: return e.value <= x;
      case BoundKind::upper: return x <= e.value;
      case BoundKind::exact: return e.value == x;
    }
    return false;
  });
}

BoundReport lex_bound_report(const Graph& g, const Graph& h, bool compute_exact) {
  const FactorInvariants fg = FactorInvariants::of(g);
  const FactorInvariants fh = FactorInvariants::of(h);
  BoundReport r;
  r.graph_id = to_graph6(g) + " o " + to_graph6(h);
  r.n = fg.order;
  r.n_prime = fh.order;
  if (auto b = bound_main_upper(fg, fh)) {
    r.applicable.push_back({"thm10", BoundKind::upper, b->general});
    if (b->sharper) r.applicable.push_back({"thm10-alpha2", BoundKind::upper, *b->sharper});
  }
  if (auto b = bound_trivial_lower(fg, fh)) {
    r.applicable.push_back({"thm11", BoundKind::lower, *b});
    if (equality_trivial_lower(fg, fh).value_or(false)) r.applicable.push_back({"thm11-equality", BoundKind::exact, *b});
  }
  if (auto b = bound_min_upper(fg, fh)) r.applicable.push_back({"thm12", BoundKind::upper, *b});
  if (fh.edgeless) {
    if (auto b = bound_empty_upper(fg, fh.order)) r.applicable.push_back({"thm13", BoundKind::upper, *b});
  }
  if (auto v = exact_large_gap_lex(fg, fh)) r.applicable.push_back({"thmEquality", BoundKind::exact, *v});
  for (const FamilyMatch& m : detect_lex_families(g)) {
    if (auto v = exact_lex(m, fg, fh)) {
      const char* id = m.family == LexFamily::complete             ? "prop14"
                       : m.family == LexFamily::complete_bipartite ? "prop15"
                       : m.family == LexFamily::cycle              ? "prop17"
                                                                   : "prop19";
      r.applicable.push_back({id, BoundKind::exact, *v});
    }
  }
  if (compute_exact) r.gamma_sp_exact = gamma_sp(lex_product(g, h).graph()).value;
  return r;
}

BoundReport join_bound_report(const Graph& g, const Graph& h, bool compute_exact) {
  const FactorInvariants fg = FactorInvariants::of(g);
  const FactorInvariants fh = FactorInvariants::of(h);
  BoundReport r;
  r.graph_id = to_graph6(g) + " + " + to_graph6(h);
  r.n = fg.order;
  r.n_prime = fh.order;
  const JoinPrediction p = exact_join(fg, fh);
  r.applicable.push_back({p.theorem_id, BoundKind::exact, p.value});
  if (compute_exact) r.gamma_sp_exact = gamma_sp(join(g, h).graph()).value;
  return r;
}

}  // namespace superdom
