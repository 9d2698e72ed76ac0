#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>

#include "superdom/family_f.hpp"
#include "superdom/formulas.hpp"
#include "superdom/harness.hpp"
#include "superdom/io.hpp"
#include "superdom/products.hpp"
#include "superdom/solvers.hpp"

namespace superdom {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  TheoremScope scope;
  std::string_view statement;
};

constexpr std::array kTheorems = {
    TheoremInfo{TheoremId::eq2_chain, "eq2-chain", TheoremScope::single_graph,
                "no isolated vertices: 1 <= gamma <= ceil(n/2) <= gamma_sp <= n-1"},
    TheoremInfo{TheoremId::thm1, "thm1", TheoremScope::single_graph,
                "gamma_sp = 1 iff G is K1 or K2; gamma_sp = n iff G is edgeless; gamma_sp >= ceil(n/2)"},
    TheoremInfo{TheoremId::lemma2, "lemma2", TheoremScope::single_graph,
                "gamma_sp = n-1 implies no induced P4 and no induced C4"},
    TheoremInfo{TheoremId::lemma3, "lemma3", TheoremScope::single_graph,
                "connected with no universal vertex implies gamma_sp <= n-2"},
    TheoremInfo{TheoremId::thm7_family_f, "thm7-familyF", TheoremScope::single_graph,
                "connected, n >= 2: gamma_sp = n-1 iff G belongs to the layered clique/companion family F"},
    TheoremInfo{TheoremId::remark_components, "remark-components", TheoremScope::product,
                "components of G o H follow the components of G; gamma_sp is additive over components"},
    TheoremInfo{TheoremId::lemma_important, "lemma-important", TheoremScope::product,
                "H nonempty: an optimal W of G o H keeps at least gamma_sp(H) vertices in every copy"},
    TheoremInfo{TheoremId::lemma_adjacent, "lemma-adjacent", TheoremScope::product,
                "adjacent copies that both miss W each miss exactly one vertex"},
    TheoremInfo{TheoremId::thm10, "thm10", TheoremScope::product,
                "gamma_sp(G o H) <= alpha(G)gamma_sp(H) + (n-alpha(G))n', and <= nn' - alpha_2(G) when "
                "gamma_sp(H) = n'-1, H not complete"},
    TheoremInfo{TheoremId::gallai, "gallai", TheoremScope::single_graph, "alpha(G) + tau(G) = n"},
    TheoremInfo{TheoremId::thm11, "thm11", TheoremScope::product,
                "gamma_sp(G o H) >= n gamma_sp(H), with equality iff G = K2, gamma_sp(H) = n'-1, H not complete"},
    TheoremInfo{TheoremId::thm12, "thm12", TheoremScope::product,
                "gamma_sp(G o H) <= min{n(n'-1) + gamma_sp(G), n'(n-1) + gamma_sp(H)}"},
    TheoremInfo{TheoremId::thm13, "thm13", TheoremScope::product,
                "gamma_sp(G o N_n') <= nn' - 2 rho(L(G))"},
    TheoremInfo{TheoremId::thm_equality, "thmEquality", TheoremScope::product,
                "n' - gamma_sp(H) > Delta(G) + 1 implies gamma_sp(G o H) = alpha(G)gamma_sp(H) + (n-alpha(G))n'"},
    TheoremInfo{TheoremId::cor_nphard_reduction, "cor-nphard-reduction", TheoremScope::single_graph,
                "alpha(G) = 2n - gamma_sp(G o tK2)/t with t = Delta(G) + 2"},
    TheoremInfo{TheoremId::prop14, "prop14", TheoremScope::product,
                "H not complete: gamma_sp(K_n o H) = nn'-2 or n'(n-1) + gamma_sp(H)"},
    TheoremInfo{TheoremId::prop15, "prop15", TheoremScope::product,
                "H nonempty, r <= t, t >= 2: gamma_sp(K_{r,t} o H) = t gamma_sp(H) + rn'"},
    TheoremInfo{TheoremId::lemma15, "lemma15", TheoremScope::integer,
                "every S of floor(2n/3)+1 cycle vertices contains a five-vertex window pattern"},
    TheoremInfo{TheoremId::prop17, "prop17", TheoremScope::product,
                "n >= 4: gamma_sp(C_n o H) = nn' - floor(2n/3) or floor(n/2)gamma_sp(H) + n'ceil(n/2)"},
    TheoremInfo{TheoremId::lemma18, "lemma18", TheoremScope::integer,
                "every S of ceil(2n/3)+1 path vertices contains a window pattern or an end triple"},
    TheoremInfo{TheoremId::prop19, "prop19", TheoremScope::product,
                "gamma_sp(P_n o H) = nn' - ceil(2n/3) or ceil(n/2)gamma_sp(H) + n'floor(n/2)"},
    TheoremInfo{TheoremId::thm21, "thm21", TheoremScope::join,
                "G, H neither complete nor empty: gamma_sp(G+H) = min{n+n'-2, n+gamma_sp(H), n'+gamma_sp(G)}"},
    TheoremInfo{TheoremId::thm22, "thm22", TheoremScope::join,
                "H neither complete nor empty: gamma_sp(K_n+H) = n + gamma_sp(H)"},
    TheoremInfo{TheoremId::thm23, "thm23", TheoremScope::join,
                "H neither complete nor empty: gamma_sp(N_n+H) = min{n+n'-2, n+gamma_sp(H)}"},
};

const TheoremInfo& info(TheoremId id) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown theorem id");
}

constexpr std::array<TheoremId, kTheorems.size()> make_ids() {
  std::array<TheoremId, kTheorems.size()> out{};
  for (std::size_t i = 0; i < kTheorems.size(); ++i) out[i] = kTheorems[i].id;
  return out;
}
constexpr auto kIds = make_ids();

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string str(int v) { return std::to_string(v); }

using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---- Single-graph checks ----------------------------------------------------

Outcome check_eq2_chain(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !g.isolated_vertices().empty()) return Outcome::skip();
  const int gm = gamma(g).value;
  const int sp = gamma_sp(g).value;
  const int half = ceil_div(n, 2);
  if (1 <= gm && gm <= half && half <= sp && sp <= n - 1) return Outcome::pass();
  return Outcome::fail({to_graph6(g)}, "1 <= gamma <= " + str(half) + " <= gamma_sp <= " + str(n - 1),
                       "gamma=" + str(gm) + " gamma_sp=" + str(sp));
}

Outcome check_thm1(const Graph& g) {
  const int n = g.order();
  if (n < 1) return Outcome::skip();
  const int sp = gamma_sp(g).value;
  const bool k1_or_k2 = n == 1 || (n == 2 && g.size() == 1);
  const bool ok = (sp == 1) == k1_or_k2 && (sp == n) == g.is_edgeless() && sp >= ceil_div(n, 2);
  if (ok) return Outcome::pass();
  return Outcome::fail({to_graph6(g)},
                       std::string(k1_or_k2 ? "gamma_sp = 1" : "gamma_sp != 1") +
                           (g.is_edgeless() ? ", = n" : ", != n") + ", >= " + str(ceil_div(n, 2)),
                       "gamma_sp=" + str(sp));
}

Outcome check_lemma2(const Graph& g) {
  const int n = g.order();
  if (n < 1 || gamma_sp(g).value != n - 1) return Outcome::skip();
  if (!has_induced_p4_or_c4(g)) return Outcome::pass();
  return Outcome::fail({to_graph6(g)}, "no induced P4/C4", "induced P4 or C4 present");
}

Outcome check_lemma3(const Graph& g) {
  const int n = g.order();
  if (n < 1 || !is_connected(g) || !g.universal_vertices().empty()) return Outcome::skip();
  const int sp = gamma_sp(g).value;
  if (sp <= n - 2) return Outcome::pass();
  return Outcome::fail({to_graph6(g)}, "gamma_sp <= " + str(n - 2), "gamma_sp=" + str(sp));
}

Outcome check_thm7(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return Outcome::skip();
  const bool extremal = gamma_sp(g).value == n - 1;
  const auto d = recognize_family_f(g);
  if (extremal != d.has_value()) {
    return Outcome::fail({to_graph6(g)}, extremal ? "member of F" : "not a member of F",
                         d ? "recognized" : "rejected");
  }
  if (d && !(validate_decomposition(g, *d) && satisfies_neighbourhood_laws(g, *d) &&
             !g.universal_vertices().empty() && !has_induced_p4_or_c4(g))) {
    return Outcome::fail({to_graph6(g)}, "decomposition satisfies the F laws", "law violated");
  }
  return Outcome::pass();
}

Outcome check_gallai(const Graph& g) {
  const InvariantValue a = alpha(g);
  const InvariantValue t = tau(g);
  if (a.value + t.value == g.order() && certifies(g, a) && certifies(g, t)) return Outcome::pass();
  return Outcome::fail({to_graph6(g)}, "alpha + tau = " + str(g.order()),
                       "alpha=" + str(a.value) + " tau=" + str(t.value));
}

Outcome check_reduction(const Graph& g) {
  if (g.order() < 1) return Outcome::skip();
  const int t = g.max_degree() + 2;
  if (g.order() * 2 * t > kMaxVertices) return Outcome::skip();
  const ReductionTrace tr = alpha_via_reduction(g);
  const int expected = alpha(g).value;
  if (tr.alpha == expected) return Outcome::pass();
  return Outcome::fail({to_graph6(g)}, "alpha=" + str(expected), "alpha=" + str(tr.alpha));
}

using SingleCheck = Outcome (*)(const Graph&);

SingleCheck single_check(TheoremId id) {
  switch (id) {
    case TheoremId::eq2_chain: return check_eq2_chain;
    case TheoremId::thm1: return check_thm1;
    case TheoremId::lemma2: return check_lemma2;
    case TheoremId::lemma3: return check_lemma3;
    case TheoremId::thm7_family_f: return check_thm7;
    case TheoremId::gallai: return check_gallai;
    case TheoremId::cor_nphard_reduction: return check_reduction;
    default: break;
  }
  throw std::invalid_argument("not a single-graph theorem: " + std::string(to_string(id)));
}

// ---- Product checks ---------------------------------------------------------

struct Factor {
  Graph graph;
  FactorInvariants inv;
  std::string g6;
};

/// Exact values for one (G, H) pair, shared by every theorem in a sweep.
struct PairData {
  bool lex = false;
  bool joined = false;
  int lex_value = 0;
  VertexSet lex_dom;
  int join_value = 0;
};

Outcome compare_exact(const Factor& g, const Factor& h, std::optional<int> predicted, int exact) {
  if (!predicted) return Outcome::skip();
  if (*predicted == exact) return Outcome::pass();
  return Outcome::fail({g.g6, h.g6}, "gamma_sp=" + str(*predicted), "gamma_sp=" + str(exact));
}

std::optional<int> family_value(LexFamily family, const Factor& g, const Factor& h) {
  for (const FamilyMatch& m : detect_lex_families(g.graph)) {
    if (m.family == family) return exact_lex(m, g.inv, h.inv);
  }
  return std::nullopt;
}

int component_law(const Graph& g, const Graph& h) {
  const int h_components = static_cast<int>(connected_components(h).size());
  int expected = 0;
  for (VertexSet c : connected_components(g)) expected += c.size() >= 2 ? 1 : h_components;
  return expected;
}

Outcome check_lex(TheoremId id, const Factor& g, const Factor& h, const PairData& d) {
  const int x = d.lex_value;
  const std::vector<std::string> ids{g.g6, h.g6};
  switch (id) {
    case TheoremId::remark_components: {
      const ProductGraph p = lex_product(g.graph, h.graph);
      const int got = static_cast<int>(connected_components(p.graph()).size());
      const int expected = component_law(g.graph, h.graph);
      if (got != expected) return Outcome::fail(ids, "components=" + str(expected), "components=" + str(got));
      const int unsplit = gamma_sp(p.graph(), GammaSpOptions{false}).value;
      if (unsplit != x) return Outcome::fail(ids, "unsplit gamma_sp=" + str(x), "unsplit gamma_sp=" + str(unsplit));
      return Outcome::pass();
    }
    case TheoremId::lemma_important: {
      if (h.inv.edgeless) return Outcome::skip();
      const ProductGraph p = lex_product(g.graph, h.graph);
      for (int i = 0; i < g.inv.order; ++i) {
        const int kept = project(p, d.lex_dom, i).size();
        if (kept < h.inv.gamma_sp) {
          return Outcome::fail(ids, "|W_" + str(i) + "| >= " + str(h.inv.gamma_sp), "|W_" + str(i) + "|=" + str(kept));
        }
      }
      return Outcome::pass();
    }
    case TheoremId::lemma_adjacent: {
      const ProductGraph p = lex_product(g.graph, h.graph);
      for (const Edge& e : g.graph.edges()) {
        const int mu = h.inv.order - project(p, d.lex_dom, e.u).size();
        const int mv = h.inv.order - project(p, d.lex_dom, e.v).size();
        if (mu > 0 && mv > 0 && (mu != 1 || mv != 1)) {
          return Outcome::fail(ids, "missing 1 and 1 in copies " + str(e.u) + "," + str(e.v),
                               "missing " + str(mu) + " and " + str(mv));
        }
      }
      return Outcome::pass();
    }
    case TheoremId::thm10: {
      const auto b = bound_main_upper(g.inv, h.inv);
      if (!b) return Outcome::skip();
      if (x > b->general) return Outcome::fail(ids, "<= " + str(b->general), "gamma_sp=" + str(x));
      if (b->sharper && x > *b->sharper) return Outcome::fail(ids, "<= " + str(*b->sharper), "gamma_sp=" + str(x));
      if (b->sharper && *b->sharper > b->general) {
        return Outcome::fail(ids, "sharper bound <= " + str(b->general), "sharper bound " + str(*b->sharper));
      }
      return Outcome::pass();
    }
    case TheoremId::thm11: {
      const auto lower = bound_trivial_lower(g.inv, h.inv);
      if (!lower) return Outcome::skip();
      if (x < *lower) return Outcome::fail(ids, ">= " + str(*lower), "gamma_sp=" + str(x));
      // The equality characterisation is checked for connected G only.
      if (is_connected(g.graph)) {
        const bool predicted = equality_trivial_lower(g.inv, h.inv).value_or(false);
        if (predicted != (x == *lower)) {
          return Outcome::fail(ids, predicted ? "= " + str(*lower) : "> " + str(*lower), "gamma_sp=" + str(x));
        }
      }
      return Outcome::pass();
    }
    case TheoremId::thm12: {
      const auto upper = bound_min_upper(g.inv, h.inv);
      if (!upper) return Outcome::skip();
      if (x <= *upper) return Outcome::pass();
      return Outcome::fail(ids, "<= " + str(*upper), "gamma_sp=" + str(x));
    }
    case TheoremId::thm13: {
      if (!h.inv.edgeless) return Outcome::skip();
      const auto upper = bound_empty_upper(g.inv, h.inv.order);
      if (!upper) return Outcome::skip();
      if (x <= *upper) return Outcome::pass();
      return Outcome::fail(ids, "<= " + str(*upper), "gamma_sp=" + str(x));
    }
    case TheoremId::thm_equality: return compare_exact(g, h, exact_large_gap_lex(g.inv, h.inv), x);
    case TheoremId::prop14: return compare_exact(g, h, family_value(LexFamily::complete, g, h), x);
    case TheoremId::prop15: return compare_exact(g, h, family_value(LexFamily::complete_bipartite, g, h), x);
    case TheoremId::prop17: return compare_exact(g, h, family_value(LexFamily::cycle, g, h), x);
    case TheoremId::prop19: return compare_exact(g, h, family_value(LexFamily::path, g, h), x);
    default: break;
  }
  throw std::invalid_argument("not a product theorem: " + std::string(to_string(id)));
}

Outcome check_join(TheoremId id, const Factor& g, const Factor& h, const PairData& d) {
  const JoinPrediction p = exact_join(g.inv, h.inv);
  if (p.theorem_id != to_string(id)) return Outcome::skip();
  return compare_exact(g, h, p.value, d.join_value);
}

std::vector<Factor> factors_of(const Corpus& corpus) {
  std::vector<Factor> out;
  for (Graph& g : corpus.materialize()) {
    Factor f{g, FactorInvariants::of(g), to_graph6(g)};
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::span<const TheoremId> all_theorems() { return kIds; }

std::string_view to_string(TheoremId id) { return info(id).name; }

TheoremId parse_theorem_id(std::string_view name) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.name == name) return t.id;
  }
  throw std::invalid_argument("unknown theorem id: " + std::string(name));
}

std::string_view theorem_statement(TheoremId id) { return info(id).statement; }

TheoremScope theorem_scope(TheoremId id) { return info(id).scope; }

TheoremCheck verify(TheoremId id, const Corpus& corpus, const RunOptions& options) {
  const SingleCheck check = single_check(id);
  TheoremCheck out;
  out.id = id;
  out.corpus = corpus.id();
  const auto start = Clock::now();
  run_indexed(
      corpus.raw_size(),
      [&corpus, check](std::uint64_t i) {
        const auto g = corpus.item(i);
        return g ? check(*g) : Outcome{};
      },
      options, out);
  out.elapsed_ms = ms_since(start);
  return out;
}

bool cycle_has_dense_window(int n, VertexSet s) {
  static constexpr std::array<std::array<int, 5>, 3> kPatterns = {{
      {0, 1, 2, 3, 4},
      {0, 2, 3, 4, -1},
      {0, 1, 2, 4, -1},
  }};
  for (int i = 0; i < n; ++i) {
    for (const auto& pattern : kPatterns) {
      bool inside = true;
      for (int off : pattern) {
        if (off >= 0 && !s.contains((i + off) % n)) inside = false;
      }
      if (inside) return true;
    }
  }
  return false;
}

bool path_has_dense_window(int n, VertexSet s) {
  if (n >= 3 && (VertexSet::of({0, 1, 2}).is_subset_of(s) || VertexSet::of({n - 3, n - 2, n - 1}).is_subset_of(s))) {
    return true;
  }
  for (int i = 0; i + 4 < n; ++i) {
    const VertexSet w = VertexSet::of({i, i + 2, i + 3, i + 4});
    if (w.with(i + 1).is_subset_of(s) || w.is_subset_of(s) ||
        VertexSet::of({i, i + 1, i + 2, i + 4}).is_subset_of(s)) {
      return true;
    }
  }
  return false;
}

TheoremCheck verify_integer(TheoremId id, int lo, int hi, const RunOptions& options) {
  const bool cycle = id == TheoremId::lemma15;
  if (!cycle && id != TheoremId::lemma18) {
    throw std::invalid_argument("not an integer lemma: " + std::string(to_string(id)));
  }
  if (lo < (cycle ? 3 : 1) || hi > kMaxVertices) throw std::invalid_argument("order range out of bounds");
  TheoremCheck out;
  out.id = id;
  out.corpus = std::string(cycle ? "cycles" : "paths") + "(n=" + str(lo) + ".." + str(hi) + ")";
  const auto start = Clock::now();
  run_indexed(
      static_cast<std::uint64_t>(std::max(0, hi - lo + 1)),
      [lo, cycle](std::uint64_t i) {
        const int n = lo + static_cast<int>(i);
        const int k = cycle ? (2 * n) / 3 + 1 : ceil_div(2 * n, 3) + 1;
        if (k > n) return Outcome::skip();
        const Graph host = cycle ? make_cycle(n) : make_path(n);
        // Gosper's hack over all k-subsets of {0..n-1}.
        std::uint64_t s = low_bits(k);
        const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
        while (limit == 0 || s < limit) {
          const VertexSet set(s);
          if (!(cycle ? cycle_has_dense_window(n, set) : path_has_dense_window(n, set))) {
            return Outcome::fail({to_graph6(host)}, "dense window in every " + str(k) + "-subset", set.to_string());
          }
          if (s == 0) break;
          const std::uint64_t c = s & (~s + 1);
          const std::uint64_t r = s + c;
          if (r == 0) break;
          s = (((r ^ s) >> 2) / c) | r;
        }
        return Outcome::pass();
      },
      options, out);
  out.elapsed_ms = ms_since(start);
  return out;
}

std::vector<TheoremCheck> product_sweep(const Corpus& g_corpus, const Corpus& h_corpus, std::span<const TheoremId> ids,
                                        int cap, const RunOptions& options) {
  bool want_lex = false;
  bool want_join = false;
  for (TheoremId id : ids) {
    const TheoremScope scope = theorem_scope(id);
    if (scope == TheoremScope::product) want_lex = true;
    else if (scope == TheoremScope::join) want_join = true;
    else throw std::invalid_argument("not a product or join theorem: " + std::string(to_string(id)));
  }
  cap = std::min(cap, kMaxVertices);

  const auto start = Clock::now();
  const std::vector<Factor> gs = factors_of(g_corpus);
  const std::vector<Factor> hs = factors_of(h_corpus);
  const std::uint64_t pairs = static_cast<std::uint64_t>(gs.size()) * hs.size();

  // Exact values once per pair; the index-addressed buffer keeps the result
  // independent of the worker count.
  std::vector<PairData> data(static_cast<std::size_t>(pairs));
  auto fill = [&](std::uint64_t i) {
    const Factor& g = gs[static_cast<std::size_t>(i / hs.size())];
    const Factor& h = hs[static_cast<std::size_t>(i % hs.size())];
    PairData& d = data[static_cast<std::size_t>(i)];
    if (want_lex && g.inv.order * h.inv.order <= cap) {
      const InvariantValue v = gamma_sp(lex_product(g.graph, h.graph).graph());
      d.lex = true;
      d.lex_value = v.value;
      d.lex_dom = v.witness;
    }
    if (want_join && g.inv.order + h.inv.order <= cap) {
      d.joined = true;
      d.join_value = gamma_sp(join(g.graph, h.graph).graph()).value;
    }
  };
  const auto count = static_cast<std::int64_t>(pairs);
  if (options.workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fill(static_cast<std::uint64_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(options.workers)
    for (std::int64_t i = 0; i < count; ++i) fill(static_cast<std::uint64_t>(i));
  }
  const double shared_ms = ms_since(start);

  std::vector<TheoremCheck> out;
  const std::string corpus = "G:" + g_corpus.id() + " x H:" + h_corpus.id() + " cap=" + str(cap);
  for (TheoremId id : ids) {
    TheoremCheck check;
    check.id = id;
    check.corpus = corpus;
    const bool lex = theorem_scope(id) == TheoremScope::product;
    const auto t0 = Clock::now();
    run_indexed(
        pairs,
        [&, id, lex](std::uint64_t i) {
          const Factor& g = gs[static_cast<std::size_t>(i / hs.size())];
          const Factor& h = hs[static_cast<std::size_t>(i % hs.size())];
          const PairData& d = data[static_cast<std::size_t>(i)];
          if (lex) return d.lex ? check_lex(id, g, h, d) : Outcome{};
          return d.joined ? check_join(id, g, h, d) : Outcome{};
        },
        options, check);
    check.elapsed_ms = shared_ms + ms_since(t0);
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace superdom
