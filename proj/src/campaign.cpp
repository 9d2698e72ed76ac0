#include <algorithm>
#include <map>
#include <stdexcept>

#include "superdom/harness.hpp"

namespace superdom {

namespace {

/// Product corpora shared by a group of theorems.
struct ProductGroup {
  std::vector<TheoremId> members;
  Corpus g;
  Corpus h;
  int cap = 16;
};

std::vector<Graph> graphs_of(std::initializer_list<Graph> gs) { return gs; }

Corpus nonempty_small_plus_p4() {
  std::vector<Graph> hs = Corpus::enumerated_range(2, 3, CorpusFilter::nonempty).materialize();
  hs.push_back(make_path(4));
  return Corpus::from_graphs(std::move(hs), "labeled(n=2..3,nonempty)+P4");
}

Corpus large_gap_factors() {
  std::vector<Graph> hs;
  for (int t = 1; t <= 5; ++t) hs.push_back(disjoint_union(std::vector<Graph>(static_cast<std::size_t>(t), make_complete(2))));
  for (int t = 1; t <= 3; ++t) hs.push_back(disjoint_union(std::vector<Graph>(static_cast<std::size_t>(t), make_path(3))));
  hs.push_back(disjoint_union(std::vector<Graph>{make_complete(2), make_complete(2), make_path(3)}));
  hs.push_back(disjoint_union(std::vector<Graph>{make_complete(2), make_complete(2), make_complete(2), make_path(3)}));
  return Corpus::from_graphs(std::move(hs), "{tK2 t<=5, tP3 t<=3, 2K2+P3, 3K2+P3}");
}

std::vector<ProductGroup> product_groups(int max_n) {
  const int small = std::min(4, max_n);
  std::vector<ProductGroup> groups;
  groups.push_back({{TheoremId::remark_components}, Corpus::enumerated_range(1, small),
                    Corpus::enumerated_range(2, 3, CorpusFilter::nonempty), 12});
  groups.push_back({{TheoremId::lemma_important, TheoremId::lemma_adjacent, TheoremId::thm10, TheoremId::thm11,
                     TheoremId::thm12},
                    Corpus::enumerated_range(2, small, CorpusFilter::connected),
                    Corpus::enumerated_range(2, small, CorpusFilter::nonempty),
                    16});
  groups.push_back({{TheoremId::thm13},
                    Corpus::enumerated_range(2, small, CorpusFilter::connected),
                    Corpus::from_graphs(graphs_of({make_empty(2), make_empty(3), make_empty(4)}), "{N2,N3,N4}"),
                    16});
  groups.push_back({{TheoremId::thm_equality}, Corpus::enumerated_range(1, std::min(3, max_n)), large_gap_factors(), 24});
  groups.push_back({{TheoremId::prop14},
                    Corpus::from_graphs(graphs_of({make_complete(2), make_complete(3), make_complete(4)}), "{K2,K3,K4}"),
                    Corpus::enumerated_range(2, 4),
                    16});
  groups.push_back({{TheoremId::prop15},
                    Corpus::from_graphs(graphs_of({make_complete_bipartite(1, 2), make_complete_bipartite(1, 3),
                                                   make_complete_bipartite(2, 2), make_complete_bipartite(2, 3),
                                                   make_complete_bipartite(3, 3)}),
                                        "{K1,2,K1,3,K2,2,K2,3,K3,3}"),
                    Corpus::enumerated_range(2, 3, CorpusFilter::nonempty),
                    18});
  groups.push_back({{TheoremId::prop17},
                    Corpus::from_graphs(graphs_of({make_cycle(4), make_cycle(5), make_cycle(6)}), "{C4,C5,C6}"),
                    nonempty_small_plus_p4(),
                    24});
  groups.push_back({{TheoremId::prop19},
                    Corpus::from_graphs(graphs_of({make_path(2), make_path(3), make_path(4), make_path(5)}),
                                        "{P2,P3,P4,P5}"),
                    nonempty_small_plus_p4(),
                    24});
  groups.push_back({{TheoremId::thm21, TheoremId::thm22, TheoremId::thm23},
                    Corpus::enumerated_range(1, small),
                    Corpus::enumerated_range(1, small),
                    8});
  return groups;
}

Corpus single_corpus(TheoremId id, int max_n) {
  switch (id) {
    case TheoremId::eq2_chain: return Corpus::enumerated_range(2, max_n, CorpusFilter::isolate_free);
    case TheoremId::thm1: return Corpus::enumerated_range(1, max_n);
    case TheoremId::lemma2: return Corpus::enumerated_range(1, max_n, CorpusFilter::connected);
    case TheoremId::lemma3: return Corpus::enumerated_range(1, max_n, CorpusFilter::connected);
    case TheoremId::thm7_family_f: return Corpus::enumerated_range(2, max_n, CorpusFilter::connected);
    case TheoremId::gallai: return Corpus::enumerated_range(0, max_n);
    case TheoremId::cor_nphard_reduction:
      return Corpus::enumerated_range(1, std::min(4, max_n), CorpusFilter::connected);
    default: break;
  }
  throw std::invalid_argument("no single-graph corpus for " + std::string(to_string(id)));
}

}  // namespace

std::vector<TheoremCheck> run_campaign(const CampaignConfig& config, std::span<const TheoremId> ids) {
  const int max_n = config.max_n;
  if (max_n < 1 || max_n > Corpus::kMaxEnumerated) {
    throw std::invalid_argument("max-n must be in 1.." + std::to_string(Corpus::kMaxEnumerated));
  }
  std::map<TheoremId, TheoremCheck> done;
  std::vector<TheoremId> pending_products;
  for (TheoremId id : ids) {
    if (done.contains(id)) continue;
    switch (theorem_scope(id)) {
      case TheoremScope::single_graph: done.emplace(id, verify(id, single_corpus(id, max_n), config.run)); break;
      case TheoremScope::integer:
        done.emplace(id, id == TheoremId::lemma15 ? verify_integer(id, 5, 12, config.run)
                                                  : verify_integer(id, 4, 12, config.run));
        break;
      case TheoremScope::product:
      case TheoremScope::join: pending_products.push_back(id); break;
    }
  }
  for (ProductGroup& group : product_groups(max_n)) {
    std::vector<TheoremId> wanted;
    for (TheoremId id : group.members) {
      if (std::find(pending_products.begin(), pending_products.end(), id) != pending_products.end()) {
        wanted.push_back(id);
      }
    }
    if (wanted.empty()) continue;
    for (TheoremCheck& c : product_sweep(group.g, group.h, wanted, group.cap, config.run)) {
      done.emplace(c.id, std::move(c));
    }
  }
  std::vector<TheoremCheck> out;
  for (TheoremId id : all_theorems()) {
    auto it = done.find(id);
    if (it != done.end()) out.push_back(std::move(it->second));
  }
  return out;
}

}  // namespace superdom
