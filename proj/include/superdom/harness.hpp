#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// ---- Corpora --------------------------------------------------------------

enum class CorpusFilter { all, connected, isolate_free, nonempty };

CorpusFilter parse_corpus_filter(std::string_view name);
std::string_view to_string(CorpusFilter filter);
bool passes_filter(const Graph& g, CorpusFilter filter);

/// Graph on n vertices whose edge set is given by `mask` over the edges in
/// lexicographic (u, v) order: bit b set means edge b is present.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// An indexable stream of graphs made of segments, each either the
/// exhaustive labeled enumeration for one order or an explicit list. Items
/// are addressed by raw index; filtered-out indices yield std::nullopt.
class Corpus {
 public:
  /// Largest order accepted by enumerated segments (2^21 labeled graphs).
  static constexpr int kMaxEnumerated = 7;

  Corpus() = default;
  /// All labeled graphs of order n in edge-mask ascending order.
  static Corpus enumerated(int n, CorpusFilter filter = CorpusFilter::all);
  /// Concatenation of enumerated(n) for n in [lo, hi].
  static Corpus enumerated_range(int lo, int hi, CorpusFilter filter = CorpusFilter::all);
  static Corpus from_graphs(std::vector<Graph> graphs, std::string id, CorpusFilter filter = CorpusFilter::all);

  const std::string& id() const noexcept { return id_; }
  std::uint64_t raw_size() const noexcept { return total_; }
  std::optional<Graph> item(std::uint64_t index) const;
  /// Items that pass the filter, in order. Intended for small corpora.
  std::vector<Graph> materialize() const;
  /// Number of items that pass the filter (walks the whole corpus).
  std::uint64_t count() const;

 private:
  struct Segment {
    int order = -1;  // enumerated segment when >= 0
    std::vector<Graph> graphs;
    std::uint64_t size = 0;
  };
  std::vector<Segment> segments_;
  std::uint64_t total_ = 0;
  CorpusFilter filter_ = CorpusFilter::all;
  std::string id_;
};

/// Shorthand for Corpus::enumerated.
Corpus enumerate_labeled(int n, CorpusFilter filter = CorpusFilter::all);

// ---- Theorem registry -----------------------------------------------------

enum class TheoremId {
  eq2_chain,
  thm1,
  lemma2,
  lemma3,
  thm7_family_f,
  remark_components,
  lemma_important,
  lemma_adjacent,
  thm10,
  gallai,
  thm11,
  thm12,
  thm13,
  thm_equality,
  cor_nphard_reduction,
  prop14,
  prop15,
  lemma15,
  prop17,
  lemma18,
  prop19,
  thm21,
  thm22,
  thm23,
};

std::span<const TheoremId> all_theorems();
std::string_view to_string(TheoremId id);
/// Throws std::invalid_argument on an unknown id.
TheoremId parse_theorem_id(std::string_view name);
/// One-line statement of what the check asserts.
std::string_view theorem_statement(TheoremId id);

enum class TheoremScope { single_graph, product, join, integer };
TheoremScope theorem_scope(TheoremId id);

// ---- Checks ---------------------------------------------------------------

struct Failure {
  std::vector<std::string> graphs;  // graph6, replayable with the CLI
  std::string expected;
  std::string got;
};

struct TheoremCheck {
  TheoremId id = TheoremId::thm1;
  std::string corpus;
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failure_count = 0;
  /// The first kMaxFailureRecords failures, in corpus order.
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  static constexpr std::size_t kMaxFailureRecords = 1000;
  bool passed() const noexcept { return failure_count == 0; }
};

/// Outcome of one instance of one check.
struct Outcome {
  enum class Status { absent, pass, fail, skip };
  Status status = Status::absent;
  Failure failure;

  static Outcome pass() { return {Status::pass, {}}; }
  static Outcome skip() { return {Status::skip, {}}; }
  static Outcome fail(std::vector<std::string> graphs, std::string expected, std::string got) {
    return {Status::fail, {std::move(graphs), std::move(expected), std::move(got)}};
  }
};

struct RunOptions {
  /// 1 runs the serial reference loop; more fans out with OpenMP.
  int workers = 1;
};

/// Worker count from SUPERDOM_WORKERS, else the OpenMP default.
int default_workers();

/// Evaluates `check(i)` for every i in [0, count) and merges the outcomes
/// in index order, so the result does not depend on the worker count.
void run_indexed(std::uint64_t count, const std::function<Outcome(std::uint64_t)>& check, const RunOptions& options,
                 TheoremCheck& into);

/// Single-graph checks (eq2-chain, thm1, lemma2, lemma3, thm7-familyF,
/// gallai, cor-nphard-reduction) over a corpus. Graphs outside a theorem's
/// hypotheses count as skipped. Throws std::invalid_argument for other ids.
TheoremCheck verify(TheoremId id, const Corpus& corpus, const RunOptions& options = {});

/// Set-theoretic cycle/path lemmas (lemma15, lemma18) for orders [lo, hi].
TheoremCheck verify_integer(TheoremId id, int lo, int hi, const RunOptions& options = {});

/// Applies every product/join theorem in `ids` to every pair (G, H) whose
/// product has at most `cap` vertices. Pairs over the cap are not counted.
std::vector<TheoremCheck> product_sweep(const Corpus& g_corpus, const Corpus& h_corpus,
                                        std::span<const TheoremId> ids, int cap, const RunOptions& options = {});

// Set-theoretic lemma predicates, exposed for testing.
/// Some window of C_n (indices mod n) has {i..i+4}, {i,i+2,i+3,i+4} or
/// {i,i+1,i+2,i+4} inside s.
bool cycle_has_dense_window(int n, VertexSet s);
/// P_n version: such a window with i <= n-5 (0-based), or {0,1,2} or
/// {n-3,n-2,n-1} inside s.
bool path_has_dense_window(int n, VertexSet s);

// ---- Campaign -------------------------------------------------------------

struct CampaignConfig {
  int max_n = 6;
  RunOptions run;
};

/// Runs the given theorems (all by default) over the standard corpora
/// scaled by max_n, one TheoremCheck per id in registry order.
std::vector<TheoremCheck> run_campaign(const CampaignConfig& config, std::span<const TheoremId> ids = all_theorems());

// ---- Reports --------------------------------------------------------------

enum class ReportFormat { json, csv, markdown };
ReportFormat parse_report_format(std::string_view name);

struct ReportOptions {
  bool include_timing = true;
};

std::string report(std::span<const TheoremCheck> checks, ReportFormat format, const ReportOptions& options = {});

}  // namespace superdom
