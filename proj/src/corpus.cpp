#include <stdexcept>

#include "superdom/harness.hpp"

namespace superdom {

CorpusFilter parse_corpus_filter(std::string_view name) {
  if (name == "all") return CorpusFilter::all;
  if (name == "connected") return CorpusFilter::connected;
  if (name == "isolate-free" || name == "isolate_free") return CorpusFilter::isolate_free;
  if (name == "nonempty") return CorpusFilter::nonempty;
  throw std::invalid_argument("unknown corpus filter: " + std::string(name));
}

std::string_view to_string(CorpusFilter filter) {
  switch (filter) {
    case CorpusFilter::all: return "all";
    case CorpusFilter::connected: return "connected";
    case CorpusFilter::isolate_free: return "isolate-free";
    case CorpusFilter::nonempty: return "nonempty";
  }
  return "?";
}

bool passes_filter(const Graph& g, CorpusFilter filter) {
  switch (filter) {
    case CorpusFilter::all: return true;
    case CorpusFilter::connected: return g.order() >= 1 && is_connected(g);
    case CorpusFilter::isolate_free: return g.isolated_vertices().empty();
    case CorpusFilter::nonempty: return !g.is_edgeless();
  }
  return false;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) {
        rows[u] = rows[u].with(v);
        rows[v] = rows[v].with(u);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

Corpus Corpus::enumerated(int n, CorpusFilter filter) {
  return enumerated_range(n, n, filter);
}

Corpus Corpus::enumerated_range(int lo, int hi, CorpusFilter filter) {
  if (lo < 0 || hi > kMaxEnumerated) {
    throw std::invalid_argument("exhaustive enumeration supports orders 0.." + std::to_string(kMaxEnumerated));
  }
  Corpus c;
  c.filter_ = filter;
  for (int n = lo; n <= hi; ++n) {
    Segment s;
    s.order = n;
    s.size = std::uint64_t{1} << (n * (n - 1) / 2);
    c.total_ += s.size;
    c.segments_.push_back(std::move(s));
  }
  c.id_ = "labeled(n=" + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) + "," +
          std::string(to_string(filter)) + ")";
  return c;
}

Corpus Corpus::from_graphs(std::vector<Graph> graphs, std::string id, CorpusFilter filter) {
  Corpus c;
  c.filter_ = filter;
  c.id_ = std::move(id);
  Segment s;
  s.size = graphs.size();
  s.graphs = std::move(graphs);
  c.total_ = s.size;
  c.segments_.push_back(std::move(s));
  return c;
}

std::optional<Graph> Corpus::item(std::uint64_t index) const {
  for (const Segment& s : segments_) {
    if (index >= s.size) {
      index -= s.size;
      continue;
    }
    Graph g = s.order >= 0 ? graph_from_edge_mask(s.order, index) : s.graphs[static_cast<std::size_t>(index)];
    if (!passes_filter(g, filter_)) return std::nullopt;
    return g;
  }
  throw std::out_of_range("corpus index out of range");
}

std::vector<Graph> Corpus::materialize() const {
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < total_; ++i) {
    if (auto g = item(i)) out.push_back(std::move(*g));
  }
  return out;
}

std::uint64_t Corpus::count() const {
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < total_; ++i) n += item(i).has_value() ? 1 : 0;
  return n;
}

Corpus enumerate_labeled(int n, CorpusFilter filter) {
  return Corpus::enumerated(n, filter);
}

}  // namespace superdom
