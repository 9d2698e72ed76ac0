#include "superdom/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace superdom {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex cap");
  }
}

}  // namespace

Graph::Graph(int n, std::string label) : label_(std::move(label)) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges, std::string label) : Graph(n, std::move(label)) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
    adj_[e.u] = adj_[e.u].with(e.v);
    adj_[e.v] = adj_[e.v].with(e.u);
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::string label) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw std::invalid_argument("row has bits beyond the vertex count");
    if (rows[v].contains(v)) throw std::invalid_argument("loops are not allowed");
    for (int u : rows[v]) {
      if (!rows[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  Graph g;
  g.adj_ = std::move(rows);
  g.label_ = std::move(label);
  return g;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }
}

VertexSet Graph::neighbours(int v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::closed_neighbours(int v) const {
  check_vertex(v);
  return adj_[v].with(v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_[v].size();
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (VertexSet r : adj_) best = std::max(best, r.size());
  return best;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (VertexSet r : adj_) twice += r.size();
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].contains(v);
}

bool Graph::is_universal(int v) const {
  check_vertex(v);
  return adj_[v].size() == order() - 1;
}

VertexSet Graph::universal_vertices() const noexcept {
  VertexSet out;
  for (int v = 0; v < order(); ++v) {
    if (adj_[v].size() == order() - 1) out = out.with(v);
  }
  return out;
}

VertexSet Graph::isolated_vertices() const noexcept {
  VertexSet out;
  for (int v = 0; v < order(); ++v) {
    if (adj_[v].empty()) out = out.with(v);
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  return universal_vertices() == vertices();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u] - VertexSet(low_bits(u + 1))) out.push_back({u, v});
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (VertexSet r : adj_) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s = s & g.vertices();
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (int v : s) index[v] = next++;
  std::vector<VertexSet> rows(static_cast<std::size_t>(next));
  for (int v : s) {
    VertexSet r;
    for (int u : g.row(v) & s) r = r.with(index[u]);
    rows[index[v]] = r;
  }
  return Graph::from_rows(std::move(rows));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | g.row(v);
      frontier = next - comp;
      comp = comp | next;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edges = g.edges();
  const int m = static_cast<int>(out.edges.size());
  if (m > kMaxVertices) {
    throw CapacityError("line graph would have " + std::to_string(m) + " vertices");
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = out.edges[i];
      const Edge& b = out.edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        rows[i] = rows[i].with(j);
        rows[j] = rows[j].with(i);
      }
    }
  }
  out.graph = Graph::from_rows(std::move(rows), g.label().empty() ? "" : "L(" + g.label() + ")");
  return out;
}

// ---- Constructors -------------------------------------------------------

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e, "P" + std::to_string(n));
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, e, "C" + std::to_string(n));
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = VertexSet::full(n).without(v);
  return Graph::from_rows(std::move(rows), "K" + std::to_string(n));
}

Graph make_empty(int n) {
  require(n >= 1, "empty graph needs at least one vertex");
  return Graph(n, "N" + std::to_string(n));
}

Graph make_complete_bipartite(int r, int t) {
  require(r >= 1 && t >= 1, "complete bipartite sides must be positive");
  const std::array<int, 2> parts{r, t};
  return make_complete_multipartite(parts).with_label("K" + std::to_string(r) + "," + std::to_string(t));
}

Graph make_complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "multipartite graph needs at least one part");
  int n = 0;
  for (int p : parts) {
    require(p >= 1, "multipartite part sizes must be positive");
    n += p;
  }
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  std::string label = "K";
  int start = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const VertexSet part(low_bits(start + parts[i]) & ~low_bits(start));
    for (int v : part) rows[v] = VertexSet::full(n) - part;
    start += parts[i];
    label += (i ? "," : "") + std::to_string(parts[i]);
  }
  return Graph::from_rows(std::move(rows), label);
}

Graph make_corona_k1(int r) {
  require(r >= 1, "corona needs at least one clique vertex");
  std::vector<Edge> e;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) e.push_back({i, j});
    e.push_back({i, r + i});
  }
  return Graph(2 * r, e, "K" + std::to_string(r) + "oK1");
}

Graph disjoint_union(std::span<const Graph> parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.order();
  check_order(n);
  std::vector<VertexSet> rows;
  rows.reserve(static_cast<std::size_t>(n));
  std::string label;
  int offset = 0;
  for (const Graph& p : parts) {
    for (VertexSet r : p.rows()) rows.emplace_back(r.bits() << offset);
    offset += p.order();
    label += (label.empty() ? "" : "u") + p.label();
  }
  return Graph::from_rows(std::move(rows), label);
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::path;
  if (name == "cycle") return GraphKind::cycle;
  if (name == "complete") return GraphKind::complete;
  if (name == "empty") return GraphKind::empty;
  if (name == "complete_bipartite") return GraphKind::complete_bipartite;
  if (name == "complete_multipartite") return GraphKind::complete_multipartite;
  if (name == "corona_K1" || name == "corona_k1") return GraphKind::corona_k1;
  throw std::invalid_argument("unknown graph kind: " + std::string(name));
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::cycle: return "cycle";
    case GraphKind::complete: return "complete";
    case GraphKind::empty: return "empty";
    case GraphKind::complete_bipartite: return "complete_bipartite";
    case GraphKind::complete_multipartite: return "complete_multipartite";
    case GraphKind::corona_k1: return "corona_K1";
  }
  return "?";
}

Graph construct(GraphKind kind, std::span<const int> sizes) {
  auto one = [&]() {
    require(sizes.size() == 1, "this kind takes exactly one size");
    return sizes[0];
  };
  switch (kind) {
    case GraphKind::path: return make_path(one());
    case GraphKind::cycle: return make_cycle(one());
    case GraphKind::complete: return make_complete(one());
    case GraphKind::empty: return make_empty(one());
    case GraphKind::complete_bipartite:
      require(sizes.size() == 2, "complete_bipartite takes two sizes");
      return make_complete_bipartite(sizes[0], sizes[1]);
    case GraphKind::complete_multipartite: return make_complete_multipartite(sizes);
    case GraphKind::corona_k1: return make_corona_k1(one());
  }
  throw std::invalid_argument("unknown graph kind");
}

}  // namespace superdom
