#include "superdom/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace superdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw FormatError("graph6 byte out of range: " + std::to_string(static_cast<unsigned char>(c)));
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("empty graph6 string");
  if (text.front() == ':' || text.front() == ';' || text.front() == '&') {
    throw FormatError("sparse6/digraph6 input is not supported");
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw FormatError("graph6 orders above 258047 are not supported");
  } else {
    if (text.size() < 4) throw FormatError("truncated graph6 size header");
    n = (static_cast<long>(sextet(text[1])) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n < 63) throw FormatError("non-canonical graph6 size header");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds the vertex cap");
  }

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != expected) {
    throw FormatError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(expected));
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw FormatError("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.row(i).contains(j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> nums;
    std::string tok;
    while (fields >> tok) {
      long value = 0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0) {
        throw FormatError("bad edge-list token: " + tok);
      }
      nums.push_back(value);
    }
    if (!nums.empty()) lines.push_back(std::move(nums));
  }

  long n = -1;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].size() == 1) {
    n = lines[0][0];
    first = 1;
  }
  std::vector<Edge> edges;
  long top = -1;
  for (std::size_t i = first; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw FormatError("edge-list line must hold exactly two vertices");
    long u = lines[i][0];
    long v = lines[i][1];
    if (u == v) throw FormatError("edge-list loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (v >= kMaxVertices) throw CapacityError("edge-list vertex exceeds the cap");
    top = std::max(top, v);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (n < 0) n = top + 1;
  if (top >= n) throw FormatError("edge endpoint exceeds the declared vertex count");
  if (n > kMaxVertices) throw CapacityError("edge-list vertex count exceeds the cap");
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph load_graph(const std::string& spec) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(spec, ec)) return parse_graph6(spec);

  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open " + spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  // graph6 lines never contain spaces; an edge list always does (or is a
  // bare count line).
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const bool numeric_only = t.find_first_not_of("0123456789") == std::string_view::npos;
    if (t.starts_with(kHeader) || (t.find(' ') == std::string_view::npos && !numeric_only)) {
      return parse_graph6(t);
    }
    break;
  }
  return parse_edge_list(text);
}

}  // namespace superdom
