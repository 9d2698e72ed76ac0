#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

/// Malformed graph6 or edge-list input.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing
/// line-break characters are ignored. Throws FormatError on a malformed
/// header, an out-of-range byte, a length mismatch or nonzero padding, and
/// CapacityError above kMaxVertices.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

/// Edge-list text: optional first line holding only the vertex count, then
/// one "u v" pair per line, 0-based. Blank lines and '#' comments are
/// skipped. Without the count line the order is 1 + the largest endpoint.
Graph parse_edge_list(std::string_view text);
/// Emits the count line followed by the edges in lexicographic order.
std::string to_edge_list(const Graph& g);

/// Reads every graph6 line of a stream, skipping blank lines.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Loads a graph from a file (graph6 or edge list, detected by content). If
/// no file exists at `spec`, the argument itself is parsed as a graph6
/// string so that failure records replay directly.
Graph load_graph(const std::string& spec);

}  // namespace superdom
