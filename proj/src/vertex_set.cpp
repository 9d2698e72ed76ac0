#include "superdom/vertex_set.hpp"

namespace superdom {

bool lex_less(VertexSet a, VertexSet b) noexcept {
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  // Elements strictly above x.
  const std::uint64_t above = x == 63 ? 0 : ~low_bits(x + 1);
  if (a.contains(x)) return (b.bits_ & above) != 0;
  return (a.bits_ & above) == 0;
}

std::vector<int> VertexSet::to_vector() const {
  return {begin(), end()};
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace superdom
