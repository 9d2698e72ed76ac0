#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace superdom {

/// Maximum vertex count supported by the single-word bitset representation.
inline constexpr int kMaxVertices = 64;

/// Bitmask with the low `n` bits set.
constexpr std::uint64_t low_bits(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A set of vertex indices in [0, 64), stored as a single machine word.
///
/// The set does not know the order of the graph it belongs to; operations
/// that need a universe (complement) take it explicitly. Ordering compares
/// the sorted element sequences lexicographically, which is the tie-breaking
/// order used for every witness the solvers return.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

  static constexpr VertexSet full(int n) noexcept { return VertexSet(low_bits(n)); }
  static constexpr VertexSet single(int v) noexcept { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) noexcept {
    VertexSet s;
    for (int v : vs) s = s.with(v);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int front() const noexcept { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const noexcept { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr VertexSet complement(int n) const noexcept { return VertexSet(~bits_ & low_bits(n)); }
  constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) noexcept = default;

  /// Lexicographic comparison of the sorted element sequences.
  friend bool lex_less(VertexSet a, VertexSet b) noexcept;

  std::vector<int> to_vector() const;
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace superdom
