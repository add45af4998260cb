#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace udom {

using Vertex = int;

/// Fixed-universe bitset over the vertices 0..n-1 of one graph or hypergraph.
/// Storage is a run of 64-bit words; every operation keeps bits >= n clear.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet full(int universe);
  static VertexSet from_vector(int universe, const std::vector<Vertex>& members);

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  /// Lowest member, or -1 when empty.
  Vertex first() const;
  /// Lowest member greater than v, or -1.
  Vertex next(Vertex v) const;
  /// Highest member, or -1 when empty.
  Vertex last() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  /// Low word view; only meaningful when universe() <= 64.
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
  static VertexSet from_word(int universe, std::uint64_t bits);

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace udom
