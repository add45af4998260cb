#include "udom/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace udom {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) throw std::out_of_range("vertex outside universe");
    insert(v);
  }
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_vector(int universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v < 0 || v >= universe) throw std::out_of_range("vertex outside universe");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_word(int universe, std::uint64_t bits) {
  VertexSet s(universe);
  if (!s.words_.empty()) {
    s.words_[0] = universe >= 64 ? bits : bits & ((std::uint64_t{1} << universe) - 1);
  }
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

Vertex VertexSet::last() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + 63 - std::countl_zero(words_[w]));
  }
  return -1;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool lex_less(const VertexSet& a, const VertexSet& b) {
  Vertex x = a.first();
  Vertex y = b.first();
  while (x != -1 && y != -1) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == -1 && y != -1;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_item = true;
  for_each([&](Vertex v) {
    if (!first_item) os << ',';
    os << v;
    first_item = false;
  });
  os << '}';
  return os.str();
}

}  // namespace udom
