#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace imd {

/// Fixed-universe bitset over vertex ids 0..universe-1.
///
/// Storage is inline for universes up to 128 vertices, which covers every
/// host graph the detectors see in practice; larger universes spill to the
/// heap transparently.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  static constexpr int npos = -1;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  template <typename Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  void insert(int v) { words_[v / kWordBits] |= bit(v); }
  void erase(int v) { words_[v / kWordBits] &= ~bit(v); }
  bool contains(int v) const { return (words_[v / kWordBits] & bit(v)) != 0; }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  /// Smallest member, or npos.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    return npos;
  }

  /// Smallest member strictly greater than v, or npos.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return npos;
    std::size_t i = static_cast<std::size_t>(start / kWordBits);
    Word w = words_[i] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(w);
      if (++i >= words_.size()) return npos;
      w = words_[i];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

  /// Orders first by universe, then by the sorted member sequence.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    int x = a.first();
    int y = b.first();
    while (x != npos && y != npos) {
      if (x != y) return x <=> y;
      x = a.next(x);
      y = b.next(y);
    }
    if (x == npos && y == npos) return std::strong_ordering::equal;
    return x == npos ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v = first(); v != npos; v = next(v)) out.push_back(v);
    return out;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = npos;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  static Word bit(int v) { return Word{1} << (v % kWordBits); }

  void trim() {
    int rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace imd
