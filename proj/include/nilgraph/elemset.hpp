#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nilgraph {

// A subset of the elements 0..n-1 of a finite group, stored as a bit set.
// The universe size n is fixed at construction; all binary operations
// require both operands to share the same universe.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  static ElementSet of(int universe, std::initializer_list<int> elems) {
    ElementSet s(universe);
    for (int e : elems) s.set(e);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  // Smallest member, or -1 when empty.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  bool is_subset_of(const ElementSet& other) const {
    assert(n_ == other.n_);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    assert(n_ == other.n_);
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) {
    assert(n_ == other.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  ElementSet& operator|=(const ElementSet& other) {
    assert(n_ == other.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  ElementSet& subtract(const ElementSet& other) {
    assert(n_ == other.n_);
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a &= b;
    return a;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a |= b;
    return a;
  }

  ElementSet complement() const {
    ElementSet r(n_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  bool operator==(const ElementSet& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  // Lexicographic on words; used only to pick canonical representatives.
  bool operator<(const ElementSet& other) const {
    assert(n_ == other.n_);
    return words_ < other.words_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(int(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    // FNV-1a over the words; stable across platforms.
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return size_t(h ^ uint64_t(n_));
  }

  struct Hasher {
    size_t operator()(const ElementSet& s) const { return s.hash(); }
  };

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace nilgraph
