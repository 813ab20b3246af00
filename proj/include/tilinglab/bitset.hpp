#pragma once

#include <cstdint>
#include <vector>

namespace tilinglab {

// Dynamic fixed-capacity bitset used for adjacency rows and vertex sets.
class Bitset {
 public:
  Bitset() : n_(0) {}
  explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set_all() {
    for (auto& w : words_) w = ~uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  // Lowest set bit at index >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int w = from >> 6;
    uint64_t cur = words_[w] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (cur) {
        int bit = (w << 6) + __builtin_ctzll(cur);
        return bit < n_ ? bit : -1;
      }
      if (++w >= static_cast<int>(words_.size())) return -1;
      cur = words_[w];
    }
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  void trim() {
    if (n_ & 63) words_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
  }

  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace tilinglab
