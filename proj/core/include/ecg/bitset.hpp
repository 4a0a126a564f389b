#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ecg {

// Fixed-width bitset sized at construction. Used for adjacency rows and
// alive-vertex masks, so the hot operations are and/andnot, popcount and
// iteration over set bits.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend int intersection_count(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  // First set bit at position >= from, or -1.
  int find_next(int from) const {
    if (from >= nbits_) return -1;
    size_t k = static_cast<size_t>(from) >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(k * 64 + std::countr_zero(w));
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }
  int find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bitset&) const = default;

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace ecg
