#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace homreconf {

// Fixed-size bitset sized at runtime. Adjacency rows and alive-sets are the
// hot path of the dismantling loops, so subset tests must stay word-parallel.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void resize(int bits) {
    bits_ = bits;
    w_.resize((size_t)(bits + 63) / 64, 0);
    trim();
  }

  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  void set_all() {
    std::fill(w_.begin(), w_.end(), ~uint64_t(0));
    trim();
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // (a & mask) \subseteq b, no allocation. Domination checks live here.
  static bool masked_subset(const Bitset& a, const Bitset& mask, const Bitset& b) {
    assert(a.bits_ == mask.bits_ && a.bits_ == b.bits_);
    for (size_t i = 0; i < a.w_.size(); ++i)
      if (a.w_[i] & mask.w_[i] & ~b.w_[i]) return false;
    return true;
  }

  // this \subseteq other
  bool is_subset_of(const Bitset& other) const {
    assert(bits_ == other.bits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    assert(bits_ == other.bits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& o) const { return bits_ == o.bits_ && w_ == o.w_; }

  // First set bit at position >= from, or -1.
  int next(int from = 0) const {
    if (from >= bits_) return -1;
    int wi = from >> 6;
    uint64_t w = w_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) {
        int bit = (wi << 6) + __builtin_ctzll(w);
        return bit < bits_ ? bit : -1;
      }
      if (++wi >= (int)w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    if (bits_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (bits_ & 63));
  }

  int bits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace homreconf
