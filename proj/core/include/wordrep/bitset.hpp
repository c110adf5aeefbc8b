#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace wordrep {

// Dynamically sized bitset used for vertex sets and adjacency rows.
// Indices are vertex positions in the owning graph's insertion order.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  void clear() { std::fill(w_.begin(), w_.end(), uint64_t{0}); }

  void resize(int n) {
    n_ = n;
    w_.resize((n + 63) / 64, 0);
    trim();
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // Set difference: removes o's members.
  Bitset& operator-=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r(*this);
    for (auto& x : r.w_) x = ~x;
    r.trim();
    return r;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  int find_first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  // First set index strictly greater than i, or -1.
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t blk = i >> 6;
    uint64_t cur = w_[blk] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(blk * 64 + std::countr_zero(cur));
      if (++blk >= w_.size()) return -1;
      cur = w_[blk];
    }
  }

  template <typename F>
  void for_each(F f) const {
    for (int i = find_first(); i != -1; i = find_next(i)) f(i);
  }

  std::vector<int> to_indices() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  static Bitset of(int n, const std::vector<int>& idx) {
    Bitset b(n);
    for (int i : idx) b.set(i);
    return b;
  }

  static Bitset full(int n) {
    Bitset b(n);
    for (auto& x : b.w_) x = ~uint64_t{0};
    b.trim();
    return b;
  }

 private:
  void trim() {
    if (n_ & 63) {
      if (!w_.empty()) w_.back() &= (~uint64_t{0} >> (64 - (n_ & 63)));
    }
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace wordrep
