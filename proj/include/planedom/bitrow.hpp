#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace planedom {

/// Fixed-width bit row. Incidence matrices store one BitRow per line
/// (over point ids) and per point (over line ids).
class BitRow {
public:
  BitRow() = default;
  explicit BitRow(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  int and_count(const BitRow& o) const {
    assert(nbits_ == o.nbits_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const BitRow& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  /// Index of the lowest set bit, or -1.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  /// Lowest set bit at index > i, or -1.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(wi * 64 + __builtin_ctzll(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  BitRow& operator|=(const BitRow& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  BitRow& operator&=(const BitRow& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Clears every bit that is set in o.
  BitRow& subtract(const BitRow& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend BitRow operator|(BitRow a, const BitRow& b) { return a |= b; }

  bool operator==(const BitRow& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace planedom
