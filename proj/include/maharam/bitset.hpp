#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace maharam {

// Fixed-width bitset sized at construction. Backs Clopen sets; the width is
// the atom count of the ambient space, at most 2^15.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  void flip() {
    for (auto& w : words_) w = ~w;
    trim();
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }

  bool operator==(const Bitset& o) const = default;

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return nbits_;
  }

  std::size_t hash() const {
    std::size_t h = nbits_;
    for (auto w : words_) h = h * 1099511628211ull + w;
    return h;
  }

  // Nibble-per-character hex, lowest atom first within each nibble.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve((nbits_ + 3) / 4);
    for (std::size_t i = 0; i < nbits_; i += 4) {
      unsigned nib = 0;
      for (unsigned j = 0; j < 4 && i + j < nbits_; ++j)
        if (test(i + j)) nib |= 1u << j;
      out.push_back(digits[nib]);
    }
    return out;
  }

private:
  void trim() {
    if (nbits_ % 64) words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace maharam
