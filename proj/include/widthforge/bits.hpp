#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace widthforge {

// Fixed-capacity bit set with word-level operations. Capacity is 64 * W bits.
template <std::size_t W>
class Bits {
 public:
  static constexpr int kCapacity = static_cast<int>(64 * W);

  constexpr Bits() = default;

  static Bits prefix(int n) {
    Bits b;
    for (std::size_t i = 0; i < W && n > 0; ++i, n -= 64) {
      b.words_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return b;
  }

  static Bits from_indices(const std::vector<int>& indices) {
    Bits b;
    for (int i : indices) b.set(i);
    return b;
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() { words_.fill(0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Lowest set index, or -1.
  int first() const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i]) return static_cast<int>(64 * i) + std::countr_zero(words_[i]);
    return -1;
  }

  // Lowest set index strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    std::size_t wi = static_cast<std::size_t>(i >> 6);
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return static_cast<int>(64 * wi) + std::countr_zero(w);
      if (++wi >= W) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  Bits minus(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  // Compares as sorted index lists, lexicographically.
  friend bool lex_less(const Bits& a, const Bits& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  std::uint64_t word(std::size_t i) const { return words_[i]; }
  void set_word(std::size_t i, std::uint64_t w) { words_[i] = w; }

 private:
  std::array<std::uint64_t, W> words_{};
};

inline constexpr int kMaxVertices = 256;
using VertexSet = Bits<4>;
// Subsets of a branch-decomposition ground set (vertices or edge indices).
using ElementSet = Bits<4>;
inline constexpr int kMaxElements = ElementSet::kCapacity;

}  // namespace widthforge
