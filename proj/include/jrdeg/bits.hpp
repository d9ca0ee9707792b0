#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace jrdeg {

// Fixed-size dynamic bitset. All sizes are decided at construction; the fused
// count helpers exist because the enumeration hot paths live on |a & b| and
// |a & ~b| queries.
struct Bits {
  int nbits = 0;
  std::vector<std::uint64_t> w;

  Bits() = default;
  explicit Bits(int n) : nbits(n), w((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w.begin(), w.end(), 0); }
  void fill_all() {
    std::fill(w.begin(), w.end(), ~std::uint64_t{0});
    trim();
  }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w)
      if (x) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  // this &= ~o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  static int and_count(const Bits& a, const Bits& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & b.w[i]);
    return c;
  }
  static int andnot_count(const Bits& a, const Bits& b) {  // |a & ~b|
    int c = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i) c += std::popcount(a.w[i] & ~b.w[i]);
    return c;
  }
  static void and_into(const Bits& a, const Bits& b, Bits& out) {
    for (std::size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
  }

  template <class F>
  void for_each(F f) const {  // ascending bit index
    for (std::size_t wi = 0; wi < w.size(); ++wi) {
      std::uint64_t x = w[wi];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(wi * 64) + b);
        x &= x - 1;
      }
    }
  }

  bool operator==(const Bits&) const = default;

 private:
  void trim() {
    if (nbits % 64 != 0 && !w.empty())
      w.back() &= (std::uint64_t{1} << (nbits % 64)) - 1;
  }
};

}  // namespace jrdeg
