#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace graphreg {

// Fixed-width 128-bit vertex set. Adjacency rows use this, so graphs are
// capped at 128 vertices.
struct Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static constexpr int capacity = 128;

  static Bits128 single(int i) {
    Bits128 b;
    b.set(i);
    return b;
  }

  // Mask with bits 0..n-1 set.
  static Bits128 lower(int n) {
    Bits128 b;
    if (n >= 128) {
      b.lo = ~0ULL;
      b.hi = ~0ULL;
    } else if (n > 64) {
      b.lo = ~0ULL;
      b.hi = (1ULL << (n - 64)) - 1;
    } else if (n == 64) {
      b.lo = ~0ULL;
    } else if (n > 0) {
      b.lo = (1ULL << n) - 1;
    }
    return b;
  }

  void set(int i) {
    if (i < 64)
      lo |= 1ULL << i;
    else
      hi |= 1ULL << (i - 64);
  }
  void reset(int i) {
    if (i < 64)
      lo &= ~(1ULL << i);
    else
      hi &= ~(1ULL << (i - 64));
  }
  bool test(int i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }

  bool any() const { return (lo | hi) != 0; }
  bool none() const { return !any(); }
  int count() const { return std::popcount(lo) + std::popcount(hi); }

  // Removes and returns the lowest set bit; undefined when empty.
  int pop_lowest() {
    if (lo) {
      int i = std::countr_zero(lo);
      lo &= lo - 1;
      return i;
    }
    int i = std::countr_zero(hi);
    hi &= hi - 1;
    return 64 + i;
  }
  int lowest() const {
    return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
  }

  Bits128& operator&=(const Bits128& o) {
    lo &= o.lo;
    hi &= o.hi;
    return *this;
  }
  Bits128& operator|=(const Bits128& o) {
    lo |= o.lo;
    hi |= o.hi;
    return *this;
  }
  Bits128& operator^=(const Bits128& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend Bits128 operator&(Bits128 a, const Bits128& b) { return a &= b; }
  friend Bits128 operator|(Bits128 a, const Bits128& b) { return a |= b; }
  friend Bits128 operator^(Bits128 a, const Bits128& b) { return a ^= b; }

  // Set difference.
  Bits128 minus(const Bits128& o) const {
    Bits128 r;
    r.lo = lo & ~o.lo;
    r.hi = hi & ~o.hi;
    return r;
  }

  friend bool operator==(const Bits128&, const Bits128&) = default;
  friend std::strong_ordering operator<=>(const Bits128& a, const Bits128& b) {
    if (auto c = a.hi <=> b.hi; c != 0) return c;
    return a.lo <=> b.lo;
  }

  template <class F>
  void for_each(F&& f) const {
    Bits128 t = *this;
    while (t.any()) f(t.pop_lowest());
  }
};

}  // namespace graphreg
