#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "polymux/errors.hpp"

namespace polymux {

// A face identified by its vertex indices, stored as a 64-bit mask.
// Vertex labels are 0-based and everything in this library stays far below
// 64 vertices, so one word buys constant-time set algebra.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  VertexSet() = default;
  static VertexSet from_raw(std::uint64_t bits) { VertexSet s; s.bits_ = bits; return s; }

  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static VertexSet from_indices(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  // {0, 1, ..., count-1}
  static VertexSet full(int count) {
    assert(count >= 0 && count <= kMaxVertices);
    if (count == 0) return VertexSet();
    return from_raw(count == 64 ? ~0ULL : ((1ULL << count) - 1));
  }

  // {lo, ..., hi}; empty when hi < lo.
  static VertexSet range(int lo, int hi) {
    VertexSet s;
    for (int v = lo; v <= hi; ++v) s.add(v);
    return s;
  }

  void add(int v) {
    if (v < 0 || v >= kMaxVertices) throw BadParams("vertex index out of range: " + std::to_string(v));
    bits_ |= (1ULL << v);
  }
  void remove(int v) { bits_ &= ~(1ULL << static_cast<unsigned>(v)); }
  bool contains(int v) const { return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1ULL); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool subset_of(const VertexSet& o) const { return (bits_ & o.bits_) == bits_; }
  bool proper_subset_of(const VertexSet& o) const { return subset_of(o) && bits_ != o.bits_; }

  VertexSet operator&(const VertexSet& o) const { return from_raw(bits_ & o.bits_); }
  VertexSet operator|(const VertexSet& o) const { return from_raw(bits_ | o.bits_); }
  VertexSet minus(const VertexSet& o) const { return from_raw(bits_ & ~o.bits_); }

  bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const VertexSet& o) const { return bits_ != o.bits_; }

  std::uint64_t raw() const { return bits_; }

  int min() const { assert(bits_); return std::countr_zero(bits_); }
  int max() const { assert(bits_); return 63 - std::countl_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "0134" style label; only valid while every vertex is a single digit.
  std::string to_digits() const {
    std::string out;
    for (int v : to_vector()) {
      assert(v <= 9);
      out.push_back(static_cast<char>('0' + v));
    }
    return out;
  }

  // Iteration over members in ascending order.
  class iterator {
   public:
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() { bits_ &= bits_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending vertex lists.  Entries below the
// lowest differing vertex v are shared; whichever side owns v either wins
// (the other list continues with something larger) or loses (the other
// list stops, i.e. is a proper prefix).
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  std::uint64_t diff = a.raw() ^ b.raw();
  if (diff == 0) return false;
  int v = std::countr_zero(diff);
  std::uint64_t a_above = (a.raw() >> v) >> 1;
  std::uint64_t b_above = (b.raw() >> v) >> 1;
  if ((a.raw() >> v) & 1ULL) return b_above != 0;
  return a_above == 0;
}

// Cardinality first, then lexicographic; the order faces are listed in.
inline bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace polymux
