#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace satgraph {

using Vertex = int;

/// Fixed-capacity vertex set backed by a 512-bit array.
///
/// Every adjacency row uses the same stride regardless of the graph order, so
/// intersections and unions are straight word-wise loops. Members are vertex
/// indices in [0, 512).
class VertexSet {
 public:
  static constexpr int kCapacity = 512;
  static constexpr int kWords = kCapacity / 64;

  VertexSet() = default;

  static VertexSet full(int n) {
    VertexSet s;
    for (int w = 0; n > 0; ++w, n -= 64) {
      s.w_[static_cast<std::size_t>(w)] = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    }
    return s;
  }

  void add(Vertex v) { w_[word(v)] |= bit(v); }
  void remove(Vertex v) { w_[word(v)] &= ~bit(v); }
  bool contains(Vertex v) const { return (w_[word(v)] & bit(v)) != 0; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return next(-1); }

  /// Smallest member strictly greater than v, or -1 when none.
  Vertex next(Vertex v) const {
    int start = v + 1;
    if (start >= kCapacity) return -1;
    std::size_t wi = static_cast<std::size_t>(start) / 64;
    std::uint64_t cur = w_[wi] & (~0ull << (start % 64));
    while (true) {
      if (cur) return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++wi >= kWords) return -1;
      cur = w_[wi];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[static_cast<std::size_t>(i)] &= o.w_[static_cast<std::size_t>(i)];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[static_cast<std::size_t>(i)] |= o.w_[static_cast<std::size_t>(i)];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[static_cast<std::size_t>(i)] &= ~o.w_[static_cast<std::size_t>(i)];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[static_cast<std::size_t>(i)] & ~o.w_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[static_cast<std::size_t>(i)] & o.w_[static_cast<std::size_t>(i)]) return true;
    return false;
  }

  /// Members in ascending order.
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  bool operator==(const VertexSet&) const = default;

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) / 64; }
  static std::uint64_t bit(Vertex v) { return 1ull << (static_cast<std::size_t>(v) % 64); }

  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace satgraph
