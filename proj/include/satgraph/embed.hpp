#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/pattern.hpp"

namespace satgraph {

/// An explicit embedding: parts[i] induces a clique of order pattern.sizes()[i],
/// parts are pairwise disjoint, and each part is listed ascending.
struct Witness {
  std::vector<std::vector<Vertex>> parts;

  bool valid_for(const Graph& g, const CliquePattern& pat) const {
    if (static_cast<int>(parts.size()) != pat.count()) return false;
    VertexSet used;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (static_cast<int>(parts[i].size()) != pat.sizes()[i]) return false;
      for (Vertex v : parts[i]) {
        if (v < 0 || v >= g.order() || used.contains(v)) return false;
        used.add(v);
      }
      for (std::size_t a = 0; a < parts[i].size(); ++a)
        for (std::size_t b = a + 1; b < parts[i].size(); ++b)
          if (!g.neighbors(parts[i][a]).contains(parts[i][b])) return false;
    }
    return true;
  }
};

namespace detail {

// Backtracking over the pattern's cliques, placed largest-first. Each partial
// clique draws its next vertex from the bitset intersection of the chosen
// vertices' neighborhoods, restricted to indices above the part's current
// maximum. Consecutive parts of equal size are ordered by their minimum
// vertex, which removes witnesses differing only by swapping equal cliques.
class EmbedSearch {
 public:
  EmbedSearch(const Graph& g, const CliquePattern& pat) : g_(g) {
    const auto& sizes = pat.sizes();
    slots_.resize(sizes.size());
    std::vector<int> idx(sizes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
    });
    for (std::size_t k = 0; k < idx.size(); ++k) {
      slots_[k].size = sizes[static_cast<std::size_t>(idx[k])];
      slots_[k].pattern_index = idx[k];
    }
    demand_after_.assign(slots_.size() + 1, 0);
    for (std::size_t k = slots_.size(); k-- > 0;)
      demand_after_[k] = demand_after_[k + 1] + slots_[k].size;
    chosen_.resize(slots_.size());
  }

  std::optional<Witness> find(std::optional<Edge> required) {
    avail_ = g_.vertices();
    if (!required) {
      seed_slot_ = -1;
      if (solve(0)) return harvest();
      return std::nullopt;
    }
    auto [u, v] = *required;
    if (u == v || u < 0 || v < 0 || u >= g_.order() || v >= g_.order() ||
        !g_.neighbors(u).contains(v))
      throw ArgumentError("required edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not an edge of the graph");
    // Any witness through uv has both endpoints inside one part, and equal
    // parts are interchangeable, so seeding the first slot of each distinct
    // size >= 2 is exhaustive.
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (slots_[k].size < 2) continue;
      if (k > 0 && slots_[k].size == slots_[k - 1].size) continue;
      seed_slot_ = static_cast<int>(k);
      seed_u_ = u;
      seed_v_ = v;
      if (solve(0)) return harvest();
    }
    return std::nullopt;
  }

 private:
  struct Slot {
    int size = 0;
    int pattern_index = 0;
  };

  bool solve(std::size_t slot) {
    if (slot == slots_.size()) return true;
    if (avail_.count() < demand_after_[slot]) return false;
    // Largest remaining clique needs a vertex of induced degree size-1.
    int need = slots_[slot].size - 1;
    if (need > 0) {
      bool ok = false;
      for (Vertex v = avail_.first(); v >= 0; v = avail_.next(v)) {
        if ((g_.neighbors(v) & avail_).count() >= need) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }

    auto& part = chosen_[slot];
    part.clear();
    if (static_cast<int>(slot) == seed_slot_) {
      if (!avail_.contains(seed_u_) || !avail_.contains(seed_v_)) return false;
      part.push_back(std::min(seed_u_, seed_v_));
      part.push_back(std::max(seed_u_, seed_v_));
      VertexSet cand = g_.neighbors(seed_u_) & g_.neighbors(seed_v_) & avail_;
      cand.remove(seed_u_);
      cand.remove(seed_v_);
      avail_.remove(seed_u_);
      avail_.remove(seed_v_);
      bool ok = extend(slot, cand, slots_[slot].size - 2, -1);
      if (!ok) {
        avail_.add(seed_u_);
        avail_.add(seed_v_);
        part.clear();
      }
      return ok;
    }

    // Equal-size order constraint against the previous slot (skipped around
    // the seeded slot, whose minimum vertex is fixed by the required edge).
    Vertex lo = -1;
    if (slot > 0 && slots_[slot].size == slots_[slot - 1].size &&
        static_cast<int>(slot) != seed_slot_ && static_cast<int>(slot - 1) != seed_slot_)
      lo = chosen_[slot - 1].front();

    for (Vertex v = avail_.next(lo); v >= 0; v = avail_.next(v)) {
      part.push_back(v);
      avail_.remove(v);
      VertexSet cand = g_.neighbors(v) & avail_;
      if (extend(slot, cand, slots_[slot].size - 1, v)) return true;
      avail_.add(v);
      part.pop_back();
    }
    return false;
  }

  bool extend(std::size_t slot, const VertexSet& cand, int need, Vertex last) {
    if (need == 0) {
      if (solve(slot + 1)) return true;
      return false;
    }
    if (cand.count() < need) return false;
    auto& part = chosen_[slot];
    for (Vertex w = cand.next(last); w >= 0; w = cand.next(w)) {
      part.push_back(w);
      avail_.remove(w);
      VertexSet next_cand = cand & g_.neighbors(w);
      if (extend(slot, next_cand, need - 1, w)) return true;
      avail_.add(w);
      part.pop_back();
    }
    return false;
  }

  Witness harvest() const {
    Witness w;
    w.parts.resize(slots_.size());
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      auto part = chosen_[k];
      std::sort(part.begin(), part.end());
      w.parts[static_cast<std::size_t>(slots_[k].pattern_index)] = std::move(part);
    }
    return w;
  }

  const Graph& g_;
  std::vector<Slot> slots_;
  std::vector<int> demand_after_;
  std::vector<std::vector<Vertex>> chosen_;
  VertexSet avail_;
  int seed_slot_ = -1;
  Vertex seed_u_ = -1, seed_v_ = -1;
};

}  // namespace detail

/// Searches g for pairwise-disjoint cliques of the pattern's orders. With a
/// required edge (u, v), the witness must place u and v inside one part. The
/// search is exhaustive: an empty result proves non-containment. With fixed
/// vertex numbering the returned witness is the least under the search order.
inline std::optional<Witness> find_embedding(const Graph& g, const CliquePattern& pat,
                                             std::optional<Edge> required_edge = std::nullopt) {
  auto w = detail::EmbedSearch(g, pat).find(required_edge);
  if (w && !w->valid_for(g, pat)) throw Error("internal: embedding failed validation");
  return w;
}

inline bool contains(const Graph& g, const CliquePattern& pat) {
  return find_embedding(g, pat).has_value();
}

/// Reference oracle: counts witnesses by plain exhaustive enumeration, where a
/// witness is the multiset of its parts (equal-size parts unordered). No
/// pruning beyond feasibility; refuses n > 12.
inline std::int64_t count_embeddings_small(const Graph& g, const CliquePattern& pat) {
  if (g.order() > 12) throw ArgumentError("count_embeddings_small is limited to n <= 12");
  const auto& sizes = pat.sizes();
  std::vector<std::vector<Vertex>> parts(sizes.size());
  std::int64_t total = 0;

  // Enumerates parts in pattern order; for runs of equal sizes the parts must
  // be lexicographically increasing as sorted vertex sequences.
  auto clique_ok = [&](const std::vector<Vertex>& part) {
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (!g.neighbors(part[a]).contains(part[b])) return false;
    return true;
  };

  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);

  auto rec = [&](auto&& self, std::size_t pi) -> void {
    if (pi == sizes.size()) {
      ++total;
      return;
    }
    int k = sizes[pi];
    std::vector<Vertex> part;
    auto pick = [&](auto&& pick_self, Vertex from) -> void {
      if (static_cast<int>(part.size()) == k) {
        if (!clique_ok(part)) return;
        if (pi > 0 && sizes[pi] == sizes[pi - 1] && !(parts[pi - 1] < part)) return;
        parts[pi] = part;
        for (Vertex v : part) used[static_cast<std::size_t>(v)] = true;
        self(self, pi + 1);
        for (Vertex v : part) used[static_cast<std::size_t>(v)] = false;
        return;
      }
      for (Vertex v = from; v < g.order(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        part.push_back(v);
        pick_self(pick_self, v + 1);
        part.pop_back();
      }
    };
    pick(pick, 0);
  };
  rec(rec, 0);
  return total;
}

}  // namespace satgraph
