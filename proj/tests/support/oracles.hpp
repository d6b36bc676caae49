#pragma once

// Test-only reference oracles. Everything here works by brute force over
// vertex permutations and stays independent of the library's canonical
// labeling and search code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "satgraph/graph.hpp"

namespace oracles {

using satgraph::Graph;
using satgraph::Vertex;

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Isomorphism by trying every vertex permutation; n <= 8.
inline bool iso_by_permutation(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[static_cast<std::size_t>(u)],
                                           perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Labeled graphs on n <= 8 vertices as upper-triangle bitmasks, pair (i, j)
/// with i < j at index i*n - i*(i+1)/2 + (j-i-1).
inline int pair_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

inline std::uint64_t graph_to_mask(const Graph& g) {
  std::uint64_t mask = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) mask |= 1ull << pair_index(g.order(), i, j);
  return mask;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
  std::vector<satgraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask & (1ull << pair_index(n, i, j))) edges.push_back({i, j});
  return satgraph::from_edge_list(n, edges);
}

/// Per-permutation pair-index remap tables for mask relabeling.
inline std::vector<std::vector<int>> pair_maps(int n, const std::vector<std::vector<int>>& perms) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> maps(perms.size(), std::vector<int>(static_cast<std::size_t>(pairs)));
  for (std::size_t p = 0; p < perms.size(); ++p) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        int a = perms[p][static_cast<std::size_t>(i)];
        int b = perms[p][static_cast<std::size_t>(j)];
        if (a > b) std::swap(a, b);
        maps[p][static_cast<std::size_t>(pair_index(n, i, j))] = pair_index(n, a, b);
      }
    }
  }
  return maps;
}

/// Minimum relabeled mask over all permutations: a labeled canonical key.
inline std::uint64_t min_perm_key(std::uint64_t mask, const std::vector<std::vector<int>>& maps) {
  std::uint64_t best = ~0ull;
  for (const auto& map : maps) {
    std::uint64_t out = 0;
    std::uint64_t rest = mask;
    while (rest) {
      int idx = std::countr_zero(rest);
      rest &= rest - 1;
      out |= 1ull << map[static_cast<std::size_t>(idx)];
    }
    if (out < best) best = out;
  }
  return best;
}

/// Isomorphism class counts per edge level, derived purely from the
/// permutation oracle: breadth-first edge augmentation with min-perm-key
/// deduplication. n <= 7 keeps this comfortably fast.
inline std::vector<std::int64_t> class_counts_by_level(int n) {
  const auto perms = all_permutations(n);
  const auto maps = pair_maps(n, perms);
  const int pairs = n * (n - 1) / 2;
  std::vector<std::int64_t> counts = {1};
  std::vector<std::uint64_t> reps = {0};
  for (int m = 1; m <= pairs; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t rep : reps) {
      for (int idx = 0; idx < pairs; ++idx) {
        if (rep & (1ull << idx)) continue;
        next.insert(min_perm_key(rep | (1ull << idx), maps));
      }
    }
    reps.assign(next.begin(), next.end());
    counts.push_back(static_cast<std::int64_t>(reps.size()));
  }
  return counts;
}

/// Class count over the full partition of all labeled graphs; n <= 5.
inline std::int64_t class_count_all_labeled(int n) {
  const auto perms = all_permutations(n);
  const auto maps = pair_maps(n, perms);
  const int pairs = n * (n - 1) / 2;
  std::unordered_set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask)
    keys.insert(min_perm_key(mask, maps));
  return static_cast<std::int64_t>(keys.size());
}

}  // namespace oracles
