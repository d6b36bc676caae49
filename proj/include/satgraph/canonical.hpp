#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/graph6.hpp"

namespace satgraph {

/// Canonical labeling result. labeling[pos] is the original vertex placed at
/// canonical position pos; bits is the packed upper triangle of the relabeled
/// adjacency matrix prefixed with the order and the initial color histogram.
struct CanonResult {
  std::vector<int> labeling;
  std::string bits;
};

namespace detail {

// Iterative degree/neighborhood refinement followed by backtracking over the
// coarsest equitable partition. Discovered automorphisms prune sibling
// branches: a candidate is skipped when an automorphism fixing every vertex
// individualized so far maps it into an already-explored sibling. The
// canonical string is the lexicographic minimum over the surviving leaves,
// which is invariant under relabeling.
class CanonSearcher {
 public:
  CanonSearcher(const Graph& g, const std::vector<int>* colors) : g_(g), n_(g.order()) {
    if (colors && static_cast<int>(colors->size()) != n_)
      throw ArgumentError("color vector length does not match graph order");
    std::vector<std::pair<int, int>> by_color;
    by_color.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      by_color.emplace_back(colors ? (*colors)[static_cast<std::size_t>(v)] : 0, v);
    std::stable_sort(by_color.begin(), by_color.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, v] : by_color) {
      if (initial_cells_.empty() || color_histogram_.back().first != c) {
        initial_cells_.emplace_back();
        color_histogram_.push_back({c, 0});
      }
      initial_cells_.back().push_back(v);
      color_histogram_.back().second++;
    }
  }

  CanonResult run() {
    if (n_ > 0) {
      std::vector<std::vector<int>> cells = initial_cells_;
      refine(cells);
      explore(cells);
    } else {
      have_best_ = true;
    }
    CanonResult r;
    r.labeling = best_lab_;
    r.bits = prefix() + best_bits_;
    return r;
  }

 private:
  std::string prefix() const {
    std::string p;
    p.push_back(static_cast<char>(n_ & 0xff));
    p.push_back(static_cast<char>((n_ >> 8) & 0xff));
    for (const auto& [color, size] : color_histogram_) {
      p.push_back(static_cast<char>(color & 0xff));
      p.push_back(static_cast<char>(size & 0xff));
      p.push_back(static_cast<char>((size >> 8) & 0xff));
    }
    return p;
  }

  VertexSet cell_bits(const std::vector<int>& cell) const {
    VertexSet s;
    for (int v : cell) s.add(v);
    return s;
  }

  // Splits cells by neighbor counts against every cell until stable. Sub-cells
  // are ordered by ascending count, which is invariant under relabeling.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    std::vector<std::pair<int, int>> keyed;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        VertexSet splitter = cell_bits(cells[si]);
        for (std::size_t ti = 0; ti < cells.size(); ++ti) {
          auto& cell = cells[ti];
          if (cell.size() <= 1) continue;
          keyed.clear();
          bool uniform = true;
          for (int v : cell) {
            int c = (g_.neighbors(v) & splitter).count();
            keyed.emplace_back(c, v);
            if (c != keyed[0].first) uniform = false;
          }
          if (uniform) continue;
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          std::vector<std::vector<int>> pieces;
          int prev = keyed[0].first;
          pieces.emplace_back();
          for (const auto& [key, v] : keyed) {
            if (key != prev) {
              pieces.emplace_back();
              prev = key;
            }
            pieces.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ti));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ti),
                       std::make_move_iterator(pieces.begin()),
                       std::make_move_iterator(pieces.end()));
          changed = true;
          break;
        }
      }
    }
  }

  void explore(const std::vector<std::vector<int>>& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      process_leaf(cells);
      return;
    }
    if (homogeneous(cells)) {
      // Every completion of this node yields the same string: cells are
      // cliques or independent sets with uniform cross adjacency, so any
      // within-cell permutation is an automorphism.
      process_leaf(cells);
      for (const auto& cell : cells)
        for (std::size_t i = 1; i < cell.size(); ++i) record_transposition(cell[0], cell[i]);
      return;
    }

    std::vector<int> tried;
    std::vector<int> orbit_uf;
    std::size_t gens_at_build = static_cast<std::size_t>(-1);
    for (int v : cells[target]) {
      if (!tried.empty()) {
        if (gens_at_build != automorphisms_.size()) {
          build_orbits(orbit_uf);
          gens_at_build = automorphisms_.size();
        }
        bool skip = false;
        for (int u : tried) {
          if (find_root(orbit_uf, u) == find_root(orbit_uf, v)) {
            skip = true;
            break;
          }
        }
        if (skip) continue;
      }
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      indiv_.push_back(v);
      explore(child);
      indiv_.pop_back();
      tried.push_back(v);
    }
  }

  // Orbits under the subgroup of discovered automorphisms that fix the
  // current individualized prefix pointwise; siblings in one orbit lead to
  // identical subtrees up to relabeling.
  void build_orbits(std::vector<int>& uf) const {
    uf.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) uf[static_cast<std::size_t>(v)] = v;
    for (const auto& pi : automorphisms_) {
      bool fixes = true;
      for (int x : indiv_) {
        if (pi[static_cast<std::size_t>(x)] != x) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find_root(uf, v);
        int b = find_root(uf, pi[static_cast<std::size_t>(v)]);
        if (a != b) uf[static_cast<std::size_t>(a)] = b;
      }
    }
  }

  static int find_root(std::vector<int>& uf, int v) {
    while (uf[static_cast<std::size_t>(v)] != v) {
      uf[static_cast<std::size_t>(v)] =
          uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
      v = uf[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void process_leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> lab;
    lab.reserve(static_cast<std::size_t>(n_));
    for (const auto& cell : cells)
      for (int v : cell) lab.push_back(v);
    std::string bits = adjacency_bits(lab);

    if (have_first_) {
      if (bits == first_bits_ && lab != first_lab_) record_automorphism(first_lab_, lab);
    } else {
      first_bits_ = bits;
      first_lab_ = lab;
      have_first_ = true;
    }
    if (!have_best_ || bits < best_bits_) {
      best_bits_ = bits;
      best_lab_ = lab;
      have_best_ = true;
    } else if (bits == best_bits_ && lab != best_lab_) {
      record_automorphism(best_lab_, lab);
    }
  }

  std::string adjacency_bits(const std::vector<int>& lab) const {
    std::string out;
    out.reserve((static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) / 2 + 7) / 8);
    int acc = 0, filled = 0;
    for (int i = 0; i < n_; ++i) {
      const VertexSet& row = g_.neighbors(lab[static_cast<std::size_t>(i)]);
      for (int j = i + 1; j < n_; ++j) {
        acc = (acc << 1) | (row.contains(lab[static_cast<std::size_t>(j)]) ? 1 : 0);
        if (++filled == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
  }

  // True when every cell induces a clique or an independent set and every
  // vertex of one cell sees either all or none of every other cell.
  bool homogeneous(const std::vector<std::vector<int>>& cells) const {
    std::vector<VertexSet> bits;
    bits.reserve(cells.size());
    for (const auto& cell : cells) bits.push_back(cell_bits(cell));
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const int sz = static_cast<int>(cells[a].size());
      if (sz == 1) continue;
      int inner = (g_.neighbors(cells[a][0]) & bits[a]).count();
      if (inner != 0 && inner != sz - 1) return false;
      for (int v : cells[a])
        if ((g_.neighbors(v) & bits[a]).count() != inner) return false;
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const int szb = static_cast<int>(cells[b].size());
        int cross = (g_.neighbors(cells[a][0]) & bits[b]).count();
        if (cross != 0 && cross != szb) return false;
        for (int v : cells[a])
          if ((g_.neighbors(v) & bits[b]).count() != cross) return false;
      }
    }
    return true;
  }

  void record_transposition(int a, int b) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> pi(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) pi[static_cast<std::size_t>(v)] = v;
    pi[static_cast<std::size_t>(a)] = b;
    pi[static_cast<std::size_t>(b)] = a;
    automorphisms_.push_back(std::move(pi));
  }

  // Both labelings produce the same adjacency string, so mapping one onto the
  // other is an automorphism of g.
  void record_automorphism(const std::vector<int>& ref_lab, const std::vector<int>& lab) {
    std::vector<int> pi(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos)
      pi[static_cast<std::size_t>(ref_lab[static_cast<std::size_t>(pos)])] =
          lab[static_cast<std::size_t>(pos)];
    if (automorphisms_.size() < kMaxStoredAutomorphisms) automorphisms_.push_back(std::move(pi));
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 4096;

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> initial_cells_;
  std::vector<std::pair<int, int>> color_histogram_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<int> indiv_;
  std::string best_bits_, first_bits_;
  std::vector<int> best_lab_, first_lab_;
  bool have_best_ = false, have_first_ = false;
};

}  // namespace detail

inline CanonResult canonical_labeling(const Graph& g, const std::vector<int>* colors = nullptr) {
  return detail::CanonSearcher(g, colors).run();
}

/// Relabeling-invariant byte string; equal iff the (colored) graphs are isomorphic.
inline std::string canonical_bits(const Graph& g, const std::vector<int>* colors = nullptr) {
  return canonical_labeling(g, colors).bits;
}

/// The canonically relabeled graph itself.
inline Graph canonical_graph(const Graph& g) {
  CanonResult r = canonical_labeling(g);
  std::vector<int> perm(r.labeling.size());
  for (std::size_t pos = 0; pos < r.labeling.size(); ++pos)
    perm[static_cast<std::size_t>(r.labeling[pos])] = static_cast<int>(pos);
  return permuted(g, perm);
}

/// Canonical form as a graph6 line: encode_graph6 of the canonical relabeling.
inline std::string canonical_form(const Graph& g) { return encode_graph6(canonical_graph(g)); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (Vertex v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_bits(a) == canonical_bits(b);
}

}  // namespace satgraph
