#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "satgraph/canonical.hpp"
#include "satgraph/construct.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/parallel.hpp"
#include "satgraph/pattern.hpp"
#include "satgraph/saturate.hpp"

namespace satgraph {

struct SearchResult {
  int n = 0;
  CliquePattern pattern{std::vector<int>{1}};
  std::int64_t sat_value = 0;
  std::vector<std::string> extremal_canonical;  // canonical graph6, sorted, duplicate-free
  std::int64_t graphs_enumerated = 0;
  double elapsed_seconds = 0.0;
  bool exhaustive = true;
};

struct SearchOptions {
  int threads = 1;
  // Skips the saturation check for classes whose minimum degree differs from
  // p1-2. Sound only above the structural threshold, which never holds at
  // enumeration scale, so results are labeled non-exhaustive. Raises the
  // order cap to 12.
  bool assume_lemma_min_degree = false;
};

namespace detail {

// Parent rule for the augmentation tree: a graph is generated only from the
// graph obtained by deleting its canonical edge (the first edge of the
// canonically relabeled adjacency), so every isomorphism class with at least
// one edge has exactly one parent class.
inline Edge canonical_edge_pullback(const Graph& g, const CanonResult& cr) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    const VertexSet& row = g.neighbors(cr.labeling[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      if (row.contains(cr.labeling[static_cast<std::size_t>(j)]))
        return make_edge(cr.labeling[static_cast<std::size_t>(i)],
                         cr.labeling[static_cast<std::size_t>(j)]);
    }
  }
  throw Error("internal: canonical edge of an edgeless graph");
}

// Membership of e in the automorphism orbit of the canonical edge, tested via
// canonical forms of the pair-marked colorings.
inline bool in_canonical_edge_orbit(const Graph& g, const Edge& e, const Edge& canon_e) {
  if (e == canon_e) return true;
  std::vector<int> mark_e(static_cast<std::size_t>(g.order()), 0);
  mark_e[static_cast<std::size_t>(e.first)] = 1;
  mark_e[static_cast<std::size_t>(e.second)] = 1;
  std::vector<int> mark_c(static_cast<std::size_t>(g.order()), 0);
  mark_c[static_cast<std::size_t>(canon_e.first)] = 1;
  mark_c[static_cast<std::size_t>(canon_e.second)] = 1;
  return canonical_bits(g, &mark_e) == canonical_bits(g, &mark_c);
}

// Children of one parent, one representative per new isomorphism class.
// Augmenting edges are first grouped by the child's canonical form; a group
// is emitted iff one of its edges lies in the child's canonical edge orbit.
inline std::vector<Graph> augment_children(const Graph& parent) {
  struct Group {
    std::vector<std::pair<Edge, CanonResult>> members;
  };
  std::vector<Group> groups;
  std::unordered_map<std::string, std::size_t> index;
  for (const Edge& e : non_edges(parent)) {
    Graph child = with_edge(parent, e.first, e.second);
    CanonResult cr = canonical_labeling(child);
    auto [it, fresh] = index.try_emplace(cr.bits, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].members.emplace_back(e, std::move(cr));
  }
  std::vector<Graph> out;
  for (const Group& grp : groups) {
    for (const auto& [e, cr] : grp.members) {
      Graph child = with_edge(parent, e.first, e.second);
      Edge canon_e = canonical_edge_pullback(child, cr);
      if (in_canonical_edge_orbit(child, e, canon_e)) {
        out.push_back(std::move(child));
        break;
      }
    }
  }
  return out;
}

inline std::vector<Graph> expand_level(const std::vector<Graph>& frontier, int threads,
                                       const std::function<void(const Graph&)>* visitor) {
  std::vector<std::vector<Graph>> chunks(frontier.size());
  parallel_chunks(frontier.size(), threads, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i) {
      chunks[i] = augment_children(frontier[i]);
      if (visitor)
        for (const Graph& g : chunks[i]) (*visitor)(g);
    }
  });
  std::vector<Graph> next;
  for (auto& c : chunks) next.insert(next.end(), std::make_move_iterator(c.begin()),
                                     std::make_move_iterator(c.end()));
  return next;
}

}  // namespace detail

/// Calls visitor exactly once per isomorphism class of graphs on n vertices
/// with at most max_edges edges, generated by canonical augmentation. Visitor
/// calls may arrive from worker threads. Returns the number of classes.
inline std::int64_t enumerate_nonisomorphic(int n, std::int64_t max_edges,
                                            const std::function<void(const Graph&)>& visitor,
                                            int threads = 1) {
  if (n > 10) throw ArgumentError("exhaustive enumeration is limited to n <= 10");
  if (n < 0) throw ArgumentError("negative order");
  if (max_edges < 0) return 0;
  Graph root = independent(n);
  visitor(root);
  std::int64_t count = 1;
  std::vector<Graph> frontier{std::move(root)};
  const std::int64_t all_pairs = choose2(n);
  for (std::int64_t m = 1; m <= std::min(max_edges, all_pairs); ++m) {
    frontier = detail::expand_level(frontier, threads, &visitor);
    if (frontier.empty()) break;
    count += static_cast<std::int64_t>(frontier.size());
  }
  return count;
}

/// Exact sat(n, pattern) with the complete extremal set, by edge-stratified
/// exhaustive search: all classes with m edges are tested before any with
/// m+1, so the first level containing a saturated graph is the saturation
/// number and its saturated classes are exactly the extremal graphs.
inline SearchResult sat_bruteforce(int n, const CliquePattern& pat, const SearchOptions& opt = {}) {
  const int cap = opt.assume_lemma_min_degree ? 12 : 10;
  if (n > cap)
    throw ArgumentError("exhaustive search is limited to n <= " + std::to_string(cap));
  if (n < 1) throw ArgumentError("need at least one vertex");
  if (pat.total() > n)
    throw DomainError("pattern needs " + std::to_string(pat.total()) +
                      " vertices; no graph on " + std::to_string(n) +
                      " vertices can become saturated");

  auto t0 = std::chrono::steady_clock::now();
  SearchResult res;
  res.n = n;
  res.pattern = pat;
  res.exhaustive = !opt.assume_lemma_min_degree;

  const int threads = resolve_thread_count(opt.threads);
  std::vector<Graph> frontier{independent(n)};
  res.graphs_enumerated = 1;
  const std::int64_t all_pairs = choose2(n);

  for (std::int64_t m = 0;; ++m) {
    std::vector<std::vector<std::string>> hits(frontier.size());
    parallel_chunks(frontier.size(), threads, [&](std::size_t b, std::size_t e, int) {
      for (std::size_t i = b; i < e; ++i) {
        const Graph& g = frontier[i];
        if (opt.assume_lemma_min_degree && g.min_degree() != pat.smallest() - 2) continue;
        if (check_saturated(g, pat).is_saturated) hits[i].push_back(canonical_form(g));
      }
    });
    for (auto& h : hits)
      res.extremal_canonical.insert(res.extremal_canonical.end(), h.begin(), h.end());
    if (!res.extremal_canonical.empty()) {
      std::sort(res.extremal_canonical.begin(), res.extremal_canonical.end());
      res.sat_value = m;
      break;
    }
    if (m == all_pairs)
      throw DomainError("no saturated graph exists on " + std::to_string(n) +
                        " vertices for pattern [" + pat.to_string() + "]");
    frontier = detail::expand_level(frontier, threads, nullptr);
    res.graphs_enumerated += static_cast<std::int64_t>(frontier.size());
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Convenience projection of sat_bruteforce.
inline std::vector<std::string> extremal_graphs(int n, const CliquePattern& pat,
                                                const SearchOptions& opt = {}) {
  return sat_bruteforce(n, pat, opt).extremal_canonical;
}

struct UniquenessReport {
  bool unique_match = false;
  std::vector<std::string> extra;    // extremal classes other than the construction
  std::vector<std::string> missing;  // construction form, when not extremal
  SearchResult search;
};

/// True iff the extremal set is exactly the canonical form of H(n; pattern).
inline UniquenessReport verify_uniqueness(int n, const CliquePattern& pat,
                                          const SearchOptions& opt = {}) {
  UniquenessReport rep;
  std::string target = canonical_form(build_h(n, pat));
  rep.search = sat_bruteforce(n, pat, opt);
  bool seen = false;
  for (const auto& s : rep.search.extremal_canonical) {
    if (s == target)
      seen = true;
    else
      rep.extra.push_back(s);
  }
  if (!seen) rep.missing.push_back(target);
  rep.unique_match = seen && rep.extra.empty();
  return rep;
}

}  // namespace satgraph
