#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "satgraph/construct.hpp"
#include "satgraph/embed.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/parallel.hpp"
#include "satgraph/pattern.hpp"

namespace satgraph {

/// Saturation verdict with certificates. Exactly one of the optional fields is
/// meaningful: a containment witness when the graph is not pattern-free, or
/// the first (lexicographic) failing non-edge when free but not saturated.
struct SaturationReport {
  CliquePattern pattern{std::vector<int>{1}};
  bool is_free = false;
  bool is_saturated = false;
  std::optional<Witness> containment_witness;
  std::optional<Edge> failing_non_edge;
  std::vector<Edge> failing_non_edges;  // census mode only
  std::int64_t non_edges_checked = 0;
};

inline bool is_free(const Graph& g, const CliquePattern& pat) { return !contains(g, pat); }

struct SaturationOptions {
  bool census = false;  // collect every failing non-edge instead of stopping at the first
  int threads = 1;
};

/// Full saturation check. Since a free graph gains a witness through uv when
/// the edge is added, each non-edge probe restricts the embedding search to
/// witnesses using that edge. Workers scan disjoint non-edge ranges; the
/// reported failing non-edge is the global lexicographic minimum, and
/// non_edges_checked equals the sequential probe count for the same verdict.
inline SaturationReport check_saturated(const Graph& g, const CliquePattern& pat,
                                        const SaturationOptions& opt = {}) {
  SaturationReport rep;
  rep.pattern = pat;
  if (auto w = find_embedding(g, pat)) {
    rep.is_free = false;
    rep.is_saturated = false;
    rep.containment_witness = std::move(w);
    return rep;
  }
  rep.is_free = true;

  const int threads = resolve_thread_count(opt.threads);
  const std::vector<Edge> missing = non_edges(g);
  auto creates_pattern = [&](const Edge& e) {
    Graph probe = with_edge(g, e.first, e.second);
    return find_embedding(probe, pat, e).has_value();
  };

  if (opt.census) {
    std::vector<std::vector<Edge>> found(static_cast<std::size_t>(threads));
    parallel_chunks(missing.size(), threads, [&](std::size_t b, std::size_t e, int worker) {
      for (std::size_t i = b; i < e; ++i)
        if (!creates_pattern(missing[i])) found[static_cast<std::size_t>(worker)].push_back(missing[i]);
    });
    for (auto& part : found)
      rep.failing_non_edges.insert(rep.failing_non_edges.end(), part.begin(), part.end());
    std::sort(rep.failing_non_edges.begin(), rep.failing_non_edges.end());
    rep.non_edges_checked = static_cast<std::int64_t>(missing.size());
    if (rep.failing_non_edges.empty()) {
      rep.is_saturated = true;
    } else {
      rep.failing_non_edge = rep.failing_non_edges.front();
    }
    return rep;
  }

  std::atomic<std::size_t> first_fail{missing.size()};
  parallel_chunks(missing.size(), threads, [&](std::size_t b, std::size_t e, int) {
    for (std::size_t i = b; i < e; ++i) {
      if (i > first_fail.load(std::memory_order_relaxed)) return;
      if (!creates_pattern(missing[i])) {
        std::size_t cur = first_fail.load(std::memory_order_relaxed);
        while (i < cur && !first_fail.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  });
  std::size_t idx = first_fail.load();
  if (idx == missing.size()) {
    rep.is_saturated = true;
    rep.non_edges_checked = static_cast<std::int64_t>(missing.size());
  } else {
    rep.is_saturated = false;
    rep.failing_non_edge = missing[idx];
    rep.non_edges_checked = static_cast<std::int64_t>(idx) + 1;
  }
  return rep;
}

/// Structural diagnostics around a minimum-degree vertex v: (i) d(v) = p1-2,
/// (ii) N(v) is contained in N(w) for every w outside N(v), and (iii) the
/// graph induced outside N(v) has at most sum_{i>=2} C(pi+1, 2) edges. The
/// flags are computed unconditionally; `applicable` records whether the
/// structural guarantee covers this graph (edge budget met and n above
/// 3(p1-2) + sum_{i>=2} pi(pi+1)).
struct DeltaDiagnostics {
  int min_degree = 0;
  Vertex min_degree_vertex = -1;
  bool condition_i = false;
  bool condition_ii = false;
  bool condition_iii = false;
  bool applicable = false;
};

inline DeltaDiagnostics delta_diagnostics(const Graph& g, const CliquePattern& pat) {
  if (g.order() < 1) throw ArgumentError("diagnostics need at least one vertex");
  if (pat.smallest() < 2) throw ArgumentError("diagnostics require every clique order >= 2");

  DeltaDiagnostics d;
  d.min_degree_vertex = g.min_degree_vertex();
  d.min_degree = g.degree(d.min_degree_vertex);

  const auto& sizes = pat.sizes();
  const int p1 = sizes[0];
  d.condition_i = (d.min_degree == p1 - 2);

  const VertexSet nv = g.neighbors(d.min_degree_vertex);
  d.condition_ii = true;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (nv.contains(w)) continue;
    if (!nv.is_subset_of(g.neighbors(w))) {
      d.condition_ii = false;
      break;
    }
  }

  std::int64_t outside_edges = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (nv.contains(u)) continue;
    for (Vertex v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v))
      if (!nv.contains(v)) ++outside_edges;
  }
  std::int64_t budget = 0;
  for (std::size_t i = 1; i < sizes.size(); ++i) budget += choose2(sizes[i] + 1);
  d.condition_iii = (outside_edges <= budget);

  std::int64_t lemma_bound = 3ll * (p1 - 2);
  for (std::size_t i = 1; i < sizes.size(); ++i)
    lemma_bound += static_cast<std::int64_t>(sizes[i]) * (sizes[i] + 1);
  bool edge_budget_ok = false;
  if (g.order() >= minimum_build_n(pat))
    edge_budget_ok = (g.edge_count() <= h_edge_count(g.order(), pat));
  d.applicable = edge_budget_ok && (g.order() > lemma_bound);
  return d;
}

}  // namespace satgraph
