#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "satgraph/canonical.hpp"
#include "satgraph/construct.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/saturate.hpp"

namespace satgraph {

struct HuntResult {
  std::string best_graph;       // canonical graph6 of the best verified saturated graph
  std::int64_t best_edges = 0;
  std::int64_t target_edges = 0;  // h_edge_count(n, pattern)
  std::int64_t iterations = 0;
  std::uint64_t seed = 0;

  bool beats_construction() const { return best_edges < target_edges; }
};

namespace detail {

// splitmix64; the draw sequence is pinned by the seed alone, independent of
// platform or standard-library distribution internals.
class HuntRng {
 public:
  explicit HuntRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Multiply-shift bounded draw; bounds here are far below 2^32.
  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(((next() >> 32) * static_cast<std::uint64_t>(bound)) >> 32);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace detail

/// Stochastic local search for pattern-saturated graphs with fewer edges than
/// the construction H(n; pattern). A move removes one random edge and then
/// repairs saturation by re-adding, for each failing non-edge certificate in
/// turn, the first edge that restores it (at most three repairs per move).
/// Candidate states are accepted by simulated annealing on the edge count and
/// every accepted state is re-certified as saturated. Never claims optimality.
inline HuntResult heuristic_hunt(int n, const CliquePattern& pat, std::int64_t budget,
                                 std::uint64_t seed) {
  if (budget < 1) throw ArgumentError("hunt budget must be at least 1");
  Graph current = build_h(n, pat);
  if (!check_saturated(current, pat).is_saturated)
    throw DomainError("H(n; " + pat.to_string() +
                      ") is not saturated at n = " + std::to_string(n) +
                      "; the hunt has no verified starting point");

  HuntResult res;
  res.seed = seed;
  res.target_edges = h_edge_count(n, pat);
  res.iterations = budget;

  Graph best = current;
  std::int64_t best_edges = current.edge_count();

  detail::HuntRng rng(seed);
  // Initial temperature accepts a +1-edge move with probability 0.3; geometric
  // cooling by 0.995 every 100 iterations.
  double temperature = -1.0 / std::log(0.3);

  for (std::int64_t iter = 0; iter < budget; ++iter) {
    if (iter > 0 && iter % 100 == 0) temperature *= 0.995;
    std::vector<Edge> edges = current.edges();
    if (edges.empty()) break;
    Edge removed = edges[rng.below(edges.size())];
    Graph candidate = without_edge(current, removed.first, removed.second);

    bool repaired = false;
    for (int attempt = 0; attempt <= 3; ++attempt) {
      SaturationReport rep = check_saturated(candidate, pat);
      if (rep.is_saturated) {
        repaired = true;
        break;
      }
      if (attempt == 3 || !rep.failing_non_edge) break;
      const Edge fail = *rep.failing_non_edge;
      // First non-edge whose addition keeps the graph free and revives the
      // failing certificate; adding the failing pair itself always qualifies.
      bool patched = false;
      for (const Edge& e : non_edges(candidate)) {
        Graph next = with_edge(candidate, e.first, e.second);
        if (e == fail) {
          candidate = std::move(next);
          patched = true;
          break;
        }
        if (contains(next, pat)) continue;
        Graph probe = with_edge(next, fail.first, fail.second);
        if (find_embedding(probe, pat, fail)) {
          candidate = std::move(next);
          patched = true;
          break;
        }
      }
      if (!patched) break;
    }
    if (!repaired) continue;

    std::int64_t delta = candidate.edge_count() - current.edge_count();
    if (delta <= 0 || rng.unit() < std::exp(-static_cast<double>(delta) / temperature)) {
      current = std::move(candidate);
      if (current.edge_count() < best_edges) {
        best = current;
        best_edges = best.edge_count();
      }
    }
  }

  if (!check_saturated(best, pat).is_saturated)
    throw Error("internal: hunt best state failed re-certification");
  res.best_graph = canonical_form(best);
  res.best_edges = best_edges;
  return res;
}

}  // namespace satgraph
