#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "satgraph/canonical.hpp"
#include "satgraph/construct.hpp"
#include "satgraph/embed.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/hunt.hpp"
#include "satgraph/pattern.hpp"
#include "satgraph/saturate.hpp"
#include "satgraph/search.hpp"

namespace satgraph::verification {

/// One verifiable claim: a stable tag, the verdict, and a short detail line.
struct ClaimCheck {
  std::string tag;
  bool pass = false;
  std::string detail;
  double elapsed_seconds = 0.0;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// Ascending patterns with first order in firsts, every order <= max_size,
/// at most max_parts cliques. Each multiset appears exactly once.
inline std::vector<CliquePattern> pattern_grid(const std::vector<int>& firsts, int max_size,
                                               int max_parts) {
  std::vector<CliquePattern> out;
  for (int first : firsts) {
    std::vector<int> cur = {first};
    auto rec = [&](auto&& self) -> void {
      out.push_back(CliquePattern(cur));
      if (static_cast<int>(cur.size()) == max_parts) return;
      for (int s = cur.back(); s <= max_size; ++s) {
        cur.push_back(s);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
  }
  return out;
}

inline std::string pattern_tag(const CliquePattern& pat) { return "[" + pat.to_string() + "]"; }

}  // namespace detail

/// Construction/closed-form identity over the full grid: first order in
/// {2,3,4}, up to 4 cliques of order <= 11, every valid n <= max_n.
inline std::vector<ClaimCheck> check_edge_identities(int max_n = 60) {
  std::vector<ClaimCheck> out;
  for (int first : {2, 3, 4}) {
    detail::Stopwatch sw;
    auto patterns = detail::pattern_grid({first}, 11, 4);
    std::int64_t cases = 0, bad = 0;
    for (const auto& pat : patterns) {
      for (int n = minimum_build_n(pat); n <= max_n; ++n) {
        ++cases;
        if (build_h(n, pat).edge_count() != h_edge_count(n, pat)) ++bad;
      }
    }
    ClaimCheck c;
    c.tag = "edges:construction-vs-formula:p1=" + std::to_string(first);
    c.pass = (bad == 0) && (cases > 0);
    c.detail = std::to_string(cases) + " (n, pattern) cases, " + std::to_string(bad) + " mismatches";
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// Saturation of H(n; p, q, ..., q) just above the closed-form threshold.
/// max_n <= 0 lifts the cap.
inline std::vector<ClaimCheck> check_construction_saturation(int max_n = 0, int threads = 1) {
  std::vector<ClaimCheck> out;
  const std::vector<std::vector<int>> patterns = {{2, 3, 3}, {3, 4, 4}, {2, 3, 3, 3}, {3, 5, 5}};
  for (const auto& sizes : patterns) {
    CliquePattern pat(sizes);
    const auto& s = pat.sizes();
    std::int64_t thr = static_cast<std::int64_t>(s[1]) * (s[1] + 1) * (pat.count() - 1) +
                       3 * (s[0] - 2);
    for (int bump : {1, 2, 5}) {
      int n = static_cast<int>(thr) + bump;
      if (max_n > 0 && n > max_n) continue;
      detail::Stopwatch sw;
      SaturationOptions opt;
      opt.threads = threads;
      SaturationReport rep = check_saturated(build_h(n, pat), pat, opt);
      ClaimCheck c;
      c.tag = "saturated:H(" + std::to_string(n) + ";" + pat.to_string() + ")";
      c.pass = rep.is_saturated;
      c.detail = rep.is_saturated ? "free and saturated"
                                  : (rep.is_free ? "free but some non-edge fails" : "not free");
      c.elapsed_seconds = sw.seconds();
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Containment dichotomy for three cliques: H(n; p, q, r) contains the target
/// iff r <= p+q-1, and is saturated iff r >= p+q. n is the closed-form
/// threshold plus one, capped at `cap` when the threshold exceeds it.
inline std::vector<ClaimCheck> check_three_clique_dichotomy(int cap = 60, int threads = 1) {
  std::vector<ClaimCheck> out;
  const std::vector<std::array<int, 3>> triples = {{2, 3, 5}, {2, 3, 4}, {3, 4, 7},
                                                   {3, 4, 6}, {4, 5, 9}, {4, 5, 8}};
  for (auto [p, q, r] : triples) {
    CliquePattern pat({p, q, r});
    std::int64_t thr = 3ll * (p - 2) + q * (q + 1) + r * (r + 1);
    int n = static_cast<int>(thr) + 1;
    bool capped = false;
    if (n > cap) {
      n = cap;
      capped = true;
    }
    if (n < minimum_build_n(pat)) continue;  // cap below the construction minimum
    detail::Stopwatch sw;
    Graph h = build_h(n, pat);
    bool has = contains(h, pat);
    SaturationOptions opt;
    opt.threads = threads;
    bool sat = check_saturated(h, pat, opt).is_saturated;
    bool expect_sat = (r >= p + q);
    ClaimCheck c;
    c.tag = "dichotomy:H(" + std::to_string(n) + ";" + pat.to_string() + ")";
    c.pass = (has == !expect_sat) && (sat == expect_sat);
    c.detail = std::string(expect_sat ? "r >= p+q: free and saturated" : "r <= p+q-1: contains target") +
               (capped ? "; n capped at " + std::to_string(cap) + " (threshold " +
                             std::to_string(thr + 1) + ")"
                       : "");
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// Each fixture, padded with isolated vertices to order 12, is free of
/// K_2 u K_2 u K_4, and adding its probe non-edge still leaves no witness
/// through that edge.
inline std::vector<ClaimCheck> check_fixture_probes() {
  std::vector<ClaimCheck> out;
  CliquePattern pat({2, 2, 4});
  for (int k = 1; k <= 5; ++k) {
    detail::Stopwatch sw;
    Fixture fx = build_fixture(k);
    Graph padded = disjoint_union(fx.graph, independent(12 - fx.graph.order()));
    bool free_ok = is_free(padded, pat);
    Graph probed = with_edge(padded, fx.probe.first, fx.probe.second);
    bool no_witness = !find_embedding(probed, pat, fx.probe).has_value();
    ClaimCheck c;
    c.tag = "fixture:F" + std::to_string(k) + "-probe";
    c.pass = free_ok && no_witness;
    c.detail = std::string(free_ok ? "free" : "NOT free") + ", probe edge " +
               (no_witness ? "creates no witness" : "CREATES a witness");
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// Exhaustive sat values against the cited closed forms at desk scale.
inline std::vector<ClaimCheck> check_desk_scale_sat(int max_n = 9, int threads = 1) {
  struct Case {
    std::vector<int> sizes;
    int n;
    std::int64_t expect;
  };
  std::vector<Case> cases;
  for (int n = 4; n <= 9; ++n) cases.push_back({{2, 2}, n, 3});
  for (int n = 8; n <= 9; ++n) cases.push_back({{2, 2, 2}, n, 6});
  for (int n = 4; n <= 8; ++n) cases.push_back({{3}, n, n - 1});
  for (int n = 5; n <= 8; ++n) cases.push_back({{4}, n, 2ll * (n - 2) + 1});

  std::vector<ClaimCheck> out;
  for (const auto& cs : cases) {
    if (cs.n > max_n) continue;
    detail::Stopwatch sw;
    SearchOptions opt;
    opt.threads = threads;
    SearchResult r = sat_bruteforce(cs.n, CliquePattern(cs.sizes), opt);
    ClaimCheck c;
    c.tag = "sat:[" + CliquePattern(cs.sizes).to_string() + "]@" + std::to_string(cs.n);
    c.pass = (r.sat_value == cs.expect);
    c.detail = "sat = " + std::to_string(r.sat_value) + ", expected " + std::to_string(cs.expect) +
               ", " + std::to_string(r.extremal_canonical.size()) + " extremal class(es)";
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// Uniqueness of the construction among extremal graphs at desk scale.
inline std::vector<ClaimCheck> check_desk_scale_uniqueness(int max_n = 7, int threads = 1) {
  std::vector<ClaimCheck> out;
  for (const auto& sizes : {std::vector<int>{3}, std::vector<int>{2, 2}}) {
    for (int n = 5; n <= 7 && n <= max_n; ++n) {
      detail::Stopwatch sw;
      CliquePattern pat(sizes);
      SearchOptions opt;
      opt.threads = threads;
      UniquenessReport rep = verify_uniqueness(n, pat, opt);
      ClaimCheck c;
      c.tag = "unique:[" + pat.to_string() + "]@" + std::to_string(n);
      c.pass = rep.unique_match;
      c.detail = rep.unique_match
                     ? "construction is the unique extremal graph"
                     : ("extra: " + std::to_string(rep.extra.size()) +
                        ", missing: " + std::to_string(rep.missing.size()));
      c.elapsed_seconds = sw.seconds();
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Minimum-degree structural conditions (i)-(iii) on every construction from
/// the saturation grid and on every desk-scale extremal graph whose
/// parameters meet the structural threshold.
inline std::vector<ClaimCheck> check_min_degree_diagnostics(int max_n = 0, int threads = 1) {
  std::vector<ClaimCheck> out;

  const std::vector<std::vector<int>> patterns = {{2, 3, 3}, {3, 4, 4}, {2, 3, 3, 3}, {3, 5, 5}};
  for (const auto& sizes : patterns) {
    CliquePattern pat(sizes);
    const auto& s = pat.sizes();
    std::int64_t thr = static_cast<std::int64_t>(s[1]) * (s[1] + 1) * (pat.count() - 1) +
                       3 * (s[0] - 2);
    for (int bump : {1, 2, 5}) {
      int n = static_cast<int>(thr) + bump;
      if (max_n > 0 && n > max_n) continue;
      detail::Stopwatch sw;
      DeltaDiagnostics d = delta_diagnostics(build_h(n, pat), pat);
      ClaimCheck c;
      c.tag = "mindeg:H(" + std::to_string(n) + ";" + pat.to_string() + ")";
      c.pass = d.applicable && d.condition_i && d.condition_ii && d.condition_iii;
      c.detail = "delta = " + std::to_string(d.min_degree) + (d.applicable ? "" : " (not applicable)");
      c.elapsed_seconds = sw.seconds();
      out.push_back(std::move(c));
    }
  }

  // Desk-scale extremal graphs; the threshold n > 3(p1-2) + sum pi(pi+1)
  // holds for [2,2] at n >= 7, [3] at n >= 4, [4] at n >= 7.
  struct Case {
    std::vector<int> sizes;
    int n;
  };
  std::vector<Case> cases;
  for (int n = 7; n <= 9; ++n) cases.push_back({{2, 2}, n});
  for (int n = 4; n <= 8; ++n) cases.push_back({{3}, n});
  for (int n = 7; n <= 8; ++n) cases.push_back({{4}, n});
  for (const auto& cs : cases) {
    if (max_n > 0 && cs.n > max_n) continue;
    detail::Stopwatch sw;
    CliquePattern pat(cs.sizes);
    SearchOptions opt;
    opt.threads = threads;
    SearchResult r = sat_bruteforce(cs.n, pat, opt);
    bool all_ok = true;
    for (const auto& g6 : r.extremal_canonical) {
      Graph g = decode_graph6(g6);
      DeltaDiagnostics d = delta_diagnostics(g, pat);
      if (!d.applicable || !d.condition_i || !d.condition_ii || !d.condition_iii) all_ok = false;
    }
    ClaimCheck c;
    c.tag = "mindeg:extremal:[" + pat.to_string() + "]@" + std::to_string(cs.n);
    c.pass = all_ok && !r.extremal_canonical.empty();
    c.detail = std::to_string(r.extremal_canonical.size()) + " extremal class(es) checked";
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// Containment agrees with the exhaustive embedding counter on random graphs.
inline std::vector<ClaimCheck> check_embedding_oracle(int samples = 500) {
  detail::Stopwatch sw;
  std::vector<CliquePattern> patterns;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo, int left) -> void {
    if (!cur.empty()) patterns.push_back(CliquePattern(cur));
    for (int s = lo; s <= left; ++s) {
      cur.push_back(s);
      self(self, s, left - s);
      cur.pop_back();
    }
  };
  rec(rec, 1, 8);

  satgraph::detail::HuntRng rng(0x5eedu);
  std::int64_t cases = 0, bad = 0;
  for (int i = 0; i < samples; ++i) {
    int n = 1 + static_cast<int>(rng.below(8));
    std::uint64_t density = 2 + rng.below(13);  // edge probability in [2/16, 14/16]
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.below(16) < density) g = with_edge(g, u, v);
    for (const auto& pat : patterns) {
      ++cases;
      bool fast = contains(g, pat);
      bool slow = count_embeddings_small(g, pat) > 0;
      if (fast != slow) ++bad;
    }
  }
  ClaimCheck c;
  c.tag = "embed-oracle:" + std::to_string(samples) + "-graphs";
  c.pass = (bad == 0);
  c.detail = std::to_string(cases) + " (graph, pattern) cases, " + std::to_string(bad) +
             " disagreements";
  c.elapsed_seconds = sw.seconds();
  return {c};
}

/// Non-isomorphic class counts for n = 4..7.
inline std::vector<ClaimCheck> check_enumeration_counts(int max_n = 7, int threads = 1) {
  const std::int64_t expected[] = {11, 34, 156, 1044};
  std::vector<ClaimCheck> out;
  for (int n = 4; n <= 7 && n <= max_n; ++n) {
    detail::Stopwatch sw;
    std::int64_t got = enumerate_nonisomorphic(n, choose2(n), [](const Graph&) {}, threads);
    ClaimCheck c;
    c.tag = "enumerate:n=" + std::to_string(n);
    c.pass = (got == expected[n - 4]);
    c.detail = std::to_string(got) + " classes, expected " + std::to_string(expected[n - 4]);
    c.elapsed_seconds = sw.seconds();
    out.push_back(std::move(c));
  }
  return out;
}

/// The annealing hunt terminates, returns a verified saturated graph, and a
/// result below the construction's edge count is flagged, not failed.
inline std::vector<ClaimCheck> check_hunt_sanity(std::int64_t budget = 10000) {
  detail::Stopwatch sw;
  CliquePattern pat({2, 3, 3, 3});
  HuntResult r = heuristic_hunt(26, pat, budget, 42);
  bool verified = check_saturated(decode_graph6(r.best_graph), pat).is_saturated;
  ClaimCheck c;
  c.tag = "hunt:[2,3,3,3]@26";
  c.pass = verified;
  c.detail = "best = " + std::to_string(r.best_edges) + " edges vs construction " +
             std::to_string(r.target_edges) +
             (r.beats_construction() ? " ** BEATS CONSTRUCTION: candidate counterexample **" : "");
  c.elapsed_seconds = sw.seconds();
  return {c};
}

}  // namespace satgraph::verification
