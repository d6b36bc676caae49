#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/graph.hpp"
#include "satgraph/pattern.hpp"

namespace satgraph {

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// Smallest n for which H(n; p1,...,pt) has a non-negative independent part.
inline int minimum_build_n(const CliquePattern& pat) { return pat.total() + pat.count() - 3; }

namespace detail {

inline void check_build(int n, const CliquePattern& pat) {
  if (!pat.all_at_least_two())
    throw ConstructionError("construction requires every clique order >= 2, got [" +
                            pat.to_string() + "]");
  if (n < minimum_build_n(pat))
    throw ConstructionError("n = " + std::to_string(n) + " below minimum " +
                            std::to_string(minimum_build_n(pat)) + " for pattern [" +
                            pat.to_string() + "]");
  if (n > VertexSet::kCapacity)
    throw CapacityError("n = " + std::to_string(n) + " exceeds capacity");
}

}  // namespace detail

/// H(n; p1,...,pt) = K_{p1-2} v (K_{p2+1} u ... u K_{pt+1} u I_{n-t+3-sum}).
/// Vertex layout: apex clique first, then the t-1 cliques in ascending size,
/// then the independent part.
inline Graph build_h(int n, const CliquePattern& pat) {
  detail::check_build(n, pat);
  const auto& sizes = pat.sizes();
  Graph middle(0);
  for (std::size_t i = 1; i < sizes.size(); ++i)
    middle = disjoint_union(middle, complete(sizes[i] + 1));
  middle = disjoint_union(middle, independent(n - pat.count() + 3 - pat.total()));
  return join(complete(sizes[0] - 2), middle);
}

/// Closed-form e(H(n; p1,...,pt)):
///   (p1-2)(n-p1+2) + C(p1-2, 2) + sum_{i>=2} C(pi+1, 2).
inline std::int64_t h_edge_count(int n, const CliquePattern& pat) {
  detail::check_build(n, pat);
  const auto& sizes = pat.sizes();
  std::int64_t p1 = sizes[0];
  std::int64_t e = (p1 - 2) * (n - p1 + 2) + choose2(p1 - 2);
  for (std::size_t i = 1; i < sizes.size(); ++i) e += choose2(sizes[i] + 1);
  return e;
}

/// Outcome of the closed-form saturation-number registry.
struct FormulaVerdict {
  std::optional<std::int64_t> value;  // empty = pattern not covered
  std::string source;                 // which known result produced the value
  std::string valid_n_threshold;      // n-condition attached to the result, or "unknown"
  std::optional<int> threshold_min_n; // smallest n satisfying the condition, when known

  bool covered() const { return value.has_value(); }
};

/// Matches the pattern against the known closed forms, in priority order:
/// single clique, t*K_2, t*K_p, K_p u (t-1)K_q with p < q and t >= 3,
/// K_p u K_q, then K_p u K_q u K_r with r >= p+q. Patterns outside the
/// registry (including any clique order below 2) come back not covered.
inline FormulaVerdict predicted_sat(int n, const CliquePattern& pat) {
  FormulaVerdict out;
  if (!pat.all_at_least_two()) return out;

  const auto& s = pat.sizes();
  const int t = pat.count();
  auto all_equal = [&] {
    for (int x : s)
      if (x != s[0]) return false;
    return true;
  };
  auto tail_equal = [&] {
    for (std::size_t i = 2; i < s.size(); ++i)
      if (s[i] != s[1]) return false;
    return true;
  };
  auto value_from_construction = [&]() -> std::int64_t {
    std::int64_t p1 = s[0];
    std::int64_t e = (p1 - 2) * (n - p1 + 2) + choose2(p1 - 2);
    for (std::size_t i = 1; i < s.size(); ++i) e += choose2(s[i] + 1);
    return e;
  };

  if (t == 1) {
    out.value = value_from_construction();
    out.source = "sat:K_r (Erdos-Hajnal-Moon)";
    out.valid_n_threshold = "unknown";
    return out;
  }
  if (s[0] == 2 && all_equal()) {
    out.value = 3ll * (t - 1);
    out.source = "sat:tK_2 (Kaszonyi-Tuza)";
    int min_n = 3 * t - 3;
    out.valid_n_threshold = "n >= " + std::to_string(min_n);
    out.threshold_min_n = min_n;
    return out;
  }
  if (all_equal()) {
    std::int64_t p = s[0];
    out.value = value_from_construction();
    out.source = "sat:tK_p (Faudree-Ferrara-Gould-Jacobson)";
    std::int64_t min_n = t * p * (p + 1) - p * p + 2 * p - 6;
    out.valid_n_threshold = "n >= " + std::to_string(min_n);
    out.threshold_min_n = static_cast<int>(min_n);
    return out;
  }
  if (t >= 3 && s[0] < s[1] && tail_equal()) {
    std::int64_t p = s[0], q = s[1];
    out.value = value_from_construction();
    out.source = "sat:K_p+(t-1)K_q";
    std::int64_t bound = q * (q + 1) * (t - 1) + 3 * (p - 2);
    out.valid_n_threshold = "n > " + std::to_string(bound);
    out.threshold_min_n = static_cast<int>(bound) + 1;
    return out;
  }
  if (t == 2) {
    out.value = value_from_construction();
    out.source = "sat:K_p+K_q";
    out.valid_n_threshold = "unknown";
    return out;
  }
  if (t == 3) {
    std::int64_t p = s[0], q = s[1], r = s[2];
    if (r >= p + q) {
      out.value = value_from_construction();
      out.source = "sat:K_p+K_q+K_r";
      std::int64_t bound = 3 * (p - 2) + q * (q + 1) + r * (r + 1);
      out.valid_n_threshold = "n > " + std::to_string(bound);
      out.threshold_min_n = static_cast<int>(bound) + 1;
      return out;
    }
  }
  return out;
}

/// One of the five 13-edge fixtures, with its named-vertex map and the
/// non-edge whose addition does not create K_2 u K_2 u K_4.
struct Fixture {
  Graph graph;
  std::vector<std::pair<std::string, Vertex>> labels;
  Edge probe;
};

/// Fixtures F1..F5. All extend K_2 on {u1,u2} plus K_4 on {v1,...,v4} by six
/// extra edges; F1 and F2 have 8 vertices, F3..F5 have 7. Vertex order is
/// fixed as (u1, u2, v1, v2, v3, v4, x[, y]) so serialized forms are stable.
inline Fixture build_fixture(int k) {
  if (k < 1 || k > 5) throw ArgumentError("fixture index must be in 1..5");

  // Base indices: u1=0 u2=1 v1=2 v2=3 v3=4 v4=5.
  const Vertex u1 = 0, u2 = 1, v1 = 2, v2 = 3, v3 = 4, v4 = 5;
  std::vector<Edge> edges = {{u1, u2}, {v1, v2}, {v1, v3}, {v1, v4}, {v2, v3}, {v2, v4}, {v3, v4}};
  std::vector<std::pair<std::string, Vertex>> labels = {{"u1", u1}, {"u2", u2}, {"v1", v1},
                                                        {"v2", v2}, {"v3", v3}, {"v4", v4}};
  auto add = [&edges](Vertex a, Vertex b) { edges.push_back(make_edge(a, b)); };

  int n = 0;
  Edge probe;
  switch (k) {
    case 1: {
      const Vertex x = 6, y = 7;
      n = 8;
      labels.push_back({"x", x});
      labels.push_back({"y", y});
      add(x, v2);
      add(u2, v3);
      add(u2, v4);
      add(y, u2);
      add(y, v3);
      add(y, v4);
      probe = make_edge(x, v1);
      break;
    }
    case 2: {
      const Vertex x = 6, y = 7;
      n = 8;
      labels.push_back({"x", x});
      labels.push_back({"y", y});
      add(u2, v2);
      add(u2, v3);
      add(x, v1);
      add(y, u2);
      add(y, v2);
      add(y, v3);
      probe = make_edge(u1, v1);
      break;
    }
    case 3: {
      const Vertex x = 6;
      n = 7;
      labels.push_back({"x", x});
      add(u1, v3);
      add(u1, v4);
      add(u2, v2);
      add(u2, v3);
      add(u2, v4);
      add(x, v1);
      probe = make_edge(u1, v1);
      break;
    }
    case 4: {
      const Vertex x = 6;
      n = 7;
      labels.push_back({"x", x});
      add(u1, v3);
      add(u2, v1);
      add(u2, v2);
      add(u2, v3);
      add(u2, v4);
      add(x, v1);
      probe = make_edge(u1, v1);
      break;
    }
    case 5: {
      const Vertex y = 6;
      n = 7;
      labels.push_back({"y", y});
      add(u2, v1);
      add(u2, v3);
      add(u2, v4);
      add(y, v2);
      add(y, v3);
      add(y, v4);
      probe = make_edge(u1, v1);
      break;
    }
    default:
      break;
  }
  return Fixture{from_edge_list(n, edges), std::move(labels), probe};
}

}  // namespace satgraph
