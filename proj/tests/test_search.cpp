#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <mutex>
#include <set>

#include "satgraph/canonical.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/hunt.hpp"
#include "satgraph/search.hpp"
#include "support/oracles.hpp"

using namespace satgraph;

TEST_CASE("enumeration matches the permutation oracle level by level") {
  for (int n = 2; n <= 6; ++n) {
    auto oracle = oracles::class_counts_by_level(n);
    for (std::int64_t cap = 0; cap <= choose2(n); ++cap) {
      std::int64_t expected = 0;
      for (std::int64_t m = 0; m <= cap; ++m) expected += oracle[static_cast<std::size_t>(m)];
      std::atomic<std::int64_t> seen{0};
      std::int64_t got = enumerate_nonisomorphic(n, cap, [&](const Graph&) { ++seen; });
      REQUIRE(got == expected);
      REQUIRE(seen.load() == expected);
    }
  }
}

TEST_CASE("enumeration pins") {
  auto nop = [](const Graph&) {};
  CHECK(enumerate_nonisomorphic(4, 6, nop) == 11);
  CHECK(enumerate_nonisomorphic(5, 10, nop) == 34);
  CHECK(enumerate_nonisomorphic(3, 1, nop) == 2);
  CHECK(enumerate_nonisomorphic(0, 0, nop) == 1);
  CHECK(enumerate_nonisomorphic(1, 3, nop) == 1);
  CHECK_THROWS_AS(enumerate_nonisomorphic(11, 5, nop), ArgumentError);
}

TEST_CASE("enumeration agrees with the partition of all labeled graphs") {
  auto nop = [](const Graph&) {};
  for (int n = 2; n <= 5; ++n)
    CHECK(enumerate_nonisomorphic(n, choose2(n), nop) == oracles::class_count_all_labeled(n));
}

TEST_CASE("visited classes are pairwise non-isomorphic and all valid") {
  std::vector<Graph> seen;
  std::mutex mu;
  enumerate_nonisomorphic(5, 10, [&](const Graph& g) {
    std::lock_guard<std::mutex> lock(mu);
    seen.push_back(g);
  });
  REQUIRE(seen.size() == 34);
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j)
      REQUIRE_FALSE(oracles::iso_by_permutation(seen[i], seen[j]));
}

TEST_CASE("exact saturation numbers at desk scale") {
  auto r = sat_bruteforce(5, CliquePattern({2, 2}));
  CHECK(r.sat_value == 3);
  CHECK(r.extremal_canonical ==
        std::vector<std::string>{canonical_form(disjoint_union(complete(3), independent(2)))});

  auto r2 = sat_bruteforce(6, CliquePattern({3}));
  CHECK(r2.sat_value == 5);
  CHECK(r2.extremal_canonical ==
        std::vector<std::string>{canonical_form(join(complete(1), independent(5)))});

  auto r3 = sat_bruteforce(8, CliquePattern({2, 2, 2}));
  CHECK(r3.sat_value == 6);
  std::string two_triangles =
      canonical_form(disjoint_union(disjoint_union(complete(3), complete(3)), independent(2)));
  CHECK(std::find(r3.extremal_canonical.begin(), r3.extremal_canonical.end(), two_triangles) !=
        r3.extremal_canonical.end());

  // K_2 u K_3 at n = 6: the construction K_4 u I_2 is saturated with 6 edges
  auto r4 = sat_bruteforce(6, CliquePattern({2, 3}));
  CHECK(r4.sat_value == 6);
  CHECK(r4.sat_value == h_edge_count(6, CliquePattern({2, 3})));
}

TEST_CASE("every extremal graph re-verifies as saturated") {
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 2}, 6}, {{3}, 6}, {{2, 2, 2}, 8}, {{2, 3}, 7}}) {
    CliquePattern pat(sizes);
    auto r = sat_bruteforce(n, pat);
    REQUIRE_FALSE(r.extremal_canonical.empty());
    CHECK(std::is_sorted(r.extremal_canonical.begin(), r.extremal_canonical.end()));
    CHECK(std::adjacent_find(r.extremal_canonical.begin(), r.extremal_canonical.end()) ==
          r.extremal_canonical.end());
    for (const auto& g6 : r.extremal_canonical) {
      Graph g = decode_graph6(g6);
      CHECK(g.edge_count() == r.sat_value);
      CHECK(check_saturated(g, pat).is_saturated);
    }
  }
}

TEST_CASE("sat never exceeds the construction edge count") {
  for (auto [sizes, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 2}, 7}, {{2, 2}, 9}, {{3}, 7}, {{2, 3}, 6}, {{2, 3}, 8}}) {
    CliquePattern pat(sizes);
    if (n < minimum_build_n(pat)) continue;
    if (!check_saturated(build_h(n, pat), pat).is_saturated) continue;
    CHECK(sat_bruteforce(n, pat).sat_value <= h_edge_count(n, pat));
  }
}

TEST_CASE("both extremal classes survive at the smallest matching order") {
  // at n = 4 the triangle-plus-isolate and the star are both 2K_2-saturated
  auto r = sat_bruteforce(4, CliquePattern({2, 2}));
  CHECK(r.sat_value == 3);
  std::set<std::string> got(r.extremal_canonical.begin(), r.extremal_canonical.end());
  std::set<std::string> expected = {
      canonical_form(disjoint_union(complete(3), independent(1))),
      canonical_form(join(complete(1), independent(3)))};
  CHECK(got == expected);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(sat_bruteforce(3, CliquePattern({2, 2})), DomainError);     // needs 4 vertices
  CHECK_THROWS_AS(sat_bruteforce(3, CliquePattern({1})), DomainError);        // never free
  CHECK_THROWS_AS(sat_bruteforce(11, CliquePattern({2, 2})), ArgumentError);  // beyond desk scale
}

TEST_CASE("uniqueness verification") {
  CHECK(verify_uniqueness(6, CliquePattern({2, 2})).unique_match);
  CHECK(verify_uniqueness(6, CliquePattern({3})).unique_match);

  auto rep = verify_uniqueness(4, CliquePattern({2, 2}));
  CHECK_FALSE(rep.unique_match);
  CHECK(rep.extra.size() == 1);  // the star
  CHECK(rep.missing.empty());

  // 3K_2 at n = 9: the oracle decides; both directions are reported
  auto rep9 = verify_uniqueness(9, CliquePattern({2, 2, 2}));
  CHECK(rep9.search.sat_value == 6);
  CHECK((rep9.unique_match || !rep9.extra.empty() || !rep9.missing.empty()));
}

TEST_CASE("search results are identical across worker counts") {
  SearchOptions seq, par;
  par.threads = 4;
  auto a = sat_bruteforce(7, CliquePattern({2, 2}), seq);
  auto b = sat_bruteforce(7, CliquePattern({2, 2}), par);
  CHECK(a.sat_value == b.sat_value);
  CHECK(a.extremal_canonical == b.extremal_canonical);
  CHECK(a.graphs_enumerated == b.graphs_enumerated);

  auto nop = [](const Graph&) {};
  CHECK(enumerate_nonisomorphic(6, 15, nop, 1) == enumerate_nonisomorphic(6, 15, nop, 4));
}

TEST_CASE("hunt degenerate and small cases") {
  CliquePattern p22({2, 2});
  auto one = heuristic_hunt(6, p22, 1, 12345);
  CHECK(one.best_edges == h_edge_count(6, p22));
  CHECK(one.best_graph == canonical_form(build_h(6, p22)));
  CHECK(one.iterations == 1);
  CHECK(one.seed == 12345);

  auto r = heuristic_hunt(6, p22, 1000, 7);
  CHECK(r.best_edges == 3);  // cannot beat the exact optimum
  CHECK_FALSE(r.beats_construction());
  CHECK(check_saturated(decode_graph6(r.best_graph), p22).is_saturated);

  CHECK_THROWS_AS(heuristic_hunt(6, p22, 0, 1), ArgumentError);

  // not saturated for r < p+q: no verified starting point
  CHECK_THROWS_AS(heuristic_hunt(20, CliquePattern({2, 3, 4}), 10, 1), DomainError);
}

TEST_CASE("hunt is deterministic per seed") {
  CliquePattern pat({2, 3});
  auto a = heuristic_hunt(9, pat, 300, 99);
  auto b = heuristic_hunt(9, pat, 300, 99);
  CHECK(a.best_graph == b.best_graph);
  CHECK(a.best_edges == b.best_edges);
}
