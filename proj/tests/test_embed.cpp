#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "satgraph/construct.hpp"
#include "satgraph/embed.hpp"
#include "satgraph/graph.hpp"

using namespace satgraph;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g = with_edge(g, u, v);
  return g;
}

const std::vector<std::vector<int>> kSmallPatterns = {
    {2}, {3}, {4}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 2, 4}, {1, 2}, {1, 1, 1}, {2, 3, 3}};

}  // namespace

TEST_CASE("basic containment") {
  CHECK(find_embedding(complete(4), CliquePattern({2, 2})).has_value());
  CHECK_FALSE(
      find_embedding(disjoint_union(complete(3), independent(4)), CliquePattern({2, 2})).has_value());
  CHECK(contains(independent(5), CliquePattern({1, 1, 1})));
  CHECK_FALSE(contains(independent(2), CliquePattern({1, 1, 1})));
  CHECK(contains(complete(5), CliquePattern({5})));
  CHECK_FALSE(contains(complete(4), CliquePattern({5})));
}

TEST_CASE("witnesses satisfy their invariants and are deterministic") {
  auto w = find_embedding(complete(4), CliquePattern({2, 2}));
  REQUIRE(w.has_value());
  CHECK(w->valid_for(complete(4), CliquePattern({2, 2})));
  CHECK(w->parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  Graph h = build_h(20, CliquePattern::parse("2,3,4"));
  auto w2 = find_embedding(h, CliquePattern::parse("2,3,4"));
  REQUIRE(w2.has_value());
  CHECK(w2->valid_for(h, CliquePattern::parse("2,3,4")));
  CHECK(w2->parts[0].size() == 2);
  CHECK(w2->parts[1].size() == 3);
  CHECK(w2->parts[2].size() == 4);
}

TEST_CASE("three-clique construction dichotomy at small n") {
  CHECK_FALSE(contains(build_h(30, CliquePattern::parse("2,3,5")), CliquePattern::parse("2,3,5")));
  CHECK(contains(build_h(30, CliquePattern::parse("2,3,4")), CliquePattern::parse("2,3,4")));
}

TEST_CASE("required edge mode") {
  Graph g = complete(4);
  auto w = find_embedding(g, CliquePattern({2, 2}), Edge{1, 3});
  REQUIRE(w.has_value());
  bool together = false;
  for (const auto& part : w->parts)
    if (std::count(part.begin(), part.end(), 1) && std::count(part.begin(), part.end(), 3))
      together = true;
  CHECK(together);

  CHECK_THROWS_AS(find_embedding(independent(4), CliquePattern({2}), Edge{0, 1}), ArgumentError);

  Fixture f3 = build_fixture(3);
  Graph probed = with_edge(f3.graph, f3.probe.first, f3.probe.second);
  CHECK_FALSE(find_embedding(probed, CliquePattern({2, 2, 4}), f3.probe).has_value());
}

TEST_CASE("embedding counts by exhaustive enumeration") {
  CHECK(count_embeddings_small(complete(4), CliquePattern({2, 2})) == 3);
  CHECK(count_embeddings_small(complete(3), CliquePattern({2, 2})) == 0);
  CHECK(count_embeddings_small(complete(5), CliquePattern({5})) == 1);
  CHECK(count_embeddings_small(independent(5), CliquePattern({1, 1, 1})) == 10);
  CHECK(count_embeddings_small(complete(3), CliquePattern({2})) == 3);
  CHECK_THROWS_AS(count_embeddings_small(independent(13), CliquePattern({2})), ArgumentError);
}

TEST_CASE("containment agrees with the counting oracle") {
  std::mt19937 rng(321);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.15 + 0.7 * coin(rng));
    for (const auto& sizes : kSmallPatterns) {
      CliquePattern pat(sizes);
      REQUIRE(contains(g, pat) == (count_embeddings_small(g, pat) > 0));
    }
  }
}

TEST_CASE("containment is monotone under edge addition") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    auto missing = non_edges(g);
    if (missing.empty()) continue;
    Edge e = missing[rng() % missing.size()];
    for (const auto& sizes : kSmallPatterns) {
      CliquePattern pat(sizes);
      if (contains(g, pat)) REQUIRE(contains(with_edge(g, e.first, e.second), pat));
    }
  }
}

TEST_CASE("required-edge searches are consistent with plain searches") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.5);
    auto edges = g.edges();
    if (edges.empty()) continue;
    Edge e = edges[rng() % edges.size()];
    for (const auto& sizes : {std::vector<int>{2, 2}, {3}, {2, 3}}) {
      CliquePattern pat(sizes);
      auto with_req = find_embedding(g, pat, e);
      if (with_req) {
        REQUIRE(contains(g, pat));
        REQUIRE(with_req->valid_for(g, pat));
      }
      Graph minus = without_edge(g, e.first, e.second);
      if (!contains(minus, pat)) {
        REQUIRE(contains(g, pat) == with_req.has_value());
      }
    }
  }
}

TEST_CASE("containment is invariant under relabeling") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 0.5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = permuted(g, perm);
    for (const auto& sizes : kSmallPatterns)
      REQUIRE(contains(g, CliquePattern(sizes)) == contains(h, CliquePattern(sizes)));
  }
}
