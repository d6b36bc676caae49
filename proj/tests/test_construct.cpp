#include <catch2/catch_amalgamated.hpp>

#include "satgraph/canonical.hpp"
#include "satgraph/construct.hpp"
#include "satgraph/graph6.hpp"
#include "satgraph/pattern.hpp"

using namespace satgraph;

TEST_CASE("pattern parsing and normalization") {
  CHECK(CliquePattern::parse("2,3,3").sizes() == std::vector<int>{2, 3, 3});
  CHECK(CliquePattern::parse("3,2,3").sizes() == std::vector<int>{2, 3, 3});
  CHECK(CliquePattern::parse("5").sizes() == std::vector<int>{5});
  CHECK(CliquePattern::parse("11,4").to_string() == "4,11");
  CHECK_THROWS_AS(CliquePattern::parse(""), ArgumentError);
  CHECK_THROWS_AS(CliquePattern::parse("2,,3"), ArgumentError);
  CHECK_THROWS_AS(CliquePattern::parse("2;3"), ArgumentError);
  CHECK_THROWS_AS(CliquePattern::parse("0,3"), ArgumentError);
  CHECK_THROWS_AS(CliquePattern(std::vector<int>{}), ArgumentError);
}

TEST_CASE("construction matches its definition") {
  Graph h = build_h(10, CliquePattern::parse("2,2"));
  CHECK(h.edge_count() == 3);
  CHECK(are_isomorphic(h, disjoint_union(complete(3), independent(7))));

  Graph star = build_h(6, CliquePattern::parse("3"));
  CHECK(star.edge_count() == 5);
  CHECK(are_isomorphic(star, join(complete(1), independent(5))));

  Graph h233 = build_h(25, CliquePattern::parse("2,3,3"));
  CHECK(h233.edge_count() == 12);
  CHECK(are_isomorphic(h233,
                       disjoint_union(disjoint_union(complete(4), complete(4)), independent(17))));

  // layout: apex first, then cliques ascending, then the independent part
  Graph h344 = build_h(20, CliquePattern::parse("3,4,4"));
  CHECK(h344.degree(0) == 19);  // apex K_1 joined to everything
  CHECK(h344.neighbors(1).contains(2));
  CHECK_FALSE(h344.neighbors(1).contains(6));  // different blocks
  CHECK(h344.degree(19) == 1);  // independent part sees only the apex
}

TEST_CASE("construction preconditions") {
  CHECK(minimum_build_n(CliquePattern::parse("2,3,3")) == 8);
  CHECK_NOTHROW(build_h(8, CliquePattern::parse("2,3,3")));
  CHECK_THROWS_AS(build_h(7, CliquePattern::parse("2,3,3")), ConstructionError);
  CHECK_THROWS_AS(build_h(3, CliquePattern::parse("2,3,3")), ConstructionError);
  CHECK_THROWS_AS(build_h(10, CliquePattern::parse("1,3")), ConstructionError);
  CHECK_THROWS_AS(h_edge_count(7, CliquePattern::parse("2,3,3")), ConstructionError);
}

TEST_CASE("closed-form edge count pins") {
  CHECK(h_edge_count(20, CliquePattern::parse("3,4,4")) == 39);
  CHECK(h_edge_count(9, CliquePattern::parse("2,2,2")) == 6);
  CHECK(h_edge_count(30, CliquePattern::parse("4,5,11")) == 138);
  CHECK(h_edge_count(26, CliquePattern::parse("2,3,3,3")) == 18);
}

TEST_CASE("closed form equals the construction across a grid") {
  for (int first : {2, 3, 4}) {
    for (int a = first; a <= 7; ++a) {
      for (int b = a; b <= 7; ++b) {
        CliquePattern pat({first, a, b});
        for (int n = minimum_build_n(pat); n <= 40; n += 3)
          REQUIRE(build_h(n, pat).edge_count() == h_edge_count(n, pat));
      }
    }
  }
}

TEST_CASE("single clique construction is the star-like join") {
  for (int p = 2; p <= 6; ++p) {
    CliquePattern pat({p});
    for (int n : {p + 1, p + 4, 2 * p + 3}) {
      CHECK(are_isomorphic(build_h(n, pat), join(complete(p - 2), independent(n - p + 2))));
    }
  }
}

TEST_CASE("formula registry") {
  auto v = predicted_sat(25, CliquePattern::parse("2,3,3"));
  REQUIRE(v.covered());
  CHECK(*v.value == 12);
  CHECK(v.source == "sat:K_p+(t-1)K_q");
  CHECK(v.valid_n_threshold == "n > 24");
  CHECK(*v.threshold_min_n == 25);

  v = predicted_sat(100, CliquePattern::parse("5"));
  REQUIRE(v.covered());
  CHECK(*v.value == 294);
  CHECK(v.source == "sat:K_r (Erdos-Hajnal-Moon)");

  v = predicted_sat(60, CliquePattern::parse("2,3,5"));
  REQUIRE(v.covered());
  CHECK(*v.value == 21);
  CHECK(v.source == "sat:K_p+K_q+K_r");
  CHECK(v.valid_n_threshold == "n > 42");

  CHECK_FALSE(predicted_sat(60, CliquePattern::parse("3,4,5")).covered());
  CHECK_FALSE(predicted_sat(30, CliquePattern::parse("2,2,3")).covered());
  CHECK_FALSE(predicted_sat(30, CliquePattern::parse("1,2")).covered());
  CHECK_FALSE(predicted_sat(30, CliquePattern::parse("2,3,4,5")).covered());

  v = predicted_sat(9, CliquePattern::parse("2,2,2"));
  REQUIRE(v.covered());
  CHECK(*v.value == 6);
  CHECK(v.source == "sat:tK_2 (Kaszonyi-Tuza)");
  CHECK(v.valid_n_threshold == "n >= 6");

  v = predicted_sat(40, CliquePattern::parse("3,3,3"));
  REQUIRE(v.covered());
  CHECK(v.source == "sat:tK_p (Faudree-Ferrara-Gould-Jacobson)");
  CHECK(*v.value == h_edge_count(40, CliquePattern::parse("3,3,3")));

  v = predicted_sat(30, CliquePattern::parse("2,4"));
  REQUIRE(v.covered());
  CHECK(v.source == "sat:K_p+K_q");
  CHECK(v.valid_n_threshold == "unknown");
  CHECK_FALSE(v.threshold_min_n.has_value());
}

TEST_CASE("registry agrees with the construction wherever covered") {
  for (int first : {2, 3}) {
    for (int a = first; a <= 6; ++a) {
      for (int b = a; b <= 6; ++b) {
        CliquePattern pat({first, a, b});
        for (int n = minimum_build_n(pat); n <= 36; n += 5) {
          auto v = predicted_sat(n, pat);
          if (v.covered()) REQUIRE(*v.value == h_edge_count(n, pat));
        }
      }
    }
  }
}

TEST_CASE("fixtures match their stated shape") {
  const int expected_order[] = {8, 8, 7, 7, 7};
  for (int k = 1; k <= 5; ++k) {
    Fixture fx = build_fixture(k);
    CHECK(fx.graph.order() == expected_order[k - 1]);
    CHECK(fx.graph.edge_count() == 13);
    for (int v = 0; v < fx.graph.order(); ++v) CHECK(fx.graph.degree(v) >= 1);
    CHECK_FALSE(fx.graph.has_edge(fx.probe.first, fx.probe.second));
  }
  CHECK(build_fixture(1).probe == Edge{2, 6});  // (v1, x) normalized
  CHECK(build_fixture(2).probe == Edge{0, 2});  // (u1, v1)
  CHECK(build_fixture(5).probe == Edge{0, 2});
  CHECK_THROWS_AS(build_fixture(0), ArgumentError);
  CHECK_THROWS_AS(build_fixture(6), ArgumentError);
}

TEST_CASE("fixture serialization is reproducible byte for byte") {
  CHECK(encode_graph6(build_fixture(1).graph) == "G`\\waW");
  CHECK(encode_graph6(build_fixture(2).graph) == "Gb[xAo");
  CHECK(encode_graph6(build_fixture(3).graph) == "Fb~x?");
  CHECK(encode_graph6(build_fixture(4).graph) == "Fj|x?");
  CHECK(encode_graph6(build_fixture(5).graph) == "Fh\\ww");
}

#ifdef SATGRAPH_SOURCE_DIR
#include <fstream>

TEST_CASE("shipped fixture corpus matches the builders") {
  for (int k = 1; k <= 5; ++k) {
    std::string path =
        std::string(SATGRAPH_SOURCE_DIR) + "/data/fixtures/f" + std::to_string(k) + ".g6";
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(decode_graph6(line) == build_fixture(k).graph);
  }
}
#endif
