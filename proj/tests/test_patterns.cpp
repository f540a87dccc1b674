#include <random>

#include "catch_amalgamated.hpp"
#include "dhcct/patterns.hpp"
#include "support.hpp"

using namespace dhcct;

TEST_CASE("fixed pattern layouts", "[patterns]") {
  Graph h = house_graph();
  REQUIRE(h.order() == 5);
  CHECK(h.edge_count() == 6);
  // square 0-1-2-3 with the roof vertex 4 on edge 0-1
  CHECK(h.neighbors(4) == (vbit(0) | vbit(1)));
  CHECK(h.adjacent(0, 3));
  CHECK_FALSE(h.adjacent(0, 2));

  Graph gm = gem_graph();
  REQUIRE(gm.order() == 5);
  CHECK(gm.edge_count() == 7);
  CHECK(gm.neighbors(4) == all_vertices(4));  // apex over the path 0-1-2-3
  CHECK_FALSE(gm.adjacent(0, 2));
  CHECK_FALSE(gm.adjacent(0, 3));

  Graph dm = domino_graph();
  REQUIRE(dm.order() == 6);
  CHECK(dm.edge_count() == 7);
  // two squares 0-1-2-3 and 1-4-5-2 glued along 1-2
  CHECK(dm.adjacent(1, 2));
  CHECK(dm.degree(1) == 3);
  CHECK(dm.degree(2) == 3);
  CHECK(dm.degree(0) == 2);
  CHECK(dm.degree(5) == 2);
}

TEST_CASE("patterns by name", "[patterns]") {
  CHECK(named_pattern("house") == house_graph());
  CHECK(named_pattern("gem") == gem_graph());
  CHECK(named_pattern("domino") == domino_graph());
  CHECK(named_pattern("C5") == cycle_graph(5));
  CHECK(named_pattern("P4") == path_graph(4));
  CHECK(named_pattern("K4") == complete_graph(4));
  CHECK(named_pattern("I3") == Graph(3));
  CHECK(named_pattern("2K2").edge_count() == 2);
  CHECK(named_pattern("2K3") == disjoint_union(complete_graph(3), complete_graph(3)));

  CHECK_THROWS_AS(named_pattern("blah"), std::invalid_argument);
  CHECK_THROWS_AS(named_pattern("C"), std::invalid_argument);
  CHECK_THROWS_AS(named_pattern("Cx"), std::invalid_argument);
  CHECK_THROWS_AS(named_pattern("K-1"), std::invalid_argument);
  CHECK_THROWS_AS(named_pattern("C63"), std::invalid_argument);
}

TEST_CASE("induced containment agrees with brute injection search", "[patterns]") {
  CHECK(contains_induced(gem_graph(), path_graph(4)) ==
        std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(contains_induced(gem_graph(), house_graph()).has_value());
  CHECK(contains_induced(gem_graph(), gem_graph()) ==
        std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(contains_induced(complete_graph(5), path_graph(3)).has_value());
  CHECK_FALSE(contains_induced(path_graph(3), path_graph(4)).has_value());

  std::mt19937 rng(431);
  for (int trial = 0; trial < 150; ++trial) {
    Graph host = support::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.45);
    Graph pat = support::random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    auto got = contains_induced(host, pat);
    REQUIRE(got.has_value() == support::brute_contains_induced(host, pat));
    if (got) REQUIRE(support::embedding_is_induced(host, pat, *got));
  }
}

TEST_CASE("holes are chordless cycles of length five or more", "[patterns]") {
  CHECK(find_hole(cycle_graph(5)) == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(find_hole(cycle_graph(6)).has_value());
  CHECK(find_hole(cycle_graph(6))->size() == 6);
  CHECK(find_hole(cycle_graph(7))->size() == 7);
  CHECK_FALSE(has_hole(cycle_graph(4)));
  CHECK_FALSE(has_hole(cycle_graph(3)));
  CHECK_FALSE(has_hole(house_graph()));
  CHECK_FALSE(has_hole(gem_graph()));
  CHECK_FALSE(has_hole(domino_graph()));
  CHECK_FALSE(has_hole(complete_graph(6)));
  CHECK_FALSE(has_hole(Graph(0)));

  // one chord kills the C5, leaving a triangle and a square
  Graph chorded = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  CHECK_FALSE(has_hole(chorded));

  std::mt19937 rng(432);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = support::random_graph(rng, n, 0.4);
    bool brute = false;
    for (int k = 5; k <= n; ++k)
      brute = brute || support::brute_contains_induced(g, cycle_graph(k));
    REQUIRE(has_hole(g) == brute);
    if (auto hole = find_hole(g)) {
      int k = static_cast<int>(hole->size());
      REQUIRE(k >= 5);
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
          REQUIRE(g.adjacent((*hole)[static_cast<std::size_t>(a)],
                             (*hole)[static_cast<std::size_t>(b)]) == consecutive);
        }
    }
  }
}

TEST_CASE("cographs are exactly the P4-free graphs", "[patterns]") {
  CHECK(is_cograph(complete_graph(5)));
  CHECK(is_cograph(cycle_graph(4)));
  CHECK(is_cograph(Graph(4)));
  CHECK(is_cograph(disjoint_union(path_graph(3), path_graph(3))));
  CHECK_FALSE(is_cograph(path_graph(4)));
  CHECK_FALSE(is_cograph(path_graph(5)));
  CHECK_FALSE(is_cograph(house_graph()));

  // closed under complement
  std::mt19937 rng(433);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = support::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    REQUIRE(is_cograph(g) == is_cograph(support::complement(g)));
    REQUIRE(is_cograph(g) == !support::brute_contains_induced(g, path_graph(4)));
  }
}

TEST_CASE("split partitions", "[patterns]") {
  auto sp = split_partition(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  REQUIRE(sp.has_value());
  CHECK(is_clique(Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}), sp->clique));
  CHECK((sp->clique | sp->stable) == all_vertices(4));
  CHECK((sp->clique & sp->stable) == 0);

  CHECK_FALSE(is_split(cycle_graph(4)));
  CHECK_FALSE(is_split(cycle_graph(5)));
  CHECK_FALSE(is_split(named_pattern("2K2")));
  CHECK(is_split(complete_graph(4)));
  CHECK(is_split(Graph(3)));
  CHECK(is_split(Graph(0)));

  std::mt19937 rng(434);
  for (int trial = 0; trial < 150; ++trial) {
    int n = static_cast<int>(rng() % 8);
    Graph g = support::random_graph(rng, n, 0.5);
    bool brute = false;
    for (VertexSet k = 0;; ++k) {
      if (support::clique_by_pairs(g, k) &&
          support::stable_by_pairs(g, g.vertices() & ~k))
        brute = true;
      if (k == g.vertices()) break;
    }
    auto got = split_partition(g);
    REQUIRE(got.has_value() == brute);
    if (got) {
      REQUIRE(is_clique(g, got->clique));
      REQUIRE(is_stable(g, got->stable));
      REQUIRE((got->clique | got->stable) == g.vertices());
      REQUIRE((got->clique & got->stable) == 0);
    }
  }
}

TEST_CASE("threshold graphs by elimination", "[patterns]") {
  CHECK(is_threshold(complete_graph(5)));
  CHECK(is_threshold(Graph(5)));
  CHECK(is_threshold(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(is_threshold(path_graph(4)));
  CHECK_FALSE(is_threshold(cycle_graph(4)));
  CHECK_FALSE(is_threshold(named_pattern("2K2")));

  std::mt19937 rng(435);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = support::random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    bool got = is_threshold(g);
    REQUIRE(got == support::threshold_by_elimination(g));
    if (got) REQUIRE(is_split(g));
  }
}
