#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "dhcct/obstructions.hpp"
#include "support.hpp"

using namespace dhcct;

namespace {

std::set<std::string> canonicals(const MiningReport& r) {
  std::set<std::string> out;
  for (const Obstruction& o : r.family) out.insert(o.canonical);
  return out;
}

}  // namespace

TEST_CASE("minimality test", "[obstructions]") {
  CHECK(is_minimal_obstruction(named_pattern("2K3")));
  CHECK(is_minimal_obstruction(graph_join(Graph(3), Graph(3))));
  CHECK_FALSE(is_minimal_obstruction(cycle_graph(4)));
  CHECK_FALSE(is_minimal_obstruction(house_graph()));
  // one deletion away from a still-uncovered graph: not minimal
  CHECK_FALSE(is_minimal_obstruction(
      disjoint_union(named_pattern("2K3"), Graph(1))));
}

TEST_CASE("mining bounds", "[obstructions]") {
  CHECK_THROWS_AS(mine_obstructions(2), std::invalid_argument);
  CHECK_THROWS_AS(mine_obstructions(13), std::invalid_argument);
}

TEST_CASE("nothing below six vertices", "[obstructions]") {
  MiningReport r = mine_obstructions(5);
  CHECK(r.family.empty());
  CHECK(r.scanned == 49);
  CHECK(r.without_cct == 0);
}

TEST_CASE("the four six-vertex members", "[obstructions]") {
  MiningReport r = mine_obstructions(6);
  REQUIRE(r.family.size() == 4);
  CHECK(r.scanned == 163);
  CHECK(r.without_cct == 4);
  CHECK(r.family[0].name == "O1");
  CHECK(r.family[0].canonical == "EFz_");
  CHECK(r.family[1].canonical == "EJaG");
  CHECK(r.family[2].canonical == "EK~o");
  CHECK(r.family[3].canonical == "E]~o");

  // identified structures
  CHECK(are_isomorphic(r.family[0].graph, graph_join(Graph(3), Graph(3))));
  CHECK(are_isomorphic(r.family[1].graph, named_pattern("2K3")));
  CHECK(are_isomorphic(r.family[2].graph,
                       support::complement(disjoint_union(cycle_graph(4),
                                                          complete_graph(2)))));
  CHECK(are_isomorphic(
      r.family[3].graph,
      support::complement(disjoint_union(
          complete_graph(2),
          disjoint_union(complete_graph(2), complete_graph(2))))));
}

TEST_CASE("growth of the family up to eight vertices", "[obstructions]") {
  MiningReport m7 = mine_obstructions(7);
  MiningReport m8 = mine_obstructions(8);
  REQUIRE(m7.family.size() == 7);
  REQUIRE(m8.family.size() == 11);
  CHECK(m8.scanned == 2695);
  CHECK(m8.without_cct == 380);

  std::vector<std::string> expected{"EFz_",   "EJaG",   "EK~o",   "E]~o",
                                    "F@NE?",  "FK`zo",  "F_K~_",  "G?KuE?",
                                    "GGA[ro", "GIa@xw", "GW?W}o"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(m8.family[i].canonical == expected[i]);
    CHECK(m8.family[i].name == "O" + std::to_string(i + 1));
  }

  // monotone: a minimal obstruction stays one under a larger bound
  auto c6 = canonicals(mine_obstructions(6));
  auto c7 = canonicals(m7);
  auto c8 = canonicals(m8);
  CHECK(std::includes(c7.begin(), c7.end(), c6.begin(), c6.end()));
  CHECK(std::includes(c8.begin(), c8.end(), c7.begin(), c7.end()));

  // the stored graph is the canonical labelling
  for (const Obstruction& o : m8.family)
    CHECK(emit_graph6(o.graph) == o.canonical);

  // two more identified members
  CHECK(are_isomorphic(m8.family[4].graph,
                       disjoint_union(complete_graph(3), cycle_graph(4))));
  CHECK(are_isomorphic(m8.family[7].graph,
                       disjoint_union(cycle_graph(4), cycle_graph(4))));
}

TEST_CASE("records survive the exhaustive subset recheck", "[obstructions]") {
  // independent of the maximal-clique oracle: plain subset scans
  for (const Obstruction& o : mine_obstructions(8).family) {
    REQUIRE_FALSE(support::brute_cct(o.graph).has_value());
    for (int v = 0; v < o.graph.order(); ++v) {
      Graph h = induced_subgraph(o.graph, o.graph.vertices() & ~vbit(v)).graph;
      REQUIRE(support::brute_cct(h).has_value());
    }
  }
}

TEST_CASE("classification splits by cograph and by clique-to-bipartite", "[obstructions]") {
  MiningReport r = mine_obstructions(8);
  FamilyClassification c = classify_family(r);
  CHECK(c.total == 11);
  CHECK(c.cographs == 6);
  CHECK(c.cograph_names ==
        std::vector<std::string>{"O1", "O2", "O3", "O4", "O5", "O8"});
  CHECK(c.not_two_one == 4);
  CHECK(c.not_two_one_names == std::vector<std::string>{"O2", "O3", "O4", "O7"});
  CHECK(c.cograph_mining_matches);

  for (const Obstruction& o : r.family) {
    CHECK(o.cograph == !contains_induced(o.graph, path_graph(4)).has_value());
    CHECK(o.two_one == is_two_one(o.graph).has_value());
    CHECK(o.two_one == support::brute_two_one(o.graph).has_value());
  }

  CHECK_THROWS_AS(classify_family(MiningReport{}), std::invalid_argument);
}

TEST_CASE("cross checking the family against the whole class", "[obstructions]") {
  MiningReport m7 = mine_obstructions(7);
  TheoremReport t = verify_theorem(7, m7);
  CHECK(t.scanned == 617);
  CHECK(t.with_cct == 577);
  CHECK(t.without_cct == 40);
  CHECK(t.characterization_mismatches == 0);
  CHECK(t.builder_disagreements == 0);

  TheoremReport t6 = verify_theorem(6, m7);
  CHECK(t6.scanned == 163);
  CHECK(t6.with_cct == 159);
  CHECK(t6.characterization_mismatches == 0);

  SECTION("a corrupted family is caught") {
    std::vector<Obstruction> broken = m7.family;
    broken.erase(broken.begin() + 1);  // drops the two-triangles record
    TheoremReport bad = verify_theorem(7, broken);
    CHECK(bad.characterization_mismatches > 0);
  }
  SECTION("a family mined short of the bound is rejected") {
    CHECK_THROWS_AS(verify_theorem(8, m7), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(7, std::vector<Obstruction>{}),
                    std::invalid_argument);
  }
}
