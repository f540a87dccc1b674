#ifndef DHCCT_OBSTRUCTIONS_HPP
#define DHCCT_OBSTRUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhcct/cct.hpp"
#include "dhcct/dh.hpp"
#include "dhcct/graph.hpp"
#include "dhcct/graph6.hpp"
#include "dhcct/patterns.hpp"

namespace dhcct {

// A member of the forbidden family: a distance-hereditary graph with no cct
// all of whose proper induced subgraphs have one.
struct Obstruction {
  std::string name;       // O1, O2, ... in (order, canonical form) rank
  Graph graph;            // canonical labelling
  std::string canonical;  // graph6 string of that labelling
  bool cograph = false;
  bool two_one = false;   // admits a clique whose removal leaves a bipartite graph
};

struct MiningReport {
  int max_n = 0;  // search bound: every class up to this order was examined
  std::size_t scanned = 0;      // isomorphism classes examined
  std::size_t without_cct = 0;  // classes admitting no cct
  std::vector<Obstruction> family;
};

// Existence of a cct is closed under induced subgraphs, so minimality only
// needs the single-vertex deletions: if each of those has a cct, so does
// every deeper induced subgraph.
inline bool is_minimal_obstruction(const Graph& g) {
  if (find_cct_oracle(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    Graph h = induced_subgraph(g, g.vertices() & ~vbit(v)).graph;
    if (!find_cct_oracle(h)) return false;
  }
  return true;
}

namespace detail {

// Family hygiene independent of how the members were found: sorted order,
// pairwise non-isomorphic, and no member inside another.  These follow from
// minimality plus heredity, so a failure means a mining bug.
inline void check_family_invariants(const std::vector<Obstruction>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      if (family[i].canonical == family[j].canonical)
        throw std::logic_error("obstruction family holds an isomorphic pair");
      if (family[i].graph.order() <= family[j].graph.order() &&
          contains_induced(family[j].graph, family[i].graph))
        throw std::logic_error("obstruction family member contains another");
    }
}

}  // namespace detail

// Exhaustive scan over all distance-hereditary isomorphism classes up to
// max_n vertices.  Every minimal obstruction of order <= max_n appears,
// because the scan visits its isomorphism class exactly once.  When
// `cographs_only` is set the scan is restricted to the P4-free subclass;
// deletions of cographs are cographs, so minimality transfers.
inline MiningReport mine_obstructions(int max_n, int jobs = 1,
                                      bool cographs_only = false) {
  if (max_n < 3 || max_n > 12)
    throw std::invalid_argument("mine_obstructions bound must lie in 3..12");
  MiningReport report;
  report.max_n = max_n;
  enumerate_dh(max_n, [&](const EnumeratedGraph& eg) {
    if (cographs_only && !is_cograph(eg.graph)) return;
    ++report.scanned;
    if (find_cct_oracle(eg.graph)) return;
    ++report.without_cct;
    if (!is_minimal_obstruction(eg.graph)) return;
    Obstruction o;
    o.graph = relabel_graph(eg.graph, canonical_ordering(eg.graph));
    o.canonical = eg.canonical;
    o.cograph = is_cograph(o.graph);
    o.two_one = is_two_one(o.graph).has_value();
    report.family.push_back(std::move(o));
  }, jobs);

  std::sort(report.family.begin(), report.family.end(),
            [](const Obstruction& a, const Obstruction& b) {
              if (a.graph.order() != b.graph.order())
                return a.graph.order() < b.graph.order();
              return a.canonical < b.canonical;
            });
  for (std::size_t i = 0; i < report.family.size(); ++i)
    report.family[i].name = "O" + std::to_string(i + 1);
  detail::check_family_invariants(report.family);
  return report;
}

struct FamilyClassification {
  std::size_t total = 0;
  std::size_t cographs = 0;
  std::size_t not_two_one = 0;
  std::vector<std::string> cograph_names;
  std::vector<std::string> not_two_one_names;
  // Independent cross-check: minimal obstructions mined inside the P4-free
  // subclass must be exactly the family's cograph members.
  bool cograph_mining_matches = false;
};

inline FamilyClassification classify_family(const MiningReport& report, int jobs = 1) {
  if (report.family.empty()) throw std::invalid_argument("empty obstruction family");
  FamilyClassification c;
  c.total = report.family.size();
  std::vector<std::string> cograph_canonicals;
  for (const Obstruction& o : report.family) {
    if (o.cograph) {
      ++c.cographs;
      c.cograph_names.push_back(o.name);
      cograph_canonicals.push_back(o.canonical);
    }
    if (!o.two_one) {
      ++c.not_two_one;
      c.not_two_one_names.push_back(o.name);
    }
  }
  MiningReport sub = mine_obstructions(report.max_n, jobs, true);
  std::vector<std::string> mined;
  for (const Obstruction& o : sub.family) mined.push_back(o.canonical);
  std::sort(cograph_canonicals.begin(), cograph_canonicals.end());
  std::sort(mined.begin(), mined.end());
  c.cograph_mining_matches = cograph_canonicals == mined;
  return c;
}

struct TheoremReport {
  int max_n = 0;
  std::size_t scanned = 0;
  std::size_t with_cct = 0;
  std::size_t without_cct = 0;
  std::size_t characterization_mismatches = 0;  // family-freeness vs oracle
  std::size_t builder_disagreements = 0;        // builder vs oracle existence
};

// Cross-checks the two pillars over every class up to max_n: the forbidden
// family characterizes cct existence, and the incremental builder agrees
// with the brute-force oracle.  Both counters must come back zero.
inline TheoremReport verify_theorem(int max_n, const std::vector<Obstruction>& family,
                                    int jobs = 1) {
  if (family.empty()) throw std::invalid_argument("empty obstruction family");
  TheoremReport report;
  report.max_n = max_n;
  enumerate_dh(max_n, [&](const EnumeratedGraph& eg) {
    ++report.scanned;
    bool oracle = find_cct_oracle(eg.graph).has_value();
    if (oracle)
      ++report.with_cct;
    else
      ++report.without_cct;
    bool clean = true;
    for (const Obstruction& o : family)
      if (o.graph.order() <= eg.graph.order() && contains_induced(eg.graph, o.graph))
        clean = false;
    if (oracle != clean) ++report.characterization_mismatches;
    if (build_cct(eg.graph).witness.has_value() != oracle)
      ++report.builder_disagreements;
  }, jobs);
  return report;
}

// The family must have been mined at least as far as the verification bound,
// otherwise absent members would masquerade as mismatches.
inline TheoremReport verify_theorem(int max_n, const MiningReport& mined, int jobs = 1) {
  if (mined.max_n < max_n)
    throw std::invalid_argument("family mined below the verification bound");
  return verify_theorem(max_n, mined.family, jobs);
}

}  // namespace dhcct

#endif  // DHCCT_OBSTRUCTIONS_HPP
