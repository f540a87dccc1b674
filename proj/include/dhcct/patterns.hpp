#ifndef DHCCT_PATTERNS_HPP
#define DHCCT_PATTERNS_HPP

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhcct/graph.hpp"

namespace dhcct {

// Fixed vertex layouts for the three named five/six vertex patterns.  The
// labels a..e(,h) map to 0..4(,5) in order.

inline Graph house_graph() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}});
}

inline Graph gem_graph() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

inline Graph domino_graph() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}, {2, 5}});
}

// Accepts: house, gem, domino, and the parametric families C<k>, P<k>, K<k>,
// I<k>, 2K2, 2K3.
inline Graph named_pattern(std::string_view name) {
  if (name == "house") return house_graph();
  if (name == "gem") return gem_graph();
  if (name == "domino") return domino_graph();
  if (name == "2K2") return disjoint_union(complete_graph(2), complete_graph(2));
  if (name == "2K3") return disjoint_union(complete_graph(3), complete_graph(3));
  if (name.size() >= 2) {
    char family = name[0];
    std::string_view digits = name.substr(1);
    bool numeric = !digits.empty();
    for (char c : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (numeric) {
      int k = std::stoi(std::string(digits));
      if (k < 0 || k > kMaxVertices)
        throw std::invalid_argument("pattern size out of range: " + std::string(name));
      switch (family) {
        case 'C': return cycle_graph(k);
        case 'P': return path_graph(k);
        case 'K': return complete_graph(k);
        case 'I': return edgeless_graph(k);
        default: break;
      }
    }
  }
  throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

// --- induced subgraph isomorphism ------------------------------------------

// Searches for an injection f : V(pattern) -> V(host) preserving both edges
// and non-edges.  Pattern vertices are assigned in index order and host
// candidates tried in ascending order, so the returned embedding is the
// lexicographically first one.  Returns f as a vector indexed by pattern
// vertex, or nullopt.
inline std::optional<std::vector<int>> contains_induced(const Graph& host,
                                                        const Graph& pattern) {
  int hp = pattern.order();
  int hn = host.order();
  if (hp > hn) return std::nullopt;
  std::vector<int> assign(static_cast<std::size_t>(hp), -1);
  VertexSet used = 0;

  auto feasible = [&](int pv, int hv) {
    if (pattern.degree(pv) > host.degree(hv)) return false;
    for (int q = 0; q < pv; ++q) {
      bool pe = pattern.adjacent(pv, q);
      bool he = host.adjacent(hv, assign[static_cast<std::size_t>(q)]);
      if (pe != he) return false;
    }
    return true;
  };

  int pv = 0;
  std::vector<int> next_try(static_cast<std::size_t>(hp), 0);
  while (pv >= 0) {
    if (pv == hp) return assign;
    bool advanced = false;
    for (int hv = next_try[static_cast<std::size_t>(pv)]; hv < hn; ++hv) {
      if (has_vertex(used, hv)) continue;
      if (!feasible(pv, hv)) continue;
      assign[static_cast<std::size_t>(pv)] = hv;
      used |= vbit(hv);
      next_try[static_cast<std::size_t>(pv)] = hv + 1;
      ++pv;
      if (pv < hp) next_try[static_cast<std::size_t>(pv)] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      next_try[static_cast<std::size_t>(pv)] = 0;
      --pv;
      if (pv >= 0) {
        used &= ~vbit(assign[static_cast<std::size_t>(pv)]);
        assign[static_cast<std::size_t>(pv)] = -1;
      }
    }
  }
  return std::nullopt;
}

// --- holes ------------------------------------------------------------------

// A hole is a chordless cycle on at least five vertices.  Depth-first search
// over chordless paths anchored at their minimum vertex; a candidate next
// vertex adjacent to the anchor either closes a cycle or is skipped, since
// that adjacency would otherwise become a chord.
namespace detail {
inline bool hole_dfs(const Graph& g, std::vector<int>& path, VertexSet on_path,
                     VertexSet chord_blockers) {
  int s = path.front();
  int tail = path.back();
  bool found = false;
  for_each_vertex(g.neighbors(tail) & ~on_path, [&](int w) {
    if (found || w <= s) return;
    if (g.neighbors(w) & chord_blockers) return;
    if (g.adjacent(w, s)) {
      if (path.size() + 1 >= 5) {
        path.push_back(w);
        found = true;
      }
      return;  // shorter closures cannot be extended: s-adjacency = chord
    }
    path.push_back(w);
    // All former path vertices except the new tail now block chords.
    if (hole_dfs(g, path, on_path | vbit(w), chord_blockers | vbit(tail))) {
      found = true;
      return;
    }
    path.pop_back();
  });
  return found;
}
}  // namespace detail

inline std::optional<std::vector<int>> find_hole(const Graph& g) {
  int n = g.order();
  for (int s = 0; s < n; ++s) {
    VertexSet later_neighbors = g.neighbors(s) & ~(vbit(s + 1) - 1);
    std::optional<std::vector<int>> result;
    for_each_vertex(later_neighbors, [&](int v) {
      if (result) return;
      std::vector<int> path{s, v};
      // chord_blockers starts empty: the anchor is handled separately and
      // the tail is always allowed.
      if (detail::hole_dfs(g, path, vbit(s) | vbit(v), 0)) result = path;
    });
    if (result) return result;
  }
  return std::nullopt;
}

inline bool has_hole(const Graph& g) { return find_hole(g).has_value(); }

// --- graph classes ----------------------------------------------------------

inline bool is_cograph(const Graph& g) {
  return !contains_induced(g, path_graph(4)).has_value();
}

struct SplitPartition {
  VertexSet stable = 0;
  VertexSet clique = 0;
};

// Split graphs are exactly the (2K2, C4, C5)-free graphs.  The witness walks
// the maximal cliques and keeps the first one whose complement is stable;
// for a split graph some maximal clique extends the clique side, so the scan
// always succeeds.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  if (contains_induced(g, named_pattern("2K2")) ||
      contains_induced(g, cycle_graph(4)) || contains_induced(g, cycle_graph(5)))
    return std::nullopt;
  for (VertexSet k : maximal_cliques(g)) {
    VertexSet rest = g.vertices() & ~k;
    if (is_stable(g, rest)) return SplitPartition{rest, k};
  }
  if (g.order() == 0) return SplitPartition{0, 0};
  throw std::logic_error("pattern-free split graph without a split partition");
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

inline bool is_threshold(const Graph& g) {
  return !contains_induced(g, named_pattern("2K2")) &&
         !contains_induced(g, cycle_graph(4)) &&
         !contains_induced(g, path_graph(4));
}

}  // namespace dhcct

#endif  // DHCCT_PATTERNS_HPP
