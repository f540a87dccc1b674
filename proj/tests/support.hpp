#ifndef DHCCT_TESTS_SUPPORT_HPP
#define DHCCT_TESTS_SUPPORT_HPP

// Reference implementations the tests check the library against.  Everything
// here is deliberately naive (subset scans, permutation scans, plain BFS) and
// shares no code with the algorithms under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "dhcct/graph.hpp"
#include "dhcct/graph6.hpp"

namespace support {

using dhcct::Graph;
using dhcct::VertexSet;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return Graph::from_edges(g.order(), edges);
}

// Decodes a graph on n vertices from the bits of `code`, pair (i,j) with
// i < j mapped to bit position i*(2n-i-1)/2 + (j-i-1).  Drives the "every
// labeled graph on n vertices" loops.
inline Graph graph_from_code(int n, unsigned long long code) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1ULL) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline bool clique_by_pairs(const Graph& g, VertexSet s) {
  auto vs = dhcct::set_to_vertices(s);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.adjacent(vs[a], vs[b])) return false;
  return true;
}

inline bool stable_by_pairs(const Graph& g, VertexSet s) {
  auto vs = dhcct::set_to_vertices(s);
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adjacent(vs[a], vs[b])) return false;
  return true;
}

// A subgraph is a forest iff every component spans one edge fewer than its
// vertex count.
inline bool forest_by_counting(const Graph& g, VertexSet s) {
  VertexSet seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!dhcct::has_vertex(s, v) || dhcct::has_vertex(seen, v)) continue;
    VertexSet comp = 0;
    std::queue<int> q;
    q.push(v);
    comp |= dhcct::vbit(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      dhcct::for_each_vertex(g.neighbors(u) & s & ~comp, [&](int w) {
        comp |= dhcct::vbit(w);
        q.push(w);
      });
    }
    int verts = dhcct::set_size(comp);
    int twice_edges = 0;
    dhcct::for_each_vertex(comp, [&](int u) {
      twice_edges += dhcct::set_size(g.neighbors(u) & comp);
    });
    if (twice_edges / 2 != verts - 1) return false;
    seen |= comp;
  }
  return true;
}

inline bool bipartite_by_assignment(const Graph& g, VertexSet s) {
  auto vs = dhcct::set_to_vertices(s);
  int k = static_cast<int>(vs.size());
  for (unsigned long long side = 0; side < (1ULL << k); ++side) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        if (g.adjacent(vs[a], vs[b]) && (((side >> a) ^ (side >> b)) & 1ULL) == 0)
          ok = false;
    if (ok) return true;
  }
  return false;
}

inline std::vector<VertexSet> brute_maximal_cliques(const Graph& g, VertexSet within) {
  std::vector<VertexSet> cliques;
  auto vs = dhcct::set_to_vertices(within);
  int k = static_cast<int>(vs.size());
  for (unsigned long long pick = 0; pick < (1ULL << k); ++pick) {
    VertexSet s = 0;
    for (int a = 0; a < k; ++a)
      if ((pick >> a) & 1ULL) s |= dhcct::vbit(vs[a]);
    if (clique_by_pairs(g, s)) cliques.push_back(s);
  }
  std::vector<VertexSet> maximal;
  for (VertexSet a : cliques) {
    bool top = true;
    for (VertexSet b : cliques)
      if (a != b && (a & ~b) == 0) top = false;
    if (top) maximal.push_back(a);
  }
  std::sort(maximal.begin(), maximal.end(), dhcct::set_lex_less);
  return maximal;
}

inline std::optional<VertexSet> brute_cct(const Graph& g) {
  VertexSet all = g.vertices();
  for (VertexSet t = 0;; ++t) {
    if ((t & ~all) == 0 && clique_by_pairs(g, t) && forest_by_counting(g, all & ~t))
      return t;
    if (t == all) break;
  }
  return std::nullopt;
}

inline std::optional<VertexSet> brute_two_one(const Graph& g) {
  VertexSet all = g.vertices();
  for (VertexSet t = 0;; ++t) {
    if ((t & ~all) == 0 && clique_by_pairs(g, t) &&
        bipartite_by_assignment(g, all & ~t))
      return t;
    if (t == all) break;
  }
  return std::nullopt;
}

// Distances inside G[within] by plain BFS; -1 for unreachable.
inline std::vector<int> bfs_distances(const Graph& g, int src, VertexSet within) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (!dhcct::has_vertex(within, src)) return dist;
  dist[static_cast<std::size_t>(src)] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    dhcct::for_each_vertex(g.neighbors(u) & within, [&](int w) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    });
  }
  return dist;
}

// Straight from the defining property: any two vertices joined inside an
// induced subgraph are as close there as in the whole graph.
inline bool dh_by_definition(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> base;
  for (int v = 0; v < n; ++v) base.push_back(bfs_distances(g, v, g.vertices()));
  for (VertexSet s = 0;; ++s) {
    if ((s & ~g.vertices()) == 0 && dhcct::set_size(s) >= 2) {
      bool bad = false;
      dhcct::for_each_vertex(s, [&](int u) {
        if (bad) return;
        auto d = bfs_distances(g, u, s);
        dhcct::for_each_vertex(s, [&](int v) {
          if (d[static_cast<std::size_t>(v)] >= 0 &&
              d[static_cast<std::size_t>(v)] !=
                  base[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
            bad = true;
        });
      });
      if (bad) return false;
    }
    if (s == g.vertices()) break;
  }
  return true;
}

// All injections pattern -> host, tried via next_permutation over host
// subsets of the right size.
inline bool brute_contains_induced(const Graph& host, const Graph& pat) {
  int hp = pat.order();
  int hn = host.order();
  if (hp > hn) return false;
  std::vector<int> pickmask(static_cast<std::size_t>(hn), 0);
  std::fill(pickmask.begin(), pickmask.begin() + hp, 1);
  std::sort(pickmask.begin(), pickmask.end());
  do {
    std::vector<int> chosen;
    for (int v = 0; v < hn; ++v)
      if (pickmask[static_cast<std::size_t>(v)]) chosen.push_back(v);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (int a = 0; a < hp && ok; ++a)
        for (int b = a + 1; b < hp && ok; ++b)
          if (pat.adjacent(a, b) != host.adjacent(chosen[static_cast<std::size_t>(a)],
                                                  chosen[static_cast<std::size_t>(b)]))
            ok = false;
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::next_permutation(pickmask.begin(), pickmask.end()));
  return false;
}

// Checks that an embedding really places `pat` as an induced copy.
inline bool embedding_is_induced(const Graph& host, const Graph& pat,
                                 const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != pat.order()) return false;
  for (int a = 0; a < pat.order(); ++a)
    for (int b = a + 1; b < pat.order(); ++b) {
      if (f[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(b)]) return false;
      if (pat.adjacent(a, b) != host.adjacent(f[static_cast<std::size_t>(a)],
                                              f[static_cast<std::size_t>(b)]))
        return false;
    }
  return true;
}

// Smallest graph6 string over every relabelling; n! emissions.
inline std::string min_encoding_by_permutations(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
          edges.emplace_back(i, j);
    std::string enc = dhcct::emit_graph6(Graph::from_edges(n, edges));
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Threshold graphs by their elimination scheme: repeatedly shed a vertex
// that is isolated or adjacent to everything else.
inline bool threshold_by_elimination(const Graph& g) {
  VertexSet alive = g.vertices();
  while (dhcct::set_size(alive) > 1) {
    int pick = -1;
    dhcct::for_each_vertex(alive, [&](int v) {
      if (pick >= 0) return;
      VertexSet nb = g.neighbors(v) & alive;
      if (nb == 0 || nb == (alive & ~dhcct::vbit(v))) pick = v;
    });
    if (pick < 0) return false;
    alive &= ~dhcct::vbit(pick);
  }
  return true;
}

}  // namespace support

#endif  // DHCCT_TESTS_SUPPORT_HPP
