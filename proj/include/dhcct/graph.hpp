#ifndef DHCCT_GRAPH_HPP
#define DHCCT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dhcct {

// Vertices are the integers 0..n-1; a vertex set is a bitmask over them.
// The whole library caps graphs at 62 vertices so that any vertex set fits
// in one machine word and neighbourhood algebra is word-parallel.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr bool has_vertex(VertexSet s, int v) { return (s >> v) & 1; }

constexpr VertexSet all_vertices(int n) {
  return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

inline int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex of a non-empty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> set_to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet vertices_to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vbit(v);
  return s;
}

// Orders vertex sets by their sorted vertex lists, e.g. {0,1,4} < {0,3}.
// The first differing vertex decides: it belongs to the smaller set.
inline bool set_lex_less(VertexSet a, VertexSet b) {
  VertexSet d = a ^ b;
  if (d == 0) return false;
  return has_vertex(a, std::countr_zero(d));
}

inline std::string format_vertex_set(VertexSet s) {
  std::string out;
  for_each_vertex(s, [&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

/**
 * Simple undirected graph, value-semantic and immutable once built.
 * Stores one neighbourhood mask per vertex; self-loops are impossible.
 */
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be between 0 and " +
                                  std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.link(u, v);
    return g;
  }

  int order() const { return n_; }

  VertexSet vertices() const { return all_vertices(n_); }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return has_vertex(adj_[static_cast<std::size_t>(u)], v);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  VertexSet closed_neighborhood(int v) const { return neighbors(v) | vbit(v); }

  int degree(int v) const { return set_size(neighbors(v)); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
  }

  // Extension used by the construction replay: appends vertex n.
  Graph with_vertex(VertexSet neighbors_of_new) const {
    if (n_ >= kMaxVertices) throw std::invalid_argument("graph is at the vertex cap");
    if (neighbors_of_new & ~vertices())
      throw std::out_of_range("new vertex attached outside the graph");
    Graph g(n_ + 1);
    g.adj_ = adj_;
    g.adj_.push_back(neighbors_of_new);
    int y = n_;
    for_each_vertex(neighbors_of_new,
                    [&](int u) { g.adj_[static_cast<std::size_t>(u)] |= vbit(y); });
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  void link(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[static_cast<std::size_t>(u)] |= vbit(v);
    adj_[static_cast<std::size_t>(v)] |= vbit(u);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) +
                                                  " outside graph of order " +
                                                  std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// --- the three growth operations -------------------------------------------

// New vertex adjacent to x only.
inline Graph add_pendant(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("pendant anchor outside graph");
  return g.with_vertex(vbit(x));
}

// New vertex with the same closed neighbourhood as x (adjacent to x).
inline Graph add_true_twin(const Graph& g, int x) {
  return g.with_vertex(g.closed_neighborhood(x));
}

// New vertex with the same open neighbourhood as x (not adjacent to x).
inline Graph add_false_twin(const Graph& g, int x) {
  return g.with_vertex(g.neighbors(x));
}

// --- neighbourhood structure ------------------------------------------------

// Levels of a breadth-first search from root, cut off after distance two.
// remainder collects distance >= 3 together with unreachable vertices.
struct DistanceDecomposition {
  int root = 0;
  VertexSet level1 = 0;
  VertexSet level2 = 0;
  VertexSet remainder = 0;
};

inline DistanceDecomposition distance_decomposition(const Graph& g, int x) {
  DistanceDecomposition d;
  d.root = x;
  d.level1 = g.neighbors(x);
  VertexSet reach = 0;
  for_each_vertex(d.level1, [&](int v) { reach |= g.neighbors(v); });
  d.level2 = reach & ~d.level1 & ~vbit(x);
  d.remainder = g.vertices() & ~d.level1 & ~d.level2 & ~vbit(x);
  return d;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if ((s & ~vbit(v)) & ~g.neighbors(v)) ok = false;
  });
  return ok;
}

inline bool is_stable(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](int v) {
    if (g.neighbors(v) & s) ok = false;
  });
  return ok;
}

// True when v is adjacent to every vertex of s other than v itself.
inline bool sees_all(const Graph& g, int v, VertexSet s) {
  return ((s & ~vbit(v)) & ~g.neighbors(v)) == 0;
}

// Acyclicity of the subgraph induced by s, by union-find over its edges.
inline bool is_forest(const Graph& g, VertexSet s) {
  int parent[kMaxVertices];
  for_each_vertex(s, [&](int v) { parent[v] = v; });
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  bool acyclic = true;
  for_each_vertex(s, [&](int u) {
    if (!acyclic) return;
    VertexSet later = g.neighbors(u) & s & ~((vbit(u) << 1) - 1);
    for_each_vertex(later, [&](int v) {
      if (!acyclic) return;
      int ru = find(u), rv = find(v);
      if (ru == rv) {
        acyclic = false;
        return;
      }
      parent[ru] = rv;
    });
  });
  return acyclic;
}

inline bool is_forest(const Graph& g) { return is_forest(g, g.vertices()); }

inline VertexSet connected_component(const Graph& g, int v, VertexSet within) {
  VertexSet comp = vbit(v) & within;
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int u) { next |= g.neighbors(u); });
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> comps;
  VertexSet rest = within;
  while (rest) {
    VertexSet c = connected_component(g, first_vertex(rest), within);
    comps.push_back(c);
    rest &= ~c;
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return connected_component(g, 0, g.vertices()) == g.vertices();
}

// Two-colourability of the subgraph induced by s.
inline bool is_bipartite(const Graph& g, VertexSet s) {
  int colour[kMaxVertices];
  for_each_vertex(s, [&](int v) { colour[v] = -1; });
  bool ok = true;
  for_each_vertex(s, [&](int start) {
    if (!ok || colour[start] != -1) return;
    colour[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty() && ok) {
      int u = stack.back();
      stack.pop_back();
      for_each_vertex(g.neighbors(u) & s, [&](int v) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          ok = false;
        }
      });
    }
  });
  return ok;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new vertex index -> original vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw std::out_of_range("subgraph set outside graph");
  InducedSubgraph out;
  out.vertex_map = set_to_vertices(s);
  int m = static_cast<int>(out.vertex_map.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(out.vertex_map[static_cast<std::size_t>(i)],
                     out.vertex_map[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  out.graph = Graph::from_edges(m, edges);
  return out;
}

// All inclusion-maximal cliques inside `within` (maximality relative to that
// set), ordered by their sorted vertex lists.  Bron-Kerbosch with pivoting;
// output order is fixed by the final sort.
inline std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  struct Frame {
    VertexSet r, p, x;
  };
  std::vector<Frame> stack;
  stack.push_back({0, within, 0});
  while (!stack.empty()) {
    auto [r, p, x] = stack.back();
    stack.pop_back();
    if (p == 0 && x == 0) {
      out.push_back(r);
      continue;
    }
    if (p == 0) continue;
    int pivot = -1, best = -1;
    for_each_vertex(p | x, [&](int u) {
      int cnt = set_size(p & g.neighbors(u));
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    });
    VertexSet cand = p & ~g.neighbors(pivot);
    for_each_vertex(cand, [&](int v) {
      stack.push_back({r | vbit(v), p & g.neighbors(v), x & g.neighbors(v)});
      p &= ~vbit(v);
      x |= vbit(v);
    });
  }
  std::sort(out.begin(), out.end(), set_lex_less);
  return out;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  return maximal_cliques(g, g.vertices());
}

// --- convenience constructors used by tests and the pattern module ---------

inline Graph complete_graph(int n) {
  Graph g(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph edgeless_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  int n = a.order() + b.order();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.adjacent(i, j)) edges.emplace_back(i, j);
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j)
      if (b.adjacent(i, j)) edges.emplace_back(a.order() + i, a.order() + j);
  return Graph::from_edges(n, edges);
}

// Disjoint union plus all edges between the two sides.
inline Graph graph_join(const Graph& a, const Graph& b) {
  Graph u = disjoint_union(a, b);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < u.order(); ++i)
    for (int j = i + 1; j < u.order(); ++j)
      if (u.adjacent(i, j) || (i < a.order() && j >= a.order()))
        edges.emplace_back(i, j);
  return Graph::from_edges(u.order(), edges);
}

}  // namespace dhcct

#endif  // DHCCT_GRAPH_HPP
