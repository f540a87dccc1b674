#ifndef DHCCT_CANONICAL_HPP
#define DHCCT_CANONICAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhcct/graph.hpp"
#include "dhcct/graph6.hpp"

namespace dhcct {

// Canonical labelling by partition refinement plus backtracking.
//
// The search explores orderings compatible with the iteratively refined
// vertex partition and returns the lexicographically least graph6 encoding
// over the orderings it admits.  Two pruning devices keep the tree small
// without affecting that minimum:
//   - subtrees whose forced adjacency prefix already exceeds the best known
//     encoding are cut;
//   - vertices of the branch cell that a known automorphism (fixing the
//     individualised prefix pointwise) maps onto an already-tried vertex
//     are skipped, since their subtrees repeat the same encodings.
// Every automorphism is discovered as a pair of orderings with equal
// encodings and is verified before use.

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    std::vector<std::vector<int>> cells;
    if (n_ > 0) {
      std::vector<int> all(static_cast<std::size_t>(n_));
      std::iota(all.begin(), all.end(), 0);
      cells.push_back(std::move(all));
      refine(cells);
    }
    search(cells);
  }

  std::string best_encoding() const {
    std::string out;
    out += static_cast<char>(n_ + 63);
    std::size_t total_bits = bit_count();
    for (std::size_t b = 0; b < total_bits; b += 6) {
      unsigned group = 0;
      for (std::size_t k = 0; k < 6; ++k)
        group = (group << 1) |
                ((b + k < total_bits && get_bit(best_bits_, b + k)) ? 1u : 0u);
      out += static_cast<char>(group + 63u);
    }
    return out;
  }

  const std::vector<int>& best_ordering() const { return best_perm_; }
  const std::vector<std::vector<int>>& automorphisms() const { return gens_; }

 private:
  std::size_t bit_count() const {
    return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
  }

  static bool get_bit(const std::vector<std::uint64_t>& bits, std::size_t i) {
    return (bits[i / 64] >> (i % 64)) & 1u;
  }

  static void set_bit(std::vector<std::uint64_t>& bits, std::size_t i, bool v) {
    if (v)
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    else
      bits[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  // Coarsest equitable refinement: iterate until every cell has uniform
  // neighbour counts into every cell.  Subcells are ordered by ascending
  // count, which keeps the procedure label-independent.
  void refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t target = 0; target < cells.size() && !changed; ++target) {
        if (cells[target].size() <= 1) continue;
        for (std::size_t splitter = 0; splitter < cells.size(); ++splitter) {
          VertexSet w = vertices_to_set(cells[splitter]);
          int c0 = set_size(g_.neighbors(cells[target][0]) & w);
          bool uniform = true;
          for (int v : cells[target])
            if (set_size(g_.neighbors(v) & w) != c0) uniform = false;
          if (uniform) continue;
          std::vector<std::pair<int, int>> keyed;  // (count, vertex)
          keyed.reserve(cells[target].size());
          for (int v : cells[target])
            keyed.emplace_back(set_size(g_.neighbors(v) & w), v);
          std::sort(keyed.begin(), keyed.end());
          std::vector<std::vector<int>> parts;
          for (auto [cnt, v] : keyed) {
            if (parts.empty() || set_size(g_.neighbors(parts.back()[0]) & w) != cnt)
              parts.emplace_back();
            parts.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(target));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(target),
                       parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Number of leading singleton cells.
  static int fixed_prefix(const std::vector<std::vector<int>>& cells) {
    int k = 0;
    for (const auto& c : cells) {
      if (c.size() != 1) break;
      ++k;
    }
    return k;
  }

  // Compares the adjacency bits forced by the first k fixed positions with
  // the current best.  Bits are laid out column-major exactly as in graph6,
  // so k fixed positions force the first k*(k-1)/2 bits.
  // Returns -1 (prefix smaller), 0 (equal), +1 (greater).
  int compare_prefix(const std::vector<std::vector<int>>& cells, int k) const {
    if (best_perm_.empty()) return -1;
    std::size_t limit = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
    std::size_t b = 0;
    for (int j = 1; j < k && b < limit; ++j) {
      int vj = cells[static_cast<std::size_t>(j)][0];
      for (int i = 0; i < j; ++i, ++b) {
        bool mine = g_.adjacent(cells[static_cast<std::size_t>(i)][0], vj);
        bool theirs = get_bit(best_bits_, b);
        if (mine != theirs) return mine ? 1 : -1;
      }
    }
    return 0;
  }

  void search(std::vector<std::vector<int>> cells) {
    int k = fixed_prefix(cells);
    if (compare_prefix(cells, k) > 0) return;

    if (k == static_cast<int>(cells.size())) {
      std::vector<int> perm(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i)][0];
      record_leaf(perm);
      return;
    }

    std::size_t target = static_cast<std::size_t>(k);  // first non-singleton
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (in_known_orbit(v, tried)) continue;
      tried.push_back(v);
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      fixed_path_.push_back(v);
      search(std::move(child));
      fixed_path_.pop_back();
    }
  }

  // True when some product of known automorphisms that fix the current
  // individualised prefix pointwise maps v onto an already-tried vertex.
  bool in_known_orbit(int v, const std::vector<int>& tried) const {
    if (tried.empty() || gens_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) {
        parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        a = parent[static_cast<std::size_t>(a)];
      }
      return a;
    };
    bool any = false;
    for (const auto& sigma : gens_) {
      bool fixes = true;
      for (int f : fixed_path_)
        if (sigma[static_cast<std::size_t>(f)] != f) fixes = false;
      if (!fixes) continue;
      any = true;
      for (int a = 0; a < n_; ++a) {
        int ra = find(a), rb = find(sigma[static_cast<std::size_t>(a)]);
        if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
      }
    }
    if (!any) return false;
    int rv = find(v);
    for (int t : tried)
      if (find(t) == rv) return true;
    return false;
  }

  void record_leaf(const std::vector<int>& perm) {
    std::size_t total_bits = bit_count();
    std::vector<std::uint64_t> bits((total_bits + 63) / 64, 0);
    std::size_t b = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++b)
        set_bit(bits, b,
                g_.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]));

    if (best_perm_.empty()) {
      best_bits_ = std::move(bits);
      best_perm_ = perm;
      return;
    }
    int cmp = 0;
    for (std::size_t i = 0; i < total_bits && cmp == 0; ++i) {
      bool a = get_bit(bits, i), bbit = get_bit(best_bits_, i);
      if (a != bbit) cmp = a ? 1 : -1;
    }
    if (cmp < 0) {
      best_bits_ = std::move(bits);
      best_perm_ = perm;
      return;
    }
    if (cmp > 0) return;

    // Equal encodings: perm o best_perm^-1 is an automorphism candidate.
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      sigma[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(i)])] =
          perm[static_cast<std::size_t>(i)];
    for (int u = 0; u < n_; ++u) {
      VertexSet mapped = 0;
      for_each_vertex(g_.neighbors(u),
                      [&](int w) { mapped |= vbit(sigma[static_cast<std::size_t>(w)]); });
      if (mapped != g_.neighbors(sigma[static_cast<std::size_t>(u)]))
        throw std::logic_error("canonical search derived a non-automorphism");
    }
    for (const auto& existing : gens_)
      if (existing == sigma) return;
    gens_.push_back(std::move(sigma));
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_bits_;
  std::vector<int> best_perm_;
  std::vector<int> fixed_path_;
  std::vector<std::vector<int>> gens_;
};

}  // namespace detail

// Canonical graph6 encoding: equal strings exactly for isomorphic graphs.
inline std::string canonical_form(const Graph& g) {
  detail::CanonicalSearch s(g);
  s.run();
  return s.best_encoding();
}

// The vertex ordering realising canonical_form: position -> original vertex.
inline std::vector<int> canonical_ordering(const Graph& g) {
  detail::CanonicalSearch s(g);
  s.run();
  return s.best_ordering();
}

// Relabels so that new vertex i is order[i] of g.
inline Graph relabel_graph(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("relabel order has wrong length");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace dhcct

#endif  // DHCCT_CANONICAL_HPP
