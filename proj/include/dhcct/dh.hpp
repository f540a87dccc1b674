#ifndef DHCCT_DH_HPP
#define DHCCT_DH_HPP

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dhcct/canonical.hpp"
#include "dhcct/graph.hpp"
#include "dhcct/patterns.hpp"

namespace dhcct {

// --- construction sequences -------------------------------------------------

enum class StepKind { initial, pendant, true_twin, false_twin };

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::initial: return "initial";
    case StepKind::pendant: return "pendant";
    case StepKind::true_twin: return "true_twin";
    case StepKind::false_twin: return "false_twin";
  }
  return "?";
}

struct BuildStep {
  StepKind kind = StepKind::initial;
  int vertex = 0;   // introduced vertex; step i introduces vertex i
  int anchor = -1;  // attachment vertex, -1 for the initial step
};

// A certificate that a graph arises from K1 by pendant and twin additions.
// Vertex i of the replayed graph corresponds to original_label[i] of the
// graph the sequence was derived from (the identity for generated graphs).
struct BuildSequence {
  std::vector<BuildStep> steps;
  std::vector<int> original_label;
};

inline Graph replay_sequence(const BuildSequence& seq) {
  Graph g(0);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const BuildStep& st = seq.steps[i];
    if (st.vertex != static_cast<int>(i))
      throw std::invalid_argument("build step " + std::to_string(i) +
                                  " introduces wrong vertex");
    if (i == 0) {
      if (st.kind != StepKind::initial)
        throw std::invalid_argument("build sequence must start with an initial step");
      g = Graph(1);
      continue;
    }
    if (st.kind == StepKind::initial)
      throw std::invalid_argument("initial step after the first position");
    if (st.anchor < 0 || st.anchor >= st.vertex)
      throw std::invalid_argument("build step " + std::to_string(i) +
                                  " has anchor outside the prefix");
    switch (st.kind) {
      case StepKind::pendant: g = add_pendant(g, st.anchor); break;
      case StepKind::true_twin: g = add_true_twin(g, st.anchor); break;
      case StepKind::false_twin: g = add_false_twin(g, st.anchor); break;
      case StepKind::initial: break;
    }
  }
  return g;
}

inline std::string serialize_sequence(const BuildSequence& seq) {
  std::string out;
  for (const BuildStep& st : seq.steps) {
    out += std::to_string(st.vertex);
    out += ' ';
    out += step_kind_name(st.kind);
    if (st.kind != StepKind::initial) {
      out += ' ';
      out += std::to_string(st.anchor);
    }
    out += '\n';
  }
  return out;
}

inline BuildSequence parse_sequence(const std::string& text) {
  BuildSequence seq;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    BuildStep st;
    std::string kind;
    if (!(ls >> st.vertex >> kind))
      throw std::invalid_argument("malformed build step: " + line);
    if (kind == "initial") {
      st.kind = StepKind::initial;
      st.anchor = -1;
    } else {
      if (kind == "pendant")
        st.kind = StepKind::pendant;
      else if (kind == "true_twin")
        st.kind = StepKind::true_twin;
      else if (kind == "false_twin")
        st.kind = StepKind::false_twin;
      else
        throw std::invalid_argument("unknown step kind: " + kind);
      if (!(ls >> st.anchor))
        throw std::invalid_argument("step missing anchor: " + line);
    }
    seq.steps.push_back(st);
  }
  seq.original_label.resize(seq.steps.size());
  for (std::size_t i = 0; i < seq.original_label.size(); ++i)
    seq.original_label[i] = static_cast<int>(i);
  return seq;
}

// --- pruning (elimination) --------------------------------------------------

// Repeatedly deletes a degree-one vertex, a true twin, or a false twin, in
// that priority, always taking the lowest-numbered deletable vertex.  The
// sequence certificate lists the deletions in reverse so that replaying it
// rebuilds the graph; anchors are resolved to the partner that ends up with
// the smallest replay index.
inline std::optional<BuildSequence> pruning_sequence(const Graph& g) {
  int n = g.order();
  if (n == 0)
    throw std::invalid_argument("pruning sequence undefined for the empty graph");

  struct Removal {
    int vertex = 0;
    StepKind kind = StepKind::pendant;
    VertexSet anchors = 0;  // candidate anchors alive at removal time
  };
  std::vector<Removal> removals;
  VertexSet alive = g.vertices();

  while (set_size(alive) > 1) {
    Removal r;
    bool found = false;
    // pendant first
    for_each_vertex(alive, [&](int u) {
      if (found) return;
      VertexSet nb = g.neighbors(u) & alive;
      if (set_size(nb) == 1) {
        r = {u, StepKind::pendant, nb};
        found = true;
      }
    });
    if (!found) {
      for_each_vertex(alive, [&](int u) {
        if (found) return;
        VertexSet closed_u = g.closed_neighborhood(u) & alive;
        VertexSet partners = 0;
        for_each_vertex(alive & ~vbit(u), [&](int v) {
          if ((g.closed_neighborhood(v) & alive) == closed_u) partners |= vbit(v);
        });
        if (partners) {
          r = {u, StepKind::true_twin, partners};
          found = true;
        }
      });
    }
    if (!found) {
      for_each_vertex(alive, [&](int u) {
        if (found) return;
        VertexSet open_u = g.neighbors(u) & alive;
        VertexSet partners = 0;
        for_each_vertex(alive & ~vbit(u), [&](int v) {
          if ((g.neighbors(v) & alive) == open_u) partners |= vbit(v);
        });
        if (partners) {
          r = {u, StepKind::false_twin, partners};
          found = true;
        }
      });
    }
    if (!found) return std::nullopt;  // stuck: not distance-hereditary
    alive &= ~vbit(r.vertex);
    removals.push_back(r);
  }

  // Replay index: the survivor is 0, the k-th removal (1-based) is n-k.
  std::vector<int> replay_index(static_cast<std::size_t>(n), -1);
  int survivor = first_vertex(alive);
  replay_index[static_cast<std::size_t>(survivor)] = 0;
  for (std::size_t k = 0; k < removals.size(); ++k)
    replay_index[static_cast<std::size_t>(removals[k].vertex)] =
        n - 1 - static_cast<int>(k);

  BuildSequence seq;
  seq.steps.resize(static_cast<std::size_t>(n));
  seq.original_label.assign(static_cast<std::size_t>(n), -1);
  seq.steps[0] = BuildStep{StepKind::initial, 0, -1};
  seq.original_label[0] = survivor;
  for (std::size_t k = 0; k < removals.size(); ++k) {
    const Removal& r = removals[k];
    int idx = replay_index[static_cast<std::size_t>(r.vertex)];
    int anchor_idx = -1;
    for_each_vertex(r.anchors, [&](int a) {
      int ai = replay_index[static_cast<std::size_t>(a)];
      if (anchor_idx == -1 || ai < anchor_idx) anchor_idx = ai;
    });
    seq.steps[static_cast<std::size_t>(idx)] = BuildStep{r.kind, idx, anchor_idx};
    seq.original_label[static_cast<std::size_t>(idx)] = r.vertex;
  }
  return seq;
}

inline bool is_distance_hereditary(const Graph& g) {
  if (g.order() == 0) return true;
  return pruning_sequence(g).has_value();
}

// Forbidden-structure route: no house, gem, domino, or chordless long cycle.
inline bool is_distance_hereditary_by_patterns(const Graph& g) {
  return !contains_induced(g, house_graph()) && !contains_induced(g, gem_graph()) &&
         !contains_induced(g, domino_graph()) && !has_hole(g);
}

// Names the obstruction for non-member inputs: which forbidden pattern embeds
// and where.  Checked in the fixed order house, gem, domino, hole.
struct DhObstruction {
  std::string pattern;        // "house", "gem", "domino", or "C<k>"
  std::vector<int> embedding; // pattern vertex -> host vertex
};

inline std::optional<DhObstruction> find_dh_obstruction(const Graph& g) {
  for (const char* name : {"house", "gem", "domino"}) {
    if (auto emb = contains_induced(g, named_pattern(name)))
      return DhObstruction{name, *emb};
  }
  if (auto hole = find_hole(g))
    return DhObstruction{"C" + std::to_string(hole->size()), *hole};
  return std::nullopt;
}

// --- enumeration ------------------------------------------------------------

struct EnumeratedGraph {
  Graph graph;
  BuildSequence seq;
  std::string canonical;
};

// Streams one representative per isomorphism class of distance-hereditary
// graphs with 1..max_n vertices, by breadth-first closure of the three
// growth operations with canonical-form deduplication.  Levels are emitted
// in ascending order of n, each level sorted by canonical form, so output
// is deterministic.  jobs > 1 parallelises child generation; results are
// merged in a fixed order, keeping the stream byte-identical.
inline void enumerate_dh(int max_n,
                         const std::function<void(const EnumeratedGraph&)>& emit,
                         int jobs = 1) {
  if (max_n < 1) return;
  if (max_n > kMaxVertices)
    throw std::invalid_argument("enumeration bound exceeds the vertex cap");
  if (jobs < 1) jobs = 1;

  std::vector<EnumeratedGraph> level;
  {
    EnumeratedGraph k1;
    k1.graph = Graph(1);
    k1.seq.steps = {BuildStep{StepKind::initial, 0, -1}};
    k1.seq.original_label = {0};
    k1.canonical = canonical_form(k1.graph);
    level.push_back(std::move(k1));
  }
  for (const auto& e : level) emit(e);

  for (int n = 1; n < max_n; ++n) {
    struct Child {
      std::string canonical;
      Graph graph;
      std::size_t parent;
      StepKind kind;
      int anchor;
    };
    std::vector<std::vector<Child>> chunk_results;
    std::size_t parents = level.size();
    std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(jobs), parents);
    chunk_results.resize(chunks);

    auto work = [&](std::size_t chunk) {
      std::vector<Child>& out = chunk_results[chunk];
      for (std::size_t p = chunk; p < parents; p += chunks) {
        const Graph& base = level[p].graph;
        for (StepKind kind :
             {StepKind::pendant, StepKind::true_twin, StepKind::false_twin}) {
          for (int x = 0; x < n; ++x) {
            Graph child = kind == StepKind::pendant    ? add_pendant(base, x)
                          : kind == StepKind::true_twin ? add_true_twin(base, x)
                                                        : add_false_twin(base, x);
            out.push_back(Child{canonical_form(child), std::move(child), p, kind, x});
          }
        }
      }
    };
    if (chunks <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(work, c);
      for (auto& t : pool) t.join();
    }

    // Deterministic merge: parent order, then operation order; first wins.
    // Interleaved chunks are re-serialised by walking parents in order.
    std::map<std::string, Child*> dedup;
    std::vector<std::size_t> cursor(chunks, 0);
    for (std::size_t p = 0; p < parents; ++p) {
      std::size_t chunk = p % chunks;
      auto& vec = chunk_results[chunk];
      while (cursor[chunk] < vec.size() && vec[cursor[chunk]].parent == p) {
        Child& c = vec[cursor[chunk]++];
        dedup.emplace(c.canonical, &c);
      }
    }

    std::vector<EnumeratedGraph> next;
    next.reserve(dedup.size());
    for (auto& [canon, child] : dedup) {
      EnumeratedGraph e;
      e.graph = std::move(child->graph);
      e.seq = level[child->parent].seq;
      e.seq.steps.push_back(BuildStep{child->kind, n, child->anchor});
      e.seq.original_label.push_back(n);
      e.canonical = canon;
      next.push_back(std::move(e));
    }
    level = std::move(next);
    for (const auto& e : level) emit(e);
  }
}

inline std::vector<EnumeratedGraph> enumerate_dh_collect(int max_n, int jobs = 1) {
  std::vector<EnumeratedGraph> out;
  enumerate_dh(max_n, [&](const EnumeratedGraph& e) { out.push_back(e); }, jobs);
  return out;
}

// --- neighbourhood laws -----------------------------------------------------

// Structural facts about the distance levels around a vertex x that hold in
// every distance-hereditary graph:
//   law 1: vertices of N2(x) connected within G[N2(x) u R] have identical
//          neighbourhoods in N(x);
//   law 2: when N(x) is stable, non-adjacent vertices of N2(x) have
//          non-crossing neighbourhoods in N(x) (disjoint, equal, or nested).
struct NeighborhoodLawViolation {
  int law = 0;  // 1 or 2
  int u = -1;
  int v = -1;
};

inline std::vector<NeighborhoodLawViolation> check_neighborhood_laws(const Graph& g,
                                                                     int x) {
  DistanceDecomposition d = distance_decomposition(g, x);
  std::vector<NeighborhoodLawViolation> out;

  for (VertexSet comp : connected_components(g, d.level2 | d.remainder)) {
    VertexSet in_l2 = comp & d.level2;
    if (set_size(in_l2) < 2) continue;
    int ref = first_vertex(in_l2);
    VertexSet ref_nb = g.neighbors(ref) & d.level1;
    for_each_vertex(in_l2 & ~vbit(ref), [&](int v) {
      if ((g.neighbors(v) & d.level1) != ref_nb)
        out.push_back(NeighborhoodLawViolation{1, ref, v});
    });
  }

  if (is_stable(g, d.level1)) {
    for_each_vertex(d.level2, [&](int u) {
      for_each_vertex(d.level2 & ~((vbit(u) << 1) - 1), [&](int v) {
        if (g.adjacent(u, v)) return;
        VertexSet a = g.neighbors(u) & d.level1;
        VertexSet b = g.neighbors(v) & d.level1;
        bool crossing = (a & b) && (a & ~b) && (b & ~a);
        if (crossing) out.push_back(NeighborhoodLawViolation{2, u, v});
      });
    });
  }
  return out;
}

}  // namespace dhcct

#endif  // DHCCT_DH_HPP
