#pragma once

// Hamiltonian cycles, theta-graphs and K4-graphs on simple polytopes, stored
// through their complementary matchings.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polylink/atrails.hpp"
#include "polylink/belts.hpp"
#include "polylink/embedded_graph.hpp"
#include "polylink/polytopes.hpp"

namespace polylink {

struct HamiltonianStructure {
  StructureKind kind = StructureKind::Cycle;
  std::vector<VertexId> hubs;  // sorted
  /// cycle: one closed vertex path (first vertex not repeated). theta/k4:
  /// hub-to-hub vertex paths including both hubs, sorted.
  std::vector<std::vector<VertexId>> paths;
  std::vector<EdgeId> matching;         // sorted
  std::vector<EdgeId> structure_edges;  // sorted complement of matching

  /// Index of the path through v (-1 for hubs).
  std::vector<int> path_of;
  /// Position of v along its path.
  std::vector<int> position;
};

/// Validates a matching on a cubic graph and derives the structure it leaves.
/// On failure returns nullopt and writes the reason into `why` when given.
inline std::optional<HamiltonianStructure> try_structure_from_matching(const EmbeddedGraph& q, StructureKind kind,
                                                                       std::vector<EdgeId> matching,
                                                                       std::string* why = nullptr) {
  auto fail = [&](std::string msg) -> std::optional<HamiltonianStructure> {
    if (why) *why = std::move(msg);
    return std::nullopt;
  };
  if (!q.is_regular(3)) return fail("structures live on 3-valent graphs");
  const int n = q.num_vertices();
  std::sort(matching.begin(), matching.end());
  if (std::adjacent_find(matching.begin(), matching.end()) != matching.end()) return fail("repeated matching edge");
  std::vector<char> covered(n, 0), in_matching(q.num_edges(), 0);
  for (EdgeId e : matching) {
    if (e < 0 || e >= q.num_edges()) return fail("matching edge " + std::to_string(e) + " out of range");
    in_matching[e] = 1;
    for (VertexId v : q.endpoints(e)) {
      if (covered[v]) return fail("matching edges meet at vertex " + std::to_string(v));
      covered[v] = 1;
    }
  }
  HamiltonianStructure s;
  s.kind = kind;
  s.matching = matching;
  for (EdgeId e = 0; e < q.num_edges(); ++e) {
    if (!in_matching[e]) s.structure_edges.push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!covered[v]) s.hubs.push_back(v);
  }
  if (static_cast<int>(s.hubs.size()) != hub_count(kind))
    return fail(std::to_string(s.hubs.size()) + " unmatched vertices, kind " + std::string(to_string(kind)) +
                " needs " + std::to_string(hub_count(kind)));

  // Next structure dart after arriving at head(d).
  auto continue_from = [&](Dart d) {
    Dart t = q.twin(d);
    for (Dart x : q.rotation(q.tail(t))) {
      if (x != t && !in_matching[q.edge(x)]) return x;
    }
    return Dart{-1};
  };
  s.path_of.assign(n, -1);
  s.position.assign(n, -1);
  if (kind == StructureKind::Cycle) {
    // Start at vertex 0 towards its smaller structure neighbour.
    Dart first = -1;
    for (Dart x : q.rotation(0)) {
      if (in_matching[q.edge(x)]) continue;
      if (first == -1 || q.head(x) < q.head(first)) first = x;
    }
    std::vector<VertexId> cyc{0};
    for (Dart d = first; q.head(d) != 0; d = continue_from(d)) {
      if (static_cast<int>(cyc.size()) >= n) return fail("structure is not a single cycle");
      cyc.push_back(q.head(d));
    }
    if (static_cast<int>(cyc.size()) != n) return fail("structure cycle misses vertices");
    for (int i = 0; i < n; ++i) {
      s.path_of[cyc[i]] = 0;
      s.position[cyc[i]] = i;
    }
    s.paths.push_back(std::move(cyc));
    return s;
  }

  std::vector<char> is_hub(n, 0);
  for (VertexId h : s.hubs) is_hub[h] = 1;
  std::vector<std::vector<VertexId>> paths;
  std::vector<int> seen(n, 0);
  for (VertexId h : s.hubs) {
    for (Dart d : q.rotation(h)) {
      std::vector<VertexId> p{h};
      Dart x = d;
      while (!is_hub[q.head(x)]) {
        p.push_back(q.head(x));
        if (static_cast<int>(p.size()) > n) return fail("structure path does not end");
        x = continue_from(x);
      }
      p.push_back(q.head(x));
      if (p.back() == h) return fail("structure path returns to hub " + std::to_string(h));
      if (p.front() < p.back()) paths.push_back(std::move(p));
    }
  }
  std::sort(paths.begin(), paths.end());
  const int k = static_cast<int>(s.hubs.size());
  std::vector<int> pair_count(k * k, 0);
  auto hub_index = [&](VertexId v) { return static_cast<int>(std::find(s.hubs.begin(), s.hubs.end(), v) - s.hubs.begin()); };
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    ++pair_count[hub_index(paths[i].front()) * k + hub_index(paths[i].back())];
    for (int j = 1; j + 1 < static_cast<int>(paths[i].size()); ++j) {
      VertexId v = paths[i][j];
      if (seen[v]++) return fail("paths meet at vertex " + std::to_string(v));
      s.path_of[v] = i;
      s.position[v] = j;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!is_hub[v] && !seen[v]) return fail("vertex " + std::to_string(v) + " lies on a closed structure component");
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      int expected = kind == StructureKind::Theta ? 3 : 1;
      if (pair_count[a * k + b] != expected) return fail("paths do not realize the " + std::string(to_string(kind)) + " pattern");
    }
  }
  s.paths = std::move(paths);
  return s;
}

inline HamiltonianStructure structure_from_matching(const EmbeddedGraph& q, StructureKind kind,
                                                    std::vector<EdgeId> matching) {
  std::string why;
  auto s = try_structure_from_matching(q, kind, std::move(matching), &why);
  if (!s) throw Error(ErrorCode::InvalidStructure, why);
  return std::move(*s);
}

/// Hub (theta/k4) positions: distance of v from hub h along its path, or -1
/// when v's path does not end at h.
inline int distance_from_hub(const HamiltonianStructure& s, VertexId h, VertexId v) {
  const auto& p = s.paths[s.path_of[v]];
  if (p.front() == h) return s.position[v];
  if (p.back() == h) return static_cast<int>(p.size()) - 1 - s.position[v];
  return -1;
}

// ---------------------------------------------------------------------------
// Vertex splitting and its inverse.

struct SplitResult {
  EmbeddedGraph graph;
  HamiltonianStructure structure;
  /// Q-vertex -> P-vertex.
  std::vector<VertexId> origin;
  /// P-vertex -> new Q edge (-1 at 3-valent vertices).
  std::vector<EdgeId> new_edge;
};

/// Substitutes each 4-valent vertex by an edge separating its two transition
/// pairs. Darts of P keep their ids in Q; Q vertices follow P's order with
/// each split vertex becoming two consecutive ids.
inline SplitResult split_vertices(const EmbeddedGraph& p, const TransitionSystem& ts, StructureKind kind) {
  const int d0 = p.num_darts();
  std::vector<std::vector<Dart>> rotations;
  std::vector<Dart> twin(d0);
  for (Dart d = 0; d < d0; ++d) twin[d] = p.twin(d);
  SplitResult r;
  std::vector<Dart> first_new(p.num_vertices(), -1);
  for (VertexId v = 0; v < p.num_vertices(); ++v) {
    if (p.degree(v) != 4) {
      r.origin.push_back(v);
      rotations.push_back(p.rotation(v));
      continue;
    }
    if (v >= static_cast<VertexId>(ts.choice.size()))
      throw Error(ErrorCode::InvalidStructure, "transition system too short");
    Dart n1 = static_cast<Dart>(twin.size());
    twin.push_back(n1 + 1);
    twin.push_back(n1);
    first_new[v] = n1;
    auto pairs = transition_pairs(p, v, ts.choice[v]);
    rotations.push_back({pairs[0].first, pairs[0].second, n1});
    rotations.push_back({pairs[1].first, pairs[1].second, n1 + 1});
    r.origin.push_back(v);
    r.origin.push_back(v);
  }
  r.graph = build_dense(std::move(rotations), std::move(twin));
  r.new_edge.assign(p.num_vertices(), -1);
  std::vector<EdgeId> matching;
  for (VertexId v = 0; v < p.num_vertices(); ++v) {
    if (first_new[v] != -1) {
      r.new_edge[v] = r.graph.edge(first_new[v]);
      matching.push_back(r.new_edge[v]);
    }
  }
  r.structure = structure_from_matching(r.graph, kind, std::move(matching));
  return r;
}

inline SplitResult split_vertices(const EmbeddedGraph& p, const ATrail& t) {
  if (!p.is_regular(4)) throw Error(ErrorCode::NotFourValent, "A-trail splitting needs a 4-valent graph");
  return split_vertices(p, t.transitions, StructureKind::Cycle);
}

inline SplitResult split_vertices(const EmbeddedGraph& p, const EulerArcs& a) {
  return split_vertices(p, a.transitions, a.kind);
}

struct ContractResult {
  GraphMorph morph;
  /// Transitions induced at the 4-valent vertices of the contracted graph.
  TransitionSystem transitions;
};

/// Shrinks every matching edge to a point.
inline ContractResult contract_matching(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  ContractResult r;
  try {
    r.morph = contract_edges(q, s.matching);
  } catch (const Error& e) {
    throw Error(ErrorCode::DegenerateContraction, std::string("contraction is not a planar graph: ") + e.what());
  }
  const EmbeddedGraph& p = r.morph.graph;
  if (has_multi_edges(p)) throw Error(ErrorCode::DegenerateContraction, "contraction creates a bigon");
  r.transitions.choice.assign(p.num_vertices(), 0);
  for (EdgeId e : s.matching) {
    Dart m = q.edge_darts(e)[0];
    std::vector<Dart> others;
    for (Dart x : q.rotation(q.tail(m))) {
      if (x != m) others.push_back(r.morph.dart_map[x]);
    }
    VertexId w = r.morph.vertex_map[q.tail(m)];
    int c = choice_pairing(p, w, others[0], others[1]);
    if (c < 0) throw Error(ErrorCode::InvalidStructure, "contracted transition crosses itself");
    r.transitions.choice[w] = static_cast<std::uint8_t>(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Quadrangles and ideal vertices.

inline std::vector<FaceId> faces_of_size(const EmbeddedGraph& g, int k) {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (g.face_size(f) == k) out.push_back(f);
  }
  return out;
}

inline EmbeddedGraph shrink_quadrangles(const EmbeddedGraph& q) {
  auto quads = faces_of_size(q, 4);
  std::vector<char> used(q.num_vertices(), 0);
  for (FaceId f : quads) {
    for (VertexId v : q.face_vertices(f)) {
      if (used[v]) throw Error(ErrorCode::OverlappingQuadrangles, "quadrangles share vertex " + std::to_string(v));
      used[v] = 1;
    }
  }
  return contract_faces(q, quads).graph;
}

inline EmbeddedGraph cut_ideal_vertices(const EmbeddedGraph& p) {
  std::vector<VertexId> ideal;
  for (VertexId v = 0; v < p.num_vertices(); ++v) {
    if (p.degree(v) == 4) ideal.push_back(v);
  }
  if (ideal.empty()) throw Error(ErrorCode::NotApplicable, "no 4-valent vertices to cut");
  return truncate_vertices(p, ideal).graph;
}

// ---------------------------------------------------------------------------
// Conjugated matching edges of a Hamiltonian cycle.

inline bool edges_conjugated(const EmbeddedGraph& q, const HamiltonianStructure& s, EdgeId e1, EdgeId e2) {
  auto [a, b] = q.endpoints(e1);
  auto [c, d] = q.endpoints(e2);
  int pa = s.position[a], pb = s.position[b];
  if (pa > pb) std::swap(pa, pb);
  auto inside = [&](VertexId v) { return pa < s.position[v] && s.position[v] < pb; };
  return inside(c) != inside(d);
}

inline std::vector<std::pair<EdgeId, EdgeId>> conjugated_edges(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  if (s.kind != StructureKind::Cycle) throw Error(ErrorCode::WrongKind, "conjugated edges need a Hamiltonian cycle");
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (std::size_t i = 0; i < s.matching.size(); ++i) {
    for (std::size_t j = i + 1; j < s.matching.size(); ++j) {
      if (edges_conjugated(q, s, s.matching[i], s.matching[j])) out.emplace_back(s.matching[i], s.matching[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Image of an edge set under a map automorphism, sorted.
inline std::vector<EdgeId> map_edges(const EmbeddedGraph& g, const Automorphism& a, const std::vector<EdgeId>& edges) {
  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(g.edge(a.dart_map[g.edge_darts(e)[0]]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycles: each quadrangle has exactly three structure edges. Theta/K4: each
/// quadrangle has a matching edge meeting it in exactly one vertex.
inline bool quad_condition(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  std::vector<char> in_matching(q.num_edges(), 0);
  for (EdgeId e : s.matching) in_matching[e] = 1;
  for (FaceId f : faces_of_size(q, 4)) {
    if (s.kind == StructureKind::Cycle) {
      int on_structure = 0;
      for (Dart d : q.face_boundary(f)) on_structure += !in_matching[q.edge(d)];
      if (on_structure != 3) return false;
      continue;
    }
    std::vector<char> on_face(q.num_vertices(), 0);
    for (VertexId v : q.face_vertices(f)) on_face[v] = 1;
    bool touched = false;
    for (EdgeId e : s.matching) {
      auto [a, b] = q.endpoints(e);
      if (on_face[a] != on_face[b]) touched = true;
    }
    if (!touched) return false;
  }
  return true;
}

namespace detail {

// Backtracks over matchings: the lowest undecided vertex is either matched to
// an undecided neighbour or made a hub.
template <typename Visit>
void enumerate_matchings(const EmbeddedGraph& q, int hubs_needed, Visit&& visit) {
  const int n = q.num_vertices();
  std::vector<char> decided(n, 0);
  std::vector<EdgeId> matching;
  int hubs = 0;
  auto rec = [&](auto&& self, VertexId from) -> void {
    VertexId v = from;
    while (v < n && decided[v]) ++v;
    if (v == n) {
      if (hubs == hubs_needed) visit(matching);
      return;
    }
    decided[v] = 1;
    for (Dart d : q.rotation(v)) {
      VertexId w = q.head(d);
      if (decided[w]) continue;
      decided[w] = 1;
      matching.push_back(q.edge(d));
      self(self, v + 1);
      matching.pop_back();
      decided[w] = 0;
    }
    if (hubs < hubs_needed) {
      ++hubs;
      self(self, v + 1);
      --hubs;
    }
    decided[v] = 0;
  };
  rec(rec, 0);
}

}  // namespace detail

struct HamiltonianQuery {
  StructureKind kind = StructureKind::Cycle;
  bool up_to_symmetry = false;
  bool quad_condition = false;
  /// Set by the caller when q is P8 (adds the pentagon-edge clause for theta/k4).
  bool is_p8 = false;
};

/// Common edges of two pentagons.
inline std::vector<EdgeId> pentagon_pentagon_edges(const EmbeddedGraph& q) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < q.num_edges(); ++e) {
    auto [d, t] = q.edge_darts(e);
    if (q.face_size(q.face(d)) == 5 && q.face_size(q.face(t)) == 5) out.push_back(e);
  }
  return out;
}

/// All structures of the requested kind, sorted by matching.
inline std::vector<HamiltonianStructure> enumerate_hamiltonian(const EmbeddedGraph& q, const HamiltonianQuery& query) {
  if (!is_simple_polytope(q)) throw Error(ErrorCode::NotSimplePolytope, "Hamiltonian structures need a simple polytope");
  const std::uint64_t cap = search_cap();
  std::vector<EdgeId> pp_edges;
  if (query.is_p8) pp_edges = pentagon_pentagon_edges(q);
  std::vector<HamiltonianStructure> found;
  detail::enumerate_matchings(q, hub_count(query.kind), [&](const std::vector<EdgeId>& m) {
    auto s = try_structure_from_matching(q, query.kind, m);
    if (!s) return;
    if (query.quad_condition) {
      if (!quad_condition(q, *s)) return;
      if (query.is_p8 && query.kind != StructureKind::Cycle) {
        bool hit = std::any_of(pp_edges.begin(), pp_edges.end(), [&](EdgeId e) {
          return std::binary_search(s->matching.begin(), s->matching.end(), e);
        });
        if (!hit) return;
      }
    }
    found.push_back(std::move(*s));
    if (found.size() > cap) throw Error(ErrorCode::TooLarge, "more structures than POLYLINK_MAX_SEARCH");
  });
  std::sort(found.begin(), found.end(),
            [](const HamiltonianStructure& a, const HamiltonianStructure& b) { return a.matching < b.matching; });
  if (!query.up_to_symmetry) return found;
  auto group = automorphisms(q);
  std::vector<HamiltonianStructure> reps;
  for (auto& s : found) {
    bool minimal = std::all_of(group.begin(), group.end(),
                               [&](const Automorphism& a) { return !(map_edges(q, a, s.matching) < s.matching); });
    if (minimal) reps.push_back(std::move(s));
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Cutting off hubs and the reduction to the simplex.

struct CutResult {
  EmbeddedGraph graph;
  HamiltonianStructure structure;
  GraphMorph morph;
};

/// Truncates hub v; the new triangle edge lying in `face` joins the matching.
inline CutResult cut_vertex(const EmbeddedGraph& q, const HamiltonianStructure& s, VertexId v, FaceId face) {
  if (s.kind == StructureKind::Cycle) throw Error(ErrorCode::WrongKind, "cutting needs a theta or K4 structure");
  if (!std::binary_search(s.hubs.begin(), s.hubs.end(), v))
    throw Error(ErrorCode::NotHub, "vertex " + std::to_string(v) + " is not a hub");
  const auto& rot = q.rotation(v);
  int j = -1;
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (q.face(rot[i]) == face) j = i;
  }
  if (j < 0) throw Error(ErrorCode::BadFace, "face " + std::to_string(face) + " does not contain vertex " + std::to_string(v));
  CutResult r;
  r.morph = truncate_vertices(q, {v});
  r.graph = r.morph.graph;
  std::vector<EdgeId> matching;
  for (EdgeId e : s.matching) matching.push_back(r.graph.edge(r.morph.dart_map[q.edge_darts(e)[0]]));
  matching.push_back(r.graph.edge(r.morph.corner_darts[v][j]));
  r.structure = structure_from_matching(r.graph, s.kind, std::move(matching));
  return r;
}

/// One inverse cut: apply cut_vertex(graph, structure, hub, face) to the
/// smaller pair to obtain the larger one.
struct CutMove {
  VertexId hub;
  FaceId face;
};

struct ReductionResult {
  bool reducible = false;
  /// Moves from the final (smallest) pair back up to the input. Replaying them
  /// with cut_vertex from the final pair rebuilds the input up to isomorphism.
  std::vector<CutMove> sequence;
  EmbeddedGraph final_graph;
  HamiltonianStructure final_structure;
};

/// Isomorphism a -> b carrying the matching of sa onto the matching of sb.
inline std::optional<Automorphism> structure_isomorphism(const EmbeddedGraph& a, const HamiltonianStructure& sa,
                                                         const EmbeddedGraph& b, const HamiltonianStructure& sb) {
  if (sa.kind != sb.kind || sa.matching.size() != sb.matching.size()) return std::nullopt;
  for (auto& iso : isomorphisms(a, b)) {
    bool ok = std::all_of(sa.matching.begin(), sa.matching.end(), [&](EdgeId e) {
      return std::binary_search(sb.matching.begin(), sb.matching.end(), b.edge(iso.dart_map[a.edge_darts(e)[0]]));
    });
    if (ok) return iso;
  }
  return std::nullopt;
}

/// The same cut expressed in b's labels.
inline CutMove map_move(const EmbeddedGraph& a, const EmbeddedGraph& b, const Automorphism& iso, CutMove mv) {
  const VertexId hub = b.tail(iso.dart_map[a.rotation(mv.hub).front()]);
  std::vector<VertexId> image;
  for (VertexId v : a.face_vertices(mv.face)) image.push_back(b.tail(iso.dart_map[a.rotation(v).front()]));
  std::sort(image.begin(), image.end());
  for (Dart d : b.rotation(hub)) {
    auto vs = b.face_vertices(b.face(d));
    std::sort(vs.begin(), vs.end());
    if (vs == image) return {hub, b.face(d)};
  }
  throw Error(ErrorCode::BadFace, "face image not found at the hub");
}

/// Repeatedly shrinks the triangle formed by a hub and the lowest-id matching
/// edge adjacent to it; reducible iff this reaches the simplex.
inline ReductionResult reduce_to_simplex(const EmbeddedGraph& q0, const HamiltonianStructure& s0) {
  if (s0.kind == StructureKind::Cycle) throw Error(ErrorCode::WrongKind, "reduction needs a theta or K4 structure");
  EmbeddedGraph q = q0;
  HamiltonianStructure s = s0;
  std::vector<CutMove> moves;
  // stages[i] is the pair that moves[i] applies to.
  std::vector<std::pair<EmbeddedGraph, HamiltonianStructure>> stages;
  while (q.num_vertices() > 4) {
    FaceId tri = -1;
    EdgeId chosen = -1;
    Dart inner = -1;
    for (EdgeId e : s.matching) {
      for (Dart d : q.edge_darts(e)) {
        if (q.face_size(q.face(d)) != 3) continue;
        if (std::binary_search(s.hubs.begin(), s.hubs.end(), q.head(q.face_next(d)))) {
          tri = q.face(d);
          chosen = e;
          inner = d;
          break;
        }
      }
      if (tri != -1) break;
    }
    if (tri == -1) break;
    // A dart of the face across the matching edge that survives the contraction.
    Dart outer_witness = q.face_next(q.twin(inner));
    GraphMorph m = contract_faces(q, {tri});
    std::vector<EdgeId> matching;
    for (EdgeId e : s.matching) {
      if (e != chosen) matching.push_back(m.graph.edge(m.dart_map[q.edge_darts(e)[0]]));
    }
    VertexId merged = m.vertex_map[q.tail(inner)];
    HamiltonianStructure next = structure_from_matching(m.graph, s.kind, std::move(matching));
    moves.push_back({merged, m.graph.face(m.dart_map[outer_witness])});
    stages.emplace_back(m.graph, next);
    q = std::move(m.graph);
    s = std::move(next);
  }
  ReductionResult r;
  r.reducible = q.num_vertices() == 4;
  r.final_graph = q;
  r.final_structure = s;
  // The moves refer to the contracted graphs; cut_vertex labels its output
  // differently, so carry each move over to the graph the replay produces.
  std::reverse(moves.begin(), moves.end());
  std::reverse(stages.begin(), stages.end());
  EmbeddedGraph rq = std::move(q);
  HamiltonianStructure rs = std::move(s);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const auto& [hq, hs] = stages[i];
    CutMove mv = moves[i];
    if (i > 0) {
      auto iso = structure_isomorphism(hq, hs, rq, rs);
      if (!iso) throw Error(ErrorCode::InvalidStructure, "reduction replay lost track of the structure");
      mv = map_move(hq, rq, *iso, mv);
    }
    r.sequence.push_back(mv);
    CutResult c = cut_vertex(rq, rs, mv.hub, mv.face);
    rq = std::move(c.graph);
    rs = std::move(c.structure);
  }
  return r;
}

// ---------------------------------------------------------------------------
// P8.

/// The octahedron splitting with a 4-belt of pentagons that surrounds no face.
/// Exactly one of the two A-trail classes produces it.
inline EmbeddedGraph p8() {
  const EmbeddedGraph oct = polytopes::octahedron();
  std::vector<EmbeddedGraph> hits;
  for (const auto& t : enumerate_atrails(oct, true)) {
    EmbeddedGraph q = split_vertices(oct, t).graph;
    for (const auto& b : k_belts(q, 4)) {
      bool pentagons = std::all_of(b.faces.begin(), b.faces.end(), [&](FaceId f) { return q.face_size(f) == 5; });
      if (pentagons && !b.trivial) {
        hits.push_back(std::move(q));
        break;
      }
    }
  }
  if (hits.size() != 1) throw Error(ErrorCode::InvalidStructure, "P8 is not unique among octahedron splittings");
  return std::move(hits.front());
}

inline bool is_p8(const EmbeddedGraph& g) {
  return g.num_faces() == 8 && g.num_vertices() == 12 && isomorphic(g, p8());
}

}  // namespace polylink
