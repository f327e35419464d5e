#pragma once

// Named polytopes, class predicates and edge-twists.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polylink/belts.hpp"
#include "polylink/embedded_graph.hpp"
#include "polylink/hamiltonian.hpp"
#include "polylink/polytopes.hpp"

namespace polylink {

/// Names: simplex, cube, octahedron, dodecahedron, permutohedron, P8,
/// prism:k, antiprism:k.
inline EmbeddedGraph generate(const std::string& name) {
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 6)
      throw Error(ErrorCode::BadParameter, "bad parameter in '" + name + "'");
    return std::stoi(rest);
  };
  if (name == "simplex") return polytopes::simplex();
  if (name == "cube") return polytopes::cube();
  if (name == "octahedron") return polytopes::octahedron();
  if (name == "dodecahedron") return polytopes::dodecahedron();
  if (name == "permutohedron") return polytopes::permutohedron();
  if (name == "P8") return p8();
  if (auto k = param("prism:")) return polytopes::prism(*k);
  if (auto k = param("antiprism:")) return polytopes::antiprism(*k);
  throw Error(ErrorCode::UnknownName, "unknown polytope '" + name + "'");
}

/// Theta structure on the cube (prism:4 labelling) with hubs at the opposite
/// corners 0 and 6 and matching {1-5, 2-3, 4-7}. Its three circles form
/// Borromean rings.
inline std::pair<EmbeddedGraph, HamiltonianStructure> borromean_cube_theta() {
  EmbeddedGraph q = polytopes::cube();
  std::vector<EdgeId> m;
  for (auto [a, b] : {std::pair{1, 5}, std::pair{2, 3}, std::pair{4, 7}}) m.push_back(*q.find_edge(a, b));
  HamiltonianStructure s = structure_from_matching(q, StructureKind::Theta, std::move(m));
  return {std::move(q), std::move(s)};
}

struct PolytopeClassReport {
  bool polytopal = false;
  bool simple = false;
  bool four_valent = false;
  bool pogorelov = false;
  bool almost_pogorelov = false;
  bool ideal_right_angled = false;
  bool is_p8 = false;
  /// A 3-belt, or a 4-belt (nontrivial if one exists), when present.
  std::optional<Belt> belt_witness;
  /// Why the ideal right-angled test failed, empty otherwise.
  std::string demedial_failure;
};

/// 4-valent, polytopal, and the demedial of the black faces is polytopal.
inline bool ideal_right_angled(const EmbeddedGraph& g, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (!g.is_regular(4)) return fail("not 4-valent");
  if (!is_polytopal(g).verdict) return fail("graph is not polytopal");
  try {
    EmbeddedGraph d = demedial(g, FaceColor::Black);
    auto r = is_polytopal(d);
    if (!r.simple_graph) return fail("demedial graph has multiple edges");
    if (!r.three_connected) return fail("demedial graph is not 3-connected");
  } catch (const Error& e) {
    return fail(std::string("demedial graph fails to build: ") + e.what());
  }
  return true;
}

inline PolytopeClassReport classify(const EmbeddedGraph& g) {
  PolytopeClassReport r;
  r.polytopal = is_polytopal(g).verdict;
  r.simple = r.polytopal && g.is_regular(3);
  r.four_valent = g.is_regular(4);
  if (r.simple) {
    auto b3 = k_belts(g, 3);
    auto b4 = k_belts(g, 4);
    const bool not_simplex = g.num_vertices() != 4;
    const Belt* nontrivial4 = nullptr;
    for (const auto& b : b4) {
      if (!b.trivial) {
        nontrivial4 = &b;
        break;
      }
    }
    r.pogorelov = not_simplex && b3.empty() && b4.empty();
    r.almost_pogorelov = not_simplex && b3.empty() && nontrivial4 == nullptr;
    if (!b3.empty()) r.belt_witness = b3.front();
    else if (nontrivial4) r.belt_witness = *nontrivial4;
    else if (!b4.empty()) r.belt_witness = b4.front();
    r.is_p8 = is_p8(g);
  }
  if (r.four_valent) r.ideal_right_angled = ideal_right_angled(g, &r.demedial_failure);
  else r.demedial_failure = "not 4-valent";
  return r;
}

/// Replaces boundary edges e1, e2 of `face` by a new vertex joined to their
/// four endpoints. Old darts keep their ids and now point at the new vertex,
/// whose darts are appended in face-walk order.
inline EmbeddedGraph edge_twist(const EmbeddedGraph& g, FaceId face, EdgeId e1, EdgeId e2) {
  if (face < 0 || face >= g.num_faces()) throw Error(ErrorCode::NotApplicable, "no such face");
  if (e1 < 0 || e2 < 0 || e1 >= g.num_edges() || e2 >= g.num_edges() || e1 == e2)
    throw Error(ErrorCode::NotApplicable, "need two distinct edges");
  const auto& boundary = g.face_boundary(face);
  auto on_face = [&](EdgeId e) -> Dart {
    for (Dart d : boundary) {
      if (g.edge(d) == e) return d;
    }
    return -1;
  };
  Dart x1 = on_face(e1), x2 = on_face(e2);
  if (x1 < 0 || x2 < 0) throw Error(ErrorCode::NotApplicable, "edges do not bound the face");
  // Walk order: x1 first, then x2.
  int i1 = static_cast<int>(std::find(boundary.begin(), boundary.end(), x1) - boundary.begin());
  int i2 = static_cast<int>(std::find(boundary.begin(), boundary.end(), x2) - boundary.begin());
  if (i2 < i1) std::swap(x1, x2);
  VertexId a = g.tail(x1), b = g.head(x1), c = g.tail(x2), d = g.head(x2);
  std::vector<VertexId> ends{a, b, c, d};
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
    throw Error(ErrorCode::NotApplicable, "edge endpoints are not four distinct vertices");

  const Dart n = g.num_darts();
  std::vector<std::vector<Dart>> rotations;
  for (VertexId v = 0; v < g.num_vertices(); ++v) rotations.push_back(g.rotation(v));
  rotations.push_back({n, n + 1, n + 2, n + 3});
  std::vector<Dart> twin(n + 4);
  for (Dart y = 0; y < n; ++y) twin[y] = g.twin(y);
  const Dart old[4] = {x1, g.twin(x1), x2, g.twin(x2)};
  for (int i = 0; i < 4; ++i) {
    twin[old[i]] = n + i;
    twin[n + i] = old[i];
  }
  EmbeddedGraph out;
  try {
    out = build_dense(std::move(rotations), std::move(twin));
  } catch (const Error& e) {
    throw Error(ErrorCode::ResultNotIdealRA, std::string("twist result is not a planar map: ") + e.what());
  }
  std::string why;
  if (!ideal_right_angled(out, &why)) throw Error(ErrorCode::ResultNotIdealRA, why);
  return out;
}

/// Restricted twists of `face`: the two edges around one middle edge. Listed
/// as (e1, e2) in face-walk order of the middle edge.
inline std::vector<std::pair<EdgeId, EdgeId>> restricted_twist_sites(const EmbeddedGraph& g, FaceId face) {
  std::vector<std::pair<EdgeId, EdgeId>> out;
  const auto& b = g.face_boundary(face);
  const int k = static_cast<int>(b.size());
  if (k < 4) return out;
  for (int i = 0; i < k; ++i) out.emplace_back(g.edge(b[i]), g.edge(b[(i + 2) % k]));
  return out;
}

struct FamilyReport {
  std::vector<EmbeddedGraph> members;
  /// Twist attempts rejected by the ideal right-angled self-check.
  int rejected = 0;
};

/// Antiprisms with at most max_vertices vertices, plus everything reachable
/// from A(4) by restricted twists within the bound, one per isomorphism class.
/// Ordered by vertex count, then canonical code.
inline FamilyReport ideal_ra_family(int max_vertices) {
  if (max_vertices < 6) throw Error(ErrorCode::BadParameter, "max_vertices must be at least 6");
  std::map<std::pair<int, std::vector<int>>, EmbeddedGraph> seen;
  FamilyReport r;
  auto add = [&](EmbeddedGraph g) {
    auto key = std::pair{g.num_vertices(), canonical_code(g)};
    return seen.emplace(std::move(key), std::move(g)).second;
  };
  for (int k = 3; 2 * k <= max_vertices; ++k) add(polytopes::antiprism(k));
  if (max_vertices >= 8) {
    std::vector<EmbeddedGraph> frontier{polytopes::antiprism(4)};
    while (!frontier.empty()) {
      std::vector<EmbeddedGraph> next;
      for (const auto& g : frontier) {
        if (g.num_vertices() + 1 > max_vertices) continue;
        for (FaceId f = 0; f < g.num_faces(); ++f) {
          for (auto [e1, e2] : restricted_twist_sites(g, f)) {
            try {
              EmbeddedGraph t = edge_twist(g, f, e1, e2);
              if (add(t)) next.push_back(std::move(t));
            } catch (const Error& e) {
              if (e.code() != ErrorCode::ResultNotIdealRA) throw;
              ++r.rejected;
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }
  for (auto& [_, g] : seen) r.members.push_back(std::move(g));
  return r;
}

}  // namespace polylink
