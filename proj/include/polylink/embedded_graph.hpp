#pragma once

// Planar rotation systems: darts, twin involution and counterclockwise vertex
// rotations. Faces are the orbits of face_next(d) = rotate_cw(twin(d)), so the
// face of a dart is the one on its left.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "polylink/error.hpp"

namespace polylink {

using Dart = int;
using VertexId = int;
using EdgeId = int;
using FaceId = int;

class EmbeddedGraph;
EmbeddedGraph build_dense(std::vector<std::vector<Dart>> rotations, std::vector<Dart> twin_of);

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  int num_darts() const { return static_cast<int>(twin_.size()); }
  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  Dart twin(Dart d) const { return twin_[d]; }
  Dart rotate_ccw(Dart d) const { return ccw_[d]; }
  Dart rotate_cw(Dart d) const { return cw_[d]; }
  Dart face_next(Dart d) const { return cw_[twin_[d]]; }
  Dart face_prev(Dart d) const { return twin_[ccw_[d]]; }

  VertexId tail(Dart d) const { return tail_[d]; }
  VertexId head(Dart d) const { return tail_[twin_[d]]; }
  EdgeId edge(Dart d) const { return edge_[d]; }
  FaceId face(Dart d) const { return face_[d]; }

  /// Darts of an edge, smaller id first.
  const std::array<Dart, 2>& edge_darts(EdgeId e) const { return edge_darts_[e]; }
  std::array<VertexId, 2> endpoints(EdgeId e) const {
    return {tail_[edge_darts_[e][0]], tail_[edge_darts_[e][1]]};
  }
  VertexId other_end(EdgeId e, VertexId v) const {
    auto ends = endpoints(e);
    return ends[0] == v ? ends[1] : ends[0];
  }

  /// Counterclockwise rotation at v, starting at its smallest dart.
  const std::vector<Dart>& rotation(VertexId v) const { return rotations_[v]; }
  /// Boundary walk of f, starting at its smallest dart.
  const std::vector<Dart>& face_boundary(FaceId f) const { return faces_[f]; }

  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  int face_size(FaceId f) const { return static_cast<int>(faces_[f].size()); }

  std::vector<VertexId> face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    out.reserve(faces_[f].size());
    for (Dart d : faces_[f]) out.push_back(tail_[d]);
    return out;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (Dart d : rotations_[v]) out.push_back(head(d));
    return out;
  }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    for (Dart d : rotations_[u]) {
      if (head(d) == v) return edge_[d];
    }
    return std::nullopt;
  }

  bool is_regular(int k) const {
    return std::all_of(rotations_.begin(), rotations_.end(),
                       [k](const auto& r) { return static_cast<int>(r.size()) == k; });
  }

  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces(); }

 private:
  friend EmbeddedGraph build_dense(std::vector<std::vector<Dart>> rotations, std::vector<Dart> twin_of);

  std::vector<std::vector<Dart>> rotations_;
  std::vector<Dart> twin_;
  std::vector<Dart> ccw_;
  std::vector<Dart> cw_;
  std::vector<VertexId> tail_;
  std::vector<EdgeId> edge_;
  std::vector<std::array<Dart, 2>> edge_darts_;
  std::vector<FaceId> face_;
  std::vector<std::vector<Dart>> faces_;
};

/// Builds from rotations over darts 0..n-1 and a twin table. Vertex ids follow
/// the order of `rotations`.
inline EmbeddedGraph build_dense(std::vector<std::vector<Dart>> rotations, std::vector<Dart> twin_of) {
  EmbeddedGraph g;
  const int n = static_cast<int>(twin_of.size());
  g.tail_.assign(n, -1);
  g.ccw_.assign(n, -1);
  g.cw_.assign(n, -1);
  for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
    auto& rot = rotations[v];
    if (rot.empty()) throw Error(ErrorCode::EulerViolation, "isolated vertex " + std::to_string(v));
    for (std::size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d < 0 || d >= n) throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " has no twin");
      if (g.tail_[d] != -1) throw Error(ErrorCode::MalformedInput, "dart " + std::to_string(d) + " in two rotations");
      g.tail_[d] = v;
      g.ccw_[d] = rot[(i + 1) % rot.size()];
      g.cw_[d] = rot[(i + rot.size() - 1) % rot.size()];
    }
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
  }
  for (Dart d = 0; d < n; ++d) {
    if (g.tail_[d] == -1) throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " lies in no rotation");
    Dart t = twin_of[d];
    if (t < 0 || t >= n || t == d || twin_of[t] != d)
      throw Error(ErrorCode::MalformedInput, "twin table is not a fixed-point-free involution");
    if (g.tail_[t] == g.tail_[d]) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(g.tail_[d]));
  }
  g.rotations_ = std::move(rotations);
  g.twin_ = std::move(twin_of);

  g.edge_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (g.edge_[d] != -1) continue;
    EdgeId e = static_cast<EdgeId>(g.edge_darts_.size());
    g.edge_[d] = g.edge_[g.twin_[d]] = e;
    g.edge_darts_.push_back({d, g.twin_[d]});
  }

  g.face_.assign(n, -1);
  for (Dart d = 0; d < n; ++d) {
    if (g.face_[d] != -1) continue;
    FaceId f = static_cast<FaceId>(g.faces_.size());
    std::vector<Dart> walk;
    for (Dart x = d; g.face_[x] == -1; x = g.face_next(x)) {
      g.face_[x] = f;
      walk.push_back(x);
    }
    g.faces_.push_back(std::move(walk));
  }

  // Connectivity over vertices.
  const int nv = g.num_vertices();
  if (nv > 0) {
    std::vector<char> seen(nv, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart x : g.rotations_[v]) {
        VertexId w = g.head(x);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != nv) throw Error(ErrorCode::EulerViolation, "graph is disconnected");
  }
  if (g.euler_characteristic() != 2) {
    throw Error(ErrorCode::EulerViolation,
                "V - E + F = " + std::to_string(g.euler_characteristic()) + ", expected 2");
  }
  return g;
}

/// Result of building from arbitrary dart ids: `relabel` maps each input id to
/// its dense id (order preserving).
struct RelabeledGraph {
  EmbeddedGraph graph;
  std::map<Dart, Dart> relabel;
};

inline RelabeledGraph build_relabeled(const std::vector<std::vector<Dart>>& rotations,
                                      const std::vector<std::pair<Dart, Dart>>& twin_pairs) {
  std::map<Dart, Dart> ids;
  for (const auto& rot : rotations) {
    for (Dart d : rot) {
      if (d < 0) throw Error(ErrorCode::MalformedInput, "negative dart id");
      if (!ids.emplace(d, 0).second)
        throw Error(ErrorCode::MalformedInput, "dart " + std::to_string(d) + " in two rotations");
    }
  }
  std::map<Dart, Dart> pair_of;
  for (auto [a, b] : twin_pairs) {
    if (a == b) throw Error(ErrorCode::MalformedInput, "dart " + std::to_string(a) + " is its own twin");
    if (!pair_of.emplace(a, b).second || !pair_of.emplace(b, a).second)
      throw Error(ErrorCode::MalformedInput, "dart listed in two twin pairs");
  }
  for (const auto& [d, _] : ids) {
    if (!pair_of.count(d)) throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " has no twin");
  }
  for (const auto& [d, _] : pair_of) {
    if (!ids.count(d)) throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " lies in no rotation");
  }
  Dart next = 0;
  for (auto& [d, dense] : ids) dense = next++;

  std::vector<std::vector<Dart>> dense_rot;
  dense_rot.reserve(rotations.size());
  for (const auto& rot : rotations) {
    std::vector<Dart> r;
    r.reserve(rot.size());
    for (Dart d : rot) r.push_back(ids.at(d));
    dense_rot.push_back(std::move(r));
  }
  std::vector<Dart> twin_of(ids.size());
  for (const auto& [d, dense] : ids) twin_of[dense] = ids.at(pair_of.at(d));
  return {build_dense(std::move(dense_rot), std::move(twin_of)), std::move(ids)};
}

/// Validated construction from counterclockwise rotations and twin pairs.
inline EmbeddedGraph build(const std::vector<std::vector<Dart>>& rotations,
                           const std::vector<std::pair<Dart, Dart>>& twin_pairs) {
  return build_relabeled(rotations, twin_pairs).graph;
}

/// Builds a graph from face boundary cycles given as vertex lists. Faces may be
/// listed in either orientation; they are made coherent starting from face 0.
/// Dart 2e runs from the smaller to the larger endpoint of the e-th edge in
/// (min, max) order, and dart 2e+1 is its twin.
inline EmbeddedGraph from_faces(int num_vertices, std::vector<std::vector<VertexId>> faces) {
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const auto& c = faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) {
      int u = c[i], v = c[(i + 1) % c.size()];
      edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  }
  for (const auto& [e, fs] : edge_faces) {
    if (fs.size() != 2) throw Error(ErrorCode::MalformedInput, "edge not shared by exactly two faces");
  }
  auto has_directed = [&](int f, int u, int v) {
    const auto& c = faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == u && c[(i + 1) % c.size()] == v) return true;
    }
    return false;
  };
  std::vector<char> oriented(faces.size(), 0);
  std::queue<int> todo;
  if (!faces.empty()) {
    oriented[0] = 1;
    todo.push(0);
  }
  while (!todo.empty()) {
    int f = todo.front();
    todo.pop();
    const auto c = faces[f];
    for (std::size_t i = 0; i < c.size(); ++i) {
      int u = c[i], v = c[(i + 1) % c.size()];
      const auto& fs = edge_faces[{std::min(u, v), std::max(u, v)}];
      int g = fs[0] == f ? fs[1] : fs[0];
      if (oriented[g]) {
        if (has_directed(g, u, v)) throw Error(ErrorCode::MalformedInput, "faces cannot be oriented coherently");
        continue;
      }
      if (has_directed(g, u, v)) std::reverse(faces[g].begin(), faces[g].end());
      oriented[g] = 1;
      todo.push(g);
    }
  }

  std::map<std::pair<int, int>, Dart> dart_of;
  int e = 0;
  for (const auto& [key, _] : edge_faces) {
    dart_of[{key.first, key.second}] = 2 * e;
    dart_of[{key.second, key.first}] = 2 * e + 1;
    ++e;
  }
  const int n = 2 * e;
  std::vector<Dart> ccw(n, -1), twin(n);
  for (Dart d = 0; d < n; ++d) twin[d] = d ^ 1;
  std::vector<VertexId> tail(n, -1);
  for (const auto& c : faces) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int prev = c[(i + c.size() - 1) % c.size()], cur = c[i], next = c[(i + 1) % c.size()];
      Dart in = dart_of.at({prev, cur});
      Dart out = dart_of.at({cur, next});
      ccw[out] = twin[in];
      tail[out] = cur;
    }
  }
  std::vector<std::vector<Dart>> rotations(num_vertices);
  std::vector<char> used(n, 0);
  for (Dart d = 0; d < n; ++d) {
    if (used[d]) continue;
    VertexId v = tail[d];
    if (v < 0 || v >= num_vertices) throw Error(ErrorCode::MalformedInput, "vertex id out of range");
    if (!rotations[v].empty()) throw Error(ErrorCode::MalformedInput, "vertex link is not a single cycle");
    for (Dart x = d; !used[x]; x = ccw[x]) {
      used[x] = 1;
      rotations[v].push_back(x);
    }
  }
  return build_dense(std::move(rotations), std::move(twin));
}

inline EmbeddedGraph dual(const EmbeddedGraph& g) {
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(g.num_faces());
  for (FaceId f = 0; f < g.num_faces(); ++f) rotations.push_back(g.face_boundary(f));
  std::vector<Dart> twin(g.num_darts());
  for (Dart d = 0; d < g.num_darts(); ++d) twin[d] = g.twin(d);
  return build_dense(std::move(rotations), std::move(twin));
}

/// Medial graph. Vertex e corresponds to edge e of g. For each dart x the
/// medial edge joining edge(x) and edge(face_next(x)) has darts 2x (at edge(x))
/// and 2x+1.
inline EmbeddedGraph medial(const EmbeddedGraph& g) {
  const int n = g.num_darts();
  auto face_prev = [&](Dart x) { return g.face_prev(x); };
  std::vector<std::vector<Dart>> rotations;
  rotations.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    Dart d = g.edge_darts(e)[0], t = g.edge_darts(e)[1];
    rotations.push_back({2 * d, 2 * face_prev(d) + 1, 2 * t, 2 * face_prev(t) + 1});
  }
  std::vector<Dart> twin(2 * n);
  for (Dart x = 0; x < 2 * n; ++x) twin[x] = x ^ 1;
  return build_dense(std::move(rotations), std::move(twin));
}

enum class FaceColor : std::uint8_t { White = 0, Black = 1 };

inline FaceColor opposite(FaceColor c) { return c == FaceColor::White ? FaceColor::Black : FaceColor::White; }

struct FaceColoring2 {
  std::vector<FaceColor> color;

  int count(FaceColor c) const { return static_cast<int>(std::count(color.begin(), color.end(), c)); }
};

/// Checkerboard coloring; the face of dart 0 is white.
inline FaceColoring2 checkerboard(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) % 2 != 0) throw Error(ErrorCode::OddVertex, "vertex " + std::to_string(v) + " has odd degree");
  }
  FaceColoring2 out;
  std::vector<int> color(g.num_faces(), -1);
  std::queue<FaceId> todo;
  color[g.face(0)] = 0;
  todo.push(g.face(0));
  while (!todo.empty()) {
    FaceId f = todo.front();
    todo.pop();
    for (Dart d : g.face_boundary(f)) {
      FaceId h = g.face(g.twin(d));
      if (color[h] == -1) {
        color[h] = 1 - color[f];
        todo.push(h);
      } else if (color[h] == color[f]) {
        throw Error(ErrorCode::OddVertex, "faces admit no checkerboard coloring");
      }
    }
  }
  out.color.reserve(color.size());
  for (int c : color) out.color.push_back(static_cast<FaceColor>(c));
  return out;
}

/// Inverse of the medial construction: vertices are the faces of the chosen
/// checkerboard class, edges are the vertices of g.
inline EmbeddedGraph demedial(const EmbeddedGraph& g, FaceColor cls) {
  if (!g.is_regular(4)) throw Error(ErrorCode::NotFourValent, "demedial needs a 4-valent graph");
  const FaceColoring2 col = checkerboard(g);
  std::vector<std::vector<Dart>> rotations;
  std::vector<std::pair<Dart, Dart>> twins;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (col.color[f] != cls) continue;
    rotations.push_back(g.face_boundary(f));
    for (Dart x : g.face_boundary(f)) {
      Dart y = g.rotate_ccw(g.rotate_ccw(x));
      if (x < y) twins.emplace_back(x, y);
    }
  }
  return build(rotations, twins);
}

struct Automorphism {
  std::vector<Dart> dart_map;
  bool orientation_preserving = true;
};

namespace detail {

// Extends d0 -> target to a map commuting with twin and with rotate_ccw (or
// conjugating it to rotate_cw when reversing). Empty if inconsistent.
inline std::vector<Dart> extend_map(const EmbeddedGraph& g, const EmbeddedGraph& h, Dart source, Dart target,
                                    bool preserving) {
  const int n = g.num_darts();
  if (h.num_darts() != n) return {};
  std::vector<Dart> map(n, -1), inverse(n, -1);
  std::vector<Dart> stack{source};
  map[source] = target;
  inverse[target] = source;
  while (!stack.empty()) {
    Dart x = stack.back();
    stack.pop_back();
    const Dart fx = map[x];
    const std::array<std::pair<Dart, Dart>, 2> steps{
        std::pair{g.twin(x), h.twin(fx)},
        std::pair{g.rotate_ccw(x), preserving ? h.rotate_ccw(fx) : h.rotate_cw(fx)}};
    for (auto [y, fy] : steps) {
      if (map[y] == -1) {
        if (inverse[fy] != -1) return {};
        map[y] = fy;
        inverse[fy] = y;
        stack.push_back(y);
      } else if (map[y] != fy) {
        return {};
      }
    }
  }
  return map;
}

inline std::vector<Dart> extend_map(const EmbeddedGraph& g, Dart source, Dart target, bool preserving) {
  return extend_map(g, g, source, target, preserving);
}

inline std::vector<int> bfs_code(const EmbeddedGraph& g, Dart start, bool preserving,
                                 const std::vector<int>* best) {
  const int n = g.num_darts();
  std::vector<int> label(n, -1);
  std::vector<Dart> order;
  order.reserve(n);
  label[start] = 0;
  order.push_back(start);
  std::vector<int> code;
  code.reserve(2 * n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dart x = order[i];
    for (Dart y : {g.twin(x), preserving ? g.rotate_ccw(x) : g.rotate_cw(x)}) {
      if (label[y] == -1) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
      code.push_back(label[y]);
      if (best) {
        std::size_t k = code.size() - 1;
        if (code[k] < (*best)[k]) best = nullptr;
        else if (code[k] > (*best)[k]) return {};
      }
    }
  }
  return code;
}

}  // namespace detail

/// Full automorphism group (orientation-reversing maps included); the identity
/// comes first.
inline std::vector<Automorphism> automorphisms(const EmbeddedGraph& g) {
  std::vector<Automorphism> out;
  if (g.num_darts() == 0) return out;
  for (bool preserving : {true, false}) {
    for (Dart t = 0; t < g.num_darts(); ++t) {
      auto map = detail::extend_map(g, 0, t, preserving);
      if (!map.empty()) out.push_back({std::move(map), preserving});
    }
  }
  return out;
}

/// Minimum BFS relabeling code over every starting dart and both orientations.
/// Equal codes <=> isomorphic maps (up to mirror image).
inline std::vector<int> canonical_code(const EmbeddedGraph& g) {
  std::vector<int> best;
  for (bool preserving : {true, false}) {
    for (Dart s = 0; s < g.num_darts(); ++s) {
      auto code = detail::bfs_code(g, s, preserving, best.empty() ? nullptr : &best);
      if (!code.empty() && (best.empty() || code < best)) best = std::move(code);
    }
  }
  return best;
}

/// Every map isomorphism a -> b as a dart map (mirror images included).
inline std::vector<Automorphism> isomorphisms(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  std::vector<Automorphism> out;
  if (a.num_darts() == 0 || a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices()) return out;
  for (bool preserving : {true, false}) {
    for (Dart t = 0; t < b.num_darts(); ++t) {
      auto map = detail::extend_map(a, b, 0, t, preserving);
      if (!map.empty()) out.push_back({std::move(map), preserving});
    }
  }
  return out;
}

inline bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  return a.num_darts() == b.num_darts() && a.num_vertices() == b.num_vertices() &&
         canonical_code(a) == canonical_code(b);
}

struct PolytopalReport {
  bool simple_graph = false;
  bool three_connected = false;
  bool planar = true;
  bool verdict = false;
};

inline bool has_multi_edges(const EmbeddedGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return true;
  }
  return false;
}

inline bool is_three_connected(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  if (n < 4) return false;
  std::vector<char> removed(n, 0), seen(n, 0);
  auto connected_without = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    int start = 0;
    while (removed[start]) ++start;
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : g.rotation(v)) {
        VertexId w = g.head(d);
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    int alive = 0;
    for (char r : removed) alive += !r;
    return count == alive;
  };
  for (VertexId a = 0; a < n; ++a) {
    removed[a] = 1;
    for (VertexId b = a + 1; b < n; ++b) {
      removed[b] = 1;
      bool ok = connected_without();
      removed[b] = 0;
      if (!ok) return false;
    }
    removed[a] = 0;
  }
  return true;
}

/// Loops are rejected at build time and planarity is guaranteed by the Euler
/// check, so only simplicity and 3-connectivity remain.
inline PolytopalReport is_polytopal(const EmbeddedGraph& g) {
  PolytopalReport r;
  r.simple_graph = !has_multi_edges(g);
  r.three_connected = is_three_connected(g);
  r.verdict = r.simple_graph && r.three_connected && r.planar;
  return r;
}

/// Output of the local surgery helpers below: the new graph plus where the
/// surviving darts and vertices went (-1 when removed).
struct GraphMorph {
  EmbeddedGraph graph;
  std::vector<Dart> dart_map;
  std::vector<VertexId> vertex_map;
  /// truncate_vertices only: for each truncated vertex, the new dart at the
  /// i-th corner pointing counterclockwise along the new face.
  std::vector<std::vector<Dart>> corner_darts;
};

namespace detail {

inline GraphMorph finish_morph(const EmbeddedGraph& g, const std::vector<std::vector<Dart>>& rotations,
                               const std::vector<std::pair<Dart, Dart>>& twins,
                               std::vector<VertexId> vertex_map) {
  auto rel = build_relabeled(rotations, twins);
  GraphMorph m;
  m.dart_map.assign(g.num_darts(), -1);
  for (Dart d = 0; d < g.num_darts(); ++d) {
    auto it = rel.relabel.find(d);
    if (it != rel.relabel.end()) m.dart_map[d] = it->second;
  }
  m.vertex_map = std::move(vertex_map);
  m.graph = std::move(rel.graph);
  return m;
}

inline std::vector<std::pair<Dart, Dart>> surviving_twins(const EmbeddedGraph& g, const std::vector<char>& removed) {
  std::vector<std::pair<Dart, Dart>> twins;
  for (Dart d = 0; d < g.num_darts(); ++d) {
    if (!removed[d] && d < g.twin(d)) twins.emplace_back(d, g.twin(d));
  }
  return twins;
}

}  // namespace detail

/// Contracts each listed face to a single vertex. Faces must have simple
/// boundaries and be pairwise vertex-disjoint.
inline GraphMorph contract_faces(const EmbeddedGraph& g, const std::vector<FaceId>& faces) {
  std::vector<int> group(g.num_vertices(), -1);
  std::vector<char> removed(g.num_darts(), 0);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (Dart d : g.face_boundary(faces[i])) {
      VertexId v = g.tail(d);
      if (group[v] != -1) throw Error(ErrorCode::MalformedInput, "contracted faces share a vertex");
      group[v] = static_cast<int>(i);
      removed[d] = removed[g.twin(d)] = 1;
    }
  }
  std::vector<std::vector<Dart>> merged(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (Dart q : g.face_boundary(faces[i])) {
      // Darts at tail(q) strictly after twin(face_prev(q)) and before q.
      Dart start = g.rotate_ccw(q);
      for (Dart x = g.rotate_ccw(start); x != q; x = g.rotate_ccw(x)) merged[i].push_back(x);
    }
  }
  std::vector<std::vector<Dart>> rotations;
  std::vector<VertexId> vertex_map(g.num_vertices(), -1);
  std::vector<int> group_vertex(faces.size(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (group[v] == -1) {
      vertex_map[v] = static_cast<VertexId>(rotations.size());
      rotations.push_back(g.rotation(v));
    } else {
      if (group_vertex[group[v]] == -1) {
        group_vertex[group[v]] = static_cast<int>(rotations.size());
        rotations.push_back(merged[group[v]]);
      }
      vertex_map[v] = group_vertex[group[v]];
    }
  }
  return detail::finish_morph(g, rotations, detail::surviving_twins(g, removed), std::move(vertex_map));
}

/// Contracts a set of pairwise disjoint edges.
inline GraphMorph contract_edges(const EmbeddedGraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> group(g.num_vertices(), -1);
  std::vector<char> removed(g.num_darts(), 0);
  std::vector<std::vector<Dart>> merged(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Dart m : g.edge_darts(edges[i])) {
      if (group[g.tail(m)] != -1) throw Error(ErrorCode::MalformedInput, "contracted edges are not disjoint");
      group[g.tail(m)] = static_cast<int>(i);
      removed[m] = 1;
      for (Dart x = g.rotate_ccw(m); x != m; x = g.rotate_ccw(x)) merged[i].push_back(x);
    }
  }
  std::vector<std::vector<Dart>> rotations;
  std::vector<VertexId> vertex_map(g.num_vertices(), -1);
  std::vector<int> group_vertex(edges.size(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (group[v] == -1) {
      vertex_map[v] = static_cast<VertexId>(rotations.size());
      rotations.push_back(g.rotation(v));
    } else {
      if (group_vertex[group[v]] == -1) {
        group_vertex[group[v]] = static_cast<int>(rotations.size());
        rotations.push_back(merged[group[v]]);
      }
      vertex_map[v] = group_vertex[group[v]];
    }
  }
  return detail::finish_morph(g, rotations, detail::surviving_twins(g, removed), std::move(vertex_map));
}

/// Replaces every listed vertex of degree k by a k-gon. Truncated vertices map
/// to -1 in vertex_map; their new corners are reported in corner_darts.
inline GraphMorph truncate_vertices(const EmbeddedGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<char> cut(g.num_vertices(), 0);
  for (VertexId v : vertices) cut[v] = 1;
  std::vector<std::vector<Dart>> rotations;
  std::vector<std::pair<Dart, Dart>> twins = detail::surviving_twins(g, std::vector<char>(g.num_darts(), 0));
  std::vector<VertexId> vertex_map(g.num_vertices(), -1);
  std::vector<std::vector<Dart>> corners_raw(g.num_vertices());
  Dart next = g.num_darts();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!cut[v]) {
      vertex_map[v] = static_cast<VertexId>(rotations.size());
      rotations.push_back(g.rotation(v));
      continue;
    }
    const auto& rot = g.rotation(v);
    const int k = static_cast<int>(rot.size());
    const Dart base = next;
    next += 2 * k;
    // At corner i: dart base+2i points to corner i+1, base+2i+1 to corner i-1.
    for (int i = 0; i < k; ++i) {
      rotations.push_back({rot[i], base + 2 * i, base + 2 * i + 1});
      twins.emplace_back(base + 2 * i, base + 2 * ((i + 1) % k) + 1);
      corners_raw[v].push_back(base + 2 * i);
    }
  }
  auto rel = build_relabeled(rotations, twins);
  GraphMorph m;
  m.dart_map.assign(g.num_darts(), -1);
  for (Dart d = 0; d < g.num_darts(); ++d) m.dart_map[d] = rel.relabel.at(d);
  m.vertex_map = std::move(vertex_map);
  m.corner_darts.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (Dart d : corners_raw[v]) m.corner_darts[v].push_back(rel.relabel.at(d));
  }
  m.graph = std::move(rel.graph);
  return m;
}

}  // namespace polylink
