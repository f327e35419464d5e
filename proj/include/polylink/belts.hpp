#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "polylink/embedded_graph.hpp"

namespace polylink {

struct Belt {
  /// Cyclic face sequence, normalized so faces[0] is the smallest id and
  /// faces[1] < faces.back().
  std::vector<FaceId> faces;
  /// Set of faces equals the ring of neighbours of some face.
  bool trivial = false;
  /// One face surrounded by the belt (-1 unless trivial).
  FaceId surrounded = -1;
};

inline bool is_simple_polytope(const EmbeddedGraph& g) { return g.is_regular(3) && is_polytopal(g).verdict; }

/// Faces sharing an edge with f, sorted and without repeats.
inline std::vector<FaceId> adjacent_faces(const EmbeddedGraph& g, FaceId f) {
  std::vector<FaceId> out;
  for (Dart d : g.face_boundary(f)) out.push_back(g.face(g.twin(d)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Belt> k_belts(const EmbeddedGraph& g, int k) {
  if (!is_simple_polytope(g)) throw Error(ErrorCode::NotSimplePolytope, "belts need a simple polytope");
  if (k < 3) throw Error(ErrorCode::BadParameter, "belt length must be at least 3");
  const int nf = g.num_faces();
  std::vector<std::vector<char>> adj(nf, std::vector<char>(nf, 0));
  std::vector<std::vector<FaceId>> nbrs(nf);
  for (FaceId f = 0; f < nf; ++f) {
    nbrs[f] = adjacent_faces(g, f);
    for (FaceId h : nbrs[f]) adj[f][h] = 1;
  }
  std::vector<std::array<FaceId, 3>> vertex_faces(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    vertex_faces[v] = {g.face(r[0]), g.face(r[1]), g.face(r[2])};
  }

  std::vector<Belt> out;
  std::vector<FaceId> seq;
  std::vector<char> in_seq(nf, 0);
  auto close = [&]() {
    if (!adj[seq.back()][seq.front()] || seq[1] > seq.back()) return;
    for (const auto& fs : vertex_faces) {
      if (in_seq[fs[0]] && in_seq[fs[1]] && in_seq[fs[2]]) return;
    }
    Belt b{seq, false, -1};
    std::set<FaceId> members(seq.begin(), seq.end());
    for (FaceId f = 0; f < nf && !b.trivial; ++f) {
      if (!in_seq[f] && std::set<FaceId>(nbrs[f].begin(), nbrs[f].end()) == members) {
        b.trivial = true;
        b.surrounded = f;
      }
    }
    out.push_back(std::move(b));
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == k) {
      close();
      return;
    }
    for (FaceId h : nbrs[seq.back()]) {
      if (h <= seq.front() || in_seq[h]) continue;
      bool ok = true;
      // h must avoid every earlier face except its predecessor, and the first
      // face unless h closes the cycle.
      for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i) {
        bool allowed = i == 0 && static_cast<int>(seq.size()) == k - 1;
        if (adj[seq[i]][h] && !allowed) ok = false;
      }
      if (static_cast<int>(seq.size()) == k - 1 && !adj[seq.front()][h]) ok = false;
      if (!ok) continue;
      seq.push_back(h);
      in_seq[h] = 1;
      self(self);
      in_seq[h] = 0;
      seq.pop_back();
    }
  };
  for (FaceId f = 0; f < nf; ++f) {
    seq = {f};
    in_seq[f] = 1;
    rec(rec);
    in_seq[f] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Belt& a, const Belt& b) { return a.faces < b.faces; });
  return out;
}

}  // namespace polylink
