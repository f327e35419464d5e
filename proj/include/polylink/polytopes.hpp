#pragma once

#include <vector>

#include "polylink/embedded_graph.hpp"

namespace polylink::polytopes {

inline EmbeddedGraph simplex() {
  return from_faces(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}});
}

/// k-gonal prism: top vertices 0..k-1, bottom k..2k-1.
inline EmbeddedGraph prism(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "prism needs k >= 3");
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> top, bottom;
  for (int i = 0; i < k; ++i) {
    top.push_back(i);
    bottom.push_back(2 * k - 1 - i);
    faces.push_back({i, (i + 1) % k, k + (i + 1) % k, k + i});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return from_faces(2 * k, faces);
}

inline EmbeddedGraph cube() { return prism(4); }

/// k-antiprism A(k): top vertices 0..k-1, bottom k..2k-1, bottom i sitting
/// between top i and top i+1.
inline EmbeddedGraph antiprism(int k) {
  if (k < 3) throw Error(ErrorCode::BadParameter, "antiprism needs k >= 3");
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> top, bottom;
  for (int i = 0; i < k; ++i) {
    top.push_back(i);
    bottom.push_back(2 * k - 1 - i);
    faces.push_back({i, (i + 1) % k, k + i});
    faces.push_back({(i + 1) % k, k + (i + 1) % k, k + i});
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return from_faces(2 * k, faces);
}

inline EmbeddedGraph octahedron() { return antiprism(3); }

/// Top pentagon a (0..4), upper ring b (5..9), lower ring c (10..14), bottom
/// pentagon d (15..19).
inline EmbeddedGraph dodecahedron() {
  auto a = [](int i) { return (i % 5 + 5) % 5; };
  auto b = [](int i) { return 5 + (i % 5 + 5) % 5; };
  auto c = [](int i) { return 10 + (i % 5 + 5) % 5; };
  auto d = [](int i) { return 15 + (i % 5 + 5) % 5; };
  std::vector<std::vector<VertexId>> faces;
  faces.push_back({a(0), a(1), a(2), a(3), a(4)});
  for (int i = 0; i < 5; ++i) {
    faces.push_back({a(i), a(i + 1), b(i + 1), c(i), b(i)});
    faces.push_back({c(i), b(i + 1), c(i + 1), d(i + 1), d(i)});
  }
  faces.push_back({d(0), d(1), d(2), d(3), d(4)});
  return from_faces(20, faces);
}

/// Truncated octahedron.
inline EmbeddedGraph permutohedron() {
  EmbeddedGraph oct = octahedron();
  std::vector<VertexId> all(oct.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  return truncate_vertices(oct, all).graph;
}

}  // namespace polylink::polytopes
