#pragma once

// Face colorings by GF(2) vectors and the cell complex glued from 2^r copies
// of the polytope. Vectors are bitmasks: bit i-1 is the basis vector e_i.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "polylink/embedded_graph.hpp"
#include "polylink/gf2.hpp"
#include "polylink/hamiltonian.hpp"

namespace polylink {

enum class ColoringKind { Cycle2, Hamiltonian3, Theta4, K45, Checkerboard22 };

inline std::string_view to_string(ColoringKind k) {
  switch (k) {
    case ColoringKind::Cycle2: return "cycle2";
    case ColoringKind::Hamiltonian3: return "hamiltonian3";
    case ColoringKind::Theta4: return "theta4";
    case ColoringKind::K45: return "k45";
    case ColoringKind::Checkerboard22: return "checkerboard22";
  }
  return "?";
}

inline ColoringKind parse_coloring_kind(std::string_view s) {
  for (auto k : {ColoringKind::Cycle2, ColoringKind::Hamiltonian3, ColoringKind::Theta4, ColoringKind::K45,
                 ColoringKind::Checkerboard22}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::UnknownName, "unknown coloring kind '" + std::string(s) + "'");
}

struct VectorColoring {
  int rank = 0;
  /// One nonzero vector per face.
  std::vector<std::uint32_t> vectors;
};

/// Vector as a 0/1 string, e_1 first.
inline std::string vector_bits(std::uint32_t v, int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) s.push_back(((v >> i) & 1U) ? '1' : '0');
  return s;
}

struct FaceSides {
  /// Component of each face in the complement of the structure, numbered by
  /// smallest face id.
  std::vector<int> component;
  /// Two-coloring of each component's face tree; the smallest face is white (0).
  std::vector<int> side;
  int num_components = 0;
};

/// Faces glued across matching edges. Each component must be a tree.
inline FaceSides face_sides(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  const int nf = q.num_faces();
  std::vector<std::vector<FaceId>> adj(nf);
  for (EdgeId e : s.matching) {
    auto [d, t] = q.edge_darts(e);
    adj[q.face(d)].push_back(q.face(t));
    adj[q.face(t)].push_back(q.face(d));
  }
  FaceSides r;
  r.component.assign(nf, -1);
  r.side.assign(nf, -1);
  for (FaceId root = 0; root < nf; ++root) {
    if (r.component[root] != -1) continue;
    const int c = r.num_components++;
    int faces = 0, edge_ends = 0;
    std::vector<FaceId> stack{root};
    r.component[root] = c;
    r.side[root] = 0;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      ++faces;
      for (FaceId h : adj[f]) {
        ++edge_ends;
        if (r.component[h] == -1) {
          r.component[h] = c;
          r.side[h] = 1 - r.side[f];
          stack.push_back(h);
        } else if (r.side[h] == r.side[f]) {
          throw Error(ErrorCode::NonTreeComponent, "face component " + std::to_string(c) + " is not bipartite");
        }
      }
    }
    if (edge_ends / 2 != faces - 1)
      throw Error(ErrorCode::NonTreeComponent, "face component " + std::to_string(c) + " is not a tree");
  }
  return r;
}

inline VectorColoring make_coloring(const EmbeddedGraph& q, ColoringKind kind, const HamiltonianStructure* s) {
  VectorColoring out;
  if (kind == ColoringKind::Checkerboard22) {
    if (!q.is_regular(4)) throw Error(ErrorCode::KindMismatch, "checkerboard22 needs a 4-valent graph");
    auto cb = checkerboard(q);
    out.rank = 2;
    for (FaceColor c : cb.color) out.vectors.push_back(c == FaceColor::White ? 1U : 2U);
    return out;
  }
  if (!s) throw Error(ErrorCode::KindMismatch, std::string(to_string(kind)) + " needs a structure");
  const StructureKind want = kind == ColoringKind::Theta4 ? StructureKind::Theta
                             : kind == ColoringKind::K45  ? StructureKind::K4
                                                          : StructureKind::Cycle;
  if (s->kind != want)
    throw Error(ErrorCode::KindMismatch, std::string(to_string(kind)) + " does not fit a " +
                                             std::string(to_string(s->kind)) + " structure");
  const FaceSides sides = face_sides(q, *s);
  const int k = kind == ColoringKind::Theta4 ? 3 : (kind == ColoringKind::K45 ? 4 : 2);
  if (sides.num_components != k)
    throw Error(ErrorCode::InvalidStructure, "structure splits the faces into " +
                                                 std::to_string(sides.num_components) + " parts");
  out.vectors.resize(q.num_faces());
  switch (kind) {
    case ColoringKind::Cycle2:
      out.rank = 2;
      for (FaceId f = 0; f < q.num_faces(); ++f) out.vectors[f] = sides.component[f] == 0 ? 1U : 2U;
      break;
    case ColoringKind::Hamiltonian3: {
      out.rank = 3;
      const std::uint32_t colors[2][2] = {{1U, 2U}, {4U, 7U}};
      for (FaceId f = 0; f < q.num_faces(); ++f) out.vectors[f] = colors[sides.component[f]][sides.side[f]];
      break;
    }
    default: {
      // a_i = e_i, b_1 = e_{k+1}, tau = a_1 + b_1, b_i = a_i + tau.
      out.rank = k + 1;
      const std::uint32_t tau = 1U | (1U << k);
      for (FaceId f = 0; f < q.num_faces(); ++f) {
        std::uint32_t a = 1U << sides.component[f];
        out.vectors[f] = sides.side[f] == 0 ? a : (a ^ tau);
      }
    }
  }
  return out;
}

struct ColoringReport {
  bool valid = false;
  bool spans = false;
  bool nonzero = false;
  /// 3-valent vertices where the three face vectors are distinct but dependent.
  std::vector<VertexId> bad_vertices;
};

/// Vertex condition at each 3-valent vertex: the three vectors are all equal,
/// two equal and one different, or independent. Other vertices are ideal and skipped.
inline ColoringReport validate(const EmbeddedGraph& q, const VectorColoring& c) {
  ColoringReport r;
  if (static_cast<int>(c.vectors.size()) != q.num_faces()) return r;
  r.nonzero = std::none_of(c.vectors.begin(), c.vectors.end(), [](std::uint32_t v) { return v == 0; });
  r.spans = gf2::rank_of(c.vectors) == c.rank &&
            std::all_of(c.vectors.begin(), c.vectors.end(), [&](std::uint32_t v) { return v >> c.rank == 0; });
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    if (q.degree(v) != 3) continue;
    const auto& rot = q.rotation(v);
    std::uint32_t x = c.vectors[q.face(rot[0])], y = c.vectors[q.face(rot[1])], z = c.vectors[q.face(rot[2])];
    bool distinct = x != y && y != z && x != z;
    if (distinct && (x ^ y) == z) r.bad_vertices.push_back(v);
  }
  r.valid = r.nonzero && r.spans && r.bad_vertices.empty();
  return r;
}

struct QuotientComplex {
  int rank = 0;
  std::array<int, 4> f_vector{};
  /// boundary[k] maps k+1-cells to k-cells (rows: k-cells, columns: k+1-cells).
  std::vector<gf2::Matrix> boundary;
  int euler_characteristic = 0;
  int components = 0;
};

/// Cells are pairs (cell of Q, coset of the span of the vectors of the faces
/// containing it). 0-cells come from 3-valent vertices only.
inline QuotientComplex build_quotient(const EmbeddedGraph& q, const VectorColoring& c) {
  if (!validate(q, c).valid) throw Error(ErrorCode::InvalidColoring, "coloring fails the vertex or spanning condition");
  const int order = 1 << c.rank;
  QuotientComplex out;
  out.rank = c.rank;
  // coset[g] = index of the coset g + H within its dimension.
  auto index_cosets = [&](const std::vector<std::uint32_t>& gens, int& counter) {
    auto h = gf2::span(gens);
    std::vector<int> coset(order, -1);
    for (int g = 0; g < order; ++g) {
      if (coset[g] != -1) continue;
      for (std::uint32_t x : h) coset[g ^ x] = counter;
      ++counter;
    }
    return coset;
  };
  std::vector<std::vector<int>> vcos(q.num_vertices()), ecos(q.num_edges()), fcos(q.num_faces());
  int n0 = 0, n1 = 0, n2 = 0;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    if (q.degree(v) != 3) continue;
    std::vector<std::uint32_t> gens;
    for (Dart d : q.rotation(v)) gens.push_back(c.vectors[q.face(d)]);
    vcos[v] = index_cosets(gens, n0);
  }
  for (EdgeId e = 0; e < q.num_edges(); ++e) {
    auto [d, t] = q.edge_darts(e);
    ecos[e] = index_cosets({c.vectors[q.face(d)], c.vectors[q.face(t)]}, n1);
  }
  for (FaceId f = 0; f < q.num_faces(); ++f) fcos[f] = index_cosets({c.vectors[f]}, n2);
  const int n3 = order;
  out.f_vector = {n0, n1, n2, n3};
  out.euler_characteristic = n0 - n1 + n2 - n3;

  out.boundary.emplace_back(n0, n1);
  out.boundary.emplace_back(n1, n2);
  out.boundary.emplace_back(n2, n3);
  std::vector<int> parent(n0 + n1 + n2 + n3);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto incident = [&](int k, int lower, int upper) {
    out.boundary[k].flip(lower, upper);
    const int offs[4] = {0, n0, n0 + n1, n0 + n1 + n2};
    parent[find(offs[k] + lower)] = find(offs[k + 1] + upper);
  };
  for (int g = 0; g < order; ++g) {
    for (FaceId f = 0; f < q.num_faces(); ++f) incident(2, fcos[f][g], g);
  }
  for (FaceId f = 0; f < q.num_faces(); ++f) {
    std::vector<char> done(n2, 0);
    for (int g = 0; g < order; ++g) {
      if (done[fcos[f][g]]) continue;
      done[fcos[f][g]] = 1;
      for (Dart d : q.face_boundary(f)) incident(1, ecos[q.edge(d)][g], fcos[f][g]);
    }
  }
  for (EdgeId e = 0; e < q.num_edges(); ++e) {
    std::vector<char> done(n1, 0);
    for (int g = 0; g < order; ++g) {
      if (done[ecos[e][g]]) continue;
      done[ecos[e][g]] = 1;
      for (VertexId v : q.endpoints(e)) {
        if (!vcos[v].empty()) incident(0, vcos[v][g], ecos[e][g]);
      }
    }
  }
  for (int x = 0; x < static_cast<int>(parent.size()); ++x) out.components += find(x) == x;
  return out;
}

/// Betti numbers over GF(2).
inline std::array<int, 4> gf2_betti(const QuotientComplex& c) {
  const int r1 = c.boundary[0].rank(), r2 = c.boundary[1].rank(), r3 = c.boundary[2].rank();
  return {c.f_vector[0] - r1, c.f_vector[1] - r1 - r2, c.f_vector[2] - r2 - r3, c.f_vector[3] - r3};
}

}  // namespace polylink
