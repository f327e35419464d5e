#pragma once

// Combinatorial model of the branch link of a Hamiltonian structure: circles
// per matching edge, a linking relation, and a verdict.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "polylink/hamiltonian.hpp"

namespace polylink {

enum class LinkVerdict { Trivial, UnlinkedNontrivial, Linked, OutsideTheorem };

inline std::string_view to_string(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::Trivial: return "trivial";
    case LinkVerdict::UnlinkedNontrivial: return "unlinked_nontrivial";
    case LinkVerdict::Linked: return "linked";
    case LinkVerdict::OutsideTheorem: return "outside_theorem";
  }
  return "?";
}

enum class WitnessKind { HopfPair, BorromeanTriple, FourChain };

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::HopfPair: return "hopf_pair";
    case WitnessKind::BorromeanTriple: return "borromean_triple";
    case WitnessKind::FourChain: return "four_chain";
  }
  return "?";
}

struct Circle {
  EdgeId edge;
  int copy;
};

struct Witness {
  WitnessKind kind;
  std::vector<int> circles;
  std::vector<EdgeId> edges;
};

struct LinkModel {
  StructureKind kind = StructureKind::Cycle;
  std::vector<Circle> circles;
  /// Pairs (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> linking;
  LinkVerdict verdict = LinkVerdict::OutsideTheorem;
  std::vector<Witness> witnesses;

  bool linked(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(linking.begin(), linking.end(), std::pair{a, b});
  }
  int linking_degree(int c) const {
    int k = 0;
    for (auto [a, b] : linking) k += (a == c) + (b == c);
    return k;
  }
};

namespace detail {

struct EdgeInfo {
  EdgeId edge;
  VertexId a, b;
  bool same_path;
  int first_circle;
  int num_circles;
  VertexId apex = -1;  // k4 cross-path edges: the hub shared by both paths
};

inline VertexId shared_hub(const HamiltonianStructure& s, VertexId a, VertexId b) {
  const auto& pa = s.paths[s.path_of[a]];
  const auto& pb = s.paths[s.path_of[b]];
  for (VertexId h : {pa.front(), pa.back()}) {
    if (h == pb.front() || h == pb.back()) return h;
  }
  return -1;
}

inline std::vector<EdgeInfo> edge_infos(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  std::vector<EdgeInfo> out;
  int next = 0;
  for (EdgeId e : s.matching) {
    auto [a, b] = q.endpoints(e);
    EdgeInfo info{e, a, b, false, next, 1};
    if (s.kind != StructureKind::Cycle) {
      info.same_path = s.path_of[a] == s.path_of[b];
      int base = s.kind == StructureKind::Theta ? 1 : 2;
      info.num_circles = info.same_path ? 2 * base : base;
      if (!info.same_path && s.kind == StructureKind::K4) info.apex = shared_hub(s, a, b);
    }
    next += info.num_circles;
    out.push_back(info);
  }
  return out;
}

}  // namespace detail

/// Circles and linking relation.
inline LinkModel build_link(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  LinkModel m;
  m.kind = s.kind;
  const auto infos = detail::edge_infos(q, s);
  for (const auto& e : infos) {
    for (int c = 0; c < e.num_circles; ++c) m.circles.push_back({e.edge, c});
  }
  std::set<std::pair<int, int>> pairs;
  auto link = [&](int x, int y) { pairs.insert({std::min(x, y), std::max(x, y)}); };

  if (s.kind == StructureKind::Cycle) {
    for (std::size_t i = 0; i < infos.size(); ++i) {
      for (std::size_t j = i + 1; j < infos.size(); ++j) {
        if (edges_conjugated(q, s, infos[i].edge, infos[j].edge)) link(infos[i].first_circle, infos[j].first_circle);
      }
    }
  } else {
    for (const auto& e1 : infos) {
      if (!e1.same_path) continue;
      int lo = std::min(s.position[e1.a], s.position[e1.b]);
      int hi = std::max(s.position[e1.a], s.position[e1.b]);
      int path = s.path_of[e1.a];
      auto inside = [&](VertexId x) { return s.path_of[x] == path && lo < s.position[x] && s.position[x] < hi; };
      for (const auto& e2 : infos) {
        if (e2.edge == e1.edge || inside(e2.a) == inside(e2.b)) continue;
        if (e2.same_path) {
          for (int k = 0; k < e1.num_circles; ++k) link(e1.first_circle + k, e2.first_circle + k);
        } else {
          // Each circle of the cross-path edge meets an equal share of e1's copies.
          int share = e1.num_circles / e2.num_circles;
          for (int j = 0; j < e2.num_circles; ++j) {
            for (int k = 0; k < share; ++k) link(e2.first_circle + j, e1.first_circle + share * j + k);
          }
        }
      }
    }
    if (s.kind == StructureKind::K4) {
      for (const auto& e1 : infos) {
        for (const auto& e2 : infos) {
          if (e1.same_path || e2.same_path || e1.edge >= e2.edge) continue;
          if (e1.apex < 0 || e2.apex < 0 || e1.apex == e2.apex) continue;
          // Endpoints of e1 and e2 on the path joining the two apexes.
          auto on_path = [&](const detail::EdgeInfo& e, VertexId other_apex) -> VertexId {
            for (VertexId x : {e.a, e.b}) {
              const auto& p = s.paths[s.path_of[x]];
              if ((p.front() == e.apex && p.back() == other_apex) || (p.back() == e.apex && p.front() == other_apex))
                return x;
            }
            return -1;
          };
          VertexId w1 = on_path(e1, e2.apex), w2 = on_path(e2, e1.apex);
          if (w1 < 0 || w2 < 0) continue;
          if (distance_from_hub(s, e1.apex, w2) < distance_from_hub(s, e1.apex, w1)) {
            for (int x = 0; x < 2; ++x) {
              for (int y = 0; y < 2; ++y) link(e1.first_circle + x, e2.first_circle + y);
            }
          }
        }
      }
    }
  }
  m.linking.assign(pairs.begin(), pairs.end());
  return m;
}

/// Borromean triples among cross-path matching edges around hub h: E1 joins
/// paths 1-2, E2 paths 2-3, E3 paths 3-1, each nested strictly closer to h
/// than the previous one on their shared path. Returned as sorted edge triples.
inline std::vector<std::array<EdgeId, 3>> borromean_triples(const EmbeddedGraph& q, const HamiltonianStructure& s,
                                                            VertexId h, const std::vector<EdgeId>& candidates) {
  struct End {
    EdgeId e;
    int pa, pb;  // path indices
    int da, db;  // distances from h
  };
  std::vector<End> ends;
  for (EdgeId e : candidates) {
    auto [a, b] = q.endpoints(e);
    int da = distance_from_hub(s, h, a), db = distance_from_hub(s, h, b);
    if (da < 0 || db < 0 || s.path_of[a] == s.path_of[b]) continue;
    ends.push_back({e, s.path_of[a], s.path_of[b], da, db});
  }
  // Distance of edge x from h along path p (-1 if x avoids p).
  auto dist = [](const End& x, int p) { return x.pa == p ? x.da : (x.pb == p ? x.db : -1); };
  auto joins = [](const End& x, int p, int r) { return (x.pa == p && x.pb == r) || (x.pa == r && x.pb == p); };
  std::set<std::array<EdgeId, 3>> found;
  for (const auto& e1 : ends) {
    int p1 = e1.pa, p2 = e1.pb;
    for (int orient = 0; orient < 2; ++orient, std::swap(p1, p2)) {
      for (const auto& e2 : ends) {
        if (e2.e == e1.e || joins(e2, p1, p2) || dist(e2, p2) < 0) continue;
        int p3 = e2.pa == p2 ? e2.pb : e2.pa;
        if (!(dist(e2, p2) < dist(e1, p2))) continue;
        for (const auto& e3 : ends) {
          if (!joins(e3, p3, p1)) continue;
          if (dist(e3, p3) < dist(e2, p3) && dist(e1, p1) < dist(e3, p1)) {
            std::array<EdgeId, 3> t{e1.e, e2.e, e3.e};
            std::sort(t.begin(), t.end());
            found.insert(t);
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

/// Verdict and witnesses. With all_witnesses false only the first witness (in
/// edge-id order) is kept.
inline void classify_link(LinkModel& m, const EmbeddedGraph& q, const HamiltonianStructure& s,
                          bool all_witnesses = false) {
  if (m.kind != s.kind) throw Error(ErrorCode::WrongKind, "link model and structure disagree on kind");
  m.witnesses.clear();
  const auto infos = detail::edge_infos(q, s);
  auto circle_of = [&](EdgeId e, int copy) {
    for (const auto& i : infos) {
      if (i.edge == e) return i.first_circle + copy;
    }
    return -1;
  };
  auto keep = [&](Witness w) {
    if (all_witnesses || m.witnesses.empty()) m.witnesses.push_back(std::move(w));
  };

  if (!m.linking.empty()) {
    m.verdict = LinkVerdict::Linked;
    for (auto [a, b] : m.linking) {
      keep({WitnessKind::HopfPair, {a, b}, {m.circles[a].edge, m.circles[b].edge}});
    }
    if (s.kind == StructureKind::K4) {
      // Four-chains: two cross-path edges whose 2 + 2 circles are all linked.
      for (std::size_t i = 0; i < infos.size(); ++i) {
        for (std::size_t j = i + 1; j < infos.size(); ++j) {
          const auto& x = infos[i];
          const auto& y = infos[j];
          if (x.same_path || y.same_path) continue;
          if (m.linked(x.first_circle, y.first_circle) && m.linked(x.first_circle + 1, y.first_circle + 1)) {
            keep({WitnessKind::FourChain,
                  {x.first_circle, y.first_circle, x.first_circle + 1, y.first_circle + 1},
                  {x.edge, y.edge}});
          }
        }
      }
    }
    return;
  }
  if (s.kind == StructureKind::Cycle) {
    // A Hamiltonian cycle on a simple polytope always has a conjugated pair.
    m.verdict = LinkVerdict::OutsideTheorem;
    return;
  }
  if (reduce_to_simplex(q, s).reducible) {
    m.verdict = LinkVerdict::Trivial;
    return;
  }
  std::vector<std::array<EdgeId, 3>> triples;
  if (s.kind == StructureKind::Theta) {
    triples = borromean_triples(q, s, s.hubs.front(), s.matching);
  } else {
    std::set<std::array<EdgeId, 3>> all;
    for (VertexId h : s.hubs) {
      std::vector<EdgeId> at_h;
      for (const auto& i : infos) {
        if (i.apex == h) at_h.push_back(i.edge);
      }
      for (const auto& t : borromean_triples(q, s, h, at_h)) all.insert(t);
    }
    triples.assign(all.begin(), all.end());
  }
  if (triples.empty()) {
    m.verdict = LinkVerdict::OutsideTheorem;
    return;
  }
  m.verdict = LinkVerdict::UnlinkedNontrivial;
  for (const auto& t : triples) {
    keep({WitnessKind::BorromeanTriple, {circle_of(t[0], 0), circle_of(t[1], 0), circle_of(t[2], 0)},
          {t[0], t[1], t[2]}});
  }
}

inline LinkModel link_model(const EmbeddedGraph& q, const HamiltonianStructure& s, bool all_witnesses = false) {
  LinkModel m = build_link(q, s);
  classify_link(m, q, s, all_witnesses);
  return m;
}

/// Number of circles of the link of an A-trail; one per vertex.
inline int circle_count(const EmbeddedGraph& p, const ATrail& t) {
  auto split = split_vertices(p, t);
  int n = static_cast<int>(build_link(split.graph, split.structure).circles.size());
  if (n != p.num_vertices()) throw Error(ErrorCode::InvalidStructure, "circle count differs from vertex count");
  return n;
}

}  // namespace polylink
