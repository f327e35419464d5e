#pragma once

// Nonselfcrossing transition systems on graphs whose vertices are 4-valent
// (plus, for Eulerian theta/K4 graphs, a few 3-valent hubs). At a 4-valent
// vertex with rotation (d0, d1, d2, d3), starting at its smallest dart,
// choice 0 pairs {d0,d1},{d2,d3} and choice 1 pairs {d1,d2},{d3,d0}. The
// crossing pairing {d0,d2},{d1,d3} has no representation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polylink/embedded_graph.hpp"

namespace polylink {

enum class StructureKind { Cycle, Theta, K4 };

inline std::string_view to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Cycle: return "cycle";
    case StructureKind::Theta: return "theta";
    case StructureKind::K4: return "k4";
  }
  return "?";
}

/// Number of hubs (3-valent branch vertices) of each structure kind.
inline int hub_count(StructureKind k) { return k == StructureKind::Cycle ? 0 : (k == StructureKind::Theta ? 2 : 4); }

/// Enumeration guardrail; overridable through POLYLINK_MAX_SEARCH.
inline std::uint64_t search_cap() {
  if (const char* env = std::getenv("POLYLINK_MAX_SEARCH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

struct TransitionSystem {
  /// One entry per vertex; ignored at vertices that are not 4-valent.
  std::vector<std::uint8_t> choice;

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
  friend auto operator<=>(const TransitionSystem&, const TransitionSystem&) = default;

  std::string bits() const {
    std::string s;
    s.reserve(choice.size());
    for (auto c : choice) s.push_back(c ? '1' : '0');
    return s;
  }
};

inline std::array<std::pair<Dart, Dart>, 2> transition_pairs(const EmbeddedGraph& g, VertexId v, int choice) {
  const auto& r = g.rotation(v);
  if (choice == 0) return {std::pair{r[0], r[1]}, std::pair{r[2], r[3]}};
  return {std::pair{r[1], r[2]}, std::pair{r[3], r[0]}};
}

/// Which choice at v pairs a with b; -1 if they are opposite (crossing).
inline int choice_pairing(const EmbeddedGraph& g, VertexId v, Dart a, Dart b) {
  for (int c = 0; c < 2; ++c) {
    for (auto [x, y] : transition_pairs(g, v, c)) {
      if ((x == a && y == b) || (x == b && y == a)) return c;
    }
  }
  return -1;
}

/// The dart paired with d at its tail vertex (which must be 4-valent).
inline Dart transition_partner(const EmbeddedGraph& g, const TransitionSystem& ts, Dart d) {
  VertexId v = g.tail(d);
  for (auto [a, b] : transition_pairs(g, v, ts.choice[v])) {
    if (a == d) return b;
    if (b == d) return a;
  }
  return -1;
}

/// Dart following d along the curve: d is traversed, then the walk continues
/// through the transition at head(d).
inline Dart curve_next(const EmbeddedGraph& g, const TransitionSystem& ts, Dart d) {
  return transition_partner(g, ts, g.twin(d));
}

struct ATrail {
  TransitionSystem transitions;
  /// Closed dart sequence starting at dart 0.
  std::vector<Dart> curve;
};

/// Closed curves of a transition system on a 4-valent graph, each as a dart
/// cycle; every edge is traversed by exactly one curve.
inline std::vector<std::vector<Dart>> trace_curves(const EmbeddedGraph& g, const TransitionSystem& ts) {
  std::vector<char> used(g.num_edges(), 0);
  std::vector<std::vector<Dart>> curves;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (used[e]) continue;
    std::vector<Dart> c;
    for (Dart d = g.edge_darts(e)[0]; !used[g.edge(d)]; d = curve_next(g, ts, d)) {
      used[g.edge(d)] = 1;
      c.push_back(d);
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

/// An ATrail if the transitions induce a single closed curve.
inline std::optional<ATrail> make_atrail(const EmbeddedGraph& g, TransitionSystem ts) {
  auto curves = trace_curves(g, ts);
  if (curves.size() != 1) return std::nullopt;
  return ATrail{std::move(ts), std::move(curves.front())};
}

/// Image of a transition system under a map automorphism.
inline TransitionSystem transform(const EmbeddedGraph& g, const TransitionSystem& ts, const Automorphism& a) {
  TransitionSystem out;
  out.choice.assign(ts.choice.size(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 4) continue;
    auto [x, y] = transition_pairs(g, v, ts.choice[v])[0];
    Dart fx = a.dart_map[x], fy = a.dart_map[y];
    out.choice[g.tail(fx)] = static_cast<std::uint8_t>(choice_pairing(g, g.tail(fx), fx, fy));
  }
  return out;
}

namespace detail {

// Free strand ends during backtracking. mate[d] is the other free end of the
// strand ending at dart d; joining two ends at a vertex splices strands.
class StrandJoiner {
 public:
  explicit StrandJoiner(const EmbeddedGraph& g) : mate_(g.num_darts()) {
    for (Dart d = 0; d < g.num_darts(); ++d) mate_[d] = g.twin(d);
  }

  /// Returns true if the join closes a loop.
  bool join(Dart a, Dart b) {
    if (mate_[a] == b) return true;
    Dart ma = mate_[a], mb = mate_[b];
    log_.push_back({ma, mate_[ma]});
    log_.push_back({mb, mate_[mb]});
    mate_[ma] = mb;
    mate_[mb] = ma;
    return false;
  }

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      auto [d, old] = log_.back();
      log_.pop_back();
      mate_[d] = old;
    }
  }
  Dart mate(Dart d) const { return mate_[d]; }

 private:
  std::vector<Dart> mate_;
  std::vector<std::pair<Dart, Dart>> log_;
};

// Depth-first over 4-valent vertices in increasing id, choice 0 first. A join
// closing a loop is accepted only as the very last join when `final_loop_ok`.
template <typename Visit>
void enumerate_transitions(const EmbeddedGraph& g, bool final_loop_ok, Visit&& visit) {
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 4) order.push_back(v);
  }
  const int total_joins = 2 * static_cast<int>(order.size());
  StrandJoiner joiner(g);
  TransitionSystem ts;
  ts.choice.assign(g.num_vertices(), 0);
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t i, int joins) -> void {
    if (stop) return;
    if (i == order.size()) {
      if (!visit(ts, joiner)) stop = true;
      return;
    }
    VertexId v = order[i];
    for (int c = 0; c < 2 && !stop; ++c) {
      auto m = joiner.mark();
      bool ok = true;
      int done = joins;
      for (auto [a, b] : transition_pairs(g, v, c)) {
        ++done;
        if (joiner.join(a, b) && !(final_loop_ok && done == total_joins)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ts.choice[v] = static_cast<std::uint8_t>(c);
        self(self, i + 1, done);
      }
      joiner.undo(m);
    }
    ts.choice[v] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// Orbit representative test: ts is kept if no automorphism maps it to a
/// lexicographically smaller transition system.
inline bool is_orbit_minimum(const EmbeddedGraph& g, const TransitionSystem& ts, const std::vector<Automorphism>& group) {
  for (const auto& a : group) {
    if (transform(g, ts, a) < ts) return false;
  }
  return true;
}

/// All A-trails, in increasing transition bit-vector order (vertex 0 most
/// significant). With up_to_symmetry, one representative (the lexicographic
/// minimum) per orbit of the full automorphism group.
inline std::vector<ATrail> enumerate_atrails(const EmbeddedGraph& g, bool up_to_symmetry) {
  if (!g.is_regular(4)) throw Error(ErrorCode::NotFourValent, "A-trails need a 4-valent graph");
  const std::uint64_t cap = search_cap();
  std::vector<TransitionSystem> found;
  detail::enumerate_transitions(g, true, [&](const TransitionSystem& ts, const detail::StrandJoiner&) {
    found.push_back(ts);
    if (found.size() > cap) throw Error(ErrorCode::TooLarge, "more A-trails than POLYLINK_MAX_SEARCH");
    return true;
  });
  std::vector<Automorphism> group;
  if (up_to_symmetry) group = automorphisms(g);
  std::vector<ATrail> out;
  for (auto& ts : found) {
    if (up_to_symmetry && !is_orbit_minimum(g, ts, group)) continue;
    auto trail = make_atrail(g, ts);
    if (!trail) throw Error(ErrorCode::InvalidStructure, "enumerator produced a multi-curve system");
    out.push_back(std::move(*trail));
  }
  return out;
}

/// Orbit sizes of the labeled A-trails under the automorphism group, in the
/// order of the up-to-symmetry representatives.
inline std::vector<int> atrail_orbit_sizes(const EmbeddedGraph& g) {
  auto group = automorphisms(g);
  std::vector<int> sizes;
  for (const auto& t : enumerate_atrails(g, true)) {
    std::vector<TransitionSystem> images;
    for (const auto& a : group) images.push_back(transform(g, t.transitions, a));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    sizes.push_back(static_cast<int>(images.size()));
  }
  return sizes;
}

/// Vertices in the order the curve passes through them; each vertex occurs twice.
inline std::vector<VertexId> visit_sequence(const EmbeddedGraph& g, const ATrail& t) {
  std::vector<VertexId> out;
  out.reserve(t.curve.size());
  for (Dart d : t.curve) out.push_back(g.tail(d));
  return out;
}

/// The curve read as a vertex cycle of medial(g) (medial vertex e = edge e).
inline std::vector<VertexId> to_medial_hamiltonian(const EmbeddedGraph& g, const ATrail& t) {
  std::vector<VertexId> out;
  out.reserve(t.curve.size());
  for (Dart d : t.curve) out.push_back(g.edge(d));
  return out;
}

/// w is conjugated to v when their two visits interleave along the curve.
inline std::vector<VertexId> conjugated_vertices(const EmbeddedGraph& g, const ATrail& t, VertexId v) {
  const auto seq = visit_sequence(g, t);
  std::vector<std::array<int, 2>> pos(g.num_vertices(), {-1, -1});
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    auto& p = pos[seq[i]];
    (p[0] == -1 ? p[0] : p[1]) = i;
  }
  auto inside = [&](int x) { return pos[v][0] < x && x < pos[v][1]; };
  std::vector<VertexId> out;
  for (VertexId w = 0; w < g.num_vertices(); ++w) {
    if (w != v && inside(pos[w][0]) != inside(pos[w][1])) out.push_back(w);
  }
  return out;
}

/// Switches the transitions at two conjugated vertices.
inline ATrail flip(const EmbeddedGraph& g, const ATrail& t, VertexId v, VertexId w) {
  auto conj = conjugated_vertices(g, t, v);
  if (!std::binary_search(conj.begin(), conj.end(), w))
    throw Error(ErrorCode::NotConjugated, "vertices " + std::to_string(v) + " and " + std::to_string(w));
  TransitionSystem ts = t.transitions;
  ts.choice[v] ^= 1U;
  ts.choice[w] ^= 1U;
  auto out = make_atrail(g, std::move(ts));
  if (!out) throw Error(ErrorCode::InvalidStructure, "flip produced more than one curve");
  return std::move(*out);
}

struct FlipReport {
  int num_atrails = 0;
  int num_components = 0;
  std::vector<int> component_sizes;  // descending
  int num_flip_edges = 0;
};

/// Connected components of the graph on labeled A-trails whose edges are
/// flips at conjugated pairs.
inline FlipReport flip_components(const EmbeddedGraph& g) {
  if (!g.is_regular(4)) throw Error(ErrorCode::NotFourValent, "flip graph needs a 4-valent graph");
  const int n = g.num_vertices();
  if (n >= 63 || (std::uint64_t{1} << n) > search_cap())
    throw Error(ErrorCode::TooLarge, "2^" + std::to_string(n) + " transition systems exceed the search cap");
  auto trails = enumerate_atrails(g, false);
  std::map<TransitionSystem, int> index;
  for (int i = 0; i < static_cast<int>(trails.size()); ++i) index.emplace(trails[i].transitions, i);
  std::vector<int> parent(trails.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  FlipReport r;
  r.num_atrails = static_cast<int>(trails.size());
  for (int i = 0; i < static_cast<int>(trails.size()); ++i) {
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : conjugated_vertices(g, trails[i], v)) {
        if (w < v) continue;
        ATrail f = flip(g, trails[i], v, w);
        int j = index.at(f.transitions);
        ++r.num_flip_edges;
        parent[find(i)] = find(j);
      }
    }
  }
  std::map<int, int> sizes;
  for (int i = 0; i < static_cast<int>(trails.size()); ++i) ++sizes[find(i)];
  for (auto [_, s] : sizes) r.component_sizes.push_back(s);
  std::sort(r.component_sizes.rbegin(), r.component_sizes.rend());
  r.num_components = static_cast<int>(r.component_sizes.size());
  return r;
}

/// Nonselfcrossing Eulerian theta- or K4-graph: transitions at the 4-valent
/// vertices decompose the edges into arcs between hubs.
struct EulerArcs {
  StructureKind kind = StructureKind::Theta;
  TransitionSystem transitions;
  std::vector<VertexId> hubs;
  /// Dart paths from hub to hub, each listed once (first dart < reverse's first).
  std::vector<std::vector<Dart>> arcs;
};

inline std::vector<VertexId> hubs_of_profile(const EmbeddedGraph& g, StructureKind kind) {
  if (kind == StructureKind::Cycle) throw Error(ErrorCode::WrongValenceProfile, "kind must be theta or k4");
  std::vector<VertexId> hubs;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 3) hubs.push_back(v);
    else if (g.degree(v) != 4)
      throw Error(ErrorCode::WrongValenceProfile, "vertex " + std::to_string(v) + " is neither 3- nor 4-valent");
  }
  if (static_cast<int>(hubs.size()) != hub_count(kind))
    throw Error(ErrorCode::WrongValenceProfile, std::to_string(hubs.size()) + " three-valent vertices for kind " +
                                                    std::string(to_string(kind)));
  return hubs;
}

/// Arcs of a transition system on a theta/K4 valence profile.
inline std::vector<std::vector<Dart>> trace_arcs(const EmbeddedGraph& g, const TransitionSystem& ts) {
  std::vector<std::vector<Dart>> arcs;
  for (VertexId h = 0; h < g.num_vertices(); ++h) {
    if (g.degree(h) != 3) continue;
    for (Dart d : g.rotation(h)) {
      std::vector<Dart> arc{d};
      while (g.degree(g.head(arc.back())) == 4) arc.push_back(curve_next(g, ts, arc.back()));
      if (d < g.twin(arc.back())) arcs.push_back(std::move(arc));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

inline std::vector<EulerArcs> enumerate_euler_theta_k4(const EmbeddedGraph& g, StructureKind kind) {
  const auto hubs = hubs_of_profile(g, kind);
  std::vector<int> hub_index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < hubs.size(); ++i) hub_index[hubs[i]] = static_cast<int>(i);
  const std::uint64_t cap = search_cap();
  std::vector<EulerArcs> out;
  detail::enumerate_transitions(g, false, [&](const TransitionSystem& ts, const detail::StrandJoiner& joiner) {
    // Every strand now runs between two hub darts.
    std::vector<int> arcs_between(16, 0);
    for (VertexId h : hubs) {
      for (Dart d : g.rotation(h)) {
        int a = hub_index[h], b = hub_index[g.tail(joiner.mate(d))];
        if (a == b) return true;
        ++arcs_between[4 * a + b];
      }
    }
    const int k = static_cast<int>(hubs.size());
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a == b) continue;
        int expected = kind == StructureKind::Theta ? 3 : 1;
        if (arcs_between[4 * a + b] != expected) return true;
      }
    }
    out.push_back({kind, ts, hubs, trace_arcs(g, ts)});
    if (out.size() > cap) throw Error(ErrorCode::TooLarge, "more Eulerian structures than POLYLINK_MAX_SEARCH");
    return true;
  });
  return out;
}

}  // namespace polylink
