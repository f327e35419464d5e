#pragma once

// Computed reference values, regenerated by `polylink fixtures` and checked in
// under tests/fixtures/derived.json.

#include <string>
#include <vector>

#include "polylink/atrails.hpp"
#include "polylink/belts.hpp"
#include "polylink/catalog.hpp"
#include "polylink/covers.hpp"
#include "polylink/hamiltonian.hpp"
#include "polylink/io.hpp"
#include "polylink/links.hpp"
#include "polylink/polytopes.hpp"

namespace polylink::fixtures {

using io::Json;

inline Json cover_entry(const std::string& polytope, const EmbeddedGraph& q, ColoringKind kind,
                        const HamiltonianStructure* s) {
  VectorColoring c = make_coloring(q, kind, s);
  QuotientComplex x = build_quotient(q, c);
  return {{"polytope", polytope},
          {"coloring", to_string(kind)},
          {"f_vector", x.f_vector},
          {"euler_characteristic", x.euler_characteristic},
          {"betti", gf2_betti(x)},
          {"components", x.components}};
}

inline HamiltonianStructure first_structure(const EmbeddedGraph& q, StructureKind kind) {
  auto all = enumerate_hamiltonian(q, {kind, true, false, false});
  if (all.empty()) throw Error(ErrorCode::InvalidStructure, "no structure of the requested kind");
  return all.front();
}

/// Splitting of the octahedron along the A-trail class that yields P8.
inline SplitResult octahedron_p8_split() {
  const EmbeddedGraph oct = polytopes::octahedron();
  for (const auto& t : enumerate_atrails(oct, true)) {
    SplitResult r = split_vertices(oct, t);
    if (is_p8(r.graph)) return r;
  }
  throw Error(ErrorCode::InvalidStructure, "no octahedron splitting is P8");
}

inline Json hamiltonian_counts(const EmbeddedGraph& q) {
  Json out = Json::object();
  const bool p8 = is_p8(q);
  for (auto kind : {StructureKind::Cycle, StructureKind::Theta, StructureKind::K4}) {
    auto count = [&](bool sym, bool quad) {
      return enumerate_hamiltonian(q, {kind, sym, quad, p8}).size();
    };
    out[std::string(to_string(kind))] = {{"all", count(false, false)},
                                         {"up_to_symmetry", count(true, false)},
                                         {"quad_condition", count(false, true)},
                                         {"quad_condition_up_to_symmetry", count(true, true)}};
  }
  return out;
}

inline Json verdict_counts(const EmbeddedGraph& q, StructureKind kind) {
  std::map<std::string, int> counts;
  for (const auto& s : enumerate_hamiltonian(q, {kind, false, false, false})) {
    ++counts[std::string(to_string(link_model(q, s).verdict))];
  }
  Json out = Json::object();
  for (const auto& [k, v] : counts) out[k] = v;
  return out;
}

inline Json derived() {
  Json j;
  j["format"] = "polylink-fixtures-v1";

  const EmbeddedGraph simplex = polytopes::simplex();
  const EmbeddedGraph cube = polytopes::cube();
  const EmbeddedGraph oct = polytopes::octahedron();
  const EmbeddedGraph a4 = polytopes::antiprism(4);
  const EmbeddedGraph dodeca = polytopes::dodecahedron();
  const EmbeddedGraph prism5 = polytopes::prism(5);
  const EmbeddedGraph p8g = p8();

  {
    EmbeddedGraph mc = medial(cube);
    j["medial"] = {{"simplex_is_octahedron", isomorphic(medial(simplex), oct)},
                   {"cube", {{"vertices", mc.num_vertices()}, {"faces", mc.num_faces()}}}};
  }
  {
    auto cb = checkerboard(a4);
    Json classes = Json::object();
    for (auto c : {FaceColor::White, FaceColor::Black}) {
      int squares = 0, triangles = 0;
      for (FaceId f = 0; f < a4.num_faces(); ++f) {
        if (cb.color[f] != c) continue;
        (a4.face_size(f) == 4 ? squares : triangles) += 1;
      }
      classes[c == FaceColor::White ? "white" : "black"] = {{"faces", cb.count(c)}, {"squares", squares},
                                                            {"triangles", triangles}};
    }
    j["checkerboard_antiprism4"] = classes;
  }
  {
    EmbeddedGraph d4 = demedial(a4, FaceColor::Black);
    j["demedial"] = {{"octahedron_is_simplex", isomorphic(demedial(oct, FaceColor::Black), simplex)},
                     {"antiprism4_vertices", d4.num_vertices()},
                     {"antiprism4_roundtrip", isomorphic(medial(d4), a4)}};
  }
  j["automorphisms"] = {{"antiprism4", automorphisms(a4).size()}, {"cube", automorphisms(cube).size()},
                        {"dodecahedron", automorphisms(dodeca).size()}};
  {
    auto b4 = k_belts(cube, 4);
    bool all_trivial = std::all_of(b4.begin(), b4.end(), [](const Belt& b) { return b.trivial; });
    auto rc = classify(cube);
    j["cube_belts"] = {{"three", k_belts(cube, 3).size()}, {"four", b4.size()}, {"four_all_trivial", all_trivial},
                       {"almost_pogorelov", rc.almost_pogorelov}, {"pogorelov", rc.pogorelov}};
  }
  {
    FaceId top = faces_of_size(a4, 4).front();
    auto sites = restricted_twist_sites(a4, top);
    EmbeddedGraph t = edge_twist(a4, top, sites.front().first, sites.front().second);
    j["edge_twist_antiprism4"] = {{"vertices", t.num_vertices()}, {"edges", t.num_edges()},
                                  {"faces", t.num_faces()}, {"ideal_right_angled", ideal_right_angled(t)}};
  }
  {
    Json ap = Json::array();
    for (int k = 3; k <= 8; ++k) {
      auto g = polytopes::antiprism(k);
      ap.push_back({{"k", k},
                    {"labeled", enumerate_atrails(g, false).size()},
                    {"up_to_symmetry", enumerate_atrails(g, true).size()}});
    }
    j["atrails"] = {{"octahedron_labeled", enumerate_atrails(oct, false).size()}, {"antiprism", ap}};
  }
  {
    Json reps = Json::array();
    for (const auto& t : enumerate_atrails(oct, true)) {
      std::vector<int> counts;
      for (VertexId v = 0; v < oct.num_vertices(); ++v) counts.push_back(conjugated_vertices(oct, t, v).size());
      reps.push_back({{"bits", t.transitions.bits()}, {"conjugated_counts", counts}});
    }
    j["octahedron_conjugation"] = reps;
  }
  {
    auto report = [](const EmbeddedGraph& g) -> Json {
      FlipReport r = flip_components(g);
      return {{"atrails", r.num_atrails}, {"components", r.num_components},
              {"component_sizes", r.component_sizes}, {"flip_edges", r.num_flip_edges}};
    };
    j["flip_components"] = {{"octahedron", report(oct)}, {"antiprism4", report(a4)}};
  }
  {
    auto [q, s] = borromean_cube_theta();
    EmbeddedGraph bip = contract_matching(q, s).morph.graph;
    auto arcs = enumerate_euler_theta_k4(bip, StructureKind::Theta);
    bool three = std::all_of(arcs.begin(), arcs.end(), [](const EulerArcs& a) { return a.arcs.size() == 3; });
    j["euler_theta_bipyramid"] = {{"count", arcs.size()}, {"all_three_arcs", three}};
  }
  {
    SplitResult r = octahedron_p8_split();
    auto pairs = conjugated_edges(r.graph, r.structure);
    std::vector<int> per_edge;
    for (EdgeId e : r.structure.matching) {
      per_edge.push_back(std::count_if(pairs.begin(), pairs.end(), [&](auto p) { return p.first == e || p.second == e; }));
    }
    j["p8_split_cycle"] = {{"matching_edges", r.structure.matching.size()}, {"conjugated_pairs", pairs.size()},
                           {"per_edge", per_edge}};
  }
  j["hamiltonian"] = {{"simplex", hamiltonian_counts(simplex)},   {"cube", hamiltonian_counts(cube)},
                      {"prism5", hamiltonian_counts(prism5)},     {"P8", hamiltonian_counts(p8g)},
                      {"dodecahedron", hamiltonian_counts(dodeca)}};
  j["link_verdicts"] = {{"cube_theta", verdict_counts(cube, StructureKind::Theta)},
                        {"prism5_theta", verdict_counts(prism5, StructureKind::Theta)},
                        {"P8_theta", verdict_counts(p8g, StructureKind::Theta)},
                        {"dodecahedron_theta", verdict_counts(dodeca, StructureKind::Theta)}};
  {
    Json covers = Json::array();
    const auto cube_cycle = first_structure(cube, StructureKind::Cycle);
    const auto dodeca_cycle = first_structure(dodeca, StructureKind::Cycle);
    const auto p8_cycle = octahedron_p8_split().structure;
    auto [cq, cs] = borromean_cube_theta();
    covers.push_back(cover_entry("cube", cube, ColoringKind::Cycle2, &cube_cycle));
    covers.push_back(cover_entry("cube", cube, ColoringKind::Hamiltonian3, &cube_cycle));
    covers.push_back(cover_entry("cube", cq, ColoringKind::Theta4, &cs));
    covers.push_back(cover_entry("dodecahedron", dodeca, ColoringKind::Cycle2, &dodeca_cycle));
    covers.push_back(cover_entry("dodecahedron", dodeca, ColoringKind::Hamiltonian3, &dodeca_cycle));
    for (const auto& s : enumerate_hamiltonian(dodeca, {StructureKind::Theta, true, false, false})) {
      if (link_model(dodeca, s).verdict != LinkVerdict::UnlinkedNontrivial) continue;
      covers.push_back(cover_entry("dodecahedron", dodeca, ColoringKind::Theta4, &s));
      break;
    }
    const auto dodeca_k4 = first_structure(dodeca, StructureKind::K4);
    covers.push_back(cover_entry("dodecahedron", dodeca, ColoringKind::K45, &dodeca_k4));
    covers.push_back(cover_entry("P8", octahedron_p8_split().graph, ColoringKind::Cycle2, &p8_cycle));
    covers.push_back(cover_entry("P8", octahedron_p8_split().graph, ColoringKind::Hamiltonian3, &p8_cycle));
    covers.push_back(cover_entry("octahedron", oct, ColoringKind::Checkerboard22, nullptr));
    covers.push_back(cover_entry("antiprism:4", a4, ColoringKind::Checkerboard22, nullptr));
    {
      QuotientComplex x = build_quotient(simplex, {3, {1U, 2U, 4U, 7U}});
      covers.push_back({{"polytope", "simplex"},
                        {"coloring", "rank3_independent_plus_sum"},
                        {"f_vector", x.f_vector},
                        {"euler_characteristic", x.euler_characteristic},
                        {"betti", gf2_betti(x)},
                        {"components", x.components}});
    }
    j["covers"] = covers;
  }
  {
    Json sizes = Json::array();
    for (int n = 6; n <= 12; ++n) {
      FamilyReport r = ideal_ra_family(n);
      sizes.push_back({{"max_vertices", n}, {"members", r.members.size()}, {"rejected", r.rejected}});
    }
    j["ideal_ra_family"] = sizes;
  }
  return j;
}

}  // namespace polylink::fixtures
