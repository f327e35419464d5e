#pragma once

// JSON (pgraph-v1 graphs, structures, A-trails) and DOT serialization.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polylink/atrails.hpp"
#include "polylink/embedded_graph.hpp"
#include "polylink/hamiltonian.hpp"

namespace polylink::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

inline Json graph_to_json(const EmbeddedGraph& g) {
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertices.push_back({{"id", v}, {"rotation", g.rotation(v)}});
  Json twins = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) twins.push_back({g.edge_darts(e)[0], g.edge_darts(e)[1]});
  return {{"format", "pgraph-v1"}, {"vertices", vertices}, {"twins", twins}};
}

/// Vertex ids must be 0..n-1 in any order; dart ids are arbitrary
/// nonnegative integers and get renumbered densely in increasing order.
inline EmbeddedGraph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != "pgraph-v1")
      throw Error(ErrorCode::MalformedInput, "expected a pgraph-v1 document");
    const auto& vs = j.at("vertices");
    std::vector<std::vector<Dart>> rotations(vs.size());
    std::vector<char> seen(vs.size(), 0);
    for (const auto& v : vs) {
      int id = v.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id])
        throw Error(ErrorCode::MalformedInput, "vertex ids must be distinct and in 0..n-1");
      seen[id] = 1;
      rotations[id] = v.at("rotation").get<std::vector<Dart>>();
    }
    std::vector<std::pair<Dart, Dart>> twins;
    for (const auto& t : j.at("twins")) {
      if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::MalformedInput, "twin entries are dart pairs");
      twins.emplace_back(t[0].get<Dart>(), t[1].get<Dart>());
    }
    return build(rotations, twins);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad pgraph-v1 document: ") + e.what());
  }
}

inline Json structure_to_json(const EmbeddedGraph& q, const HamiltonianStructure& s) {
  Json matching = Json::array();
  for (EdgeId e : s.matching) {
    auto [a, b] = q.endpoints(e);
    matching.push_back({std::min(a, b), std::max(a, b)});
  }
  return {{"format", "structure-v1"},
          {"kind", to_string(s.kind)},
          {"hubs", s.hubs},
          {"matching", matching},
          {"paths", s.paths}};
}

inline StructureKind parse_structure_kind(std::string_view s) {
  for (auto k : {StructureKind::Cycle, StructureKind::Theta, StructureKind::K4}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::UnknownName, "unknown structure kind '" + std::string(s) + "'");
}

/// Reads kind and matching (as vertex pairs); everything else is recomputed.
inline HamiltonianStructure structure_from_json(const EmbeddedGraph& q, const Json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != "structure-v1")
      throw Error(ErrorCode::MalformedInput, "expected a structure-v1 document");
    StructureKind kind = parse_structure_kind(j.at("kind").get<std::string>());
    std::vector<EdgeId> matching;
    for (const auto& pair : j.at("matching")) {
      VertexId a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
      if (a < 0 || b < 0 || a >= q.num_vertices() || b >= q.num_vertices())
        throw Error(ErrorCode::InvalidStructure, "matching vertex out of range");
      auto e = q.find_edge(a, b);
      if (!e) throw Error(ErrorCode::InvalidStructure, "no edge " + std::to_string(a) + "-" + std::to_string(b));
      matching.push_back(*e);
    }
    HamiltonianStructure s = structure_from_matching(q, kind, std::move(matching));
    if (j.contains("hubs") && j.at("hubs").get<std::vector<VertexId>>() != s.hubs)
      throw Error(ErrorCode::InvalidStructure, "listed hubs disagree with the matching");
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("bad structure-v1 document: ") + e.what());
  }
}

inline Json trail_to_json(const ATrail& t) {
  return {{"bits", t.transitions.bits()}, {"curve", t.curve}};
}

inline Json euler_arcs_to_json(const EmbeddedGraph& g, const EulerArcs& a) {
  Json arcs = Json::array();
  for (const auto& arc : a.arcs) {
    std::vector<VertexId> vs{g.tail(arc.front())};
    for (Dart d : arc) vs.push_back(g.head(d));
    arcs.push_back({{"darts", arc}, {"vertices", vs}});
  }
  return {{"bits", a.transitions.bits()}, {"hubs", a.hubs}, {"arcs", arcs}};
}

/// Undirected 1-skeleton; faces listed as comments.
inline std::string to_dot(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "graph polytope {\n";
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    out << "  // face " << f << ":";
    for (VertexId v : g.face_vertices(f)) out << ' ' << v;
    out << '\n';
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    out << "  " << a << " -- " << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace polylink::io
