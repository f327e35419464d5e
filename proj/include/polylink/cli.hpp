#pragma once

// Command dispatcher behind the `polylink` executable. Every subcommand
// writes one JSON document; exit 0 on success, 1 on bad input, 2 when a
// requested check is false.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polylink/atrails.hpp"
#include "polylink/belts.hpp"
#include "polylink/catalog.hpp"
#include "polylink/covers.hpp"
#include "polylink/fixtures.hpp"
#include "polylink/hamiltonian.hpp"
#include "polylink/io.hpp"
#include "polylink/links.hpp"

namespace polylink::cli {

using io::Json;

struct CommandResult {
  int exit_code = 0;
  std::string payload;
  std::string diagnostics;
};

namespace detail {

inline std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
}

/// Accepts a pgraph-v1 document or any object with a "graph" member holding one.
inline EmbeddedGraph load_graph(const std::string& path, std::istream& in) {
  Json j = io::parse_json(read_text(path, in));
  if (j.is_object() && j.contains("graph") && !j.contains("format")) return io::graph_from_json(j.at("graph"));
  return io::graph_from_json(j);
}

/// Accepts a structure-v1 document or an object with a "structure" member.
inline HamiltonianStructure load_structure(const EmbeddedGraph& q, const std::string& path, std::istream& in) {
  Json j = io::parse_json(read_text(path, in));
  if (j.is_object() && j.contains("structure") && !j.contains("format")) return io::structure_from_json(q, j.at("structure"));
  return io::structure_from_json(q, j);
}

inline Json belt_json(const Belt& b) {
  Json j = {{"faces", b.faces}, {"trivial", b.trivial}};
  if (b.trivial) j["surrounded"] = b.surrounded;
  return j;
}

inline Json class_json(const PolytopeClassReport& r) {
  Json j = {{"polytopal", r.polytopal},
            {"simple", r.simple},
            {"four_valent", r.four_valent},
            {"pogorelov", r.pogorelov},
            {"almost_pogorelov", r.almost_pogorelov},
            {"ideal_right_angled", r.ideal_right_angled},
            {"p8", r.is_p8}};
  j["belt_witness"] = r.belt_witness ? belt_json(*r.belt_witness) : Json(nullptr);
  j["demedial_failure"] = r.demedial_failure;
  return j;
}

inline Json summary_json(const EmbeddedGraph& g) {
  return {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"faces", g.num_faces()}};
}

inline Json link_json(const EmbeddedGraph& q, const LinkModel& m) {
  Json circles = Json::array();
  for (const auto& c : m.circles) {
    auto [a, b] = q.endpoints(c.edge);
    circles.push_back({{"edge", {std::min(a, b), std::max(a, b)}}, {"copy", c.copy}});
  }
  Json witnesses = Json::array();
  for (const auto& w : m.witnesses) witnesses.push_back({{"kind", to_string(w.kind)}, {"circles", w.circles}});
  return {{"kind", to_string(m.kind)},
          {"circles", circles},
          {"linking", m.linking},
          {"verdict", to_string(m.verdict)},
          {"witnesses", witnesses}};
}

}  // namespace detail

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// args excludes the program name.
inline CommandResult run(const std::vector<std::string>& args, std::istream& in = std::cin) {
  CLI::App app{"Combinatorics of polytopes, A-trails, Hamiltonian structures, covers and links", "polylink"};
  app.require_subcommand(1);
  app.fallthrough(false);

  CommandResult result;
  std::function<void()> action;
  std::string file, dot_path, name, expect, kind_name, structure_path, coloring_name, output_path;
  int k = 0, max_vertices = 0, atrail_index = 0;
  bool up_to_symmetry = false, count_only = false, quad = false, betti = false, witnesses = false;

  auto emit = [&](const Json& j) { result.payload = dump(j); };
  auto write_dot = [&](const EmbeddedGraph& g) {
    if (!dot_path.empty()) detail::write_text(dot_path, io::to_dot(g));
  };
  auto graph_cmd = [&](const std::string& cmd, const std::string& help) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("file", file, "pgraph-v1 JSON file, or - for standard input")->required();
    sub->add_option("--dot", dot_path, "Also write the graph as DOT");
    return sub;
  };

  {
    auto* sub = app.add_subcommand("gen", "Generate a named polytope");
    sub->add_option("name", name, "simplex, cube, octahedron, dodecahedron, permutohedron, P8, prism:k, antiprism:k")
        ->required();
    sub->add_option("--dot", dot_path, "Also write the graph as DOT");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph g = generate(name);
        write_dot(g);
        emit(io::graph_to_json(g));
      };
    });
  }
  {
    auto* sub = graph_cmd("classify", "Report polytope class predicates");
    sub->add_option("--expect", expect, "Exit 2 unless this predicate holds")
        ->check(CLI::IsMember({"polytopal", "simple", "four_valent", "pogorelov", "almost_pogorelov",
                               "ideal_right_angled", "p8"}));
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph g = detail::load_graph(file, in);
        write_dot(g);
        Json j = detail::class_json(classify(g));
        emit(j);
        if (!expect.empty() && !j.at(expect).get<bool>()) {
          result.exit_code = 2;
          result.diagnostics += "predicate '" + expect + "' is false\n";
        }
      };
    });
  }
  {
    auto* sub = graph_cmd("belts", "List k-belts of a simple polytope");
    sub->add_option("--k", k, "Belt length")->required();
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph g = detail::load_graph(file, in);
        write_dot(g);
        Json belts = Json::array();
        auto list = k_belts(g, k);
        for (const auto& b : list) belts.push_back(detail::belt_json(b));
        emit({{"k", k}, {"count", list.size()}, {"belts", belts}});
      };
    });
  }
  {
    auto* sub = app.add_subcommand("family", "Antiprisms and restricted edge-twists of A(4)");
    sub->add_option("--max-vertices", max_vertices, "Vertex bound")->required();
    sub->callback([&] {
      action = [&] {
        FamilyReport r = ideal_ra_family(max_vertices);
        Json members = Json::array();
        for (const auto& g : r.members) {
          Json m = detail::summary_json(g);
          m["graph"] = io::graph_to_json(g);
          members.push_back(m);
        }
        emit({{"max_vertices", max_vertices}, {"count", r.members.size()}, {"rejected", r.rejected},
              {"members", members}});
      };
    });
  }
  {
    auto* sub = graph_cmd("atrails", "Enumerate A-trails of a 4-valent polytope");
    sub->add_flag("--up-to-symmetry", up_to_symmetry, "One per automorphism orbit");
    sub->add_flag("--count", count_only, "Only report the count");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph g = detail::load_graph(file, in);
        write_dot(g);
        auto trails = enumerate_atrails(g, up_to_symmetry);
        Json j = {{"count", trails.size()}};
        if (!count_only) {
          Json list = Json::array();
          for (const auto& t : trails) list.push_back(io::trail_to_json(t));
          j["atrails"] = list;
        }
        emit(j);
      };
    });
  }
  {
    auto* sub = graph_cmd("flipgraph", "Connected components of the A-trail flip graph");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph g = detail::load_graph(file, in);
        write_dot(g);
        FlipReport r = flip_components(g);
        emit({{"atrails", r.num_atrails},
              {"components", r.num_components},
              {"component_sizes", r.component_sizes},
              {"flip_edges", r.num_flip_edges},
              {"connected", r.num_components <= 1}});
      };
    });
  }
  for (auto kind : {StructureKind::Theta, StructureKind::K4}) {
    const std::string cmd = kind == StructureKind::Theta ? "euler-theta" : "euler-k4";
    auto* sub = graph_cmd(cmd, "Eulerian " + std::string(to_string(kind)) + "-graphs without self-crossings");
    sub->add_flag("--count", count_only, "Only report the count");
    sub->callback([&, kind] {
      action = [&, kind] {
        EmbeddedGraph g = detail::load_graph(file, in);
        write_dot(g);
        auto list = enumerate_euler_theta_k4(g, kind);
        Json j = {{"count", list.size()}};
        if (!count_only) {
          j["kind"] = to_string(kind);
          Json arr = Json::array();
          for (const auto& a : list) arr.push_back(io::euler_arcs_to_json(g, a));
          j["structures"] = arr;
        }
        emit(j);
      };
    });
  }
  {
    auto* sub = graph_cmd("ham", "Hamiltonian cycles, theta- and K4-graphs of a simple polytope");
    sub->add_option("--kind", kind_name, "cycle, theta or k4")->required()->check(CLI::IsMember({"cycle", "theta", "k4"}));
    sub->add_flag("--quad-condition", quad, "Keep structures satisfying the quadrangle condition");
    sub->add_flag("--up-to-symmetry", up_to_symmetry, "One per automorphism orbit");
    sub->add_flag("--count", count_only, "Only report the count");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph q = detail::load_graph(file, in);
        write_dot(q);
        HamiltonianQuery query{io::parse_structure_kind(kind_name), up_to_symmetry, quad, quad && is_p8(q)};
        auto list = enumerate_hamiltonian(q, query);
        Json j = {{"count", list.size()}};
        if (!count_only) {
          j["kind"] = kind_name;
          Json arr = Json::array();
          for (const auto& s : list) arr.push_back(io::structure_to_json(q, s));
          j["structures"] = arr;
        }
        emit(j);
      };
    });
  }
  {
    auto* sub = graph_cmd("split", "Split the vertices of a 4-valent polytope along an A-trail");
    sub->add_option("--atrail", atrail_index, "Index into the A-trail list")->required()->check(CLI::NonNegativeNumber);
    sub->add_flag("--up-to-symmetry", up_to_symmetry, "Index into the list of orbit representatives");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph p = detail::load_graph(file, in);
        auto trails = enumerate_atrails(p, up_to_symmetry);
        if (atrail_index >= static_cast<int>(trails.size()))
          throw Error(ErrorCode::BadParameter, "only " + std::to_string(trails.size()) + " A-trails");
        SplitResult r = split_vertices(p, trails[atrail_index]);
        write_dot(r.graph);
        emit({{"atrail", io::trail_to_json(trails[atrail_index])},
              {"graph", io::graph_to_json(r.graph)},
              {"structure", io::structure_to_json(r.graph, r.structure)},
              {"origin", r.origin}});
      };
    });
  }
  {
    auto* sub = graph_cmd("contract", "Contract the matching edges of a Hamiltonian structure");
    sub->add_option("--structure", structure_path, "structure-v1 JSON")->required();
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph q = detail::load_graph(file, in);
        HamiltonianStructure s = detail::load_structure(q, structure_path, in);
        ContractResult r = contract_matching(q, s);
        write_dot(r.morph.graph);
        std::vector<int> degrees;
        for (VertexId v = 0; v < r.morph.graph.num_vertices(); ++v) degrees.push_back(r.morph.graph.degree(v));
        emit({{"graph", io::graph_to_json(r.morph.graph)},
              {"transitions", r.transitions.bits()},
              {"vertex_map", r.morph.vertex_map},
              {"degrees", degrees}});
      };
    });
  }
  {
    auto* sub = graph_cmd("reduce", "Shrink hub triangles until the simplex is reached");
    sub->add_option("--structure", structure_path, "structure-v1 JSON")->required();
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph q = detail::load_graph(file, in);
        HamiltonianStructure s = detail::load_structure(q, structure_path, in);
        ReductionResult r = reduce_to_simplex(q, s);
        write_dot(r.final_graph);
        Json moves = Json::array();
        for (const auto& m : r.sequence) moves.push_back({{"hub", m.hub}, {"face", m.face}});
        emit({{"reducible", r.reducible},
              {"moves", moves},
              {"final", {{"graph", io::graph_to_json(r.final_graph)},
                         {"structure", io::structure_to_json(r.final_graph, r.final_structure)}}}});
      };
    });
  }
  {
    auto* sub = graph_cmd("cover", "Vector-coloring and the glued cell complex");
    sub->add_option("--coloring", coloring_name, "cycle2, hamiltonian3, theta4, k45 or checkerboard22")
        ->required()
        ->check(CLI::IsMember({"cycle2", "hamiltonian3", "theta4", "k45", "checkerboard22"}));
    sub->add_option("--structure", structure_path, "structure-v1 JSON (not used by checkerboard22)");
    sub->add_flag("--betti", betti, "Add GF(2) Betti numbers");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph q = detail::load_graph(file, in);
        write_dot(q);
        ColoringKind kind = parse_coloring_kind(coloring_name);
        std::optional<HamiltonianStructure> s;
        if (!structure_path.empty()) s = detail::load_structure(q, structure_path, in);
        VectorColoring c = make_coloring(q, kind, s ? &*s : nullptr);
        ColoringReport rep = validate(q, c);
        Json vectors = Json::object();
        for (FaceId f = 0; f < q.num_faces(); ++f) vectors[std::to_string(f)] = vector_bits(c.vectors[f], c.rank);
        Json j = {{"coloring", {{"kind", coloring_name}, {"rank", c.rank}, {"vectors", vectors}}},
                  {"valid", rep.valid},
                  {"spans", rep.spans},
                  {"bad_vertices", rep.bad_vertices}};
        if (!rep.valid) {
          emit(j);
          result.exit_code = 2;
          result.diagnostics += "coloring is not valid\n";
          return;
        }
        QuotientComplex x = build_quotient(q, c);
        Json complex = {{"f_vector", x.f_vector},
                        {"euler_characteristic", x.euler_characteristic},
                        {"components", x.components}};
        if (betti) complex["betti"] = gf2_betti(x);
        j["complex"] = complex;
        emit(j);
      };
    });
  }
  {
    auto* sub = graph_cmd("link", "Link model and verdict of a Hamiltonian structure");
    sub->add_option("--structure", structure_path, "structure-v1 JSON")->required();
    sub->add_flag("--witnesses", witnesses, "List every witness instead of the first");
    sub->callback([&] {
      action = [&] {
        EmbeddedGraph q = detail::load_graph(file, in);
        write_dot(q);
        HamiltonianStructure s = detail::load_structure(q, structure_path, in);
        emit(detail::link_json(q, link_model(q, s, witnesses)));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("fixtures", "Recompute the reference values kept under tests/fixtures");
    sub->add_option("--output", output_path, "Also write them to this file");
    sub->callback([&] {
      action = [&] {
        emit(fixtures::derived());
        if (!output_path.empty()) detail::write_text(output_path, result.payload);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.payload = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.payload = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 1;
    result.diagnostics = std::string("error: ") + e.what() + "\n" + app.help();
    return result;
  }
  try {
    action();
  } catch (const Error& e) {
    result.exit_code = 1;
    result.payload.clear();
    result.diagnostics += std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace polylink::cli
