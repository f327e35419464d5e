// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures.
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "polylink/polylink.hpp"

using namespace polylink;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::vector<EmbeddedGraph> four_valent_fixtures() {
  std::vector<EmbeddedGraph> out;
  for (int k = 3; k <= 8; ++k) out.push_back(polytopes::antiprism(k));
  out.push_back(medial(polytopes::simplex()));
  out.push_back(medial(polytopes::cube()));
  auto a4 = polytopes::antiprism(4);
  for (FaceId f : faces_of_size(a4, 4)) {
    for (auto [e1, e2] : restricted_twist_sites(a4, f)) out.push_back(edge_twist(a4, f, e1, e2));
  }
  for (const auto& g : ideal_ra_family(12).members) out.push_back(g);
  return out;
}

HamiltonianQuery query(StructureKind kind, bool sym, bool quad, const EmbeddedGraph& q) {
  return {kind, sym, quad, quad && is_p8(q)};
}

void criterion1(Check& c) {
  auto n = [](const EmbeddedGraph& g) { return enumerate_atrails(g, true).size(); };
  c.expect(n(polytopes::octahedron()) == 2, "octahedron");
  c.expect(n(polytopes::antiprism(4)) == 7, "A(4)");
  for (int k = 3; k <= 8; ++k) c.expect(n(polytopes::antiprism(k)) >= 2, "A(" + std::to_string(k) + ")");
}

void criterion2(Check& c) {
  int checked = 0;
  for (const auto& g : four_valent_fixtures()) {
    if (g.num_vertices() > 10) continue;
    ++checked;
    c.expect(static_cast<long long>(enumerate_atrails(g, false).size()) == oracle::brute_force_atrail_count(g),
             "V=" + std::to_string(g.num_vertices()));
  }
  c.expect(checked >= 10, "too few fixtures");
}

void criterion3(Check& c) {
  auto dodeca = polytopes::dodecahedron(), cube = polytopes::cube(), prism5 = polytopes::prism(5), q8 = p8();
  c.expect(enumerate_hamiltonian(dodeca, query(StructureKind::Cycle, true, false, dodeca)).size() == 1, "dodecahedron");
  c.expect(enumerate_hamiltonian(cube, query(StructureKind::Cycle, false, true, cube)).empty(), "cube");
  c.expect(enumerate_hamiltonian(prism5, query(StructureKind::Cycle, false, true, prism5)).empty(), "prism5");
  c.expect(enumerate_hamiltonian(q8, query(StructureKind::Cycle, true, true, q8)).size() == 1, "P8");
}

void criterion4(Check& c) {
  for (int k = 3; k <= 5; ++k) {
    auto p = polytopes::antiprism(k);
    for (const auto& t : enumerate_atrails(p, false)) {
      SplitResult r = split_vertices(p, t);
      ContractResult back = contract_matching(r.graph, r.structure);
      c.expect(canonical_code(back.morph.graph) == canonical_code(p) && back.transitions == t.transitions,
               "split/contract on A(" + std::to_string(k) + ")");
    }
  }
  for (const auto& g : four_valent_fixtures()) {
    for (FaceColor cls : {FaceColor::White, FaceColor::Black}) {
      c.expect(canonical_code(medial(demedial(g, cls))) == canonical_code(g),
               "medial/demedial V=" + std::to_string(g.num_vertices()));
    }
  }
}

void criterion5(Check& c) {
  for (const auto& q : {polytopes::dodecahedron(), p8()}) {
    for (const auto& s : enumerate_hamiltonian(q, query(StructureKind::Cycle, false, false, q))) {
      auto pairs = conjugated_edges(q, s);
      for (EdgeId e : s.matching) {
        c.expect(std::any_of(pairs.begin(), pairs.end(), [&](auto p) { return p.first == e || p.second == e; }),
                 "edge without conjugate");
      }
      LinkModel m = link_model(q, s);
      for (int i = 0; i < static_cast<int>(m.circles.size()); ++i) c.expect(m.linking_degree(i) >= 1, "free circle");
    }
  }
  std::mt19937 rng(20240917);
  std::vector<EmbeddedGraph> graphs;
  std::vector<std::vector<ATrail>> trails;
  for (int k = 3; k <= 6; ++k) {
    graphs.push_back(polytopes::antiprism(k));
    trails.push_back(enumerate_atrails(graphs.back(), false));
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t gi = rng() % graphs.size();
    const auto& g = graphs[gi];
    const auto& t = trails[gi][rng() % trails[gi].size()];
    VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
    auto conj = conjugated_vertices(g, t, v);
    if (conj.empty()) {
      c.expect(false, "vertex without conjugate");
      continue;
    }
    VertexId w = conj[rng() % conj.size()];
    ATrail f = flip(g, t, v, w);
    c.expect(make_atrail(g, f.transitions).has_value(), "flip breaks the A-trail");
    c.expect(flip(g, f, v, w).transitions == t.transitions, "flip not involutive");
  }
}

void criterion6(Check& c) {
  auto [cube, theta] = borromean_cube_theta();
  LinkModel m = link_model(cube, theta);
  c.expect(m.circles.size() == 3 && m.linking.empty(), "cube theta circles");
  c.expect(m.verdict == LinkVerdict::UnlinkedNontrivial, "cube theta verdict");
  c.expect(!m.witnesses.empty() && m.witnesses.front().kind == WitnessKind::BorromeanTriple, "cube theta witness");

  auto simplex = polytopes::simplex();
  for (const auto& s : enumerate_hamiltonian(simplex, query(StructureKind::Theta, false, false, simplex))) {
    LinkModel l = link_model(simplex, s);
    c.expect(l.verdict == LinkVerdict::Trivial && l.circles.size() == 1, "simplex theta");
  }
  std::mt19937 rng(11);
  for (auto kind : {StructureKind::Theta, StructureKind::K4}) {
    for (const auto& s0 : enumerate_hamiltonian(simplex, query(kind, false, false, simplex))) {
      for (int cuts = 0; cuts <= 5; ++cuts) {
        for (int trial = 0; trial < 3; ++trial) {
          EmbeddedGraph q = simplex;
          HamiltonianStructure s = s0;
          for (int i = 0; i < cuts; ++i) {
            VertexId h = s.hubs[rng() % s.hubs.size()];
            CutResult r = cut_vertex(q, s, h, q.face(q.rotation(h)[rng() % q.degree(h)]));
            q = std::move(r.graph);
            s = std::move(r.structure);
          }
          c.expect(link_model(q, s).verdict == LinkVerdict::Trivial, "grown fixture");
        }
      }
    }
  }
}

void criterion7(Check& c) {
  auto [cube, theta] = borromean_cube_theta();
  EmbeddedGraph bip = contract_matching(cube, theta).morph.graph;
  std::vector<int> degrees;
  for (VertexId v = 0; v < bip.num_vertices(); ++v) degrees.push_back(bip.degree(v));
  std::sort(degrees.begin(), degrees.end());
  c.expect(degrees == std::vector<int>{3, 3, 4, 4, 4}, "bipyramid profile");
  auto dodeca = polytopes::dodecahedron();
  for (const auto& s : enumerate_hamiltonian(dodeca, query(StructureKind::Cycle, false, false, dodeca))) {
    c.expect(ideal_right_angled(contract_matching(dodeca, s).morph.graph), "dodecahedron contraction");
  }
  c.expect(isomorphic(shrink_quadrangles(polytopes::permutohedron()), polytopes::octahedron()), "permutohedron");
}

bool euler_poincare(const QuotientComplex& x) {
  auto b = gf2_betti(x);
  const auto& f = x.f_vector;
  return x.euler_characteristic == f[0] - f[1] + f[2] - f[3] && x.euler_characteristic == b[0] - b[1] + b[2] - b[3];
}

void criterion8(Check& c) {
  auto cube = polytopes::cube();
  auto dodeca = polytopes::dodecahedron();
  auto cube_cycle = enumerate_hamiltonian(cube, query(StructureKind::Cycle, true, false, cube)).front();
  auto dodeca_cycle = enumerate_hamiltonian(dodeca, query(StructureKind::Cycle, true, false, dodeca)).front();

  VectorColoring c2 = make_coloring(cube, ColoringKind::Cycle2, &cube_cycle);
  c.expect(validate(cube, c2).valid, "cube cycle2 invalid");
  QuotientComplex x = build_quotient(cube, c2);
  c.expect(gf2_betti(x) == std::array<int, 4>{1, 0, 0, 1} && x.euler_characteristic == 0, "cube cycle2 homology");
  c.expect(euler_poincare(x), "Euler-Poincare cube cycle2");

  for (auto [q, s, name] : {std::tuple{&cube, &cube_cycle, "cube"}, std::tuple{&dodeca, &dodeca_cycle, "dodecahedron"}}) {
    VectorColoring h = make_coloring(*q, ColoringKind::Hamiltonian3, s);
    c.expect(h.rank == 3 && validate(*q, h).valid, std::string(name) + " rank-3 coloring invalid");
    QuotientComplex y = build_quotient(*q, h);
    c.expect(y.euler_characteristic == 0, std::string(name) + " chi");
    c.expect(euler_poincare(y), std::string("Euler-Poincare ") + name);
  }
  VectorColoring d2 = make_coloring(dodeca, ColoringKind::Cycle2, &dodeca_cycle);
  c.expect(validate(dodeca, d2).valid && euler_poincare(build_quotient(dodeca, d2)), "dodecahedron cycle2");
  auto [bc, bt] = borromean_cube_theta();
  c.expect(euler_poincare(build_quotient(bc, make_coloring(bc, ColoringKind::Theta4, &bt))), "Euler-Poincare theta4");
  auto oct = polytopes::octahedron();
  c.expect(euler_poincare(build_quotient(oct, make_coloring(oct, ColoringKind::Checkerboard22, nullptr))),
           "Euler-Poincare checkerboard");
}

void criterion9(Check& c) {
  for (int k = 3; k <= 5; ++k) {
    auto p = polytopes::antiprism(k);
    for (const auto& t : enumerate_atrails(p, false)) {
      c.expect(circle_count(p, t) == p.num_vertices(), "A(" + std::to_string(k) + ")");
    }
  }
}

void criterion10(Check& c, std::string& report) {
  for (auto [name, g] : {std::pair{"octahedron", polytopes::octahedron()}, std::pair{"A(4)", polytopes::antiprism(4)}}) {
    FlipReport a = flip_components(g), b = flip_components(g);
    c.expect(a.num_atrails == b.num_atrails && a.num_components == b.num_components &&
                 a.component_sizes == b.component_sizes && a.num_flip_edges == b.num_flip_edges,
             std::string(name) + " not reproducible");
    report += std::string(report.empty() ? "" : ", ") + name + ": " + std::to_string(a.num_atrails) + " A-trails in " +
              std::to_string(a.num_components) + " component(s)";
  }
}

}  // namespace

int main() {
  std::string flip_report;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"A-trail counts for the octahedron and antiprisms", criterion1},
      {"A-trail enumeration matches the brute-force oracle for V <= 10", criterion2},
      {"Hamiltonian cycle counts for dodecahedron, cube, 5-prism and P8", criterion3},
      {"split/contract and medial/demedial roundtrips", criterion4},
      {"conjugate edges, linking degrees and random flips", criterion5},
      {"link verdicts for the cube theta, simplex and grown structures", criterion6},
      {"contractions: bipyramid profile, ideal right-angled, permutohedron", criterion7},
      {"cover homology and Euler characteristics", criterion8},
      {"circle count equals vertex count for A(3..5)", criterion9},
      {"flip graph components are computed reproducibly", [&](Check& c) { criterion10(c, flip_report); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%zu %s: %s", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first.c_str());
    if (!c.ok) std::printf(" (%s)", c.first_failure.c_str());
    if (i == 9 && c.ok) std::printf(" [%s]", flip_report.c_str());
    std::printf("\n");
    failures += !c.ok;
  }
  return failures;
}
