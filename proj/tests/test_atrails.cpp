#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fixture_data.hpp"
#include "oracles.hpp"
#include "polylink/atrails.hpp"
#include "polylink/catalog.hpp"
#include "polylink/hamiltonian.hpp"

namespace polylink {
namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::MalformedInput;
}

std::vector<EmbeddedGraph> small_four_valent() {
  std::vector<EmbeddedGraph> out{polytopes::antiprism(3), polytopes::antiprism(4), polytopes::antiprism(5),
                                 medial(polytopes::simplex())};
  auto a4 = polytopes::antiprism(4);
  for (FaceId f : faces_of_size(a4, 4)) {
    for (auto [e1, e2] : restricted_twist_sites(a4, f)) out.push_back(edge_twist(a4, f, e1, e2));
  }
  for (const auto& g : ideal_ra_family(10).members) out.push_back(g);
  return out;
}

TEST(ATrailTest, CountsUpToSymmetry) {
  EXPECT_EQ(enumerate_atrails(polytopes::octahedron(), true).size(), 2u);
  EXPECT_EQ(enumerate_atrails(polytopes::antiprism(4), true).size(), 7u);
  for (const auto& row : testing::fixtures()["atrails"]["antiprism"]) {
    const int k = row["k"].get<int>();
    auto g = polytopes::antiprism(k);
    auto sym = enumerate_atrails(g, true);
    EXPECT_GE(sym.size(), 2u) << k;
    EXPECT_EQ(row["up_to_symmetry"], sym.size()) << k;
    EXPECT_EQ(row["labeled"], enumerate_atrails(g, false).size()) << k;
  }
}

TEST(ATrailTest, LabeledCountsMatchBruteForce) {
  EXPECT_EQ(testing::fixtures()["atrails"]["octahedron_labeled"].get<long long>(),
            oracle::brute_force_atrail_count(polytopes::octahedron()));
  for (const auto& g : small_four_valent()) {
    ASSERT_LE(g.num_vertices(), 10);
    EXPECT_EQ(static_cast<long long>(enumerate_atrails(g, false).size()), oracle::brute_force_atrail_count(g))
        << "V=" << g.num_vertices();
  }
}

TEST(ATrailTest, EveryTrailIsSingleCurve) {
  auto g = polytopes::antiprism(5);
  for (const auto& t : enumerate_atrails(g, false)) {
    EXPECT_EQ(t.curve.size(), static_cast<std::size_t>(g.num_darts() / 2));
    std::uint64_t bits = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) bits |= std::uint64_t{t.transitions.choice[v]} << v;
    EXPECT_EQ(oracle::curve_count(g, bits), 1);
  }
}

TEST(ATrailTest, OrbitSizesSumToLabeledCount) {
  for (int k = 3; k <= 6; ++k) {
    auto g = polytopes::antiprism(k);
    auto sizes = atrail_orbit_sizes(g);
    EXPECT_EQ(sizes.size(), enumerate_atrails(g, true).size());
    long long total = 0;
    for (int s : sizes) {
      total += s;
      EXPECT_EQ(static_cast<int>(automorphisms(g).size()) % s, 0);
    }
    EXPECT_EQ(total, static_cast<long long>(enumerate_atrails(g, false).size()));
  }
}

TEST(ATrailTest, DeterministicOrder) {
  auto g = polytopes::antiprism(6);
  auto a = enumerate_atrails(g, false);
  auto b = enumerate_atrails(g, false);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].transitions, b[i].transitions);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LT(a[i - 1].transitions.bits(), a[i].transitions.bits());
}

TEST(ATrailTest, MedialImageIsHamiltonian) {
  auto g = polytopes::antiprism(5);
  auto m = medial(g);
  std::set<std::set<std::pair<int, int>>> images;
  for (const auto& t : enumerate_atrails(g, false)) {
    auto cycle = to_medial_hamiltonian(g, t);
    EXPECT_TRUE(oracle::is_hamiltonian_cycle(m, cycle));
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
    EXPECT_TRUE(images.insert(edges).second) << "two A-trails share a medial cycle";
  }
}

TEST(ATrailTest, ConjugatedVerticesMatchInterleavingOracle) {
  auto g = polytopes::octahedron();
  const auto& reps = testing::fixtures()["octahedron_conjugation"];
  auto trails = enumerate_atrails(g, true);
  ASSERT_EQ(reps.size(), trails.size());
  for (std::size_t i = 0; i < trails.size(); ++i) {
    EXPECT_EQ(reps[i]["bits"], trails[i].transitions.bits());
    auto seq = visit_sequence(g, trails[i]);
    std::vector<std::vector<int>> pos(g.num_vertices());
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) pos[seq[p]].push_back(p);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::vector<VertexId> expect;
      for (VertexId w = 0; w < g.num_vertices(); ++w) {
        if (w != v && oracle::interleaved(pos[v][0], pos[v][1], pos[w][0], pos[w][1])) expect.push_back(w);
      }
      auto got = conjugated_vertices(g, trails[i], v);
      EXPECT_EQ(got, expect);
      EXPECT_FALSE(got.empty());
      EXPECT_EQ(reps[i]["conjugated_counts"][v], got.size());
    }
  }
}

TEST(ATrailTest, FlipIsInvolutiveOnRandomPairs) {
  std::mt19937 rng(20240917);
  std::vector<EmbeddedGraph> graphs{polytopes::antiprism(3), polytopes::antiprism(4), polytopes::antiprism(5),
                                    polytopes::antiprism(6)};
  std::vector<std::vector<ATrail>> trails;
  for (const auto& g : graphs) trails.push_back(enumerate_atrails(g, false));
  int checked = 0;
  while (checked < 200) {
    std::size_t gi = rng() % graphs.size();
    const auto& g = graphs[gi];
    const auto& t = trails[gi][rng() % trails[gi].size()];
    VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
    auto conj = conjugated_vertices(g, t, v);
    ASSERT_FALSE(conj.empty());
    VertexId w = conj[rng() % conj.size()];
    ATrail f = flip(g, t, v, w);
    auto again = make_atrail(g, f.transitions);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(f.transitions.choice[v], 1 - t.transitions.choice[v]);
    EXPECT_EQ(f.transitions.choice[w], 1 - t.transitions.choice[w]);
    auto conj_back = conjugated_vertices(g, f, v);
    ASSERT_TRUE(std::binary_search(conj_back.begin(), conj_back.end(), w));
    EXPECT_EQ(flip(g, f, v, w).transitions, t.transitions);
    ++checked;
  }
}

TEST(ATrailTest, FlipRejectsNonConjugated) {
  auto g = polytopes::octahedron();
  auto t = enumerate_atrails(g, false).front();
  auto conj = conjugated_vertices(g, t, 0);
  for (VertexId w = 1; w < g.num_vertices(); ++w) {
    if (!std::binary_search(conj.begin(), conj.end(), w)) {
      EXPECT_EQ(error_of([&] { flip(g, t, 0, w); }), ErrorCode::NotConjugated);
    }
  }
}

TEST(ATrailTest, FlipComponentsMatchFixture) {
  const auto& f = testing::fixtures()["flip_components"];
  auto check = [&](const EmbeddedGraph& g, const nlohmann::json& row) {
    FlipReport a = flip_components(g);
    FlipReport b = flip_components(g);
    EXPECT_EQ(a.num_components, b.num_components);
    EXPECT_EQ(a.num_flip_edges, b.num_flip_edges);
    EXPECT_EQ(row["atrails"], a.num_atrails);
    EXPECT_EQ(row["components"], a.num_components);
    EXPECT_EQ(row["flip_edges"], a.num_flip_edges);
    int total = 0;
    for (int s : a.component_sizes) total += s;
    EXPECT_EQ(total, a.num_atrails);
  };
  check(polytopes::octahedron(), f["octahedron"]);
  check(polytopes::antiprism(4), f["antiprism4"]);
}

TEST(ATrailTest, Errors) {
  EXPECT_EQ(error_of([] { enumerate_atrails(polytopes::cube(), false); }), ErrorCode::NotFourValent);
  ::setenv("POLYLINK_MAX_SEARCH", "10", 1);
  EXPECT_EQ(error_of([] { enumerate_atrails(polytopes::antiprism(5), false); }), ErrorCode::TooLarge);
  EXPECT_EQ(error_of([] { flip_components(polytopes::antiprism(5)); }), ErrorCode::TooLarge);
  ::unsetenv("POLYLINK_MAX_SEARCH");
  EXPECT_EQ(search_cap(), std::uint64_t{1} << 24);
}

TEST(EulerThetaTest, BipyramidFromCubeContraction) {
  auto [q, s] = borromean_cube_theta();
  EmbeddedGraph bip = contract_matching(q, s).morph.graph;
  auto list = enumerate_euler_theta_k4(bip, StructureKind::Theta);
  ASSERT_FALSE(list.empty());
  EXPECT_EQ(testing::fixtures()["euler_theta_bipyramid"]["count"], list.size());
  for (const auto& a : list) {
    ASSERT_EQ(a.hubs.size(), 2u);
    ASSERT_EQ(a.arcs.size(), 3u);
    for (const auto& arc : a.arcs) {
      VertexId from = bip.tail(arc.front()), to = bip.head(arc.back());
      EXPECT_TRUE((from == a.hubs[0] && to == a.hubs[1]) || (from == a.hubs[1] && to == a.hubs[0]));
    }
    // Splitting along the arcs is a theta structure again.
    auto split = split_vertices(bip, a);
    EXPECT_EQ(split.structure.kind, StructureKind::Theta);
    EXPECT_TRUE(is_simple_polytope(split.graph));
  }
}

TEST(EulerThetaTest, WrongProfile) {
  EXPECT_EQ(error_of([] { enumerate_euler_theta_k4(polytopes::octahedron(), StructureKind::Theta); }),
            ErrorCode::WrongValenceProfile);
  EXPECT_EQ(error_of([] { enumerate_euler_theta_k4(polytopes::cube(), StructureKind::K4); }),
            ErrorCode::WrongValenceProfile);
}

TEST(EulerK4Test, ContractionsAreFound) {
  // Contracting a K4 structure gives a graph with four 3-valent hubs.
  auto k4s = enumerate_hamiltonian(polytopes::prism(5), {StructureKind::K4, true, false, false});
  ASSERT_FALSE(k4s.empty());
  auto q = polytopes::prism(5);
  for (const auto& s : k4s) {
    try {
      auto c = contract_matching(q, s);
      auto list = enumerate_euler_theta_k4(c.morph.graph, StructureKind::K4);
      bool found = std::any_of(list.begin(), list.end(),
                               [&](const EulerArcs& a) { return a.transitions == c.transitions; });
      EXPECT_TRUE(found);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateContraction);
    }
  }
}

}  // namespace
}  // namespace polylink
