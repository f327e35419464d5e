#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixture_data.hpp"
#include "polylink/catalog.hpp"
#include "polylink/cli.hpp"

namespace polylink {
namespace {

namespace fs = std::filesystem;
using cli::CommandResult;
using nlohmann::json;

CommandResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return cli::run(args, in);
}

json payload(const CommandResult& r) { return json::parse(r.payload); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("polylink_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string gen(const std::string& name) {
    CommandResult r = run({"gen", name});
    EXPECT_EQ(r.exit_code, 0);
    return write(name + ".json", r.payload);
  }

  fs::path dir_;
};

TEST_F(CliTest, AtrailCountFromStdin) {
  CommandResult g = run({"gen", "antiprism:4"});
  ASSERT_EQ(g.exit_code, 0);
  CommandResult r = run({"atrails", "-", "--up-to-symmetry", "--count"}, g.payload);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(payload(r), json({{"count", 7}}));
}

TEST_F(CliTest, DodecahedronCycleCount) {
  CommandResult r = run({"ham", gen("dodecahedron"), "--kind", "cycle", "--up-to-symmetry", "--count"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(payload(r), json({{"count", 1}}));
}

TEST_F(CliTest, ClassifyExpect) {
  std::string cube = gen("cube");
  CommandResult r = run({"classify", cube, "--expect", "pogorelov"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(payload(r)["pogorelov"].get<bool>());
  EXPECT_EQ(run({"classify", cube, "--expect", "almost_pogorelov"}).exit_code, 0);
  EXPECT_EQ(run({"classify", gen("dodecahedron"), "--expect", "pogorelov"}).exit_code, 0);
  EXPECT_EQ(run({"classify", cube, "--expect", "round"}).exit_code, 1);
}

TEST_F(CliTest, UsageErrors) {
  CommandResult r = run({"frobnicate"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.diagnostics.find("Subcommands"), std::string::npos);
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"belts", gen("cube")}).exit_code, 1);
  EXPECT_EQ(run({"ham", gen("cube"), "--kind", "star"}).exit_code, 1);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"classify", "-"}, "{not json").exit_code, 1);
  EXPECT_EQ(run({"classify", "-"}, R"({"format":"other"})").exit_code, 1);
  EXPECT_EQ(run({"classify", (dir_ / "missing.json").string()}).exit_code, 1);
  EXPECT_EQ(run({"gen", "icosahedron"}).exit_code, 1);
  CommandResult r = run({"atrails", gen("cube")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.diagnostics.find("NotFourValent"), std::string::npos);
  EXPECT_TRUE(r.payload.empty());
}

TEST_F(CliTest, GraphJsonRoundtrip) {
  // Sparse dart ids and vertices listed out of order.
  const std::string doc = R"({"format":"pgraph-v1",
    "vertices":[{"id":1,"rotation":[11,50,40]},{"id":0,"rotation":[10,20,30]},
                {"id":2,"rotation":[21,41,60]},{"id":3,"rotation":[31,61,51]}],
    "twins":[[10,11],[20,21],[30,31],[40,41],[50,51],[60,61]]})";
  CommandResult r = run({"classify", "-"}, doc);
  ASSERT_EQ(r.exit_code, 0) << r.diagnostics;
  EXPECT_TRUE(payload(r)["simple"].get<bool>());
  for (const char* name : {"cube", "P8", "antiprism:5", "permutohedron"}) {
    EmbeddedGraph g = generate(name);
    EmbeddedGraph back = io::graph_from_json(io::graph_to_json(g));
    EXPECT_EQ(io::graph_to_json(back), io::graph_to_json(g));
  }
}

TEST_F(CliTest, SplitContractLink) {
  std::string oct = gen("octahedron");
  CommandResult s = run({"split", oct, "--atrail", "0", "--up-to-symmetry"});
  ASSERT_EQ(s.exit_code, 0) << s.diagnostics;
  std::string split = write("split.json", s.payload);
  CommandResult c = run({"contract", split, "--structure", split});
  ASSERT_EQ(c.exit_code, 0) << c.diagnostics;
  EmbeddedGraph back = io::graph_from_json(payload(c)["graph"]);
  EXPECT_TRUE(isomorphic(back, polytopes::octahedron()));
  EXPECT_EQ(payload(c)["transitions"], payload(s)["atrail"]["bits"]);
  CommandResult l = run({"link", split, "--structure", split});
  ASSERT_EQ(l.exit_code, 0);
  EXPECT_EQ(payload(l)["verdict"], "linked");
  EXPECT_EQ(payload(l)["circles"].size(), 6u);
  EXPECT_EQ(run({"split", oct, "--atrail", "2", "--up-to-symmetry"}).exit_code, 1);
  EXPECT_EQ(run({"split", oct, "--atrail", "15"}).exit_code, 0);
}

TEST_F(CliTest, BorromeanCubeLinkAndCover) {
  auto [q, s] = borromean_cube_theta();
  std::string graph = write("cube.json", io::graph_to_json(q).dump());
  std::string structure = write("theta.json", io::structure_to_json(q, s).dump());
  CommandResult l = run({"link", graph, "--structure", structure, "--witnesses"});
  ASSERT_EQ(l.exit_code, 0) << l.diagnostics;
  json j = payload(l);
  EXPECT_EQ(j["verdict"], "unlinked_nontrivial");
  EXPECT_EQ(j["circles"].size(), 3u);
  EXPECT_TRUE(j["linking"].empty());
  EXPECT_EQ(j["witnesses"][0]["kind"], "borromean_triple");
  CommandResult c = run({"cover", graph, "--coloring", "theta4", "--structure", structure, "--betti"});
  ASSERT_EQ(c.exit_code, 0) << c.diagnostics;
  EXPECT_EQ(payload(c)["complex"]["euler_characteristic"], 0);
  EXPECT_EQ(payload(c)["coloring"]["vectors"].size(), 6u);
  CommandResult red = run({"reduce", graph, "--structure", structure});
  EXPECT_FALSE(payload(red)["reducible"].get<bool>());
  CommandResult con = run({"contract", graph, "--structure", structure});
  EXPECT_EQ(payload(con)["degrees"].size(), 5u);
  // A structure whose hubs disagree with its matching.
  json bad = io::structure_to_json(q, s);
  bad["hubs"] = {1, 2};
  EXPECT_EQ(run({"link", graph, "--structure", write("bad.json", bad.dump())}).exit_code, 1);
}

TEST_F(CliTest, CoverCheckFails) {
  std::string cube = gen("cube");
  CommandResult h = run({"ham", cube, "--kind", "cycle"});
  std::string s = write("cycle.json", payload(h)["structures"][0].dump());
  CommandResult ok = run({"cover", cube, "--coloring", "cycle2", "--structure", s, "--betti"});
  ASSERT_EQ(ok.exit_code, 0) << ok.diagnostics;
  EXPECT_EQ(payload(ok)["complex"]["betti"], json({1, 0, 0, 1}));
  EXPECT_EQ(run({"cover", cube, "--coloring", "checkerboard22"}).exit_code, 1);
  CommandResult oct = run({"cover", gen("octahedron"), "--coloring", "checkerboard22"});
  EXPECT_EQ(oct.exit_code, 0);
}

TEST_F(CliTest, OtherSubcommands) {
  std::string cube = gen("cube");
  EXPECT_EQ(payload(run({"belts", cube, "--k", "4"}))["count"], 3);
  EXPECT_EQ(payload(run({"family", "--max-vertices", "9"}))["count"], 3);
  json f = payload(run({"flipgraph", gen("octahedron")}));
  EXPECT_EQ(f["components"], 1);
  EXPECT_EQ(f["atrails"], 16);
  auto [q, s] = borromean_cube_theta();
  EmbeddedGraph bip = contract_matching(q, s).morph.graph;
  std::string bp = write("bip.json", io::graph_to_json(bip).dump());
  EXPECT_GT(payload(run({"euler-theta", bp, "--count"}))["count"].get<int>(), 0);
  EXPECT_EQ(run({"euler-k4", bp}).exit_code, 1);
  json t = payload(run({"atrails", gen("octahedron"), "--up-to-symmetry"}));
  ASSERT_EQ(t["atrails"].size(), 2u);
  EXPECT_EQ(t["atrails"][0]["curve"].size(), 12u);
}

TEST_F(CliTest, DotExport) {
  fs::path dot = dir_ / "cube.dot";
  CommandResult r = run({"gen", "cube", "--dot", dot.string()});
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream f(dot);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("graph polytope {", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '-'), 2 * 12);
}

TEST_F(CliTest, Deterministic) {
  std::string a5 = gen("antiprism:5");
  for (std::vector<std::string> args :
       {std::vector<std::string>{"atrails", a5}, {"ham", gen("P8"), "--kind", "k4", "--up-to-symmetry"},
        {"family", "--max-vertices", "10"}, {"flipgraph", a5}}) {
    CommandResult x = run(args), y = run(args);
    EXPECT_EQ(x.exit_code, 0);
    EXPECT_EQ(x.payload, y.payload);
  }
}

TEST_F(CliTest, FixturesAreUpToDate) {
  CommandResult r = run({"fixtures"});
  ASSERT_EQ(r.exit_code, 0) << r.diagnostics;
  EXPECT_EQ(r.payload, testing::fixture_text());
  fs::path out = dir_ / "derived.json";
  CommandResult w = run({"fixtures", "--output", out.string()});
  std::ifstream f(out);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, r.payload);
  EXPECT_EQ(w.payload, r.payload);
}

TEST_F(CliTest, ExecutablePipeline) {
  const std::string cmd = std::string(POLYLINK_CLI) + " gen antiprism:4 | " + POLYLINK_CLI +
                          " atrails - --up-to-symmetry --count";
  FILE* p = ::popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) out += buf;
  EXPECT_EQ(::pclose(p), 0);
  EXPECT_EQ(json::parse(out), json({{"count", 7}}));
}

}  // namespace
}  // namespace polylink
