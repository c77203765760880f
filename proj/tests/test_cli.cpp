#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace fatlas;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fatlas_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

Json parse(const std::string& s) { return Json::parse(s); }

}  // namespace

TEST_F(CliTest, GenWritesEdgeLists) {
  const auto r = run_cli({"gen", "turan", "--n", "12", "--t", "4", "-o", path("t.el")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(load_edge_list(path("t.el")), turan(12, 4));
  EXPECT_EQ(parse_edge_list(run_cli({"gen", "multipartite", "--parts", "6,4,4,2"}).out),
            complete_multipartite(MultipartiteSpec::parse("6,4,4,2")));
  EXPECT_EQ(parse_edge_list(run_cli({"gen", "cycle", "--n", "6"}).out), cycle(6));
  EXPECT_EQ(parse_edge_list(run_cli({"gen", "complete", "--n", "5"}).out), complete(5));
  EXPECT_EQ(run_cli({"gen", "petersen"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "turan", "--n", "7", "--t", "9"}).code, 1);
}

TEST_F(CliTest, ValidateAcceptsAndRejects) {
  const auto g = write("k.el", to_edge_list(complete_multipartite(MultipartiteSpec({{6, 2}, {1, 9}}))));
  std::vector<int> a(12, 0);
  a.insert(a.end(), 9, 1);
  const auto c = write("k.json", to_json(Coloring(a, 2)).dump());
  const auto ok = run_cli({"validate", "-g", g, "-c", c});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(parse(ok.out).at("alpha"), "3/5");

  const auto c6 = write("c6.el", to_edge_list(cycle(6)));
  const auto blocks = write("b.json", R"({"k":2,"assignment":[0,0,0,1,1,1]})");
  const auto bad = run_cli({"validate", "-g", c6, "-c", blocks});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(parse(bad.out).at("vertex"), 1);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const auto c6 = write("c6.el", to_edge_list(cycle(6)));
  EXPECT_EQ(run_cli({"validate", "-g", path("missing.el"), "-c", path("missing.json")}).code, 2);
  EXPECT_EQ(run_cli({"validate", "-g", write("bad.el", "3 1\n0 9\n"), "-c", write("c.json", "{}")}).code, 2);
  EXPECT_EQ(run_cli({"validate", "-g", c6, "-c", write("short.json", R"({"assignment":[0,1]})")}).code, 2);
  EXPECT_EQ(run_cli({"validate", "-g", c6, "-c", write("junk.json", "not json")}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST_F(CliTest, ChromaBruteAndClosedAgree) {
  const auto g = write("t63.el", to_edge_list(turan(6, 3)));
  const auto brute = run_cli({"chroma", "-g", g, "--method", "brute"});
  const auto closed = run_cli({"chroma", "-g", g, "--method", "closed"});
  EXPECT_EQ(brute.code, 0);
  EXPECT_EQ(closed.code, 0);
  EXPECT_EQ(parse(brute.out).at("chi_fat"), 3);
  EXPECT_EQ(parse(closed.out).at("chi_fat"), 3);
  EXPECT_NE(brute.err.find("elapsed"), std::string::npos);
  EXPECT_EQ(brute.out.find("elapsed"), std::string::npos);
}

TEST_F(CliTest, ChromaClosedMapsConstructionToInputVertices) {
  // K_{2,3,1} with parts interleaved.
  const Graph g = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                            {3, 4}, {3, 5}});
  const auto r = run_cli({"chroma", "-g", write("g.el", to_edge_list(g)), "--method", "closed"});
  ASSERT_EQ(r.code, 0);
  const Coloring c = coloring_from_json(parse(r.out).at("construction"));
  EXPECT_TRUE(accepted(validate_fat(g, c)));
  EXPECT_EQ(run_cli({"chroma", "-g", write("c5.el", to_edge_list(cycle(5))), "--method", "closed"}).code, 1);
}

TEST_F(CliTest, ChromaTuranTwelveFourClosed) {
  const auto r = run_cli({"chroma", "-g", write("t.el", to_edge_list(turan(12, 4))), "--method", "closed"});
  EXPECT_EQ(parse(r.out).at("chi_fat"), 4);
  EXPECT_EQ(parse(r.out).at("case"), "turan");
}

TEST_F(CliTest, ChromaOutputIsByteStable) {
  const auto g = write("c10.el", to_edge_list(cycle(10)));
  const auto one = run_cli({"chroma", "-g", g, "--workers", "1"});
  const auto four = run_cli({"chroma", "-g", g, "--workers", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.out, run_cli({"chroma", "-g", g, "--workers", "1"}).out);
}

TEST_F(CliTest, ChromaCatalogAndCap) {
  const auto g = write("k4.el", to_edge_list(complete(4)));
  const auto r = run_cli({"chroma", "-g", g, "--catalog"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(parse(line).contains("witness"));
    ++count;
  }
  EXPECT_EQ(count, 5);
  const auto k2 = run_cli({"chroma", "-g", g, "--catalog", "--k", "2"});
  EXPECT_EQ(std::count(k2.out.begin(), k2.out.end(), '\n'), 3);
  EXPECT_EQ(run_cli({"chroma", "-g", g, "--max-n", "3"}).code, 1);
}

TEST_F(CliTest, Spectrum) {
  const auto r = run_cli({"spectrum", "-g", write("c4.el", to_edge_list(cycle(4))), "--tol", "1e-9"});
  EXPECT_EQ(r.code, 0);
  const Json j = parse(r.out);
  EXPECT_EQ(j.at("tol").get<double>(), 1e-9);
  EXPECT_EQ(j.at("eigenvalues").dump(), "[0.0,1.0,1.0,2.0]");
}

TEST_F(CliTest, Lifts) {
  const auto c6 = write("c6.el", to_edge_list(cycle(6)));
  const auto col = write("c6.json", R"({"k":3,"assignment":[0,1,2,0,1,2]})");
  const auto k2 = write("k2.el", to_edge_list(complete(2)));
  const auto strong = run_cli({"lift", "--kind", "strong", "-g1", c6, "-c1", col, "-g2", k2});
  ASSERT_EQ(strong.code, 0) << strong.err;
  EXPECT_EQ(parse(strong.out).at("predicted_alpha"), "2/5");
  EXPECT_EQ(parse(strong.out).at("theorem_tag"), "Strong");

  const auto comp = run_cli({"complement", "-g", c6, "-c", col});
  EXPECT_EQ(parse(comp.out).at("predicted_alpha"), "1/3");

  const auto rem = run_cli({"remove", "-g", c6, "-c", col, "--classes", "2"});
  EXPECT_EQ(parse(rem.out).at("predicted_alpha"), "1/1");
  EXPECT_EQ(parse(rem.out).at("graph").at("n"), 4);

  EXPECT_EQ(run_cli({"remove", "-g", c6, "-c", col, "--classes", "0,1"}).code, 1);
  EXPECT_EQ(run_cli({"remove", "-g", c6, "-c", col, "--classes", "a"}).code, 2);
  const auto blocks = write("b.json", R"({"k":2,"assignment":[0,0,0,1,1,1]})");
  EXPECT_EQ(run_cli({"complement", "-g", c6, "-c", blocks}).code, 1);
}

TEST_F(CliTest, Verify) {
  for (const char* suite : {"turan", "multipartite", "products", "complement", "removal", "spectral"}) {
    const auto r = run_cli({"verify", "--suite", suite, "--seed", "7", "--trials", "4"});
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
}

TEST_F(CliTest, ExportDot) {
  const auto c6 = write("c6.el", to_edge_list(cycle(6)));
  const auto col = write("c6.json", R"({"k":3,"assignment":[0,1,2,0,1,2]})");
  EXPECT_EQ(run_cli({"export-dot", "-g", c6, "-c", col, "-o", path("out.dot")}).code, 0);
  std::ifstream in(path("out.dot"));
  const std::string dot{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("fillcolor=\"0.333 0.45 0.95\""), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
}
