#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oclat/io.hpp"

namespace {

namespace fs = std::filesystem;
using oclat::cli::run_cli;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(OCLAT_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, TextOutput) {
  auto args = GetParam().args;
  for (auto& a : args) {
    if (a.rfind("@", 0) == 0) {
      a = data(a.substr(1));
    }
  }
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data(std::string("golden/") + GetParam().file)));
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(GoldenCase{"partitions_n4.txt", {"partitions", "--n", "4"}},
                      GoldenCase{"partitions_n3_m2.txt", {"partitions", "--n", "3", "--m", "2"}},
                      GoldenCase{"partitions_n4_all.txt", {"partitions", "--n", "4", "--all"}},
                      GoldenCase{"transversal_21.txt", {"transversal", "--lambda", "2,1"}},
                      GoldenCase{"con_21.txt", {"con", "--lambda", "2,1"}},
                      GoldenCase{"classify_con_21.txt", {"classify", "--source", "con:2,1"}},
                      GoldenCase{"subgroups_3.txt", {"subgroups", "--n", "3"}},
                      GoldenCase{"deduce_112_21.txt",
                                 {"deduce", "--identities", "@id_112.txt", "--lambda", "2,1"}},
                      GoldenCase{"verify_canc_sn_3.txt", {"verify", "--suite", "canc-sn", "--n", "3"}}),
    [](const auto& info) {
      std::string name = info.param.file;
      return name.substr(0, name.find('.'));
    });

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"transversal", "--lambda", "2,1"}).out, "112 121 211\n");
  const auto p = run({"partitions", "--n", "3", "--m", "2"});
  EXPECT_NE(p.out.find("2,1"), std::string::npos);
  const auto d = run({"deduce", "--identities", data("id_112.txt"), "--lambda", "2,1"});
  EXPECT_EQ(d.out, "{112,121} {211}\n");
  const auto v = run({"verify", "--suite", "canc-sn", "--n", "3"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("pass", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"frobnicate"},
      {"partitions", "--n", "1"},
      {"partitions", "--n", "4", "--m", "5"},
      {"partitions", "--n", "x"},
      {"transversal"},
      {"transversal", "--lambda", "1,2"},
      {"transversal", "--lambda", "3"},
      {"transversal", "--lambda", "2,1", "--format", "dot"},
      {"con", "--lambda", "2,,1"},
      {"con", "--lambda", "2,1,1"},
      {"con", "--lambda", "2,1", "--strategy", "guess"},
      {"classify", "--source", "chain:zero"},
      {"classify", "--source", "con:2,1", "--element", "9"},
      {"classify", "--source", "/no/such/file.json"},
      {"subgroups", "--n", "7"},
      {"deduce", "--identities", "/no/such/file", "--lambda", "2,1"},
      {"deduce", "--identities", data("id_unbalanced.txt"), "--lambda", "2,1"},
      {"verify", "--suite", "nonsense"},
      {"verify", "--lambda", "2;1"},
  };
  for (const auto& args : cases) {
    const auto r = run(args);
    std::string joined;
    for (const auto& a : args) {
      joined += a + " ";
    }
    EXPECT_EQ(r.code, 2) << joined;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("partitions"), std::string::npos);
}

TEST(Cli, VerificationFailureExitsOneWithWitness) {
  const auto r =
      run({"verify", "--suite", "canc-gset", "--lambda", "2,1,1", "--max-carrier", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, VerifyJsonLines) {
  const auto r = run({"verify", "--suite", "canc-sn", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["statement"], "cancellable-subgroups");
    EXPECT_EQ(j["verdict"], "pass");
    ++count;
  }
  EXPECT_EQ(count, 4u);
}

TEST(Cli, ConJsonRoundTrip) {
  const auto r = run({"con", "--lambda", "2,2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto parsed = oclat::congruence_lattice_from_json(j);
  const auto a = oclat::from_transversal(oclat::Partition({2, 2}));
  EXPECT_EQ(parsed.carrier, a.labels());
  EXPECT_EQ(parsed.congruences, oclat::all_congruences(a));
  auto again = oclat::congruence_lattice_to_json(a, parsed.congruences, parsed.lattice);
  again["lambda"] = "2,2";
  EXPECT_EQ(again, j);
}

TEST(Cli, DeduceJsonRoundTrip) {
  const auto r = run({"deduce", "--identities", data("id_112.txt"), "--lambda", "2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto parsed = oclat::congruence_from_json(j);
  const auto a = oclat::from_transversal(oclat::Partition({2, 1}));
  auto again = oclat::congruence_to_json(a, parsed.congruence);
  again["lambda"] = "2,1";
  EXPECT_EQ(again, j);
  EXPECT_EQ(parsed.congruence.blocks(), (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
}

TEST(Cli, ClassifyReadsEmittedLattice) {
  const auto dir = fs::temp_directory_path() / "oclat_cli_test";
  fs::create_directories(dir);
  const auto path = (dir / "sub3.json").string();
  ASSERT_EQ(run({"subgroups", "--n", "3", "--format", "json", "--output", path}).code, 0);
  const auto j = nlohmann::json::parse(slurp(path));
  std::ofstream(dir / "sub3_lattice.json") << j["lattice"].dump();
  const auto r = run({"classify", "--source", (dir / "sub3_lattice.json").string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = nlohmann::json::parse(r.out);
  std::size_t cancellable = 0;
  for (const auto& e : c["elements"]) {
    cancellable += e["cancellable"].get<bool>() ? 1 : 0;
  }
  EXPECT_EQ(cancellable, 2u);
  fs::remove_all(dir);
}

TEST(Cli, DotOutput) {
  const auto r = run({"con", "--lambda", "1,1,1", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(run({"subgroups", "--n", "3", "--format", "dot"}).code, 0);
  EXPECT_EQ(run({"classify", "--source", "eq:3", "--format", "dot"}).code, 0);
}

TEST(Cli, UnwritableOutput) {
  const auto r = run({"transversal", "--lambda", "2,1", "--output", "/no/such/dir/out.txt"});
  EXPECT_EQ(r.code, 2);
}

}  // namespace
