#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lhl/io.hpp"

namespace lhl::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lhl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json poly_of(const Outcome& o) { return Json::parse(o.out).at("poly"); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, DerangementAgreesWithClassical) {
  const Outcome lh = invoke({"derangement", "--s", "2,3,4,5"});
  const Outcome classical = invoke({"classical", "--n", "5"});
  ASSERT_EQ(lh.code, kExitOk) << lh.err;
  ASSERT_EQ(classical.code, kExitOk) << classical.err;
  EXPECT_EQ(poly_of(lh), poly_of(classical));
  EXPECT_EQ(poly_of(lh).dump(), "[0,1,21,21,1]");
  EXPECT_EQ(poly_of(invoke({"derangement", "--s", "2,3,4,5", "--method", "enum"})), poly_of(lh));
}

TEST(Cli, OutputSchemaStatesTheDegree) {
  const Json doc = Json::parse(invoke({"derangement", "--s", "2,3,4"}).out);
  EXPECT_EQ(doc.at("degree_convention"), 4);
  EXPECT_TRUE(doc.at("properties").at("symmetric").get<bool>());
  EXPECT_TRUE(doc.at("properties").at("gamma_nonnegative").get<bool>());
  const Json forced = Json::parse(invoke({"derangement", "--s", "2,3,4", "--degree", "5"}).out);
  EXPECT_FALSE(forced.at("properties").at("symmetric").get<bool>());
}

TEST(Cli, OrderHstarForTheVee) {
  const auto path = write_temp("lhl_cli_vee.json", R"({"n": 3, "covers": [[1,3],[2,3]]})");
  const Outcome o = invoke({"order-hstar", "--poset", path.string(), "--s", "1,1,2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(poly_of(o).dump(), "[1,2,1]");
  EXPECT_TRUE(Json::parse(o.out).at("properties").at("symmetric").get<bool>());
  // Without --s the rank sequence is used, which is again (1,1,2).
  EXPECT_EQ(poly_of(invoke({"order-hstar", "--poset", path.string()})).dump(), "[1,2,1]");
  EXPECT_EQ(invoke({"verify-bm", "--poset", path.string(), "--s", "2,1,3"}).code, kExitOk);
  const Outcome box = invoke({"box-report", "--poset", path.string(), "--s", "1,1,2", "--format", "csv"});
  EXPECT_EQ(box.code, kExitOk);
  std::filesystem::remove(path);
}

TEST(Cli, BoxReportForChainHasOneRowPerFace) {
  const auto path = write_temp("lhl_cli_chain.json", R"({"n": 3, "covers": [[1,2],[2,3]]})");
  const Outcome o = invoke({"box-report", "--poset", path.string(), "--s", "1,2,3", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto lines = std::count(o.out.begin(), o.out.end(), '\n');
  EXPECT_EQ(lines, 1 + 15);
  std::filesystem::remove(path);
}

TEST(Cli, SimplexFromFile) {
  const auto path = write_temp("lhl_cli_simplex.json", "[[0,0],[2,0],[0,2]]");
  const Outcome o = invoke({"hstar", "--simplex", path.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(poly_of(o).dump(), "[1,3]");
  EXPECT_EQ(Json::parse(o.out).at("normalized_volume"), 4);
  EXPECT_EQ(poly_of(invoke({"local-hstar", "--simplex", path.string()})).dump(), "[]");
  std::filesystem::remove(path);
}

TEST(Cli, ColoredAndDecompose) {
  EXPECT_EQ(poly_of(invoke({"colored", "--n", "2", "--r", "2", "--stat", "des"})).dump(), "[1,6,1]");
  const Json d = Json::parse(invoke({"decompose", "--n", "3", "--r", "2"}).out);
  EXPECT_TRUE(d.at("a_real_rooted").get<bool>());
  EXPECT_TRUE(d.at("b_real_rooted").get<bool>());
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(invoke({"check", "--poly", "1,4,1", "--props", "symmetric,unimodal,logconcave,realrooted,gamma"}).code,
            kExitOk);
  EXPECT_EQ(invoke({"check", "--poly", "[1,0,1]", "--props", "realrooted"}).code, kExitCheckFailed);
  EXPECT_EQ(invoke({"check", "--poly", "1,4,1", "--props", "shiny"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gamma", "--poly", "1,11,11,1", "--degree", "3"}).out.find("\"nonnegative\": true") !=
                std::string::npos,
            true);
  EXPECT_EQ(invoke({"gamma", "--poly", "1,2", "--degree", "1"}).code, kExitUsage);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  const Outcome missing = invoke({"eulerian"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("--s"), std::string::npos);
  EXPECT_EQ(invoke({"derangement", "--s", "2,x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"derangement", "--s", "2,3", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"hstar"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, GuardrailsNameTheCap) {
  const Outcome big = invoke({"classical", "--n", "12"});
  EXPECT_EQ(big.code, kExitUsage);
  EXPECT_NE(big.err.find("9"), std::string::npos);
  ::setenv("LHL_MAX_POINTS", "5", 1);
  const Outcome capped = invoke({"hstar", "--s", "3,3"});
  ::unsetenv("LHL_MAX_POINTS");
  EXPECT_EQ(capped.code, kExitUsage);
  EXPECT_NE(capped.err.find("5"), std::string::npos);
  ::setenv("LHL_MAX_N", "3", 1);
  EXPECT_EQ(invoke({"classical", "--n", "4"}).code, kExitUsage);
  ::unsetenv("LHL_MAX_N");
}

TEST(Cli, VerifySuites) {
  const Outcome o = invoke({"verify", "--suite", "derangement-bijection", "--max-n", "6"});
  ASSERT_EQ(o.code, kExitOk) << o.out;
  const Json report = Json::parse(o.out);
  EXPECT_EQ(report.at("suite"), "derangement-bijection");
  const Outcome csv = invoke({"verify", "--suite", "order-reflexive", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("suite,id,parameters,expected,actual,passed\n", 0), 0u);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).code, kExitUsage);
}

}  // namespace
}  // namespace lhl::cli
