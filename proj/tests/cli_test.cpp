#include "tbm/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace tbm::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tbm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tbm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static nlohmann::ordered_json values_of(const std::string& text) {
    const auto json = nlohmann::ordered_json::parse(text);
    return json.contains("masses") ? json["masses"] : json["values"];
  }

  fs::path dir_;
};

constexpr const char* kExample = R"({"frame": ["a", "b", "c"], "masses": {"a": 0.3, "b|c": 0.5, "a|b|c": 0.2}})";
constexpr const char* kM0 = R"({"frame": ["a", "b"], "masses": {"a": 0.5, "a|b": 0.5}})";
constexpr const char* kM1 = R"({"frame": ["a", "b"], "masses": {"b": 0.4, "a|b": 0.6}})";

TEST_F(CliTest, ConvertToBelief) {
  const Result r = invoke({"convert", write("e.json", kExample), "--to", "bel"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = values_of(r.out);
  EXPECT_DOUBLE_EQ(v["a"].get<double>(), 0.3);
  EXPECT_DOUBLE_EQ(v["b|c"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(v["a|b|c"].get<double>(), 1.0);
}

TEST_F(CliTest, ConvertVacuousToCommonality) {
  const Result r = invoke({"convert", write("v.json", R"({"frame": ["x", "y"], "masses": {"x|y": 1}})"), "--to", "q"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto values = values_of(r.out);
  EXPECT_EQ(values.size(), 4u);
  for (const auto& [key, value] : values.items()) EXPECT_DOUBLE_EQ(value.get<double>(), 1.0) << key;
}

TEST_F(CliTest, ConvertBackToMassViaOutputFile) {
  const std::string bel = (dir_ / "bel.json").string();
  ASSERT_EQ(invoke({"-o", bel, "convert", write("e.json", kExample), "--to", "bel"}).code, kSuccess);
  const Result r = invoke({"convert", bel, "--to", "mass"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = values_of(r.out);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_DOUBLE_EQ(v["a|b|c"].get<double>(), 0.2);
}

TEST_F(CliTest, CombineRules) {
  const std::string m0 = write("m0.json", kM0), m1 = write("m1.json", kM1);
  Result r = invoke({"combine", m0, m1});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto v = values_of(r.out);
  EXPECT_DOUBLE_EQ(v[""].get<double>(), 0.2);
  EXPECT_DOUBLE_EQ(v["a"].get<double>(), 0.3);
  EXPECT_DOUBLE_EQ(v["b"].get<double>(), 0.2);
  EXPECT_DOUBLE_EQ(v["a|b"].get<double>(), 0.3);
  r = invoke({"combine", m0, m1, "--rule", "normalized"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  v = values_of(r.out);
  EXPECT_DOUBLE_EQ(v["a"].get<double>(), 0.375);
  EXPECT_DOUBLE_EQ(v["b"].get<double>(), 0.25);
  r = invoke({"combine", m0, m1, "--rule", "disjunctive"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_DOUBLE_EQ(values_of(r.out)["a|b"].get<double>(), 1.0);
}

TEST_F(CliTest, ConditionMovesConflictToEmptySet) {
  const Result r = invoke({"condition", write("e.json", kExample), "--on", "b|c"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = values_of(r.out);
  EXPECT_DOUBLE_EQ(v[""].get<double>(), 0.3);
  EXPECT_DOUBLE_EQ(v["b|c"].get<double>(), 0.7);
}

TEST_F(CliTest, RetractUndoesCombination) {
  const std::string m0 = write("m0.json", kM0), m1 = write("m1.json", kM1);
  const std::string combined = (dir_ / "m01.json").string();
  ASSERT_EQ(invoke({"--output", combined, "combine", m0, m1}).code, kSuccess);
  const Result r = invoke({"retract", combined, "--evidence", m1});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto v = values_of(r.out);
  EXPECT_DOUBLE_EQ(v["a"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(v["a|b"].get<double>(), 0.5);
}

TEST_F(CliTest, EnlargeOnEmptyKeyIsIdentity) {
  const Result r = invoke({"enlarge", write("e.json", kExample), "--on", ""});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_DOUBLE_EQ(values_of(r.out)["b|c"].get<double>(), 0.5);
  const Result merged = invoke({"enlarge", write("e.json", kExample), "--on", "a|b"});
  ASSERT_EQ(merged.code, kSuccess) << merged.err;
  EXPECT_DOUBLE_EQ(values_of(merged.out)["a|b"].get<double>(), 0.3);
}

TEST_F(CliTest, ConditioningMatrixOnUniverseIsIdentity) {
  const Result r = invoke({"matrix", "--frame", "a,b,c", "--conditioning", "a|b|c"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    double x;
    for (int col = 0; cells >> x; ++col) EXPECT_EQ(x, row == col ? 1.0 : 0.0);
    ++row;
  }
  EXPECT_EQ(row, 8);
}

TEST_F(CliTest, MatrixKinds) {
  const std::string m1 = write("m1.json", kM1);
  for (const char* kind : {"dempsterian", "despecialization", "disjunctive"}) {
    const Result r = invoke({"matrix", m1, "--kind", kind});
    EXPECT_EQ(r.code, kSuccess) << kind << ": " << r.err;
    EXPECT_NE(r.out.find(std::string("# kind: ") + kind), std::string::npos);
  }
  EXPECT_EQ(invoke({"matrix", m1, "--kind", "specialization"}).code, kInputError);
  EXPECT_EQ(invoke({"matrix", m1, "--kind", "specialization", "--conditioning", "b"}).code, kSuccess);
}

TEST_F(CliTest, SingularDespecializationIsPreconditionError) {
  const std::string file = write("s.json", R"({"frame": ["a", "b"], "masses": {"a": 0.5, "b": 0.5}})");
  const Result r = invoke({"matrix", file, "--kind", "despecialization"});
  EXPECT_EQ(r.code, kPreconditionError);
  EXPECT_NE(r.err.find("singular: q(Ω)=0"), std::string::npos);
  const Result conflict =
      invoke({"combine", write("x.json", R"({"frame": ["a", "b"], "masses": {"a": 1}})"),
              write("y.json", R"({"frame": ["a", "b"], "masses": {"b": 1}})"), "--rule", "normalized"});
  EXPECT_EQ(conflict.code, kPreconditionError);
}

TEST_F(CliTest, BadInputIsExitTwo) {
  EXPECT_EQ(invoke({"convert", (dir_ / "missing.json").string()}).code, kInputError);
  EXPECT_EQ(invoke({"convert", write("bad.json", "{")}).code, kInputError);
  EXPECT_EQ(invoke({"convert", write("sum.json", R"({"frame": ["a"], "masses": {"a": 0.5}})")}).code, kInputError);
  EXPECT_EQ(invoke({"condition", write("e.json", kExample), "--on", "d"}).code, kInputError);
  EXPECT_EQ(invoke({"combine", write("m0.json", kM0), write("e.json", kExample)}).code, kInputError);
  EXPECT_EQ(invoke({"nonsense"}).code, kInputError);
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"convert", write("e.json", kExample), "--to", "xyz"}).code, kInputError);
}

TEST_F(CliTest, CheckExitCodesAndReproducibility) {
  const Result ok = invoke({"check", "--n", "2,3", "--samples", "30", "--seed", "9"});
  EXPECT_EQ(ok.code, kSuccess) << ok.out;
  EXPECT_NE(ok.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(invoke({"check", "--n", "2,3", "--samples", "30", "--seed", "9"}).out, ok.out);
  const Result json = invoke({"check", "--n", "2", "--samples", "10", "--json"});
  EXPECT_EQ(json.code, kSuccess);
  EXPECT_TRUE(nlohmann::json::parse(json.out).is_object());
  const Result bad = invoke({"check", "--n", "3", "--theorems", "theorem3", "--inject-fault"});
  EXPECT_EQ(bad.code, kVerificationFailure);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("witness"), std::string::npos);
}

}  // namespace
}  // namespace tbm::cli
