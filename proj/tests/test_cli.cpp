#include <gtest/gtest.h>

#include <sstream>

#include "alphatree/cli.hpp"
#include "alphatree/json_io.hpp"
#include "support/support.hpp"

namespace alphatree {
namespace {

using testing::r;

RunResult run_inline(const std::string& sub, const std::string& json, bool float_input = false) {
  RunConfig config;
  config.subcommand = sub;
  config.inline_json = json;
  config.float_input = float_input;
  std::istringstream empty;
  return run(config, empty);
}

RunResult run_args(std::vector<const char*> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "alphatree");
  auto parsed = parse_command_line(static_cast<int>(args.size()), args.data());
  if (auto* result = std::get_if<RunResult>(&parsed)) return *result;
  std::istringstream in(stdin_text);
  return run(std::get<RunConfig>(parsed), in);
}

TEST(Cli, EncodeDyadic) {
  const auto res = run_inline("encode", R"({"probabilities":[{"num":1,"den":2},{"num":1,"den":4},{"num":1,"den":4}]})");
  ASSERT_EQ(res.status, kExitOk) << res.err;
  const auto out = Json::parse(res.out);
  EXPECT_EQ(rational_from_json(out["cost"]), r(3, 2));
  EXPECT_EQ(out["route"], "dyadic");
  EXPECT_EQ(out["codewords"].size(), 3u);
  EXPECT_EQ(out["entropy_exact"]["num"], "3");
  const auto tree = tree_from_json(out["tree"]);
  EXPECT_TRUE(tree.is_alphabetic());
}

TEST(Cli, EncodeStringsAndBareArray) {
  const auto res = run_inline("encode", R"(["1/3","1/3","1/3"])");
  ASSERT_EQ(res.status, kExitOk) << res.err;
  EXPECT_EQ(Json::parse(res.out)["route"], "interleaved");
}

TEST(Cli, EncodeSingleSymbol) {
  const auto res = run_inline("encode", R"(["1"])");
  ASSERT_EQ(res.status, kExitOk) << res.err;
  const auto out = Json::parse(res.out);
  EXPECT_EQ(rational_from_json(out["cost"]), r(0));
  EXPECT_EQ(out["codewords"][0], "");
}

TEST(Cli, InvalidInputsExitOne) {
  EXPECT_EQ(run_inline("encode", R"(["1/2","1/3"])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("encode", R"(["-1/2","3/2"])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("encode", R"([])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("encode", R"({"probabilities": )").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("encode", R"([0.5, 0.5])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("check-lengths", R"([2, 0])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("tree-from-lengths", R"([1, 1, 1])").status, kExitInvalidInput);
  EXPECT_EQ(run_inline("bst", R"({"p":["1/2"],"q":["1/2"]})").status, kExitInvalidInput);
}

TEST(Cli, FloatInputNeedsFlagAndIsRescaled) {
  const auto res = run_inline("encode", R"([0.1, 0.2, 0.7])", true);
  ASSERT_EQ(res.status, kExitOk) << res.err;
  const auto out = Json::parse(res.out);
  Rational total = 0;
  for (const auto& p : out["probabilities"]) total += rational_from_json(p);
  EXPECT_EQ(total, r(1));
}

TEST(Cli, CheckLengths) {
  const auto res = run_inline("check-lengths", R"({"lengths":[4,2,3,3]})");
  ASSERT_EQ(res.status, kExitOk);
  const auto out = Json::parse(res.out);
  EXPECT_TRUE(out["feasible"].get<bool>());
  EXPECT_EQ(out["final_sum"], "0.101");
  const auto bad = Json::parse(run_inline("check-lengths", R"([2,2,3,3,3,3,3])").out);
  EXPECT_FALSE(bad["feasible"].get<bool>());
  EXPECT_EQ(bad["final_sum"], "1.0");
}

TEST(Cli, TreeFromLengthsTenSymbolExample) {
  const auto res = run_inline("tree-from-lengths", R"([6,6,5,2,9,9,8,6,3,2])");
  ASSERT_EQ(res.status, kExitOk);
  EXPECT_EQ(Json::parse(res.out)["codewords"][6], "10001");
}

TEST(Cli, BstAndOracleAgreeOnUniform) {
  const std::string in = R"({"p":["1/7","1/7","1/7","1/7"],"q":["1/7","1/7","1/7"]})";
  const auto built = Json::parse(run_inline("bst", in).out);
  EXPECT_EQ(rational_from_json(built["cost"]), r(13, 7));
  const auto tree = search_tree_from_json(built["tree"]);
  EXPECT_TRUE(tree.is_valid(3));

  const auto opt = run_args({"oracle", "--mode", "bst", "--json", in.c_str()});
  ASSERT_EQ(opt.status, kExitOk) << opt.err;
  EXPECT_EQ(rational_from_json(Json::parse(opt.out)["cost"]), r(13, 7));
}

TEST(Cli, BoundsTableFlagsDePrisco) {
  const auto res = run_args({"bounds", "--format", "table", "--json", R"({"sigma":["1/7","1/7","1/7","1/7","1/7","1/7","1/7"]})"});
  ASSERT_EQ(res.status, kExitOk) << res.err;
  EXPECT_NE(res.out.find("INVALID"), std::string::npos);
  EXPECT_NE(res.out.find("mehlhorn"), std::string::npos);
}

TEST(Cli, OracleModes) {
  const auto alpha = run_args({"oracle", "--json", R"(["1/16","7/8","1/16"])"});
  EXPECT_EQ(rational_from_json(Json::parse(alpha.out)["cost"]), r(31, 16));
  const auto feas = run_args({"oracle", "--mode", "feasible", "--json", "[1,2,2]"});
  EXPECT_TRUE(Json::parse(feas.out)["feasible"].get<bool>());
  const auto fillers = run_args({"oracle", "--mode", "dyadic-fillers", "--json", R"(["1/2","1/4","1/4"])"});
  ASSERT_EQ(fillers.status, kExitOk) << fillers.err;
  EXPECT_TRUE(Json::parse(fillers.out)["no_code_exists"].get<bool>());
  EXPECT_EQ(run_args({"oracle", "--mode", "nope", "--json", "[1]"}).status, kExitInvalidInput);
}

TEST(Cli, ReadsStdin) {
  const auto res = run_args({"encode"}, R"(["1/2","1/2"])");
  ASSERT_EQ(res.status, kExitOk) << res.err;
  EXPECT_EQ(rational_from_json(Json::parse(res.out)["cost"]), r(1));
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run_args({}).status, kExitOk);
  EXPECT_NE(run_args({"frobnicate"}).status, kExitOk);
  EXPECT_EQ(run_args({"bench", "--sizes", "64", "32"}).status, kExitInvalidInput);
}

TEST(Cli, BenchIsDeterministicApartFromTiming) {
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      if (line.rfind("#", 0) == 0 || line.rfind("m,", 0) == 0) continue;
      out += line.substr(0, line.rfind(',')) + "\n";
    }
    return out;
  };
  const auto a = run_args({"bench", "--sizes", "64", "256", "1024", "--seed", "7"});
  const auto b = run_args({"bench", "--sizes", "64", "256", "1024", "--seed", "7"});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_NE(a.out.find("m,probes,splits,wall_ms"), std::string::npos);
  EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Cli, EncodeIsDeterministic) {
  const std::string in = R"(["3/17","5/17","1/17","8/17"])";
  EXPECT_EQ(run_inline("encode", in).out, run_inline("encode", in).out);
}

TEST(JsonIo, RoundTrips) {
  for (const char* text : {"0", "1", "3/8", "123456789012345678901234567890/7"}) {
    const Rational x = parse_rational(text);
    EXPECT_EQ(rational_from_json(rational_to_json(x)), x);
  }
  const auto tree = construct_tree({2, 3, 3, 1});
  EXPECT_TRUE(tree_from_json(tree_to_json(tree)) == tree);
  const auto sigma = testing::search({"1/7", "1/7", "1/7", "1/7", "1/7", "1/7", "1/7"});
  const auto bst = build_bst(sigma).tree;
  EXPECT_TRUE(search_tree_from_json(search_tree_to_json(bst)) == bst);
  const LengthList l{4, 2, 3, 3};
  EXPECT_EQ(lengths_from_json(lengths_to_json(l)), l);
}

TEST(JsonIo, RationalFormats) {
  EXPECT_EQ(rational_from_json(Json::parse(R"({"num":"6","den":"8"})")), r(3, 4));
  EXPECT_EQ(rational_from_json(Json::parse(R"("0.375")")), r(3, 8));
  EXPECT_EQ(rational_from_json(Json(2)), r(2));
  EXPECT_EQ(rational_from_json(Json(0.5), true), r(1, 2));
  EXPECT_EQ(rational_to_json(r(6, 8))["den"], "4");
}

}  // namespace
}  // namespace alphatree
