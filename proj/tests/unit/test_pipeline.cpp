#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "binvar/pipeline.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;
using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& p) {
  const Bytes b = read_file(p);
  return json::parse(std::string(b.begin(), b.end()));
}

RunConfig small_config(const std::filesystem::path& out) {
  RunConfig c;
  c.output_dir = out;
  c.budgets = {20, 60};
  c.fp_budget = 10;
  return c;
}

}  // namespace

TEST(Config, ParseAndReject) {
  const auto c = parse_run_config(R"({"seed": 9, "budgets": [20], "stages": ["transform"]})");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.budgets, std::vector<double>{20});
  EXPECT_EQ(c.oracle, "ref");
  EXPECT_THROW(parse_run_config(R"({"sed": 9})"), Error);
  EXPECT_THROW(parse_run_config(R"({"stages": ["dance"]})"), Error);
  EXPECT_EQ(parse_run_config(c.to_json()).to_json(), c.to_json());
}

TEST(Pipeline, EmptyInputList) {
  const auto dir = scratch_dir("pipe_empty");
  const auto res = run_pipeline(small_config(dir / "out"), {});
  EXPECT_EQ(res.exit_code(), 0);
  const json m = read_json(dir / "out" / "manifest.json");
  EXPECT_TRUE(m["inputs"].empty());
  EXPECT_TRUE(m["variants"].empty());
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, RerunIsByteIdentical) {
  const auto dir = scratch_dir("pipe_det");
  const auto input = write_corpus(dir, 1, 12);
  const auto cfg = small_config(dir / "out");
  ASSERT_EQ(run_pipeline(cfg, {input}).exit_code(), 0);
  const auto first = read_tree(dir / "out");
  ASSERT_EQ(run_pipeline(cfg, {input}).exit_code(), 0);
  EXPECT_EQ(read_tree(dir / "out"), first);
  EXPECT_TRUE(first.count("eval/metrics.csv"));
  EXPECT_TRUE(first.count("eval/pairs.json"));
  EXPECT_TRUE(first.count("variants/subst/corpus1.elf"));
  EXPECT_TRUE(first.count("variants/nop_20/corpus1.elf"));
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, NoSilentDrops) {
  const auto dir = scratch_dir("pipe_drops");
  const auto input = write_corpus(dir, 2, 10);
  ASSERT_EQ(run_pipeline(small_config(dir / "out"), {input}).exit_code(), 0);
  const auto img = load_elf(input);
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir / "out" / "reports")) {
    if (!e.is_regular_file()) continue;
    const json r = read_json(e.path());
    std::map<std::string, int> seen;
    for (const auto& f : r["functions"]) {
      ++seen[f["name"].get<std::string>()];
      const auto status = f["status"].get<std::string>();
      EXPECT_TRUE(status == "transformed" || status == "skipped");
      if (status == "skipped") EXPECT_FALSE(f["reasons"].empty()) << e.path();
    }
    for (const auto& fn : img.functions) EXPECT_EQ(seen[fn.name], 1) << e.path() << " " << fn.name;
  }
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, BrokenOracleFailsOnlyEval) {
  const auto dir = scratch_dir("pipe_oracle");
  const auto input = write_corpus(dir, 3, 8);
  auto cfg = small_config(dir / "out");
  cfg.oracle = "cmd:/nonexistent/oracle";
  cfg.stages = {"transform", "nop", "eval"};
  const auto res = run_pipeline(cfg, {input});
  EXPECT_EQ(res.exit_code(), 1);
  ASSERT_EQ(res.failures.size(), 1u);
  EXPECT_EQ(res.failures[0].stage, "eval");
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "variants" / "subst" / "corpus3.elf"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "errors.json"));
  const json m = read_json(dir / "out" / "manifest.json");
  EXPECT_FALSE(m["variants"].empty());
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, VariantsStayEquivalent) {
  const auto dir = scratch_dir("pipe_equiv");
  const auto input = write_corpus(dir, 4, 8);
  auto cfg = small_config(dir / "out");
  cfg.stages = {"transform", "nop", "junk"};
  ASSERT_EQ(run_pipeline(cfg, {input}).exit_code(), 0);
  const auto orig = load_elf(input);
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir / "out" / "variants")) {
    if (!e.is_regular_file()) continue;
    const auto var = load_elf(e.path());
    const bool reassigned = e.path().parent_path().filename() == "reassign";
    for (const auto& f : orig.functions) {
      const RegSet regs = reassigned ? comparable_registers(Technique::RegReassign) : RegSet::all();
      EXPECT_TRUE(function_equivalent(orig, var, f.name, regs, 10)) << e.path() << " " << f.name;
    }
  }
  std::filesystem::remove_all(dir);
}
