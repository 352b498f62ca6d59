#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>

#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

struct Run {
  int status = 0;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  FILE* p = popen((std::string(BINVAR_CLI) + " " + args + " 2>&1").c_str(), "r");
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, VersionAndHelp) {
  const auto v = cli("--version");
  EXPECT_EQ(v.status, 0);
  EXPECT_NE(v.out.find("0.4.0"), std::string::npos);
  EXPECT_NE(cli("--help").out.find("transform"), std::string::npos);
  EXPECT_NE(cli("no-such-command").status, 0);
}

TEST(Cli, SynthParseTransform) {
  const auto dir = scratch_dir("cli");
  const std::string corpus = (dir / "c.elf").string();
  ASSERT_EQ(cli("synth-corpus --functions 6 --output " + corpus).status, 0);
  const auto parsed = cli("parse " + corpus);
  EXPECT_EQ(parsed.status, 0);
  EXPECT_NE(parsed.out.find("fx_000"), std::string::npos);
  const std::string out = (dir / "t.elf").string();
  const auto t = cli("transform --input " + corpus + " --output " + out + " --technique subst,bbr --seed 3");
  EXPECT_EQ(t.status, 0) << t.out;
  EXPECT_EQ(read_file(out).size(), read_file(corpus).size());
  EXPECT_NE(cli("transform --input " + corpus + " --output " + out + " --technique warp").status, 0);
  EXPECT_NE(cli("parse " + (dir / "missing.elf").string()).status, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, GenNopAndEmu) {
  const auto g = cli("gen-nop --budget 20 --count 3 --seed 1");
  EXPECT_EQ(g.status, 0) << g.out;
  EXPECT_FALSE(g.out.empty());
  const auto e = cli("emu --hex 9c50589dc3 --trials 3");
  EXPECT_EQ(e.status, 0) << e.out;
  EXPECT_NE(e.out.find("identity: yes"), std::string::npos);
  // xor clobbers rax, so this is not an identity.
  const auto x = cli("emu --hex 9c4831c09dc3 --trials 3");
  EXPECT_NE(x.status, 0);
  EXPECT_NE(x.out.find("identity: no"), std::string::npos);
}

TEST(Cli, RunWritesManifest) {
  const auto dir = scratch_dir("cli_run");
  const auto input = write_corpus(dir, 5, 6);
  const auto cfg = dir / "cfg.json";
  const std::string text = R"({"budgets":[20],"stages":["transform","nop","eval"]})";
  write_file(cfg, Bytes(text.begin(), text.end()));
  const auto r = cli("run --config " + cfg.string() + " --output " + (dir / "out").string() + " " + input.string());
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "manifest.json"));
  std::filesystem::remove_all(dir);
}
