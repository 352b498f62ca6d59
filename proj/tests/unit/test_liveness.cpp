#include <gtest/gtest.h>

#include <functional>

#include "binvar/assembler.hpp"
#include "binvar/liveness.hpp"
#include "random_block.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

FunctionView assemble(const std::function<void(Assembler&)>& body) {
  Assembler a(0x401000);
  body(a);
  return disassemble_function("f", 0x401000, a.finish());
}

/// Liveness by path search: a location is live before instruction i when
/// some path from i reads it before any full write, or reaches an exit whose
/// boundary set holds it.
struct PathOracle {
  const FunctionView& fn;
  std::vector<const Instruction*> insns;
  std::vector<size_t> block_of;
  std::vector<size_t> first;

  explicit PathOracle(const FunctionView& f) : fn(f) {
    for (size_t b = 0; b < fn.blocks.size(); ++b) {
      first.push_back(insns.size());
      for (const auto& in : fn.blocks[b].instructions) {
        insns.push_back(&in);
        block_of.push_back(b);
      }
    }
  }

  bool last_in_block(size_t i) const { return i + 1 == insns.size() || block_of[i + 1] != block_of[i]; }

  template <typename Reads, typename Kills, typename AtExit>
  bool live(size_t start, Reads reads, Kills kills, AtExit at_exit) const {
    std::vector<bool> seen(insns.size(), false);
    std::vector<size_t> work{start};
    while (!work.empty()) {
      const size_t i = work.back();
      work.pop_back();
      if (seen[i]) continue;
      seen[i] = true;
      if (reads(*insns[i])) return true;
      if (kills(*insns[i])) continue;
      if (!last_in_block(i)) {
        work.push_back(i + 1);
        continue;
      }
      const BasicBlock& b = fn.blocks[block_of[i]];
      if ((b.terminator_kind == Terminator::Return || b.successors.empty()) && at_exit(exit_live())) return true;
      if (b.exits && at_exit(tail_exit_live())) return true;
      for (size_t s : b.successors) work.push_back(first[s]);
    }
    return false;
  }

  bool reg_live(size_t i, Reg r) const {
    return live(
        i, [&](const Instruction& in) { return in.uses().contains(r); },
        [&](const Instruction& in) { return in.kills().contains(r); },
        [&](const LiveSet& s) { return s.regs.contains(r); });
  }
  bool flag_live(size_t i, Flag f) const {
    return live(
        i, [&](const Instruction& in) { return in.flags_read.contains(f); },
        [&](const Instruction& in) { return in.flags_written.contains(f); },
        [&](const LiveSet& s) { return s.flags.contains(f); });
  }
};

void expect_matches_oracle(const FunctionView& fn) {
  const LivenessMap m = compute_liveness(fn);
  const PathOracle oracle(fn);
  ASSERT_EQ(m.size(), oracle.insns.size());
  for (size_t i = 0; i < m.size(); ++i) {
    for (int r = 0; r < kNumGprs; ++r)
      EXPECT_EQ(m.live_in[i].regs.contains(reg_from_hw(r)), oracle.reg_live(i, reg_from_hw(r)))
          << fn.name << " insn " << i << " " << reg_name(reg_from_hw(r));
    for (int f = 0; f < kNumFlags; ++f)
      EXPECT_EQ(m.live_in[i].flags.contains(static_cast<Flag>(f)), oracle.flag_live(i, static_cast<Flag>(f)))
          << fn.name << " insn " << i << " " << flag_name(static_cast<Flag>(f));
  }
  EXPECT_TRUE(is_fixpoint(fn, m));
}

}  // namespace

TEST(Liveness, MovThenRet) {
  const auto fn = assemble([](Assembler& a) {
    a.mov_imm(Reg::Rax, 1);
    a.ret();
  });
  const auto m = compute_liveness(fn);
  EXPECT_TRUE(m.live_out[0].regs.contains(Reg::Rax));
  EXPECT_FALSE(m.live_in[0].regs.contains(Reg::Rax));
}

TEST(Liveness, XorAddRet) {
  const auto fn = assemble([](Assembler& a) {
    a.xor_(Reg::Rax, Reg::Rax);
    a.add(Reg::Rax, Reg::Rbx);
    a.ret();
  });
  const auto m = compute_liveness(fn);
  EXPECT_TRUE(m.live_in[0].regs.contains(Reg::Rbx));
  EXPECT_TRUE(m.live_out[0].flags.empty());
  EXPECT_TRUE(m.live_in[0].flags.empty());
}

TEST(Liveness, DiamondArmReadIsLiveAtHead) {
  const auto fn = assemble([](Assembler& a) {
    Label other = a.new_label(), join = a.new_label();
    a.test(Reg::Rdi, Reg::Rdi);
    a.jcc(Cond::E, other, BranchWidth::Rel8);
    a.mov(Reg::Rax, Reg::R10);
    a.jmp(join, BranchWidth::Rel8);
    a.bind(other);
    a.mov_imm(Reg::Rax, 0);
    a.bind(join);
    a.ret();
  });
  ASSERT_EQ(fn.blocks.size(), 4u);
  const auto m = compute_liveness(fn);
  EXPECT_TRUE(m.live_in[0].regs.contains(Reg::R10));
  EXPECT_TRUE(m.live_in[1].flags.contains(Flag::ZF));
  EXPECT_FALSE(m.live_in[m.block_first[2]].regs.contains(Reg::R10));
  expect_matches_oracle(fn);
}

TEST(Liveness, LoopMatchesPathOracle) {
  const auto fn = assemble([](Assembler& a) {
    Label top = a.new_label();
    a.mov_imm(Reg::Rcx, 10, Width::D);
    a.bind(top);
    a.add(Reg::Rax, Reg::Rdx);
    a.dec(Reg::Rcx);
    a.jcc(Cond::NE, top, BranchWidth::Rel8);
    a.ret();
  });
  const auto m = compute_liveness(fn);
  EXPECT_TRUE(m.live_in[0].regs.contains(Reg::Rdx));
  EXPECT_TRUE(m.live_in[0].regs.contains(Reg::Rax));
  EXPECT_FALSE(m.live_in[0].regs.contains(Reg::Rcx));
  expect_matches_oracle(fn);
}

TEST(Liveness, CorpusMatchesPathOracle) {
  const BinaryImage& img = corpus_image(1);
  for (const auto& fn : img.functions) expect_matches_oracle(fn);
}

TEST(Liveness, RandomBlocksMatchPathOracle) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Bytes code = random_block(rng, 1 + rng.below(12));
    expect_matches_oracle(disassemble_function("r" + std::to_string(i), 0x401000, code));
  }
}

TEST(Liveness, DeadFlagRegions) {
  const auto straight = assemble([](Assembler& a) {
    a.add(Reg::Rax, Reg::Rbx);
    a.alu(AluOp::Sub, Reg::Rcx, Reg::Rdx);
    a.inc(Reg::Rax);
    a.ret();
  });
  EXPECT_EQ(dead_flag_regions(compute_liveness(straight)), (std::vector<IndexInterval>{{0, 4}}));

  const auto cmp_jcc = assemble([](Assembler& a) {
    Label l = a.new_label();
    a.mov(Reg::Rax, Reg::Rdi);
    a.cmp(Reg::Rdi, Reg::Rsi);
    a.jcc(Cond::L, l, BranchWidth::Rel8);
    a.mov(Reg::Rax, Reg::Rsi);
    a.bind(l);
    a.ret();
  });
  const auto regions = dead_flag_regions(compute_liveness(cmp_jcc));
  for (const auto& [lo, hi] : regions) EXPECT_FALSE(lo <= 2 && 2 < hi);
  EXPECT_EQ(regions.front(), (IndexInterval{0, 2}));
}

TEST(Liveness, LiveRangesAndClobberable) {
  const auto fn = assemble([](Assembler& a) {
    a.mov(Reg::Rcx, Reg::Rdi);
    a.add(Reg::Rcx, Reg::Rcx);
    a.mov(Reg::Rax, Reg::Rcx);
    a.ret();
  });
  const auto m = compute_liveness(fn);
  const auto ranges = live_ranges(fn, m, Reg::Rcx);
  ASSERT_EQ(ranges.size(), 1u);
  EXPECT_EQ(ranges[0].span, (IndexInterval{1, 3}));
  EXPECT_TRUE(m.clobberable.contains(Reg::R11));
  EXPECT_FALSE(m.clobberable.contains(Reg::Rcx));
  EXPECT_FALSE(m.clobberable.contains(Reg::Rbx));
}

TEST(Liveness, OpaqueFunctionThrows) {
  FunctionView fn = assemble([](Assembler& a) { a.ret(); });
  fn.opaque = true;
  EXPECT_THROW(compute_liveness(fn), Error);
}
