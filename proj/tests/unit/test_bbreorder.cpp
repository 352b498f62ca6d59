#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "binvar/assembler.hpp"
#include "binvar/bbreorder.hpp"
#include "binvar/elf_writer.hpp"
#include "layout_check.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

constexpr uint64_t kBase = 0x401000;

FunctionView assemble(const std::function<void(Assembler&)>& body) {
  Assembler a(kBase);
  body(a);
  return disassemble_function("f", kBase, a.finish());
}

/// Four blocks linked only by rel32 jumps.
void four_jump_blocks(Assembler& a) {
  Label b1 = a.new_label(), b2 = a.new_label(), b3 = a.new_label();
  a.mov(Reg::Rax, Reg::Rdi);
  a.jmp(b2);
  a.bind(b1);
  a.alu_imm(AluOp::Xor, Reg::Rax, 0x33);
  a.ret();
  a.bind(b2);
  a.alu_imm(AluOp::Add, Reg::Rax, 7);
  a.jmp(b3);
  a.bind(b3);
  a.imul(Reg::Rax, Reg::Rsi);
  a.jmp(b1);
}

/// Independent feasibility: entry first, fallthrough successors adjacent,
/// rel8 branches still in range at the new addresses.
bool feasible_by_hand(const FunctionView& fn, const std::vector<size_t>& order) {
  if (order.front() != 0) return false;
  std::vector<size_t> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (size_t k = 0; k < fn.blocks.size(); ++k) {
    const auto& b = fn.blocks[k];
    if (b.fallthrough && (pos[k] + 1 >= order.size() || order[pos[k] + 1] != *b.fallthrough)) return false;
    const bool runs_off = b.terminator_kind == Terminator::Fallthrough && !b.fallthrough;
    if (runs_off && pos[k] + 1 != order.size()) return false;
  }
  std::vector<uint64_t> start(order.size());
  uint64_t at = fn.start;
  for (size_t k : order) {
    start[k] = at;
    at += fn.blocks[k].size_bytes();
  }
  for (size_t k = 0; k < fn.blocks.size(); ++k) {
    uint64_t addr = start[k];
    for (const auto& in : fn.blocks[k].instructions) {
      addr += in.size();
      if (in.rel_width == 8 && in.branch_target) {
        const auto tb = fn.block_at(*in.branch_target);
        const int64_t disp = static_cast<int64_t>(start[*tb]) - static_cast<int64_t>(addr);
        if (disp < -128 || disp > 127) return false;
      }
    }
  }
  return true;
}

void expect_oracle_agrees(const FunctionView& fn) {
  std::vector<size_t> perm(fn.blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const bool ours = respects_fallthrough(fn, perm) && check_layout(fn, perm).empty();
    EXPECT_EQ(ours, feasible_by_hand(fn, perm)) << fn.name;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TEST(BlockReorder, SingleBlockIsIdentity) {
  const auto fn = assemble([](Assembler& a) {
    a.mov(Reg::Rax, Reg::Rdi);
    a.ret();
  });
  Rng rng(0);
  const auto plan = plan_reorder(fn, rng);
  EXPECT_TRUE(plan.feasible);
  EXPECT_TRUE(plan.identity());
  EXPECT_EQ(to_hex(render_reorder(fn, plan)), "4889f8c3");
}

TEST(BlockReorder, FallthroughPairOnlyIdentity) {
  const auto fn = assemble([](Assembler& a) {
    Label l = a.new_label();
    a.test(Reg::Rdi, Reg::Rdi);
    a.jcc(Cond::E, l, BranchWidth::Rel8);
    a.bind(l);
    a.ret();
  });
  ASSERT_EQ(fn.blocks.size(), 2u);
  EXPECT_FALSE(respects_fallthrough(fn, {1, 0}));
  EXPECT_TRUE(respects_fallthrough(fn, {0, 1}));
  for (uint64_t s = 0; s < 10; ++s) {
    Rng rng(s);
    EXPECT_TRUE(plan_reorder(fn, rng).identity());
  }
  expect_oracle_agrees(fn);
}

TEST(BlockReorder, FourJumpBlocksBruteForce) {
  const auto fn = assemble(four_jump_blocks);
  ASSERT_EQ(fn.blocks.size(), 4u);
  int feasible = 0;
  std::vector<size_t> perm{0, 1, 2, 3};
  do {
    if (perm[0] == 0 && feasible_by_hand(fn, perm)) ++feasible;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(feasible, 6);
  expect_oracle_agrees(fn);

  bool moved = false;
  for (uint64_t s = 0; s < 10; ++s) {
    Rng rng(s);
    const auto plan = plan_reorder(fn, rng);
    ASSERT_TRUE(plan.feasible);
    const Bytes out = render_reorder(fn, plan);
    const FunctionView nf = disassemble_function("f", kBase, out);
    EXPECT_EQ(check_reordered(fn, nf, plan.permutation), "");
    Bytes orig;
    for (const auto* in : fn.instructions()) orig.insert(orig.end(), in->bytes.begin(), in->bytes.end());
    Rng erng(s);
    EquivalenceOptions o;
    o.flag_mask = FlagSet{};
    EXPECT_TRUE(equivalent(Program{orig, kBase, 0}, Program{out, kBase, 0}, o, erng));
    moved |= !plan.identity();
  }
  EXPECT_TRUE(moved);
}

TEST(BlockReorder, Rel8LimitsAreEnforced) {
  // A rel8 jump cannot reach its target once a large block sits in between.
  const auto fn = assemble([](Assembler& a) {
    Label far = a.new_label();
    a.jmp(far, BranchWidth::Rel8);
    a.bind(far);
    a.ret();
    for (int i = 0; i < 40; ++i) a.alu_imm(AluOp::Add, Reg::Rax, 1);
    a.jmp(far);
  });
  ASSERT_EQ(fn.blocks.size(), 3u);
  expect_oracle_agrees(fn);
  const auto v = check_layout(fn, {0, 2, 1});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].limit, 127);
  ReorderPlan bad{"f", {0, 2, 1}, true, {}};
  EXPECT_THROW(render_reorder(fn, bad), Error);
  bad.feasible = false;
  EXPECT_THROW(render_reorder(fn, bad), Error);
}

TEST(BlockReorder, CorpusPlansPreserveBehaviour) {
  const BinaryImage& img = corpus_image(0);
  int applied = 0;
  for (const auto& f : img.functions) {
    Rng rng(technique_seed(0, f.name, Technique::BlockReorder));
    const auto plan = plan_reorder(f, rng);
    if (!plan.feasible || plan.identity()) continue;
    BinaryImage v = img;
    apply_reorder(v, f.name, plan);
    EXPECT_EQ(check_reordered(f, v.function(f.name), plan.permutation), "") << f.name;
    EXPECT_TRUE(function_equivalent(img, v, f.name, RegSet::all(), 20)) << f.name;
    ++applied;
  }
  EXPECT_GT(applied, 0);
}

TEST(BlockReorder, EligibilityReasons) {
  ElfBuilder b;
  Assembler s(b.next_function_address());
  s.mov(Reg::Rax, Reg::Rdi);
  s.ret();
  b.add_function("straight", s.finish());
  b.add_function("table", from_hex("ff24c5000080004c8b0fc3"));
  const BinaryImage img = parse_elf(b.build());
  const auto report = eligibility_report(img);
  ASSERT_EQ(report.size(), 2u);
  EXPECT_FALSE(report[0].eligible);
  EXPECT_EQ(report[0].reason, "single_block");
  EXPECT_FALSE(report[1].eligible);
  EXPECT_EQ(report[1].reason, "opaque");
}
