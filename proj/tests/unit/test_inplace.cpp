#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "binvar/assembler.hpp"
#include "binvar/elf_writer.hpp"
#include "binvar/inplace.hpp"
#include "order_oracle.hpp"
#include "random_block.hpp"
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

bool same_behaviour(const FunctionView& fn, const Bytes& out, RegSet regs, uint32_t trials = 50) {
  Bytes orig;
  for (const auto* in : fn.instructions()) orig.insert(orig.end(), in->bytes.begin(), in->bytes.end());
  EquivalenceOptions o;
  o.trials = trials;
  o.reg_mask = regs;
  o.flag_mask = FlagSet{};
  Rng rng(3);
  return static_cast<bool>(equivalent(Program{orig, fn.start, 0}, Program{out, fn.start, 0}, o, rng));
}

}  // namespace

TEST(Substitution, XorSelfBecomesSubSelf) {
  const auto fn = assemble([](Assembler& a) {
    a.xor_(Reg::Rax, Reg::Rax);
    a.ret();
  });
  EXPECT_EQ(to_hex(fn.blocks[0].instructions[0].bytes), "4831c0");
  const auto live = compute_liveness(fn);
  const auto sites = find_substitution_sites(fn, live);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(to_hex(sites[0].replacement), "4829c0");
  Rng rng(1);
  const auto r = substitute_instructions(fn, live, rng);
  EXPECT_EQ(to_hex(r.code), "4829c0c3");
  EXPECT_EQ(r.report.sites_transformed, 1u);
  EXPECT_TRUE(same_behaviour(fn, r.code, RegSet::all()));
}

TEST(Substitution, AddImmNeedsDeadCarry) {
  const auto dead = assemble([](Assembler& a) {
    a.alu_imm(AluOp::Add, Reg::Rax, 8);
    a.ret();
  });
  const auto sites = find_substitution_sites(dead, compute_liveness(dead));
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(to_hex(sites[0].replacement), "4883e8f8");

  const auto carry_read = assemble([](Assembler& a) {
    a.alu_imm(AluOp::Add, Reg::Rax, 8);
    a.alu(AluOp::Adc, Reg::Rdx, Reg::Rcx);
    a.ret();
  });
  const auto live = compute_liveness(carry_read);
  for (const auto& s : find_substitution_sites(carry_read, live)) EXPECT_NE(s.index, 0u);
}

TEST(Substitution, MovDirectionSwap) {
  const auto fn = assemble([](Assembler& a) {
    a.mov(Reg::Rax, Reg::Rbx);
    a.mov(Reg::R9, Reg::Rcx, Width::D);
    a.ret();
  });
  const auto insns = fn.instructions();
  for (const auto& rule : builtin_rules().rules) {
    if (rule.name != "mov_direction") continue;
    EXPECT_EQ(to_hex(*apply_rule(rule, *insns[0])), "488bc3");
    const auto swapped = apply_rule(rule, *insns[1]);
    ASSERT_TRUE(swapped);
    EXPECT_EQ(decode(*swapped)->text(), "mov r9d, ecx");
  }
  Rng rng(2);
  const auto r = substitute_instructions(fn, compute_liveness(fn), rng);
  EXPECT_TRUE(same_behaviour(fn, r.code, RegSet::all()));
}

TEST(Substitution, NoSitesLeavesBytes) {
  const auto fn = assemble([](Assembler& a) {
    a.push(Reg::Rbx);
    a.pop(Reg::Rbx);
    a.ret();
  });
  Rng rng(0);
  const auto r = substitute_instructions(fn, compute_liveness(fn), rng);
  EXPECT_EQ(to_hex(r.code), "535bc3");
  EXPECT_EQ(r.report.sites_transformed, 0u);
}

TEST(Substitution, RuleFileErrors) {
  EXPECT_THROW(parse_rules("{"), Error);
  EXPECT_THROW(parse_rules(R"({"version":1,"rules":[{"name":"x","kind":"teleport"}]})"), Error);
  EXPECT_EQ(parse_rules(R"({"version":1,"rules":[]})").rules.size(), 0u);
  EXPECT_EQ(builtin_rules().version, kRuleSetVersion);
}

TEST(IntraReorder, IndependentMovsMaySwap) {
  const auto fn = assemble([](Assembler& a) {
    a.mov_imm(Reg::Rax, 1);
    a.mov_imm(Reg::Rbx, 2);
    a.ret();
  });
  const auto live = compute_liveness(fn);
  const auto deps = block_dependences(fn.blocks[0], live, 0);
  EXPECT_EQ(count_topological_orders(deps), 2u);
  Rng rng(4);
  const auto r = reorder_intra_bb(fn, live, rng);
  EXPECT_EQ(r.report.sites_transformed, 1u);
  EXPECT_TRUE(same_behaviour(fn, r.code, RegSet::all()));
}

TEST(IntraReorder, RawDependenceKeepsOrder) {
  const auto fn = assemble([](Assembler& a) {
    a.mov_imm(Reg::Rax, 1);
    a.add(Reg::Rbx, Reg::Rax);
    a.ret();
  });
  const auto live = compute_liveness(fn);
  EXPECT_EQ(count_topological_orders(block_dependences(fn.blocks[0], live, 0)), 1u);
  Rng rng(4);
  EXPECT_EQ(reorder_intra_bb(fn, live, rng).report.sites_transformed, 0u);
}

TEST(IntraReorder, CountMatchesBruteForce) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const size_t n = 1 + rng.below(8);
    std::vector<uint32_t> deps(n, 0);
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < j; ++i)
        if (rng.chance(0.3)) deps[j] |= 1u << i;
    EXPECT_EQ(count_topological_orders(deps), brute_force_topological_count(deps));
  }
}

TEST(IntraReorder, EmittedOrdersAreValid) {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const Bytes code = random_block(rng, 1 + rng.below(7));
    const FunctionView fn = disassemble_function("b", kBase, code);
    ASSERT_EQ(fn.blocks.size(), 1u);
    const auto live = compute_liveness(fn);
    const BasicBlock& b = fn.blocks[0];
    const LiveSet out = live.live_out.back();
    const auto deps = block_dependences(b, live, 0);
    for (int s = 0; s < 20; ++s) {
      const auto order = sample_topological_order(deps, rng);
      EXPECT_TRUE(order_is_valid(b, out, order)) << to_hex(code);
    }
    const auto r = reorder_intra_bb(fn, live, rng);
    EXPECT_EQ(r.code.size(), code.size());
    EXPECT_TRUE(same_behaviour(fn, r.code, RegSet::all(), 20)) << to_hex(code);
  }
}

TEST(PreserveReorder, MixedLengthPushesAreSkipped) {
  const auto fn = assemble([](Assembler& a) {
    a.push(Reg::Rbx);
    a.push(Reg::R12);
    a.mov(Reg::Rbx, Reg::Rdi);
    a.pop(Reg::R12);
    a.pop(Reg::Rbx);
    a.ret();
  });
  Rng rng(5);
  const auto r = reorder_preservation_code(fn, rng);
  EXPECT_EQ(r.report.sites_transformed, 0u);
}

TEST(PreserveReorder, AllPermutationsRestoreRegisters) {
  const auto fn = assemble([](Assembler& a) {
    a.push(Reg::Rbx);
    a.push(Reg::Rbp);
    a.push(Reg::Rdi);
    a.mov_imm(Reg::Rbx, 1);
    a.mov_imm(Reg::Rbp, 2);
    a.mov_imm(Reg::Rdi, 3);
    a.pop(Reg::Rdi);
    a.pop(Reg::Rbp);
    a.pop(Reg::Rbx);
    a.ret();
  });
  std::set<Bytes> seen;
  for (uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    const auto r = reorder_preservation_code(fn, rng);
    EXPECT_TRUE(same_behaviour(fn, r.code, RegSet::all(), 10));
    seen.insert(r.code);
  }
  // Every non-identity ordering of the three pushes shows up; the identity never does.
  Bytes orig;
  for (const auto* in : fn.instructions()) orig.insert(orig.end(), in->bytes.begin(), in->bytes.end());
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_FALSE(seen.count(orig));
}

TEST(RegReassign, RenamesRegionRegister) {
  const auto fn = assemble([](Assembler& a) {
    a.mov(Reg::Rcx, Reg::Rdi);
    a.alu_imm(AluOp::Add, Reg::Rcx, 5);
    a.mov(Reg::Rax, Reg::Rcx);
    a.ret();
  });
  bool changed = false;
  for (uint64_t s = 0; s < 20; ++s) {
    Rng rng(s);
    const auto r = reassign_registers(fn, compute_liveness(fn), rng);
    EXPECT_EQ(r.code.size(), fn.length);
    EXPECT_TRUE(same_behaviour(fn, r.code, comparable_registers(Technique::RegReassign)));
    changed |= r.report.sites_transformed > 0;
  }
  EXPECT_TRUE(changed);
}

TEST(RegReassign, RexChangeIsRejected) {
  const auto push_rcx = *decode(from_hex("51"));
  EXPECT_FALSE(rename_register(push_rcx, Reg::Rcx, Reg::R9));
  EXPECT_EQ(to_hex(*rename_register(push_rcx, Reg::Rcx, Reg::Rdx)), "52");
  const auto mov = *decode(from_hex("4889c8"));  // mov rax, rcx
  EXPECT_EQ(decode(*rename_register(mov, Reg::Rcx, Reg::Rsi))->text(), "mov rax, rsi");
}

TEST(ApplyAll, ZeroBudgetTimesOutEverything) {
  BinaryImage img = corpus_image(3);
  const Bytes before = img.raw;
  const auto reports = apply_all_inplace(img, nullptr, 0.0, 1);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.timed_out) << r.function;
  EXPECT_EQ(img.raw, before);
}

TEST(ApplyAll, DeterministicAndLocal) {
  BinaryImage a = corpus_image(3), b = corpus_image(3);
  const std::string only = a.functions[5].name;
  auto filter = [&](const FunctionView& f) { return f.name == only; };
  apply_all_inplace(a, filter, 30.0, 42);
  apply_all_inplace(b, filter, 30.0, 42);
  EXPECT_EQ(a.raw, b.raw);
  const auto& f = corpus_image(3).function(only);
  const uint64_t lo = *a.file_offset(f.start), hi = lo + f.length;
  const Bytes& orig = corpus_image(3).raw;
  ASSERT_EQ(a.raw.size(), orig.size());
  for (size_t i = 0; i < orig.size(); ++i)
    if (i < lo || i >= hi) ASSERT_EQ(a.raw[i], orig[i]) << i;
}

TEST(ApplyAll, CorpusStaysEquivalent) {
  const BinaryImage& img = corpus_image(2);
  for (Technique t : {Technique::Subst, Technique::IntraReorder, Technique::PreserveReorder, Technique::RegReassign}) {
    BinaryImage v = img;
    apply_all_inplace(v, nullptr, 30.0, 2, {t});
    for (const auto& f : img.functions) {
      EXPECT_EQ(v.function(f.name).length, f.length);
      const auto res = function_equivalent(img, v, f.name, comparable_registers(t), 20);
      EXPECT_TRUE(res) << to_string(t) << " " << f.name << ": " << (res ? "" : res.counterexample->cause);
    }
  }
}
