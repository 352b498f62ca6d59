#include <gtest/gtest.h>

#include "binvar/assembler.hpp"
#include "binvar/emulator.hpp"
#include "binvar/error.hpp"
#include "flag_oracle.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

constexpr uint64_t kBase = 0x401000;

MachineState zero_state() {
  MachineState s;
  s.reg(Reg::Rsp) = kStackTop - 64;
  return s;
}

void expect_flags(const MachineState& s, const RefFlags& r, const std::string& ctx) {
  EXPECT_EQ(s.flag(Flag::CF), r.cf) << ctx;
  EXPECT_EQ(s.flag(Flag::PF), r.pf) << ctx;
  EXPECT_EQ(s.flag(Flag::AF), r.af) << ctx;
  EXPECT_EQ(s.flag(Flag::ZF), r.zf) << ctx;
  EXPECT_EQ(s.flag(Flag::SF), r.sf) << ctx;
  EXPECT_EQ(s.flag(Flag::OF), r.of) << ctx;
}

ErrorKind run_kind(const Bytes& code, uint64_t max_steps = 200000) {
  EmuConfig cfg;
  cfg.max_steps = max_steps;
  try {
    run(code, kBase, 0, zero_state(), cfg);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST(Emulator, WideAddSubMatchFlagOracle) {
  Rng rng(5);
  for (Width w : {Width::D, Width::Q}) {
    const unsigned bits = 8 * static_cast<unsigned>(w);
    for (AluOp op : {AluOp::Add, AluOp::Sub, AluOp::Cmp}) {
      Assembler a(kBase);
      a.alu(op, Reg::Rax, Reg::Rbx, w);
      a.ret();
      const Bytes code = a.finish();
      for (int i = 0; i < 2000; ++i) {
        MachineState s = zero_state();
        // Mix in edge values around the sign and carry boundaries.
        const uint64_t edges[] = {0, 1, width_mask(bits), width_mask(bits) >> 1, (width_mask(bits) >> 1) + 1};
        s.reg(Reg::Rax) = i < 25 ? edges[i % 5] : rng.next();
        s.reg(Reg::Rbx) = i < 25 ? edges[i / 5] : rng.next();
        const uint64_t x = s.reg(Reg::Rax), y = s.reg(Reg::Rbx);
        const auto out = run(code, kBase, 0, s).state;
        const RefFlags r = op == AluOp::Add ? ref_add(x, y, bits) : ref_sub(x, y, bits);
        expect_flags(out, r, std::to_string(x) + " " + std::to_string(y));
        if (op != AluOp::Cmp) EXPECT_EQ(out.reg(Reg::Rax), r.result);
        if (op == AluOp::Cmp) EXPECT_EQ(out.reg(Reg::Rax), x);
      }
    }
  }
}

TEST(Emulator, ThirtyTwoBitWriteZeroExtends) {
  Assembler a(kBase);
  a.mov_imm(Reg::Rcx, 7, Width::D);
  a.ret();
  MachineState s = zero_state();
  s.reg(Reg::Rcx) = ~0ULL;
  EXPECT_EQ(run(a.finish(), kBase, 0, s).state.reg(Reg::Rcx), 7u);
}

TEST(Emulator, PushfqStoresRflags) {
  Assembler a(kBase);
  a.pushfq();
  a.pop(Reg::Rax);
  a.ret();
  MachineState s = zero_state();
  s.set_flag(Flag::CF, true);
  s.set_flag(Flag::ZF, true);
  const auto out = run(a.finish(), kBase, 0, s).state;
  EXPECT_EQ(out.reg(Reg::Rax), s.rflags());
  EXPECT_EQ(out.reg(Reg::Rax) & 0x8d5, (1ULL << 0) | (1ULL << 6));
  EXPECT_EQ(out.reg(Reg::Rax) & 2, 2u);
}

TEST(Emulator, UndefinedFlagsAreTracked) {
  Assembler a(kBase);
  a.imul(Reg::Rax, Reg::Rbx);
  a.ret();
  const auto out = run(a.finish(), kBase, 0, zero_state()).state;
  EXPECT_TRUE(out.undefined.contains(Flag::ZF));
  EXPECT_TRUE(out.undefined.contains(Flag::AF));
  EXPECT_FALSE(out.undefined.contains(Flag::CF));
}

TEST(Emulator, ExternalCallSummary) {
  Assembler a(kBase);
  a.call_abs(0x500000);
  a.ret();
  const Bytes code = a.finish();
  MachineState s = zero_state();
  s.reg(Reg::Rbx) = 11;
  s.reg(Reg::Rdi) = 3;
  const auto out1 = run(code, kBase, 0, s).state;
  EXPECT_EQ(out1.reg(Reg::Rbx), 11u);
  EXPECT_NE(out1.reg(Reg::Rax), 0u);
  ASSERT_EQ(out1.mem_writes.size(), 1u);
  EXPECT_TRUE(out1.mem_writes.back().external_call);
  EXPECT_EQ(out1.undefined, FlagSet::all());
  s.reg(Reg::Rdi) = 4;
  const auto out2 = run(code, kBase, 0, s).state;
  EXPECT_NE(out1.reg(Reg::Rax), out2.reg(Reg::Rax));
}

TEST(Emulator, RipRelativeReadsSnapshot) {
  Assembler a(kBase);
  a.load(Reg::Rax, Mem::rip(0x800010));
  a.ret();
  std::vector<MemoryRegion> snap{{0x800000, Bytes(32, 0)}};
  snap[0].bytes[0x10] = 0x2a;
  EmuConfig cfg;
  cfg.snapshot = snap;
  EXPECT_EQ(run(a.finish(), kBase, 0, zero_state(), cfg).state.reg(Reg::Rax), 0x2au);
}

TEST(Emulator, TraceRecordsAddresses) {
  Assembler a(kBase);
  a.nop();
  a.mov(Reg::Rax, Reg::Rbx);
  a.ret();
  EmuConfig cfg;
  cfg.trace = true;
  const auto r = run(a.finish(), kBase, 0, zero_state(), cfg);
  EXPECT_EQ(r.trace, (std::vector<uint64_t>{kBase, kBase + 1, kBase + 4}));
}

TEST(Emulator, Failures) {
  EXPECT_EQ(run_kind(from_hex("ebfe"), 100), ErrorKind::StepLimit);
  EXPECT_EQ(run_kind(from_hex("50ebfd")), ErrorKind::StackOverflow);
  EXPECT_EQ(run_kind(from_hex("0fa2c3")), ErrorKind::TrapUnsupported);
}

TEST(Emulator, EquivalenceFindsDifferences) {
  Assembler a(kBase), b(kBase);
  a.mov_imm(Reg::Rax, 1, Width::D);
  a.ret();
  b.mov_imm(Reg::Rax, 2, Width::D);
  b.ret();
  const Bytes ca = a.finish(), cb = b.finish();
  Rng rng(1);
  EquivalenceOptions o;
  o.trials = 10;
  auto res = equivalent(Program{ca, kBase, 0}, Program{cb, kBase, 0}, o, rng);
  EXPECT_FALSE(res);
  ASSERT_TRUE(res.counterexample);
  EXPECT_EQ(res.counterexample->trial, 1u);
  o.reg_mask = RegSet::all() - RegSet{Reg::Rax};
  EXPECT_TRUE(equivalent(Program{ca, kBase, 0}, Program{cb, kBase, 0}, o, rng));
}

TEST(Emulator, StackScratchIsNotCompared) {
  Assembler a(kBase), b(kBase);
  a.push(Reg::Rax);
  a.pop(Reg::Rax);
  a.ret();
  b.ret();
  const Bytes ca = a.finish(), cb = b.finish();
  Rng rng(2);
  EXPECT_TRUE(equivalent(Program{ca, kBase, 0}, Program{cb, kBase, 0}, {}, rng));
}
