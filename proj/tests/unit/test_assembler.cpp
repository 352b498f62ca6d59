#include <gtest/gtest.h>

#include "binvar/assembler.hpp"
#include "binvar/error.hpp"
#include "binvar/instruction.hpp"

using namespace binvar;

namespace {

std::string hex_of(void (*emit)(Assembler&)) {
  Assembler a(0x1000);
  emit(a);
  return to_hex(a.finish());
}

}  // namespace

// Expected bytes are the GNU as output for the same source line.
TEST(Assembler, KnownEncodings) {
  EXPECT_EQ(hex_of([](Assembler& a) { a.mov(Reg::Rax, Reg::Rbx); }), "4889d8");
  EXPECT_EQ(hex_of([](Assembler& a) { a.mov_rev(Reg::Rax, Reg::Rbx); }), "488bc3");
  EXPECT_EQ(hex_of([](Assembler& a) { a.alu_imm(AluOp::Add, Reg::Rsp, 8); }), "4883c408");
  EXPECT_EQ(hex_of([](Assembler& a) { a.alu_imm(AluOp::Sub, Reg::Rsp, 0x100); }), "4881ec00010000");
  EXPECT_EQ(hex_of([](Assembler& a) { a.push(Reg::Rbx); }), "53");
  EXPECT_EQ(hex_of([](Assembler& a) { a.push(Reg::R12); }), "4154");
  EXPECT_EQ(hex_of([](Assembler& a) { a.pop(Reg::R15); }), "415f");
  EXPECT_EQ(hex_of([](Assembler& a) { a.pushfq(); a.popfq(); }), "9c9d");
  EXPECT_EQ(hex_of([](Assembler& a) { a.cmp(Reg::Rdi, Reg::Rsi); }), "4839f7");
  EXPECT_EQ(hex_of([](Assembler& a) { a.test(Reg::Rax, Reg::Rax, Width::D); }), "85c0");
  EXPECT_EQ(hex_of([](Assembler& a) { a.shift(ShiftOp::Shl, Reg::Rax, 3); }), "48c1e003");
  EXPECT_EQ(hex_of([](Assembler& a) { a.mov_imm(Reg::Rax, 1, Width::D); }), "b801000000");
  EXPECT_EQ(hex_of([](Assembler& a) { a.load(Reg::Rax, Mem::at(Reg::Rsp, 8)); }), "488b442408");
  EXPECT_EQ(hex_of([](Assembler& a) { a.store(Mem::at(Reg::Rbp, -8), Reg::Rdi); }), "48897df8");
  EXPECT_EQ(hex_of([](Assembler& a) { a.lea(Reg::Rax, Mem::indexed(Reg::Rdi, Reg::Rsi, 4, 16)); }), "488d44b710");
  EXPECT_EQ(hex_of([](Assembler& a) { a.movzx_b(Reg::Rax, Reg::Rcx); }), "0fb6c1");
  EXPECT_EQ(hex_of([](Assembler& a) { a.ret(); }), "c3");
  EXPECT_EQ(hex_of([](Assembler& a) { a.endbr64(); }), "f30f1efa");
  EXPECT_EQ(hex_of([](Assembler& a) { a.nop(3); }), "0f1f00");
}

TEST(Assembler, BranchesResolveLabels) {
  Assembler a(0x1000);
  Label top = a.new_label();
  a.bind(top);
  a.jmp(top, BranchWidth::Rel8);
  a.jcc(Cond::NE, top);
  EXPECT_EQ(to_hex(a.finish()), "ebfe0f85f8ffffff");
}

TEST(Assembler, Rel8OutOfRangeThrows) {
  Assembler a;
  Label far = a.new_label();
  a.jmp(far, BranchWidth::Rel8);
  for (int i = 0; i < 200; ++i) a.nop();
  a.bind(far);
  try {
    a.finish();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Decoder, RoundTripsAssembledText) {
  Assembler a(0x401000);
  a.push(Reg::Rbx);
  a.mov(Reg::Rbx, Reg::Rdi);
  a.alu_imm(AluOp::Xor, Reg::Rax, 0x55, Width::D);
  a.imul(Reg::Rax, Reg::Rbx);
  a.pop(Reg::Rbx);
  a.ret();
  const Bytes code = a.finish();
  size_t gap = 0;
  const auto insns = decode_all(code, 0x401000, &gap);
  EXPECT_EQ(gap, code.size());
  ASSERT_EQ(insns.size(), 6u);
  EXPECT_EQ(insns[0].text(), "push rbx");
  EXPECT_EQ(insns[1].text(), "mov rbx, rdi");
  EXPECT_EQ(insns[2].text(), "xor eax, 0x55");
  EXPECT_EQ(insns[3].text(), "imul rax, rbx");
  EXPECT_EQ(insns[5].flow, Flow::Return);
  EXPECT_TRUE(insns[2].flags_written.contains(Flag::ZF));
  EXPECT_TRUE(insns[1].regs_written.contains(Reg::Rbx));
  EXPECT_TRUE(insns[1].regs_read.contains(Reg::Rdi));
}

TEST(Decoder, PartialWriteAndBranchTarget) {
  const Bytes code = from_hex("88c8" "66b80100" "eb00" "e8fbffffff");
  const auto insns = decode_all(code, 0x2000);
  ASSERT_EQ(insns.size(), 4u);
  EXPECT_TRUE(insns[0].partial_writes.contains(Reg::Rax));
  EXPECT_TRUE(insns[1].partial_writes.contains(Reg::Rax));
  EXPECT_TRUE(insns[2].is_rel_branch);
  EXPECT_EQ(insns[2].rel_width, 8);
  EXPECT_EQ(insns[2].branch_target, 0x2008u);
  EXPECT_EQ(insns[3].flow, Flow::Call);
  EXPECT_EQ(insns[3].branch_target, 0x2008u);
}

TEST(Decoder, GapOffsetStopsAtGarbage) {
  const Bytes code = from_hex("90" "0f0b" "06");
  size_t gap = 0;
  decode_all(code, 0, &gap);
  EXPECT_EQ(gap, 3u);
}

TEST(Hex, RoundTrip) {
  const Bytes b{0x00, 0xff, 0x10, 0xab};
  EXPECT_EQ(from_hex(to_hex(b)), b);
}
