#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "binvar/regs.hpp"

namespace binvar {

enum class Width : uint8_t { B = 1, W = 2, D = 4, Q = 8 };

enum class Cond : uint8_t { O, NO, B, AE, E, NE, BE, A, S, NS, P, NP, L, GE, LE, G };

/// Group-1 ALU operations in their /digit order.
enum class AluOp : uint8_t { Add, Or, Adc, Sbb, And, Sub, Xor, Cmp };

enum class ShiftOp : uint8_t { Shl = 4, Shr = 5, Sar = 7 };

enum class BranchWidth : uint8_t { Rel8 = 1, Rel32 = 4 };

/// Memory operand: [base + index*scale + disp] or rip-relative to an absolute target.
struct Mem {
  std::optional<Reg> base;
  std::optional<Reg> index;
  uint8_t scale = 1;
  int32_t disp = 0;
  std::optional<uint64_t> rip_target;

  static Mem at(Reg base, int32_t disp = 0) { return Mem{base, std::nullopt, 1, disp, std::nullopt}; }
  static Mem indexed(Reg base, Reg index, uint8_t scale, int32_t disp = 0) {
    return Mem{base, index, scale, disp, std::nullopt};
  }
  static Mem rip(uint64_t target) { return Mem{std::nullopt, std::nullopt, 1, 0, target}; }
};

struct Label {
  int id = -1;
};

/// Minimal x86-64 assembler for the instruction forms this toolkit generates
/// (semantic NOPs, junk code, test fixtures). Emits the canonical encodings
/// GNU as picks for the same source.
class Assembler {
 public:
  explicit Assembler(uint64_t base = 0) : base_(base) {}

  uint64_t base() const { return base_; }
  uint64_t here() const { return base_ + code_.size(); }
  size_t size() const { return code_.size(); }

  Label new_label();
  void bind(Label l);
  uint64_t address_of(Label l) const;

  // data movement
  void mov(Reg dst, Reg src, Width w = Width::Q);
  /// Register-to-register mov using the 8B (load-direction) opcode.
  void mov_rev(Reg dst, Reg src, Width w = Width::Q);
  void mov_imm(Reg dst, int64_t imm, Width w = Width::Q);
  void load(Reg dst, const Mem& m, Width w = Width::Q);
  void store(const Mem& m, Reg src, Width w = Width::Q);
  void store_imm(const Mem& m, int32_t imm, Width w = Width::Q);
  void lea(Reg dst, const Mem& m, Width w = Width::Q);
  void movzx_b(Reg dst, Reg src);
  void movsxd(Reg dst, Reg src);
  void xchg(Reg a, Reg b, Width w = Width::Q);
  void push(Reg r);
  void pop(Reg r);
  void push_imm(int32_t imm);
  void pushfq();
  void popfq();

  // arithmetic
  void alu(AluOp op, Reg dst, Reg src, Width w = Width::Q);
  void alu_imm(AluOp op, Reg dst, int32_t imm, Width w = Width::Q);
  void alu_load(AluOp op, Reg dst, const Mem& m, Width w = Width::Q);
  void alu_store(AluOp op, const Mem& m, Reg src, Width w = Width::Q);
  void add(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::Add, d, s, w); }
  void sub(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::Sub, d, s, w); }
  void xor_(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::Xor, d, s, w); }
  void or_(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::Or, d, s, w); }
  void and_(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::And, d, s, w); }
  void cmp(Reg d, Reg s, Width w = Width::Q) { alu(AluOp::Cmp, d, s, w); }
  void test(Reg a, Reg b, Width w = Width::Q);
  void test_imm(Reg a, int32_t imm, Width w = Width::Q);
  void inc(Reg r, Width w = Width::Q);
  void dec(Reg r, Width w = Width::Q);
  void neg(Reg r, Width w = Width::Q);
  void not_(Reg r, Width w = Width::Q);
  void shift(ShiftOp op, Reg r, uint8_t count, Width w = Width::Q);
  void imul(Reg dst, Reg src, Width w = Width::Q);
  void cmov(Cond c, Reg dst, Reg src, Width w = Width::Q);
  void setcc(Cond c, Reg dst);

  // control flow
  void jmp(Label target, BranchWidth bw = BranchWidth::Rel32);
  void jcc(Cond c, Label target, BranchWidth bw = BranchWidth::Rel32);
  void call(Label target);
  void jmp_abs(uint64_t target, BranchWidth bw = BranchWidth::Rel32);
  void jcc_abs(Cond c, uint64_t target, BranchWidth bw = BranchWidth::Rel32);
  void call_abs(uint64_t target);
  void ret();

  /// Recommended multi-byte NOP of 1..9 bytes.
  void nop(unsigned len = 1);
  void endbr64();
  void raw(std::span<const uint8_t> bytes);

  /// Resolve label fixups and return the code. Throws InvalidArgument when a
  /// rel8 branch cannot reach its label or a label is unbound.
  std::vector<uint8_t> finish();

 private:
  using RM = std::variant<Reg, Mem>;

  struct Fixup {
    size_t disp_offset;
    size_t next_ip_offset;
    uint8_t size;
    int label;
    std::optional<uint64_t> absolute;
  };

  void emit(uint8_t b) { code_.push_back(b); }
  void emit32(uint32_t v);
  void emit_imm(int64_t v, unsigned size);
  void emit_modrm(std::span<const uint8_t> opcode, Width w, unsigned reg_field, bool reg_is_gpr,
                  const RM& rm, unsigned imm_size = 0, int64_t imm = 0);
  void emit_branch(std::span<const uint8_t> opcode, uint8_t size, int label,
                   std::optional<uint64_t> absolute);

  uint64_t base_;
  std::vector<uint8_t> code_;
  std::vector<std::optional<size_t>> labels_;
  std::vector<Fixup> fixups_;
};

}  // namespace binvar
