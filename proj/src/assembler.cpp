#include "binvar/assembler.hpp"

#include <array>

#include "binvar/error.hpp"

namespace binvar {

namespace {

bool fits8(int64_t v) { return v >= -128 && v <= 127; }

uint8_t scale_bits(uint8_t scale) {
  switch (scale) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
  }
  throw Error(ErrorKind::InvalidArgument, "bad SIB scale");
}

// Byte registers spl/bpl/sil/dil are only reachable with a REX prefix.
bool byte_reg_needs_rex(unsigned n) { return n >= 4 && n <= 7; }

}  // namespace

Label Assembler::new_label() {
  labels_.push_back(std::nullopt);
  return Label{static_cast<int>(labels_.size() - 1)};
}

void Assembler::bind(Label l) { labels_.at(l.id) = code_.size(); }

uint64_t Assembler::address_of(Label l) const {
  const auto& off = labels_.at(l.id);
  if (!off) throw Error(ErrorKind::InvalidArgument, "unbound label");
  return base_ + *off;
}

void Assembler::emit32(uint32_t v) {
  for (int i = 0; i < 4; ++i) emit(static_cast<uint8_t>(v >> (8 * i)));
}

void Assembler::emit_imm(int64_t v, unsigned size) {
  for (unsigned i = 0; i < size; ++i) emit(static_cast<uint8_t>(static_cast<uint64_t>(v) >> (8 * i)));
}

void Assembler::emit_modrm(std::span<const uint8_t> opcode, Width w, unsigned reg_field,
                           bool reg_is_gpr, const RM& rm, unsigned imm_size, int64_t imm) {
  if (w == Width::W) emit(0x66);
  uint8_t rex = 0;
  if (w == Width::Q) rex |= 0x08;
  if (reg_field & 8) rex |= 0x04;
  bool force_rex = w == Width::B && reg_is_gpr && byte_reg_needs_rex(reg_field);

  const Reg* rm_reg = std::get_if<Reg>(&rm);
  const Mem* mem = std::get_if<Mem>(&rm);
  if (rm_reg) {
    if (needs_rex(*rm_reg)) rex |= 0x01;
    if (w == Width::B && byte_reg_needs_rex(hw(*rm_reg))) force_rex = true;
  } else {
    if (mem->base && needs_rex(*mem->base)) rex |= 0x01;
    if (mem->index && needs_rex(*mem->index)) rex |= 0x02;
  }
  if (rex || force_rex) emit(0x40 | rex);
  for (uint8_t b : opcode) emit(b);

  const uint8_t reg_bits = static_cast<uint8_t>((reg_field & 7) << 3);
  if (rm_reg) {
    emit(0xC0 | reg_bits | (hw(*rm_reg) & 7));
    emit_imm(imm, imm_size);
    return;
  }
  if (mem->rip_target) {
    emit(0x05 | reg_bits);
    const size_t disp_at = code_.size();
    emit32(0);
    emit_imm(imm, imm_size);
    const int64_t disp = static_cast<int64_t>(*mem->rip_target - here());
    for (int i = 0; i < 4; ++i) code_[disp_at + i] = static_cast<uint8_t>(static_cast<uint64_t>(disp) >> (8 * i));
    return;
  }
  if (!mem->base) throw Error(ErrorKind::InvalidArgument, "memory operand without base");
  const unsigned base = hw(*mem->base) & 7;
  uint8_t mod;
  if (mem->disp == 0 && base != 5)
    mod = 0;
  else if (fits8(mem->disp))
    mod = 1;
  else
    mod = 2;
  const bool sib = mem->index.has_value() || base == 4;
  emit(static_cast<uint8_t>(mod << 6) | reg_bits | (sib ? 4 : base));
  if (sib) {
    if (mem->index && *mem->index == Reg::Rsp) throw Error(ErrorKind::InvalidArgument, "rsp cannot index");
    const unsigned idx = mem->index ? (hw(*mem->index) & 7) : 4;
    emit(static_cast<uint8_t>(scale_bits(mem->index ? mem->scale : 1) << 6) | static_cast<uint8_t>(idx << 3) | base);
  }
  if (mod == 1) emit_imm(mem->disp, 1);
  if (mod == 2) emit_imm(mem->disp, 4);
  emit_imm(imm, imm_size);
}

void Assembler::mov(Reg dst, Reg src, Width w) {
  const uint8_t op = w == Width::B ? 0x88 : 0x89;
  emit_modrm(std::array{op}, w, hw(src), true, dst);
}

void Assembler::mov_rev(Reg dst, Reg src, Width w) {
  const uint8_t op = w == Width::B ? 0x8A : 0x8B;
  emit_modrm(std::array{op}, w, hw(dst), true, src);
}

void Assembler::mov_imm(Reg dst, int64_t imm, Width w) {
  switch (w) {
    case Width::B:
      if (byte_reg_needs_rex(hw(dst)) || needs_rex(dst)) emit(0x40 | (needs_rex(dst) ? 1 : 0));
      emit(0xB0 | (hw(dst) & 7));
      emit_imm(imm, 1);
      return;
    case Width::W:
      emit(0x66);
      if (needs_rex(dst)) emit(0x41);
      emit(0xB8 | (hw(dst) & 7));
      emit_imm(imm, 2);
      return;
    case Width::D:
      if (needs_rex(dst)) emit(0x41);
      emit(0xB8 | (hw(dst) & 7));
      emit_imm(imm, 4);
      return;
    case Width::Q:
      if (imm >= INT32_MIN && imm <= INT32_MAX) {
        emit_modrm(std::array<uint8_t, 1>{0xC7}, w, 0, false, dst, 4, imm);
      } else {
        emit(0x48 | (needs_rex(dst) ? 1 : 0));
        emit(0xB8 | (hw(dst) & 7));
        emit_imm(imm, 8);
      }
      return;
  }
}

void Assembler::load(Reg dst, const Mem& m, Width w) {
  const uint8_t op = w == Width::B ? 0x8A : 0x8B;
  emit_modrm(std::array{op}, w, hw(dst), true, m);
}

void Assembler::store(const Mem& m, Reg src, Width w) {
  const uint8_t op = w == Width::B ? 0x88 : 0x89;
  emit_modrm(std::array{op}, w, hw(src), true, m);
}

void Assembler::store_imm(const Mem& m, int32_t imm, Width w) {
  const uint8_t op = w == Width::B ? 0xC6 : 0xC7;
  const unsigned isz = w == Width::B ? 1 : (w == Width::W ? 2 : 4);
  emit_modrm(std::array{op}, w, 0, false, m, isz, imm);
}

void Assembler::lea(Reg dst, const Mem& m, Width w) {
  emit_modrm(std::array<uint8_t, 1>{0x8D}, w, hw(dst), true, m);
}

void Assembler::movzx_b(Reg dst, Reg src) {
  emit_modrm(std::array<uint8_t, 2>{0x0F, 0xB6}, Width::D, hw(dst), true, src);
  // A byte source in spl..dil needs REX even though the operation is 32-bit.
  if (byte_reg_needs_rex(hw(src)) && !needs_rex(dst) && !needs_rex(src)) {
    // emit_modrm saw Width::D and emitted no REX; insert one before the opcode.
    code_.insert(code_.end() - 3, 0x40);
  }
}

void Assembler::movsxd(Reg dst, Reg src) {
  emit_modrm(std::array<uint8_t, 1>{0x63}, Width::Q, hw(dst), true, src);
}

void Assembler::xchg(Reg a, Reg b, Width w) {
  if (w != Width::B && (a == Reg::Rax || b == Reg::Rax) && !(w == Width::D && a == b)) {
    const Reg other = a == Reg::Rax ? b : a;
    if (w == Width::W) emit(0x66);
    uint8_t rex = (w == Width::Q ? 0x08 : 0) | (needs_rex(other) ? 1 : 0);
    if (rex) emit(0x40 | rex);
    emit(0x90 | (hw(other) & 7));
    return;
  }
  const uint8_t op = w == Width::B ? 0x86 : 0x87;
  emit_modrm(std::array{op}, w, hw(b), true, a);
}

void Assembler::push(Reg r) {
  if (needs_rex(r)) emit(0x41);
  emit(0x50 | (hw(r) & 7));
}

void Assembler::pop(Reg r) {
  if (needs_rex(r)) emit(0x41);
  emit(0x58 | (hw(r) & 7));
}

void Assembler::push_imm(int32_t imm) {
  if (fits8(imm)) {
    emit(0x6A);
    emit_imm(imm, 1);
  } else {
    emit(0x68);
    emit_imm(imm, 4);
  }
}

void Assembler::pushfq() { emit(0x9C); }
void Assembler::popfq() { emit(0x9D); }

void Assembler::alu(AluOp op, Reg dst, Reg src, Width w) {
  const uint8_t opc = static_cast<uint8_t>(static_cast<uint8_t>(op) * 8 + (w == Width::B ? 0 : 1));
  emit_modrm(std::array{opc}, w, hw(src), true, dst);
}

void Assembler::alu_imm(AluOp op, Reg dst, int32_t imm, Width w) {
  const unsigned digit = static_cast<unsigned>(op);
  if (w == Width::B) {
    if (dst == Reg::Rax) {
      emit(static_cast<uint8_t>(digit * 8 + 4));
      emit_imm(imm, 1);
    } else {
      emit_modrm(std::array<uint8_t, 1>{0x80}, w, digit, false, dst, 1, imm);
    }
    return;
  }
  const unsigned full = w == Width::W ? 2 : 4;
  if (fits8(imm)) {
    emit_modrm(std::array<uint8_t, 1>{0x83}, w, digit, false, dst, 1, imm);
  } else if (dst == Reg::Rax) {
    if (w == Width::W) emit(0x66);
    if (w == Width::Q) emit(0x48);
    emit(static_cast<uint8_t>(digit * 8 + 5));
    emit_imm(imm, full);
  } else {
    emit_modrm(std::array<uint8_t, 1>{0x81}, w, digit, false, dst, full, imm);
  }
}

void Assembler::alu_load(AluOp op, Reg dst, const Mem& m, Width w) {
  const uint8_t opc = static_cast<uint8_t>(static_cast<uint8_t>(op) * 8 + (w == Width::B ? 2 : 3));
  emit_modrm(std::array{opc}, w, hw(dst), true, m);
}

void Assembler::alu_store(AluOp op, const Mem& m, Reg src, Width w) {
  const uint8_t opc = static_cast<uint8_t>(static_cast<uint8_t>(op) * 8 + (w == Width::B ? 0 : 1));
  emit_modrm(std::array{opc}, w, hw(src), true, m);
}

void Assembler::test(Reg a, Reg b, Width w) {
  const uint8_t op = w == Width::B ? 0x84 : 0x85;
  emit_modrm(std::array{op}, w, hw(b), true, a);
}

void Assembler::test_imm(Reg a, int32_t imm, Width w) {
  if (a == Reg::Rax) {
    if (w == Width::W) emit(0x66);
    if (w == Width::Q) emit(0x48);
    emit(w == Width::B ? 0xA8 : 0xA9);
    emit_imm(imm, w == Width::B ? 1 : (w == Width::W ? 2 : 4));
    return;
  }
  const uint8_t op = w == Width::B ? 0xF6 : 0xF7;
  emit_modrm(std::array{op}, w, 0, false, a, w == Width::B ? 1 : (w == Width::W ? 2 : 4), imm);
}

void Assembler::inc(Reg r, Width w) {
  const uint8_t op = w == Width::B ? 0xFE : 0xFF;
  emit_modrm(std::array{op}, w, 0, false, r);
}

void Assembler::dec(Reg r, Width w) {
  const uint8_t op = w == Width::B ? 0xFE : 0xFF;
  emit_modrm(std::array{op}, w, 1, false, r);
}

void Assembler::neg(Reg r, Width w) {
  const uint8_t op = w == Width::B ? 0xF6 : 0xF7;
  emit_modrm(std::array{op}, w, 3, false, r);
}

void Assembler::not_(Reg r, Width w) {
  const uint8_t op = w == Width::B ? 0xF6 : 0xF7;
  emit_modrm(std::array{op}, w, 2, false, r);
}

void Assembler::shift(ShiftOp op, Reg r, uint8_t count, Width w) {
  const bool byte = w == Width::B;
  if (count == 1) {
    emit_modrm(std::array<uint8_t, 1>{static_cast<uint8_t>(byte ? 0xD0 : 0xD1)}, w,
               static_cast<unsigned>(op), false, r);
  } else {
    emit_modrm(std::array<uint8_t, 1>{static_cast<uint8_t>(byte ? 0xC0 : 0xC1)}, w,
               static_cast<unsigned>(op), false, r, 1, count);
  }
}

void Assembler::imul(Reg dst, Reg src, Width w) {
  emit_modrm(std::array<uint8_t, 2>{0x0F, 0xAF}, w, hw(dst), true, src);
}

void Assembler::cmov(Cond c, Reg dst, Reg src, Width w) {
  emit_modrm(std::array<uint8_t, 2>{0x0F, static_cast<uint8_t>(0x40 | static_cast<uint8_t>(c))}, w,
             hw(dst), true, src);
}

void Assembler::setcc(Cond c, Reg dst) {
  emit_modrm(std::array<uint8_t, 2>{0x0F, static_cast<uint8_t>(0x90 | static_cast<uint8_t>(c))},
             Width::B, 0, false, dst);
}

void Assembler::emit_branch(std::span<const uint8_t> opcode, uint8_t size, int label,
                            std::optional<uint64_t> absolute) {
  for (uint8_t b : opcode) emit(b);
  const size_t at = code_.size();
  for (uint8_t i = 0; i < size; ++i) emit(0);
  fixups_.push_back(Fixup{at, code_.size(), size, label, absolute});
}

void Assembler::jmp(Label target, BranchWidth bw) {
  if (bw == BranchWidth::Rel8)
    emit_branch(std::array<uint8_t, 1>{0xEB}, 1, target.id, std::nullopt);
  else
    emit_branch(std::array<uint8_t, 1>{0xE9}, 4, target.id, std::nullopt);
}

void Assembler::jcc(Cond c, Label target, BranchWidth bw) {
  const auto cc = static_cast<uint8_t>(c);
  if (bw == BranchWidth::Rel8)
    emit_branch(std::array<uint8_t, 1>{static_cast<uint8_t>(0x70 | cc)}, 1, target.id, std::nullopt);
  else
    emit_branch(std::array<uint8_t, 2>{0x0F, static_cast<uint8_t>(0x80 | cc)}, 4, target.id, std::nullopt);
}

void Assembler::call(Label target) {
  emit_branch(std::array<uint8_t, 1>{0xE8}, 4, target.id, std::nullopt);
}

void Assembler::jmp_abs(uint64_t target, BranchWidth bw) {
  if (bw == BranchWidth::Rel8)
    emit_branch(std::array<uint8_t, 1>{0xEB}, 1, -1, target);
  else
    emit_branch(std::array<uint8_t, 1>{0xE9}, 4, -1, target);
}

void Assembler::jcc_abs(Cond c, uint64_t target, BranchWidth bw) {
  const auto cc = static_cast<uint8_t>(c);
  if (bw == BranchWidth::Rel8)
    emit_branch(std::array<uint8_t, 1>{static_cast<uint8_t>(0x70 | cc)}, 1, -1, target);
  else
    emit_branch(std::array<uint8_t, 2>{0x0F, static_cast<uint8_t>(0x80 | cc)}, 4, -1, target);
}

void Assembler::call_abs(uint64_t target) {
  emit_branch(std::array<uint8_t, 1>{0xE8}, 4, -1, target);
}

void Assembler::ret() { emit(0xC3); }

void Assembler::nop(unsigned len) {
  static constexpr std::array<std::array<uint8_t, 9>, 9> kNops{{
      {0x90},
      {0x66, 0x90},
      {0x0F, 0x1F, 0x00},
      {0x0F, 0x1F, 0x40, 0x00},
      {0x0F, 0x1F, 0x44, 0x00, 0x00},
      {0x66, 0x0F, 0x1F, 0x44, 0x00, 0x00},
      {0x0F, 0x1F, 0x80, 0x00, 0x00, 0x00, 0x00},
      {0x0F, 0x1F, 0x84, 0x00, 0x00, 0x00, 0x00, 0x00},
      {0x66, 0x0F, 0x1F, 0x84, 0x00, 0x00, 0x00, 0x00, 0x00},
  }};
  if (len == 0 || len > 9) throw Error(ErrorKind::InvalidArgument, "nop length must be 1..9");
  for (unsigned i = 0; i < len; ++i) emit(kNops[len - 1][i]);
}

void Assembler::endbr64() { raw(std::array<uint8_t, 4>{0xF3, 0x0F, 0x1E, 0xFA}); }

void Assembler::raw(std::span<const uint8_t> bytes) { code_.insert(code_.end(), bytes.begin(), bytes.end()); }

std::vector<uint8_t> Assembler::finish() {
  for (const Fixup& f : fixups_) {
    uint64_t target;
    if (f.absolute) {
      target = *f.absolute;
    } else {
      target = address_of(Label{f.label});
    }
    const int64_t disp = static_cast<int64_t>(target - (base_ + f.next_ip_offset));
    if (f.size == 1 && !fits8(disp))
      throw Error(ErrorKind::InvalidArgument, "rel8 branch out of range");
    if (f.size == 4 && (disp < INT32_MIN || disp > INT32_MAX))
      throw Error(ErrorKind::InvalidArgument, "rel32 branch out of range");
    for (uint8_t i = 0; i < f.size; ++i)
      code_[f.disp_offset + i] = static_cast<uint8_t>(static_cast<uint64_t>(disp) >> (8 * i));
  }
  return code_;
}

}  // namespace binvar
