#include <capstone/capstone.h>

#include <array>
#include <cstdio>
#include <cstring>
#include <string_view>

#include "binvar/error.hpp"
#include "binvar/instruction.hpp"

namespace binvar {

namespace {

struct GprInfo {
  Reg reg;
  uint8_t width;
  bool high;
};

std::optional<GprInfo> gpr_info(std::string_view name) {
  static constexpr std::array<std::string_view, 4> kHigh{"ah", "ch", "dh", "bh"};
  for (size_t i = 0; i < kHigh.size(); ++i)
    if (name == kHigh[i]) return GprInfo{static_cast<Reg>(i), 1, true};
  for (int r = 0; r < kNumGprs; ++r)
    for (unsigned w : {1u, 2u, 4u, 8u})
      if (reg_name(static_cast<Reg>(r), w) == name)
        return GprInfo{static_cast<Reg>(r), static_cast<uint8_t>(w), false};
  return std::nullopt;
}

bool is_flag_register(std::string_view name) {
  return name == "rflags" || name == "eflags" || name == "flags" || name == "rip" || name == "eip" ||
         name == "ip";
}

bool is_legacy_prefix(uint8_t b) {
  switch (b) {
    case 0xF0: case 0xF2: case 0xF3: case 0x2E: case 0x36: case 0x3E:
    case 0x26: case 0x64: case 0x65: case 0x66: case 0x67:
      return true;
  }
  return false;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

void decode_eflags(uint64_t ef, FlagSet& read, FlagSet& written) {
  struct Map {
    Flag flag;
    uint64_t test, modify, reset, set, undef;
  };
  static constexpr std::array<Map, 6> kMap{{
      {Flag::CF, X86_EFLAGS_TEST_CF, X86_EFLAGS_MODIFY_CF, X86_EFLAGS_RESET_CF, X86_EFLAGS_SET_CF,
       X86_EFLAGS_UNDEFINED_CF},
      {Flag::PF, X86_EFLAGS_TEST_PF, X86_EFLAGS_MODIFY_PF, X86_EFLAGS_RESET_PF, X86_EFLAGS_SET_PF,
       X86_EFLAGS_UNDEFINED_PF},
      {Flag::AF, X86_EFLAGS_TEST_AF, X86_EFLAGS_MODIFY_AF, X86_EFLAGS_RESET_AF, X86_EFLAGS_SET_AF,
       X86_EFLAGS_UNDEFINED_AF},
      {Flag::ZF, X86_EFLAGS_TEST_ZF, X86_EFLAGS_MODIFY_ZF, X86_EFLAGS_RESET_ZF, X86_EFLAGS_SET_ZF,
       X86_EFLAGS_UNDEFINED_ZF},
      {Flag::SF, X86_EFLAGS_TEST_SF, X86_EFLAGS_MODIFY_SF, X86_EFLAGS_RESET_SF, X86_EFLAGS_SET_SF,
       X86_EFLAGS_UNDEFINED_SF},
      {Flag::OF, X86_EFLAGS_TEST_OF, X86_EFLAGS_MODIFY_OF, X86_EFLAGS_RESET_OF, X86_EFLAGS_SET_OF,
       X86_EFLAGS_UNDEFINED_OF},
  }};
  for (const Map& m : kMap) {
    if (ef & m.test) read.insert(m.flag);
    if (ef & (m.modify | m.reset | m.set | m.undef)) written.insert(m.flag);
  }
}

/// Flags consumed by a condition-code suffix (jcc/setcc/cmovcc).
std::optional<FlagSet> condition_flags(std::string_view cc) {
  if (cc == "o" || cc == "no") return FlagSet{Flag::OF};
  if (cc == "b" || cc == "ae" || cc == "c" || cc == "nc" || cc == "nae" || cc == "nb") return FlagSet{Flag::CF};
  if (cc == "e" || cc == "ne" || cc == "z" || cc == "nz") return FlagSet{Flag::ZF};
  if (cc == "be" || cc == "a" || cc == "na" || cc == "nbe") return FlagSet{Flag::CF, Flag::ZF};
  if (cc == "s" || cc == "ns") return FlagSet{Flag::SF};
  if (cc == "p" || cc == "np" || cc == "pe" || cc == "po") return FlagSet{Flag::PF};
  if (cc == "l" || cc == "ge" || cc == "nge" || cc == "nl") return FlagSet{Flag::SF, Flag::OF};
  if (cc == "le" || cc == "g" || cc == "ng" || cc == "nle") return FlagSet{Flag::ZF, Flag::SF, Flag::OF};
  return std::nullopt;
}

Encoding layout_of(const cs_insn& in) {
  Encoding e;
  const auto& x = in.detail->x86;
  size_t i = 0;
  while (i < in.size && is_legacy_prefix(in.bytes[i])) ++i;
  e.prefix_len = static_cast<uint8_t>(i);
  if (i < in.size && (in.bytes[i] & 0xF0) == 0x40) {
    e.has_rex = true;
    ++i;
  }
  e.opcode_offset = static_cast<uint8_t>(i);
  if (i < in.size) {
    const uint8_t b = in.bytes[i];
    if (b == 0xC4 || b == 0xC5 || b == 0x62 || (b == 0x8F && i + 1 < in.size && (in.bytes[i + 1] & 0x38) != 0)) {
      e.vex = true;
    } else if (b == 0x0F && i + 1 < in.size) {
      e.opcode_len = (in.bytes[i + 1] == 0x38 || in.bytes[i + 1] == 0x3A) ? 3 : 2;
    } else {
      e.opcode_len = 1;
    }
  }
  e.modrm_offset = x.encoding.modrm_offset;
  e.disp_offset = x.encoding.disp_offset;
  e.disp_size = x.encoding.disp_size;
  e.imm_offset = x.encoding.imm_offset;
  e.imm_size = x.encoding.imm_size;
  return e;
}

}  // namespace

bool Operand::operator==(const Operand& o) const {
  if (size != o.size || value.index() != o.value.index()) return false;
  if (auto* a = reg()) {
    auto* b = o.reg();
    return a->id == b->id;
  }
  if (auto* a = imm()) return *a == *o.imm();
  if (auto* a = target()) return *a == *o.target();
  auto* a = mem();
  auto* b = o.mem();
  return a->base == b->base && a->index == b->index && a->scale == b->scale && a->disp == b->disp &&
         a->rip_relative == b->rip_relative && a->has_segment == b->has_segment;
}

struct Decoder::Impl {
  csh handle = 0;
  cs_insn* scratch = nullptr;

  Instruction convert(const cs_insn& in) const;
};

Decoder::Decoder() : impl_(new Impl) {
  if (cs_open(CS_ARCH_X86, CS_MODE_64, &impl_->handle) != CS_ERR_OK) {
    delete impl_;
    throw Error(ErrorKind::InvalidArgument, "cannot initialise capstone");
  }
  cs_option(impl_->handle, CS_OPT_DETAIL, CS_OPT_ON);
  impl_->scratch = cs_malloc(impl_->handle);
}

Decoder::~Decoder() {
  cs_free(impl_->scratch, 1);
  cs_close(&impl_->handle);
  delete impl_;
}

Decoder& Decoder::thread_local_instance() {
  thread_local Decoder d;
  return d;
}

Instruction Decoder::Impl::convert(const cs_insn& in) const {
  Instruction out;
  out.address = in.address;
  out.bytes.assign(in.bytes, in.bytes + in.size);
  out.id = in.id;
  out.mnemonic = in.mnemonic;
  out.op_str = in.op_str;
  out.enc = layout_of(in);

  const cs_detail& d = *in.detail;
  const cs_x86& x = d.x86;

  auto has_group = [&](uint8_t g) {
    for (uint8_t i = 0; i < d.groups_count; ++i)
      if (d.groups[i] == g) return true;
    return false;
  };
  out.fpu = has_group(X86_GRP_FPU);
  const bool rel = has_group(X86_GRP_BRANCH_RELATIVE);
  const std::string_view mn = out.mnemonic;

  // Control flow.
  if (has_group(X86_GRP_JUMP)) {
    const bool has_imm = x.op_count > 0 && x.operands[0].type == X86_OP_IMM;
    if (mn == "jmp" || mn == "ljmp")
      out.flow = has_imm && rel ? Flow::Jump : Flow::IndirectJump;
    else
      out.flow = Flow::CondJump;
  } else if (has_group(X86_GRP_CALL)) {
    const bool has_imm = x.op_count > 0 && x.operands[0].type == X86_OP_IMM;
    out.flow = has_imm && rel ? Flow::Call : Flow::IndirectCall;
  } else if (has_group(X86_GRP_RET) || has_group(X86_GRP_IRET)) {
    out.flow = Flow::Return;
  } else if (mn == "ud2" || mn == "hlt" || mn == "int3" || mn == "ud1" || mn == "ud0") {
    out.flow = Flow::Trap;
  }
  if (rel && (out.flow == Flow::Jump || out.flow == Flow::CondJump || out.flow == Flow::Call)) {
    out.is_rel_branch = true;
    const uint8_t op = in.bytes[out.enc.opcode_offset];
    out.rel_width = (op == 0xE8 || op == 0xE9 || op == 0x0F) ? 32 : 8;
  }

  // Operands.
  for (uint8_t i = 0; i < x.op_count; ++i) {
    const cs_x86_op& op = x.operands[i];
    Operand o;
    o.size = op.size;
    o.read = (op.access & CS_AC_READ) != 0;
    o.written = (op.access & CS_AC_WRITE) != 0;
    switch (op.type) {
      case X86_OP_REG: {
        RegisterOperand r;
        r.id = op.reg;
        r.name = cs_reg_name(handle, op.reg);
        if (auto g = gpr_info(r.name)) {
          r.gpr = g->reg;
          r.width = g->width;
          r.high_byte = g->high;
          out.explicit_regs.insert(g->reg);
        } else {
          r.width = op.size;
        }
        o.value = r;
        break;
      }
      case X86_OP_IMM:
        if (out.is_rel_branch) {
          o.value = static_cast<uint64_t>(op.imm);
          out.branch_target = static_cast<uint64_t>(op.imm);
        } else {
          o.value = op.imm;
        }
        break;
      case X86_OP_MEM: {
        MemoryOperand m;
        if (op.mem.base == X86_REG_RIP) {
          m.rip_relative = true;
          out.rip_relative = true;
        } else if (op.mem.base != X86_REG_INVALID) {
          if (auto g = gpr_info(cs_reg_name(handle, op.mem.base))) {
            m.base = g->reg;
            out.explicit_regs.insert(g->reg);
          }
        }
        if (op.mem.index != X86_REG_INVALID) {
          if (auto g = gpr_info(cs_reg_name(handle, op.mem.index))) {
            m.index = g->reg;
            out.explicit_regs.insert(g->reg);
          }
        }
        m.scale = static_cast<uint8_t>(op.mem.scale);
        m.disp = op.mem.disp;
        m.has_segment = op.mem.segment != X86_REG_INVALID;
        o.value = m;
        const bool address_only = mn == "lea" || starts_with(mn, "nop") || starts_with(mn, "prefetch");
        if (!address_only) {
          if (op.access == 0) {
            out.reads_memory = out.writes_memory = true;
          } else {
            out.reads_memory |= o.read;
            out.writes_memory |= o.written;
          }
        }
        break;
      }
      default:
        break;
    }
    out.operands.push_back(std::move(o));
  }

  // Register reads and writes, normalised to 64-bit parents.
  cs_regs rd, wr;
  uint8_t nrd = 0, nwr = 0;
  bool other_state = out.fpu;
  if (cs_regs_access(handle, &in, rd, &nrd, wr, &nwr) == CS_ERR_OK) {
    for (uint8_t i = 0; i < nrd; ++i) {
      const std::string_view name = cs_reg_name(handle, rd[i]);
      if (auto g = gpr_info(name))
        out.regs_read.insert(g->reg);
      else if (!is_flag_register(name))
        other_state = true;
    }
    for (uint8_t i = 0; i < nwr; ++i) {
      const std::string_view name = cs_reg_name(handle, wr[i]);
      if (auto g = gpr_info(name)) {
        out.regs_written.insert(g->reg);
        if (g->width < 4) out.partial_writes.insert(g->reg);
      } else if (!is_flag_register(name)) {
        other_state = true;
      }
    }
  }
  // A full write elsewhere in the same instruction wins over a partial one.
  for (uint8_t i = 0; i < nwr; ++i) {
    if (auto g = gpr_info(cs_reg_name(handle, wr[i])); g && g->width >= 4) out.partial_writes.erase(g->reg);
  }

  // Dependency-breaking zero idioms do not read their operand.
  if ((mn == "xor" || mn == "sub") && x.op_count == 2 && x.operands[0].type == X86_OP_REG &&
      x.operands[1].type == X86_OP_REG && x.operands[0].reg == x.operands[1].reg) {
    if (auto g = gpr_info(cs_reg_name(handle, x.operands[0].reg)); g && g->width >= 4)
      out.regs_read.erase(g->reg);
  }

  // Flags.
  if (out.fpu) {
    if (starts_with(mn, "fcomi") || starts_with(mn, "fucomi"))
      out.flags_written = FlagSet::all();
    else if (starts_with(mn, "fcmov"))
      out.flags_read = FlagSet{Flag::CF, Flag::ZF, Flag::PF};
  } else {
    decode_eflags(x.eflags, out.flags_read, out.flags_written);
    // Condition-code consumers read exactly the flags of their condition.
    std::optional<FlagSet> cc;
    if (out.flow == Flow::CondJump && mn.size() > 1 && mn[0] == 'j')
      cc = condition_flags(mn.substr(1));
    else if (starts_with(mn, "set"))
      cc = condition_flags(mn.substr(3));
    else if (starts_with(mn, "cmov"))
      cc = condition_flags(mn.substr(4));
    if (cc) out.flags_read = *cc;
    if (starts_with(mn, "pushf")) out.flags_read = FlagSet::all();
    if (starts_with(mn, "popf")) out.flags_written = FlagSet::all();
  }

  // A move that may not happen passes the old destination through.
  if (starts_with(mn, "cmov") && !out.operands.empty()) {
    if (auto* r = out.operands[0].reg(); r && r->gpr) out.regs_read.insert(*r->gpr);
  }
  // Shifts by cl, or by an immediate that masks to zero, leave flags untouched
  // when the count is zero, so the incoming flags flow through.
  if ((mn == "shl" || mn == "sal" || mn == "shr" || mn == "sar" || mn == "rol" || mn == "ror" || mn == "rcl" ||
       mn == "rcr" || mn == "shld" || mn == "shrd") &&
      !out.operands.empty()) {
    const Operand& count = out.operands.back();
    const bool maybe_zero = count.reg() || (count.imm() && (*count.imm() & (out.operands[0].size == 8 ? 0x3F : 0x1F)) == 0);
    if (maybe_zero) out.flags_read |= out.flags_written;
  }

  // Implicit stack traffic.
  if (starts_with(mn, "push") || starts_with(mn, "pop") || mn == "leave" || mn == "enter" ||
      out.flow == Flow::Call || out.flow == Flow::IndirectCall || out.flow == Flow::Return)
    out.stack_op = true;

  // Calling convention at call sites.
  if (out.flow == Flow::Call) {
    out.regs_read |= abi::kArgs | RegSet{Reg::Rax, Reg::Rsp};
    out.regs_written |= abi::kCallerSaved | RegSet{Reg::Rsp};
    out.flags_written = FlagSet::all();
  } else if (out.flow == Flow::IndirectCall) {
    out.regs_read |= abi::kCallerSaved | RegSet{Reg::Rsp};
    out.regs_written |= abi::kCallerSaved | RegSet{Reg::Rsp};
    out.flags_written = FlagSet::all();
  }
  out.partial_writes &= out.regs_written;

  if (has_group(X86_GRP_INT) || has_group(X86_GRP_IRET) || has_group(X86_GRP_PRIVILEGE) ||
      mn == "syscall" || mn == "sysenter" || mn == "cpuid" || starts_with(mn, "rdtsc") || mn == "cld" ||
      mn == "std" || mn == "lfence" || mn == "mfence" || mn == "sfence" || mn == "xgetbv" ||
      starts_with(mn, "rdrand") || starts_with(mn, "rdseed") || x.prefix[0] == X86_PREFIX_LOCK)
    out.barrier = true;
  out.other_state = other_state;
  return out;
}

std::optional<Instruction> Decoder::decode_one(std::span<const uint8_t> code, uint64_t address) const {
  const uint8_t* p = code.data();
  size_t n = code.size();
  uint64_t addr = address;
  if (!cs_disasm_iter(impl_->handle, &p, &n, &addr, impl_->scratch)) return std::nullopt;
  return impl_->convert(*impl_->scratch);
}

std::vector<Instruction> Decoder::decode_all(std::span<const uint8_t> code, uint64_t address,
                                             size_t* gap_offset) const {
  std::vector<Instruction> out;
  const uint8_t* p = code.data();
  size_t n = code.size();
  uint64_t addr = address;
  while (n > 0 && cs_disasm_iter(impl_->handle, &p, &n, &addr, impl_->scratch))
    out.push_back(impl_->convert(*impl_->scratch));
  if (gap_offset) *gap_offset = code.size() - n;
  return out;
}

std::optional<Instruction> decode(std::span<const uint8_t> code, uint64_t address) {
  return Decoder::thread_local_instance().decode_one(code, address);
}

std::vector<Instruction> decode_all(std::span<const uint8_t> code, uint64_t address, size_t* gap_offset) {
  return Decoder::thread_local_instance().decode_all(code, address, gap_offset);
}

std::string to_hex(std::span<const uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

Bytes from_hex(std::string_view hex) {
  Bytes out;
  int nibble = -1;
  for (char c : hex) {
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else if (c == ' ' || c == ':' || c == '\n' || c == '\t')
      continue;
    else
      throw Error(ErrorKind::InvalidArgument, "invalid hex digit");
    if (nibble < 0) {
      nibble = v;
    } else {
      out.push_back(static_cast<uint8_t>(nibble << 4 | v));
      nibble = -1;
    }
  }
  if (nibble >= 0) throw Error(ErrorKind::InvalidArgument, "odd number of hex digits");
  return out;
}

}  // namespace binvar
