#include "binvar/emulator.hpp"

#include <cstring>
#include <sstream>

#include "binvar/image.hpp"

namespace binvar {

namespace {

enum class Op : uint8_t {
  Alu, Test, Not, Neg, Inc, Dec, Mov, MovImm, Lea, Xchg, Push, PushImm, Pop, Pushf, Popf, Nop,
  Jmp, Jcc, Call, Ret, JmpInd, CallInd, Movzx, Movsx, Shift, Imul, Setcc, Cmov, SignExtA, SignSplit,
  Leave,
};

enum AluKind : uint8_t { kAdd, kOr, kAdc, kSbb, kAnd, kSub, kXor, kCmp };

struct Rm {
  bool is_reg = true;
  uint8_t reg = 0;
  bool high = false;  // ah/ch/dh/bh
  int8_t base = -1;
  int8_t index = -1;
  uint8_t scale = 1;
  int64_t disp = 0;
  bool rip = false;
  uint64_t seg_base = 0;
};

struct Decoded {
  uint64_t address = 0;
  uint8_t length = 0;
  Op op = Op::Nop;
  uint8_t sub = 0;     // alu kind, shift kind, condition code
  uint8_t width = 4;   // operand width in bytes
  uint8_t src_width = 0;
  Rm rm;
  uint8_t reg = 0;     // ModRM.reg operand (or opcode register)
  bool reg_high = false;
  bool to_reg = false;  // direction: rm -> reg
  bool has_imm = false;
  int64_t imm = 0;
  uint8_t shift_src = 0;  // 0 imm, 1 one, 2 cl
  uint64_t target = 0;
};

[[noreturn]] void trap(uint64_t addr, std::span<const uint8_t> bytes, const char* why) {
  std::ostringstream os;
  os << "at 0x" << std::hex << addr << " bytes " << to_hex(bytes.first(std::min<size_t>(bytes.size(), 15)))
     << " (" << why << ")";
  throw Error(ErrorKind::TrapUnsupported, os.str());
}

class Reader {
 public:
  Reader(std::span<const uint8_t> code, uint64_t addr) : code_(code), addr_(addr) {}
  uint8_t u8() {
    if (pos_ >= code_.size() || pos_ >= 15) trap(addr_, code_, "truncated");
    return code_[pos_++];
  }
  int64_t sx(unsigned n) {
    uint64_t v = 0;
    for (unsigned i = 0; i < n; ++i) v |= uint64_t{u8()} << (8 * i);
    if (n < 8 && (v >> (8 * n - 1)) & 1) v |= ~uint64_t{0} << (8 * n);
    return static_cast<int64_t>(v);
  }
  uint8_t peek() const { return pos_ < code_.size() ? code_[pos_] : 0; }
  size_t pos() const { return pos_; }
  [[noreturn]] void fail(const char* why) const { trap(addr_, code_, why); }

 private:
  std::span<const uint8_t> code_;
  uint64_t addr_;
  size_t pos_ = 0;
};

struct Prefixes {
  bool opsize = false;
  bool rep = false;
  uint8_t rex = 0;
  uint64_t seg_base = 0;
  bool w() const { return rex & 8; }
  bool r() const { return rex & 4; }
  bool x() const { return rex & 2; }
  bool b() const { return rex & 1; }
};

uint8_t op_width(const Prefixes& p) { return p.w() ? 8 : p.opsize ? 2 : 4; }

/// ModRM plus optional SIB and displacement. Returns the reg field (with REX.R).
uint8_t parse_modrm(Reader& rd, const Prefixes& p, Rm& rm, bool byte_regs) {
  const uint8_t m = rd.u8();
  const uint8_t mod = m >> 6, reg = (m >> 3) & 7, r = m & 7;
  rm = Rm{};
  rm.seg_base = p.seg_base;
  if (mod == 3) {
    rm.is_reg = true;
    rm.reg = static_cast<uint8_t>(r | (p.b() ? 8 : 0));
    if (byte_regs && !p.rex && r >= 4) {
      rm.reg = r - 4;
      rm.high = true;
    }
    return static_cast<uint8_t>(reg | (p.r() ? 8 : 0));
  }
  rm.is_reg = false;
  if (r == 4) {
    const uint8_t sib = rd.u8();
    const uint8_t ss = sib >> 6, idx = ((sib >> 3) & 7) | (p.x() ? 8 : 0), base = sib & 7;
    rm.scale = static_cast<uint8_t>(1 << ss);
    if (idx != 4) rm.index = static_cast<int8_t>(idx);
    if (base == 5 && mod == 0) {
      rm.disp = rd.sx(4);
    } else {
      rm.base = static_cast<int8_t>(base | (p.b() ? 8 : 0));
    }
  } else if (r == 5 && mod == 0) {
    rm.rip = true;
    rm.disp = rd.sx(4);
  } else {
    rm.base = static_cast<int8_t>(r | (p.b() ? 8 : 0));
  }
  if (mod == 1) rm.disp = rd.sx(1);
  if (mod == 2) rm.disp = rd.sx(4);
  return static_cast<uint8_t>(reg | (p.r() ? 8 : 0));
}

void set_reg_operand(Decoded& d, uint8_t reg, const Prefixes& p, bool byte_reg) {
  d.reg = reg;
  d.reg_high = false;
  if (byte_reg && !p.rex && reg >= 4 && reg < 8) {
    d.reg = reg - 4;
    d.reg_high = true;
  }
}

Decoded decode_subset(std::span<const uint8_t> code, uint64_t addr) {
  Reader rd(code, addr);
  Prefixes p;
  Decoded d;
  d.address = addr;

  uint8_t b;
  for (;;) {
    b = rd.u8();
    if (b == 0x66) p.opsize = true;
    else if (b == 0x2E || b == 0x3E || b == 0x26 || b == 0x36) {}
    else if (b == 0x64) p.seg_base = kFsBase;
    else if (b == 0x65) p.seg_base = kGsBase;
    else if (b == 0xF3) p.rep = true;
    else break;
  }
  if ((b & 0xF0) == 0x40) {
    p.rex = b;
    b = rd.u8();
  }
  // Only endbr64 and pause take an F3 prefix here.
  const auto rep_ok = [&](bool ok) {
    if (p.rep && !ok) rd.fail("unsupported rep prefix");
  };

  auto imm_for = [&](uint8_t width) { return rd.sx(width == 8 ? 4 : width); };

  if (b < 0x40 && (b & 7) < 6) {
    rep_ok(false);
    d.op = Op::Alu;
    d.sub = b >> 3;
    const uint8_t form = b & 7;
    const bool byte = (form & 1) == 0;
    d.width = byte ? 1 : op_width(p);
    if (form < 4) {
      const uint8_t reg = parse_modrm(rd, p, d.rm, byte);
      set_reg_operand(d, reg, p, byte);
      d.to_reg = form >= 2;
    } else {
      d.rm = Rm{};
      d.rm.reg = 0;
      d.has_imm = true;
      d.imm = imm_for(d.width);
    }
  } else if (b >= 0x50 && b <= 0x5F) {
    rep_ok(false);
    if (p.opsize) rd.fail("16-bit push/pop");
    d.op = b < 0x58 ? Op::Push : Op::Pop;
    d.width = 8;
    d.rm = Rm{};
    d.rm.reg = static_cast<uint8_t>((b & 7) | (p.b() ? 8 : 0));
  } else if (b == 0x63) {
    rep_ok(false);
    d.op = Op::Movsx;
    d.width = op_width(p);
    d.src_width = 4;
    d.reg = parse_modrm(rd, p, d.rm, false);
  } else if (b == 0x68 || b == 0x6A) {
    rep_ok(false);
    if (p.opsize) rd.fail("16-bit push");
    d.op = Op::PushImm;
    d.width = 8;
    d.imm = rd.sx(b == 0x68 ? 4 : 1);
  } else if (b == 0x69 || b == 0x6B) {
    rep_ok(false);
    d.op = Op::Imul;
    d.width = op_width(p);
    d.reg = parse_modrm(rd, p, d.rm, false);
    d.has_imm = true;
    d.imm = b == 0x69 ? imm_for(d.width) : rd.sx(1);
  } else if (b >= 0x70 && b <= 0x7F) {
    rep_ok(false);
    d.op = Op::Jcc;
    d.sub = b & 15;
    const int64_t rel = rd.sx(1);
    d.target = addr + rd.pos() + static_cast<uint64_t>(rel);
  } else if (b >= 0x80 && b <= 0x83 && b != 0x82) {
    rep_ok(false);
    const bool byte = b == 0x80;
    d.width = byte ? 1 : op_width(p);
    d.op = Op::Alu;
    d.sub = parse_modrm(rd, p, d.rm, byte) & 7;
    d.has_imm = true;
    d.imm = b == 0x81 ? imm_for(d.width) : rd.sx(1);
  } else if (b == 0x84 || b == 0x85 || b == 0x86 || b == 0x87 || (b >= 0x88 && b <= 0x8B)) {
    rep_ok(false);
    const bool byte = (b & 1) == 0;
    d.width = byte ? 1 : op_width(p);
    const uint8_t reg = parse_modrm(rd, p, d.rm, byte);
    set_reg_operand(d, reg, p, byte);
    if (b <= 0x85) d.op = Op::Test;
    else if (b <= 0x87) d.op = Op::Xchg;
    else {
      d.op = Op::Mov;
      d.to_reg = b >= 0x8A;
    }
  } else if (b == 0x8D) {
    rep_ok(false);
    d.op = Op::Lea;
    d.width = op_width(p);
    d.reg = parse_modrm(rd, p, d.rm, false);
    if (d.rm.is_reg) rd.fail("lea with register operand");
  } else if (b == 0x8F) {
    rep_ok(false);
    if (parse_modrm(rd, p, d.rm, false) & 7) rd.fail("8F extension");
    d.op = Op::Pop;
    d.width = 8;
  } else if (b == 0x90 && !p.b()) {
    d.op = Op::Nop;  // also pause with F3
  } else if (b >= 0x90 && b <= 0x97) {
    rep_ok(false);
    d.op = Op::Xchg;
    d.width = op_width(p);
    d.rm = Rm{};
    d.rm.reg = static_cast<uint8_t>((b & 7) | (p.b() ? 8 : 0));
    d.reg = 0;
  } else if (b == 0x98 || b == 0x99) {
    rep_ok(false);
    d.op = b == 0x98 ? Op::SignExtA : Op::SignSplit;
    d.width = op_width(p);
  } else if (b == 0x9C || b == 0x9D) {
    rep_ok(false);
    if (p.opsize) rd.fail("16-bit pushf/popf");
    d.op = b == 0x9C ? Op::Pushf : Op::Popf;
    d.width = 8;
  } else if (b == 0xA8 || b == 0xA9) {
    rep_ok(false);
    d.op = Op::Test;
    d.width = b == 0xA8 ? 1 : op_width(p);
    d.rm = Rm{};
    d.has_imm = true;
    d.imm = imm_for(d.width);
  } else if (b >= 0xB0 && b <= 0xBF) {
    rep_ok(false);
    d.op = Op::MovImm;
    const bool byte = b < 0xB8;
    d.width = byte ? 1 : op_width(p);
    d.rm = Rm{};
    const uint8_t reg = static_cast<uint8_t>((b & 7) | (p.b() ? 8 : 0));
    d.rm.reg = reg;
    if (byte && !p.rex && reg >= 4) {
      d.rm.reg = reg - 4;
      d.rm.high = true;
    }
    d.has_imm = true;
    d.imm = rd.sx(d.width);
  } else if (b == 0xC0 || b == 0xC1 || (b >= 0xD0 && b <= 0xD3)) {
    rep_ok(false);
    const bool byte = (b & 1) == 0;
    d.width = byte ? 1 : op_width(p);
    d.op = Op::Shift;
    d.sub = parse_modrm(rd, p, d.rm, byte) & 7;
    if (d.sub != 4 && d.sub != 5 && d.sub != 7 && d.sub != 6) rd.fail("rotate");
    if (d.sub == 6) d.sub = 4;
    if (b <= 0xC1) {
      d.shift_src = 0;
      d.imm = static_cast<uint8_t>(rd.u8());
    } else {
      d.shift_src = b <= 0xD1 ? 1 : 2;
    }
  } else if (b == 0xC2 || b == 0xC3) {
    d.op = Op::Ret;  // F3 C3 ("rep ret") is accepted
    if (b == 0xC2) rd.fail("ret imm16");
  } else if (b == 0xC6 || b == 0xC7) {
    rep_ok(false);
    const bool byte = b == 0xC6;
    d.width = byte ? 1 : op_width(p);
    if (parse_modrm(rd, p, d.rm, byte) & 7) rd.fail("C6/C7 extension");
    d.op = Op::MovImm;
    d.has_imm = true;
    d.imm = imm_for(d.width);
  } else if (b == 0xC9) {
    rep_ok(false);
    d.op = Op::Leave;
    d.width = 8;
  } else if (b == 0xE8 || b == 0xE9 || b == 0xEB) {
    rep_ok(false);
    d.op = b == 0xE8 ? Op::Call : Op::Jmp;
    const int64_t rel = rd.sx(b == 0xEB ? 1 : 4);
    d.target = addr + rd.pos() + static_cast<uint64_t>(rel);
  } else if (b == 0xF6 || b == 0xF7) {
    rep_ok(false);
    const bool byte = b == 0xF6;
    d.width = byte ? 1 : op_width(p);
    const uint8_t ext = parse_modrm(rd, p, d.rm, byte) & 7;
    switch (ext) {
      case 0:
      case 1:
        d.op = Op::Test;
        d.has_imm = true;
        d.imm = imm_for(d.width);
        break;
      case 2: d.op = Op::Not; break;
      case 3: d.op = Op::Neg; break;
      default: rd.fail("mul/div");
    }
  } else if (b == 0xFE || b == 0xFF) {
    rep_ok(false);
    const bool byte = b == 0xFE;
    d.width = byte ? 1 : op_width(p);
    const uint8_t ext = parse_modrm(rd, p, d.rm, byte) & 7;
    if (ext == 0) d.op = Op::Inc;
    else if (ext == 1) d.op = Op::Dec;
    else if (byte) rd.fail("FE extension");
    else if (ext == 2) { d.op = Op::CallInd; d.width = 8; }
    else if (ext == 4) { d.op = Op::JmpInd; d.width = 8; }
    else if (ext == 6) { d.op = Op::Push; d.width = 8; }
    else rd.fail("FF extension");
  } else if (b == 0x0F) {
    const uint8_t b2 = rd.u8();
    if (b2 == 0x1E && p.rep) {
      if (rd.u8() != 0xFA) rd.fail("0F 1E");
      d.op = Op::Nop;  // endbr64
    } else if (b2 == 0x1F) {
      rep_ok(false);
      parse_modrm(rd, p, d.rm, false);
      d.op = Op::Nop;
    } else if (b2 >= 0x40 && b2 <= 0x4F) {
      rep_ok(false);
      d.op = Op::Cmov;
      d.sub = b2 & 15;
      d.width = op_width(p);
      d.reg = parse_modrm(rd, p, d.rm, false);
    } else if (b2 >= 0x80 && b2 <= 0x8F) {
      rep_ok(false);
      d.op = Op::Jcc;
      d.sub = b2 & 15;
      const int64_t rel = rd.sx(4);
      d.target = addr + rd.pos() + static_cast<uint64_t>(rel);
    } else if (b2 >= 0x90 && b2 <= 0x9F) {
      rep_ok(false);
      d.op = Op::Setcc;
      d.sub = b2 & 15;
      d.width = 1;
      parse_modrm(rd, p, d.rm, true);
    } else if (b2 == 0xAF) {
      rep_ok(false);
      d.op = Op::Imul;
      d.width = op_width(p);
      d.reg = parse_modrm(rd, p, d.rm, false);
    } else if (b2 == 0xB6 || b2 == 0xB7 || b2 == 0xBE || b2 == 0xBF) {
      rep_ok(false);
      d.op = b2 <= 0xB7 ? Op::Movzx : Op::Movsx;
      d.width = op_width(p);
      d.src_width = (b2 & 1) ? 2 : 1;
      d.reg = parse_modrm(rd, p, d.rm, d.src_width == 1);
    } else {
      rd.fail("unsupported 0F opcode");
    }
  } else {
    rd.fail("unsupported opcode");
  }
  d.length = static_cast<uint8_t>(rd.pos());
  return d;
}

uint64_t mask_of(unsigned width) { return width >= 8 ? ~uint64_t{0} : (uint64_t{1} << (8 * width)) - 1; }
uint64_t sign_bit(unsigned width) { return uint64_t{1} << (8 * width - 1); }
int64_t sext(uint64_t v, unsigned width) {
  if (width >= 8) return static_cast<int64_t>(v);
  v &= mask_of(width);
  if (v & sign_bit(width)) v |= ~mask_of(width);
  return static_cast<int64_t>(v);
}
bool even_parity(uint64_t v) { return (std::popcount(static_cast<unsigned>(v & 0xFF)) & 1) == 0; }

class Machine {
 public:
  Machine(std::span<const uint8_t> code, uint64_t base, const MachineState& init, const EmuConfig& cfg)
      : code_(code), base_(base), s_(init), cfg_(cfg) {}

  RunResult execute(uint64_t entry) {
    s_.rip = base_ + entry;
    RunResult out;
    for (;;) {
      if (s_.steps >= cfg_.max_steps) throw Error(ErrorKind::StepLimit, "step limit reached");
      if (s_.rip < base_ || s_.rip >= base_ + code_.size()) {
        std::ostringstream os;
        os << "execution left the code buffer at 0x" << std::hex << s_.rip;
        throw Error(ErrorKind::TrapUnsupported, os.str());
      }
      const auto rest = code_.subspan(s_.rip - base_);
      const Decoded d = decode_subset(rest, s_.rip);
      if (cfg_.trace) out.trace.push_back(s_.rip);
      ++s_.steps;
      if (!step(d)) break;
    }
    out.state = std::move(s_);
    return out;
  }

 private:
  std::span<const uint8_t> code_;
  uint64_t base_;
  MachineState s_;
  const EmuConfig& cfg_;
  std::unordered_map<uint64_t, uint8_t> mem_;
  int depth_ = 0;

  bool in_buffer(uint64_t a) const { return a >= base_ && a < base_ + code_.size(); }

  // Memory.
  uint8_t read_byte(uint64_t a) const {
    if (auto it = mem_.find(a); it != mem_.end()) return it->second;
    for (const MemoryRegion& r : cfg_.snapshot)
      if (a >= r.vaddr && a - r.vaddr < r.bytes.size()) return r.bytes[a - r.vaddr];
    return static_cast<uint8_t>(Rng::mix(a, cfg_.salt) >> 56);
  }
  uint64_t load(uint64_t a, unsigned width) const {
    uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v |= uint64_t{read_byte(a + i)} << (8 * i);
    return v;
  }
  void store(uint64_t a, uint64_t v, unsigned width) {
    MemWrite w{a, {}, false};
    for (unsigned i = 0; i < width; ++i) {
      const auto byte = static_cast<uint8_t>(v >> (8 * i));
      mem_[a + i] = byte;
      w.bytes.push_back(byte);
    }
    s_.mem_writes.push_back(std::move(w));
  }

  void check_stack() const {
    const uint64_t rsp = s_.reg(Reg::Rsp);
    if (rsp < s_.stack_top - s_.stack_size || rsp > s_.stack_top + kStackSlack)
      throw Error(ErrorKind::StackOverflow, "rsp left the stack window");
  }
  void push(uint64_t v) {
    s_.reg(Reg::Rsp) -= 8;
    check_stack();
    store(s_.reg(Reg::Rsp), v, 8);
  }
  uint64_t pop() {
    const uint64_t v = load(s_.reg(Reg::Rsp), 8);
    s_.reg(Reg::Rsp) += 8;
    check_stack();
    return v;
  }

  // Operands.
  uint64_t get_reg(uint8_t r, bool high, unsigned width) const {
    if (high) return (s_.gpr[r] >> 8) & 0xFF;
    return s_.gpr[r] & mask_of(width);
  }
  void set_reg(uint8_t r, bool high, unsigned width, uint64_t v) {
    uint64_t& dst = s_.gpr[r];
    if (high)
      dst = (dst & ~uint64_t{0xFF00}) | ((v & 0xFF) << 8);
    else if (width >= 4)
      dst = v & mask_of(width);  // 32-bit writes zero-extend
    else
      dst = (dst & ~mask_of(width)) | (v & mask_of(width));
  }
  uint64_t effective(const Decoded& d) const {
    const Rm& m = d.rm;
    uint64_t a = static_cast<uint64_t>(m.disp);
    if (m.rip) a += d.address + d.length;
    if (m.base >= 0) a += s_.gpr[m.base];
    if (m.index >= 0) a += s_.gpr[m.index] * m.scale;
    return a + m.seg_base;
  }
  uint64_t get_rm(const Decoded& d, unsigned width) const {
    if (d.rm.is_reg) return get_reg(d.rm.reg, d.rm.high, width);
    return load(effective(d), width);
  }
  void set_rm(const Decoded& d, unsigned width, uint64_t v) {
    if (d.rm.is_reg)
      set_reg(d.rm.reg, d.rm.high, width, v);
    else
      store(effective(d), v & mask_of(width), width);
  }

  // Flags.
  void set_szp(uint64_t res, unsigned width) {
    res &= mask_of(width);
    s_.set_flag(Flag::ZF, res == 0);
    s_.set_flag(Flag::SF, (res & sign_bit(width)) != 0);
    s_.set_flag(Flag::PF, even_parity(res));
  }
  void undefine(Flag f) {
    s_.flags.erase(f);
    s_.undefined.insert(f);
  }
  uint64_t add_flags(uint64_t a, uint64_t b, bool carry_in, unsigned width, bool set_cf = true) {
    const uint64_t m = mask_of(width);
    a &= m;
    b &= m;
    const unsigned __int128 wide = static_cast<unsigned __int128>(a) + b + (carry_in ? 1 : 0);
    const uint64_t res = static_cast<uint64_t>(wide) & m;
    if (set_cf) s_.set_flag(Flag::CF, (wide >> (8 * width)) != 0);
    s_.set_flag(Flag::OF, ((a ^ res) & (b ^ res) & sign_bit(width)) != 0);
    s_.set_flag(Flag::AF, ((a ^ b ^ res) & 0x10) != 0);
    set_szp(res, width);
    return res;
  }
  uint64_t sub_flags(uint64_t a, uint64_t b, bool borrow_in, unsigned width, bool set_cf = true) {
    const uint64_t m = mask_of(width);
    a &= m;
    b &= m;
    const unsigned __int128 need = static_cast<unsigned __int128>(b) + (borrow_in ? 1 : 0);
    const uint64_t res = (a - b - (borrow_in ? 1 : 0)) & m;
    if (set_cf) s_.set_flag(Flag::CF, static_cast<unsigned __int128>(a) < need);
    s_.set_flag(Flag::OF, ((a ^ b) & (a ^ res) & sign_bit(width)) != 0);
    s_.set_flag(Flag::AF, ((a ^ b ^ res) & 0x10) != 0);
    set_szp(res, width);
    return res;
  }
  void logic_flags(uint64_t res, unsigned width) {
    s_.set_flag(Flag::CF, false);
    s_.set_flag(Flag::OF, false);
    undefine(Flag::AF);
    set_szp(res, width);
  }
  bool cond(uint8_t cc) const {
    const auto f = [&](Flag x) { return s_.flag(x); };
    bool r = false;
    switch (cc >> 1) {
      case 0: r = f(Flag::OF); break;
      case 1: r = f(Flag::CF); break;
      case 2: r = f(Flag::ZF); break;
      case 3: r = f(Flag::CF) || f(Flag::ZF); break;
      case 4: r = f(Flag::SF); break;
      case 5: r = f(Flag::PF); break;
      case 6: r = f(Flag::SF) != f(Flag::OF); break;
      case 7: r = f(Flag::ZF) || (f(Flag::SF) != f(Flag::OF)); break;
    }
    return (cc & 1) ? !r : r;
  }

  uint64_t alu(uint8_t kind, uint64_t a, uint64_t b, unsigned width) {
    switch (kind) {
      case kAdd: return add_flags(a, b, false, width);
      case kAdc: return add_flags(a, b, s_.flag(Flag::CF), width);
      case kSub:
      case kCmp: return sub_flags(a, b, false, width);
      case kSbb: return sub_flags(a, b, s_.flag(Flag::CF), width);
      case kOr: a |= b; break;
      case kAnd: a &= b; break;
      case kXor: a ^= b; break;
    }
    logic_flags(a, width);
    return a & mask_of(width);
  }

  /// Call or jump leaving the buffer: deterministic summary of the callee.
  void external_call(uint64_t target) {
    uint64_t h = Rng::mix(target, cfg_.salt);
    for (Reg r : {Reg::Rdi, Reg::Rsi, Reg::Rdx, Reg::Rcx, Reg::R8, Reg::R9, Reg::Rax}) h = Rng::mix(h, s_.reg(r));
    MemWrite ev{target, {}, true};
    for (int i = 0; i < 8; ++i) ev.bytes.push_back(static_cast<uint8_t>(h >> (8 * i)));
    s_.mem_writes.push_back(std::move(ev));
    uint64_t k = 0;
    for (Reg r : abi::kCallerSaved.items()) s_.reg(r) = Rng::mix(h, ++k);
    for (Flag f : FlagSet::all().items()) undefine(f);
  }

  bool do_ret() {
    const uint64_t to = pop();
    if (depth_ == 0) {
      s_.rip = to;
      return false;
    }
    --depth_;
    s_.rip = to;
    return true;
  }

  bool branch_to(uint64_t target) {
    if (in_buffer(target)) {
      s_.rip = target;
      return true;
    }
    external_call(target);  // tail call
    return do_ret();
  }

  bool call_to(uint64_t target, uint64_t next) {
    if (in_buffer(target)) {
      push(next);
      ++depth_;
      s_.rip = target;
    } else {
      external_call(target);
      s_.rip = next;
    }
    return true;
  }

  bool step(const Decoded& d) {
    const uint64_t next = d.address + d.length;
    const unsigned w = d.width;
    s_.rip = next;
    switch (d.op) {
      case Op::Nop: break;
      case Op::Alu: {
        uint64_t a, b;
        if (d.has_imm) {
          a = get_rm(d, w);
          b = static_cast<uint64_t>(d.imm);
        } else if (d.to_reg) {
          a = get_reg(d.reg, d.reg_high, w);
          b = get_rm(d, w);
        } else {
          a = get_rm(d, w);
          b = get_reg(d.reg, d.reg_high, w);
        }
        const uint64_t res = alu(d.sub, a, b, w);
        if (d.sub != kCmp) {
          if (d.to_reg && !d.has_imm)
            set_reg(d.reg, d.reg_high, w, res);
          else
            set_rm(d, w, res);
        }
        break;
      }
      case Op::Test: {
        const uint64_t a = get_rm(d, w);
        const uint64_t b = d.has_imm ? static_cast<uint64_t>(d.imm) : get_reg(d.reg, d.reg_high, w);
        logic_flags(a & b & mask_of(w), w);
        break;
      }
      case Op::Not: set_rm(d, w, ~get_rm(d, w)); break;
      case Op::Neg: {
        const uint64_t a = get_rm(d, w);
        const uint64_t res = sub_flags(0, a, false, w);
        s_.set_flag(Flag::CF, (a & mask_of(w)) != 0);
        set_rm(d, w, res);
        break;
      }
      case Op::Inc: set_rm(d, w, add_flags(get_rm(d, w), 1, false, w, false)); break;
      case Op::Dec: set_rm(d, w, sub_flags(get_rm(d, w), 1, false, w, false)); break;
      case Op::Mov:
        if (d.to_reg)
          set_reg(d.reg, d.reg_high, w, get_rm(d, w));
        else
          set_rm(d, w, get_reg(d.reg, d.reg_high, w));
        break;
      case Op::MovImm: set_rm(d, w, static_cast<uint64_t>(d.imm)); break;
      case Op::Lea: {
        const uint64_t ea = effective(d) - d.rm.seg_base;
        set_reg(d.reg, false, w, ea);
        break;
      }
      case Op::Xchg: {
        const uint64_t a = get_rm(d, w);
        const uint64_t b = get_reg(d.reg, d.reg_high, w);
        set_rm(d, w, b);
        set_reg(d.reg, d.reg_high, w, a);
        break;
      }
      case Op::Push: push(get_rm(d, 8)); break;
      case Op::PushImm: push(static_cast<uint64_t>(d.imm)); break;
      case Op::Pop: {
        const uint64_t v = pop();
        // pop [rsp+x] addresses with the incremented rsp.
        set_rm(d, 8, v);
        break;
      }
      case Op::Pushf: push(s_.rflags()); break;
      case Op::Popf: {
        const uint64_t v = pop();
        for (Flag f : FlagSet::all().items()) s_.set_flag(f, (v >> rflags_bit(f)) & 1);
        break;
      }
      case Op::Jmp: return branch_to(d.target);
      case Op::Jcc:
        if (cond(d.sub)) return branch_to(d.target);
        break;
      case Op::JmpInd: return branch_to(get_rm(d, 8));
      case Op::Call: return call_to(d.target, next);
      case Op::CallInd: return call_to(get_rm(d, 8), next);
      case Op::Ret: return do_ret();
      case Op::Movzx: set_reg(d.reg, false, w, get_rm(d, d.src_width)); break;
      case Op::Movsx:
        set_reg(d.reg, false, w, static_cast<uint64_t>(sext(get_rm(d, d.src_width), d.src_width)));
        break;
      case Op::Shift: {
        const unsigned bits = 8 * w;
        unsigned count = d.shift_src == 0 ? static_cast<unsigned>(d.imm) : d.shift_src == 1 ? 1 : s_.gpr[1] & 0xFF;
        count &= w == 8 ? 63 : 31;
        if (count == 0) break;
        const uint64_t a = get_rm(d, w);
        uint64_t res;
        bool cf;
        if (d.sub == 4) {
          res = count >= bits ? 0 : (a << count) & mask_of(w);
          cf = count <= bits ? (a >> (bits - count)) & 1 : false;
          s_.set_flag(Flag::OF, ((res & sign_bit(w)) != 0) != cf);
        } else if (d.sub == 5) {
          res = count >= bits ? 0 : a >> count;
          cf = count <= bits ? (a >> (count - 1)) & 1 : false;
          s_.set_flag(Flag::OF, (a & sign_bit(w)) != 0);
        } else {
          const int64_t sa = sext(a, w);
          res = static_cast<uint64_t>(sa >> std::min(count, bits - 1)) & mask_of(w);
          cf = (static_cast<uint64_t>(sa >> std::min(count - 1, bits - 1))) & 1;
          s_.set_flag(Flag::OF, false);
        }
        s_.set_flag(Flag::CF, cf);
        if (count > bits) undefine(Flag::CF);
        if (count != 1) undefine(Flag::OF);
        set_szp(res, w);
        undefine(Flag::AF);
        set_rm(d, w, res);
        break;
      }
      case Op::Imul: {
        const int64_t a = d.has_imm ? sext(get_rm(d, w), w) : sext(get_reg(d.reg, false, w), w);
        const int64_t b = d.has_imm ? d.imm : sext(get_rm(d, w), w);
        const __int128 full = static_cast<__int128>(a) * b;
        const uint64_t res = static_cast<uint64_t>(full) & mask_of(w);
        const bool overflow = static_cast<__int128>(sext(res, w)) != full;
        s_.set_flag(Flag::CF, overflow);
        s_.set_flag(Flag::OF, overflow);
        set_szp(res, w);
        for (Flag f : {Flag::SF, Flag::ZF, Flag::AF, Flag::PF}) undefine(f);
        set_reg(d.reg, false, w, res);
        break;
      }
      case Op::Setcc: set_rm(d, 1, cond(d.sub) ? 1 : 0); break;
      case Op::Cmov: {
        const uint64_t v = get_rm(d, w);  // the source is read regardless
        if (cond(d.sub))
          set_reg(d.reg, false, w, v);
        else if (w == 4)
          set_reg(d.reg, false, 4, get_reg(d.reg, false, 4));
        break;
      }
      case Op::SignExtA: {
        const unsigned half = w / 2;
        set_reg(0, false, w, static_cast<uint64_t>(sext(get_reg(0, false, half), half)));
        break;
      }
      case Op::SignSplit: {
        const bool neg = (get_reg(0, false, w) & sign_bit(w)) != 0;
        set_reg(2, false, w, neg ? ~uint64_t{0} : 0);
        break;
      }
      case Op::Leave:
        s_.reg(Reg::Rsp) = s_.reg(Reg::Rbp);
        check_stack();
        s_.reg(Reg::Rbp) = pop();
        break;
    }
    return true;
  }
};

}  // namespace

uint64_t MachineState::rflags() const {
  uint64_t v = 0x202;
  for (Flag f : flags.items()) v |= uint64_t{1} << rflags_bit(f);
  return v;
}

MachineState random_state(Rng& rng) {
  MachineState s;
  for (auto& r : s.gpr) r = rng.next();
  s.reg(Reg::Rsp) = kStackTop;
  s.flags = FlagSet::from_bits(static_cast<uint8_t>(rng.next()));
  return s;
}

std::vector<MemoryRegion> snapshot_of(const BinaryImage& image) {
  std::vector<MemoryRegion> out;
  for (const Segment& seg : image.segments) {
    if (seg.type != 1 /* PT_LOAD */ || seg.offset + seg.filesz > image.raw.size()) continue;
    MemoryRegion r;
    r.vaddr = seg.vaddr;
    r.bytes.assign(image.raw.begin() + static_cast<std::ptrdiff_t>(seg.offset),
                   image.raw.begin() + static_cast<std::ptrdiff_t>(seg.offset + seg.filesz));
    r.bytes.resize(seg.memsz, 0);
    out.push_back(std::move(r));
  }
  return out;
}

RunResult run(std::span<const uint8_t> code, uint64_t base, uint64_t entry, const MachineState& initial,
              const EmuConfig& config) {
  Machine m(code, base, initial, config);
  return m.execute(entry);
}

size_t supported_length(std::span<const uint8_t> code) { return decode_subset(code, 0).length; }

std::string compare_states(const MachineState& a, const MachineState& b, RegSet reg_mask, FlagSet flag_mask) {
  std::ostringstream os;
  for (Reg r : reg_mask.items()) {
    if (a.reg(r) != b.reg(r)) {
      os << reg_name(r) << ": 0x" << std::hex << a.reg(r) << " vs 0x" << b.reg(r);
      return os.str();
    }
  }
  const FlagSet comparable = flag_mask - a.undefined - b.undefined;
  for (Flag f : comparable.items())
    if (a.flag(f) != b.flag(f)) return std::string(flag_name(f)) + " differs";
  auto visible = [](const MachineState& s) {
    std::vector<const MemWrite*> out;
    for (const MemWrite& w : s.mem_writes)
      if (w.external_call || !s.in_stack_window(w.address)) out.push_back(&w);
    return out;
  };
  const auto wa = visible(a), wb = visible(b);
  if (wa.size() != wb.size()) {
    os << "memory write count " << wa.size() << " vs " << wb.size();
    return os.str();
  }
  for (size_t i = 0; i < wa.size(); ++i) {
    if (!(*wa[i] == *wb[i])) {
      os << "memory write " << i << " at 0x" << std::hex << wa[i]->address << " vs 0x" << wb[i]->address;
      return os.str();
    }
  }
  return {};
}

EquivalenceResult equivalent(const Program& a, const Program& b, const EquivalenceOptions& options, Rng& rng) {
  EquivalenceResult res;
  for (uint32_t t = 0; t < options.trials; ++t) {
    const MachineState init = random_state(rng);
    EmuConfig cfg;
    cfg.max_steps = options.max_steps;
    cfg.salt = rng.next();
    cfg.snapshot = options.snapshot;
    ++res.trials_run;
    std::string cause;
    try {
      const RunResult ra = run(a.code, a.base, a.entry, init, cfg);
      try {
        const RunResult rb = run(b.code, b.base, b.entry, init, cfg);
        cause = compare_states(ra.state, rb.state, options.reg_mask, options.flag_mask);
      } catch (const Error& e) {
        cause = std::string("second program: ") + e.what();
      }
    } catch (const Error& e) {
      cause = std::string("first program: ") + e.what();
    }
    if (!cause.empty()) {
      res.equivalent = false;
      res.counterexample = Counterexample{t + 1, cause, init};
      return res;
    }
  }
  return res;
}

}  // namespace binvar
