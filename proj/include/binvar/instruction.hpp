#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "binvar/regs.hpp"

namespace binvar {

using Bytes = std::vector<uint8_t>;

enum class OperandKind { Register, Immediate, Memory, RelTarget };

struct RegisterOperand {
  unsigned id = 0;           ///< backend register id
  std::optional<Reg> gpr;    ///< parent 64-bit register for general-purpose operands
  uint8_t width = 0;         ///< bytes
  bool high_byte = false;    ///< ah/ch/dh/bh
  std::string name;
};

struct MemoryOperand {
  std::optional<Reg> base;
  std::optional<Reg> index;
  uint8_t scale = 1;
  int64_t disp = 0;
  bool rip_relative = false;
  bool has_segment = false;
};

struct Operand {
  std::variant<RegisterOperand, int64_t, MemoryOperand, uint64_t> value;
  uint8_t size = 0;
  bool read = false;
  bool written = false;

  OperandKind kind() const { return static_cast<OperandKind>(value.index()); }
  const RegisterOperand* reg() const { return std::get_if<RegisterOperand>(&value); }
  const int64_t* imm() const { return std::get_if<int64_t>(&value); }
  const MemoryOperand* mem() const { return std::get_if<MemoryOperand>(&value); }
  const uint64_t* target() const { return std::get_if<uint64_t>(&value); }
  bool operator==(const Operand& o) const;
};

/// How an instruction affects control flow.
enum class Flow : uint8_t { None, Jump, CondJump, Call, Return, IndirectJump, IndirectCall, Trap };

/// Byte layout of a legacy-encoded instruction.
struct Encoding {
  uint8_t prefix_len = 0;     ///< legacy prefixes before REX/opcode
  bool has_rex = false;       ///< REX byte at offset prefix_len
  uint8_t opcode_offset = 0;
  uint8_t opcode_len = 0;
  uint8_t modrm_offset = 0;   ///< 0 when there is no ModRM byte
  uint8_t disp_offset = 0;
  uint8_t disp_size = 0;
  uint8_t imm_offset = 0;
  uint8_t imm_size = 0;
  bool vex = false;           ///< VEX/EVEX/XOP encoded
};

/// A decoded machine instruction. Register sets use 64-bit parents; call
/// sites carry System V read/clobber sets.
struct Instruction {
  uint64_t address = 0;
  Bytes bytes;
  unsigned id = 0;  ///< backend instruction id
  std::string mnemonic;
  std::string op_str;
  std::vector<Operand> operands;

  RegSet regs_read;
  RegSet regs_written;
  RegSet partial_writes;  ///< written at 8/16-bit width: merge, not kill
  RegSet explicit_regs;   ///< registers named by operands (incl. memory addressing)
  FlagSet flags_read;
  FlagSet flags_written;

  Flow flow = Flow::None;
  bool is_rel_branch = false;
  uint8_t rel_width = 0;  ///< 8 or 32 when is_rel_branch
  std::optional<uint64_t> branch_target;

  bool reads_memory = false;
  bool writes_memory = false;
  bool stack_op = false;      ///< implicit stack access (push/pop/call/ret/leave/pushf/popf)
  bool barrier = false;       ///< must not be reordered with anything
  bool rip_relative = false;  ///< has a rip-relative memory operand
  bool fpu = false;
  bool other_state = false;   ///< touches vector, x87 or segment state (not modelled)
  Encoding enc;

  size_t size() const { return bytes.size(); }
  uint64_t end() const { return address + bytes.size(); }
  bool is_control_transfer() const { return flow != Flow::None; }
  bool touches_memory() const { return reads_memory || writes_memory || stack_op; }
  /// Accesses state that is ordered rather than tracked by dependence.
  bool ordered() const { return touches_memory() || other_state; }
  RegSet implicit_regs() const { return (regs_read | regs_written) - explicit_regs; }
  /// Registers whose value this instruction depends on, including partial writes.
  RegSet uses() const { return regs_read | partial_writes; }
  /// Registers fully overwritten.
  RegSet kills() const { return regs_written - partial_writes; }
  std::string text() const { return op_str.empty() ? mnemonic : mnemonic + " " + op_str; }
};

/// Capstone-backed decoder adapter. One instance per thread.
class Decoder {
 public:
  Decoder();
  ~Decoder();
  Decoder(const Decoder&) = delete;
  Decoder& operator=(const Decoder&) = delete;

  std::optional<Instruction> decode_one(std::span<const uint8_t> code, uint64_t address) const;

  /// Linear sweep. Stops at the first undecodable byte; `gap_offset` receives
  /// its offset (or code.size() when everything decoded).
  std::vector<Instruction> decode_all(std::span<const uint8_t> code, uint64_t address,
                                      size_t* gap_offset = nullptr) const;

  static Decoder& thread_local_instance();

 private:
  struct Impl;
  Impl* impl_;
};

/// Decode helper using the thread-local decoder.
std::optional<Instruction> decode(std::span<const uint8_t> code, uint64_t address = 0);
std::vector<Instruction> decode_all(std::span<const uint8_t> code, uint64_t address = 0,
                                    size_t* gap_offset = nullptr);

std::string to_hex(std::span<const uint8_t> bytes);
Bytes from_hex(std::string_view hex);

}  // namespace binvar
