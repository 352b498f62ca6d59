#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "binvar/error.hpp"
#include "binvar/instruction.hpp"
#include "binvar/regs.hpp"
#include "binvar/rng.hpp"

namespace binvar {

inline constexpr uint64_t kStackTop = 0x7ffd00000008ULL;
inline constexpr uint64_t kStackSize = 1 << 16;
/// Room above the initial rsp the program may pop into (return address, args).
inline constexpr uint64_t kStackSlack = 4096;
inline constexpr uint64_t kFsBase = 0x7f0000000000ULL;
inline constexpr uint64_t kGsBase = 0x7f1000000000ULL;

/// One memory store. External calls are logged as events too, keyed by the
/// call target, so that call order and arguments take part in comparisons.
struct MemWrite {
  uint64_t address = 0;
  Bytes bytes;
  bool external_call = false;
  bool operator==(const MemWrite&) const = default;
};

struct MachineState {
  std::array<uint64_t, kNumGprs> gpr{};
  FlagSet flags;      ///< flag values
  FlagSet undefined;  ///< flags whose value is architecturally undefined
  uint64_t rip = 0;
  uint64_t stack_top = kStackTop;
  uint64_t stack_size = kStackSize;
  std::vector<MemWrite> mem_writes;
  uint64_t steps = 0;

  uint64_t& reg(Reg r) { return gpr[hw(r)]; }
  uint64_t reg(Reg r) const { return gpr[hw(r)]; }
  bool flag(Flag f) const { return flags.contains(f); }
  void set_flag(Flag f, bool v) {
    if (v)
      flags.insert(f);
    else
      flags.erase(f);
    undefined.erase(f);
  }
  /// RFLAGS image as pushfq would store it.
  uint64_t rflags() const;
  bool in_stack_window(uint64_t addr) const { return addr >= stack_top - stack_size && addr < stack_top; }
};

/// Random registers and flags, rsp at the stack top.
MachineState random_state(Rng& rng);

struct MemoryRegion {
  uint64_t vaddr = 0;
  Bytes bytes;
};

/// Loadable segments of an image, for rip-relative reads.
class BinaryImage;
std::vector<MemoryRegion> snapshot_of(const BinaryImage& image);

struct EmuConfig {
  uint64_t max_steps = 200000;
  /// Seeds the content of memory that was never written.
  uint64_t salt = 0;
  std::span<const MemoryRegion> snapshot;
  bool trace = false;
};

struct RunResult {
  MachineState state;
  std::vector<uint64_t> trace;  ///< executed instruction addresses when tracing
};

/// Code placed at `base`; execution starts at base + entry and ends at a ret
/// from depth 0. Calls and jumps leaving the buffer are summarised: caller-saved
/// registers receive a hash of (target, arguments) and flags become undefined.
RunResult run(std::span<const uint8_t> code, uint64_t base, uint64_t entry, const MachineState& initial,
              const EmuConfig& config = {});

/// Decode one instruction of the supported subset; returns its length or
/// throws TrapUnsupported. Used to check the subset statically.
size_t supported_length(std::span<const uint8_t> code);

struct Program {
  std::span<const uint8_t> code;
  uint64_t base = 0x401000;
  uint64_t entry = 0;
};

struct EquivalenceOptions {
  uint32_t trials = 100;
  FlagSet flag_mask = FlagSet::all();
  RegSet reg_mask = RegSet::all();
  uint64_t max_steps = 200000;
  std::span<const MemoryRegion> snapshot;
};

struct Counterexample {
  uint32_t trial = 0;
  std::string cause;
  MachineState initial;
};

struct EquivalenceResult {
  bool equivalent = true;
  uint32_t trials_run = 0;
  std::optional<Counterexample> counterexample;
  explicit operator bool() const { return equivalent; }
};

/// Run both programs from identical random states. Equal means: registers in
/// reg_mask, defined flags in flag_mask, and the log of memory writes outside
/// the stack window below the initial rsp.
EquivalenceResult equivalent(const Program& a, const Program& b, const EquivalenceOptions& options, Rng& rng);

/// First difference between two final states, or empty when equal.
std::string compare_states(const MachineState& a, const MachineState& b, RegSet reg_mask, FlagSet flag_mask);

}  // namespace binvar
