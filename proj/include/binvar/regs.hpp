#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binvar {

/// General-purpose registers in hardware encoding order.
enum class Reg : uint8_t {
  Rax, Rcx, Rdx, Rbx, Rsp, Rbp, Rsi, Rdi,
  R8, R9, R10, R11, R12, R13, R14, R15,
};
inline constexpr int kNumGprs = 16;

constexpr uint8_t hw(Reg r) { return static_cast<uint8_t>(r); }
constexpr Reg reg_from_hw(unsigned n) { return static_cast<Reg>(n & 15); }
constexpr bool needs_rex(Reg r) { return hw(r) >= 8; }

/// Name of `r` at the given operand width in bytes (1, 2, 4, 8).
std::string_view reg_name(Reg r, unsigned width = 8);
std::optional<Reg> parse_reg(std::string_view name);

/// Six arithmetic status flags, tracked individually.
enum class Flag : uint8_t { CF, PF, AF, ZF, SF, OF };
inline constexpr int kNumFlags = 6;
std::string_view flag_name(Flag f);
std::optional<Flag> parse_flag(std::string_view name);

/// Bit position of each flag inside RFLAGS.
constexpr unsigned rflags_bit(Flag f) {
  constexpr std::array<unsigned, 6> bits{0, 2, 4, 6, 7, 11};
  return bits[static_cast<unsigned>(f)];
}

template <typename E, typename Storage, int N>
class EnumSet {
 public:
  constexpr EnumSet() = default;
  constexpr EnumSet(std::initializer_list<E> items) {
    for (E e : items) insert(e);
  }
  static constexpr EnumSet from_bits(Storage b) {
    EnumSet s;
    s.bits_ = static_cast<Storage>(b & kAll);
    return s;
  }
  static constexpr EnumSet all() { return from_bits(kAll); }

  constexpr Storage bits() const { return bits_; }
  constexpr bool contains(E e) const { return (bits_ >> static_cast<unsigned>(e)) & 1U; }
  constexpr void insert(E e) { bits_ |= static_cast<Storage>(Storage{1} << static_cast<unsigned>(e)); }
  constexpr void erase(E e) { bits_ &= static_cast<Storage>(~(Storage{1} << static_cast<unsigned>(e))); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(static_cast<unsigned>(bits_)); }
  constexpr bool intersects(EnumSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(EnumSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr EnumSet operator|(EnumSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr EnumSet operator&(EnumSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr EnumSet operator-(EnumSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr EnumSet& operator|=(EnumSet o) { bits_ |= o.bits_; return *this; }
  constexpr EnumSet& operator&=(EnumSet o) { bits_ &= o.bits_; return *this; }
  constexpr EnumSet& operator-=(EnumSet o) { bits_ &= static_cast<Storage>(~o.bits_); return *this; }
  constexpr bool operator==(const EnumSet&) const = default;

  std::vector<E> items() const {
    std::vector<E> out;
    for (int i = 0; i < N; ++i)
      if ((bits_ >> i) & 1U) out.push_back(static_cast<E>(i));
    return out;
  }

 private:
  static constexpr Storage kAll = static_cast<Storage>((uint32_t{1} << N) - 1);
  Storage bits_ = 0;
};

using RegSet = EnumSet<Reg, uint16_t, kNumGprs>;
using FlagSet = EnumSet<Flag, uint8_t, kNumFlags>;

/// Registers and flags together: the lattice element of liveness analysis.
struct LiveSet {
  RegSet regs;
  FlagSet flags;

  LiveSet operator|(LiveSet o) const { return {regs | o.regs, flags | o.flags}; }
  LiveSet operator-(LiveSet o) const { return {regs - o.regs, flags - o.flags}; }
  LiveSet& operator|=(LiveSet o) { regs |= o.regs; flags |= o.flags; return *this; }
  bool operator==(const LiveSet&) const = default;
  bool subset_of(LiveSet o) const { return regs.subset_of(o.regs) && flags.subset_of(o.flags); }
};

std::string to_string(RegSet s);
std::string to_string(FlagSet s);

/// System V AMD64 calling convention sets.
namespace abi {
inline constexpr RegSet kArgs{Reg::Rdi, Reg::Rsi, Reg::Rdx, Reg::Rcx, Reg::R8, Reg::R9};
inline constexpr RegSet kCallerSaved{Reg::Rax, Reg::Rcx, Reg::Rdx, Reg::Rsi, Reg::Rdi,
                                     Reg::R8,  Reg::R9,  Reg::R10, Reg::R11};
inline constexpr RegSet kCalleeSaved{Reg::Rbx, Reg::Rbp, Reg::R12, Reg::R13, Reg::R14, Reg::R15};
/// Live at every function exit: return value, stack pointer, callee-saved.
inline constexpr RegSet kExitLive = kCalleeSaved | RegSet{Reg::Rax, Reg::Rsp};
}  // namespace abi

}  // namespace binvar
