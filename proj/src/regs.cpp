#include "binvar/regs.hpp"

#include "binvar/error.hpp"

namespace binvar {

namespace {

constexpr std::array<std::array<std::string_view, 4>, kNumGprs> kNames{{
    {"al", "ax", "eax", "rax"},     {"cl", "cx", "ecx", "rcx"},
    {"dl", "dx", "edx", "rdx"},     {"bl", "bx", "ebx", "rbx"},
    {"spl", "sp", "esp", "rsp"},    {"bpl", "bp", "ebp", "rbp"},
    {"sil", "si", "esi", "rsi"},    {"dil", "di", "edi", "rdi"},
    {"r8b", "r8w", "r8d", "r8"},    {"r9b", "r9w", "r9d", "r9"},
    {"r10b", "r10w", "r10d", "r10"}, {"r11b", "r11w", "r11d", "r11"},
    {"r12b", "r12w", "r12d", "r12"}, {"r13b", "r13w", "r13d", "r13"},
    {"r14b", "r14w", "r14d", "r14"}, {"r15b", "r15w", "r15d", "r15"},
}};

constexpr std::array<std::string_view, kNumFlags> kFlagNames{"CF", "PF", "AF", "ZF", "SF", "OF"};

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedElf: return "MalformedElf";
    case ErrorKind::UnsupportedArch: return "UnsupportedArch";
    case ErrorKind::DisassemblyGap: return "DisassemblyGap";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::OutOfFunctionRange: return "OutOfFunctionRange";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::OpaqueFunction: return "OpaqueFunction";
    case ErrorKind::InfeasiblePlan: return "InfeasiblePlan";
    case ErrorKind::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorKind::PoolExhausted: return "PoolExhausted";
    case ErrorKind::NoPlaceholder: return "NoPlaceholder";
    case ErrorKind::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorKind::EmptyFunction: return "EmptyFunction";
    case ErrorKind::OracleUnavailable: return "OracleUnavailable";
    case ErrorKind::ProtocolViolation: return "ProtocolViolation";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::EmptyDistribution: return "EmptyDistribution";
    case ErrorKind::MissingLinkage: return "MissingLinkage";
    case ErrorKind::TrapUnsupported: return "TrapUnsupported";
    case ErrorKind::StackOverflow: return "StackOverflow";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

std::string_view reg_name(Reg r, unsigned width) {
  const auto& row = kNames[hw(r)];
  switch (width) {
    case 1: return row[0];
    case 2: return row[1];
    case 4: return row[2];
    default: return row[3];
  }
}

std::optional<Reg> parse_reg(std::string_view name) {
  for (int i = 0; i < kNumGprs; ++i)
    for (auto n : kNames[i])
      if (n == name) return static_cast<Reg>(i);
  return std::nullopt;
}

std::string_view flag_name(Flag f) { return kFlagNames[static_cast<unsigned>(f)]; }

std::optional<Flag> parse_flag(std::string_view name) {
  for (int i = 0; i < kNumFlags; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

std::string to_string(RegSet s) {
  std::string out;
  for (Reg r : s.items()) {
    if (!out.empty()) out += ',';
    out += reg_name(r);
  }
  return out;
}

std::string to_string(FlagSet s) {
  std::string out;
  for (Flag f : s.items()) {
    if (!out.empty()) out += ',';
    out += flag_name(f);
  }
  return out;
}

}  // namespace binvar
