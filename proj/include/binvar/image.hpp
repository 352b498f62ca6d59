#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "binvar/instruction.hpp"

namespace binvar {

struct Section {
  std::string name;
  uint32_t type = 0;
  uint64_t flags = 0;
  uint64_t addr = 0;
  uint64_t offset = 0;
  uint64_t size = 0;

  bool executable() const;
};

struct Segment {
  uint32_t type = 0;
  uint32_t flags = 0;
  uint64_t offset = 0;
  uint64_t vaddr = 0;
  uint64_t filesz = 0;
  uint64_t memsz = 0;
};

struct Symbol {
  std::string name;
  uint64_t value = 0;
  uint64_t size = 0;
  uint8_t type = 0;
  uint8_t bind = 0;
  uint16_t shndx = 0;
};

enum class Terminator : uint8_t { Fallthrough, Jump, CondJump, Call, Return, Indirect };
std::string_view to_string(Terminator t);

struct BasicBlock {
  uint64_t start = 0;
  std::vector<Instruction> instructions;
  std::vector<size_t> successors;
  Terminator terminator_kind = Terminator::Fallthrough;
  /// Successor reached by falling off the end of the block, if any.
  std::optional<size_t> fallthrough;
  /// Ends in a branch whose target lies outside the function (tail call).
  bool exits = false;

  uint64_t end() const { return instructions.empty() ? start : instructions.back().end(); }
  uint64_t size_bytes() const { return end() - start; }
};

/// Offset (from function start) and length of a run of 0x90 bytes.
struct PaddingRegion {
  uint64_t offset = 0;
  uint64_t length = 0;
  bool operator==(const PaddingRegion&) const = default;
};

struct FunctionView {
  std::string name;
  uint64_t start = 0;
  uint64_t length = 0;
  std::vector<BasicBlock> blocks;
  std::optional<PaddingRegion> padding_region;
  /// Excluded from transformation; `opaque_reason` says why.
  bool opaque = false;
  std::string opaque_reason;

  uint64_t end() const { return start + length; }
  size_t instruction_count() const;
  /// Instructions in address order.
  std::vector<const Instruction*> instructions() const;
  /// Block index containing `addr`, if any.
  std::optional<size_t> block_at(uint64_t addr) const;
};

inline constexpr uint64_t kPaddingMinLength = 8;

class BinaryImage {
 public:
  std::string path;
  Bytes raw;
  std::vector<Section> sections;
  std::vector<Segment> segments;
  std::vector<Symbol> symbols;
  std::vector<FunctionView> functions;

  /// File offset of [vaddr, vaddr+len) when fully covered by one PT_LOAD segment's file image.
  std::optional<uint64_t> file_offset(uint64_t vaddr, uint64_t len = 1) const;
  std::span<const uint8_t> bytes_at(uint64_t vaddr, uint64_t len) const;

  FunctionView* find_function(std::string_view name);
  const FunctionView* find_function(std::string_view name) const;
  const FunctionView& function(std::string_view name) const;
  const FunctionView* function_containing(uint64_t vaddr) const;
  bool is_function_start(uint64_t vaddr) const;

  /// Re-decode one function from the current raw bytes.
  void redisassemble(FunctionView& fn) const;
};

/// Parse a 64-bit little-endian x86-64 ELF. Functions come from STT_FUNC symbols.
BinaryImage parse_elf(std::span<const uint8_t> bytes, std::string path = {});
BinaryImage load_elf(const std::filesystem::path& path);

Bytes serialize(const BinaryImage& image);
void save_elf(const BinaryImage& image, const std::filesystem::path& path);
Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);

/// Length-preserving edit inside one function. When `replaced_len` is given it
/// must equal new_bytes.size(). The function is re-disassembled afterwards.
void patch_bytes(BinaryImage& image, uint64_t vaddr, std::span<const uint8_t> new_bytes,
                 std::optional<uint64_t> replaced_len = std::nullopt);

/// Replace the instruction starting at `vaddr`; its length must be preserved.
void replace_instruction(BinaryImage& image, uint64_t vaddr, std::span<const uint8_t> new_bytes);

/// Longest run of single-byte NOPs at the function entry (after an optional
/// endbr64), directly after an entry jump, or closing the dead region an entry
/// jump skips over.
std::optional<PaddingRegion> detect_padding(const FunctionView& fn, uint64_t min_len);

/// Offset where an entry placeholder may be written: 0, or 4 after endbr64.
uint64_t entry_insertion_offset(const FunctionView& fn);

/// Disassemble raw code into a function with basic blocks.
FunctionView disassemble_function(std::string name, uint64_t start, std::span<const uint8_t> code);

/// Rebuild blocks of `fn` from a flat instruction list covering its range.
void build_blocks(FunctionView& fn, std::vector<Instruction> insns);

}  // namespace binvar
