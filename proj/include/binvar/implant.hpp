#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/rng.hpp"

namespace binvar {

enum class PayloadKind : uint8_t { SemanticNop, JunkCode, FpTrigger };
std::string_view to_string(PayloadKind k);
std::optional<PayloadKind> parse_payload_kind(std::string_view s);

inline constexpr uint64_t kDefaultPlaceholderSize = 128;

struct ImplantSpec {
  std::string function;
  Bytes payload;
  PayloadKind kind = PayloadKind::SemanticNop;
  /// Dead payloads are jumped over; semantic NOPs run inline.
  bool skip_jump = false;
  /// Payload plus skip jump may not exceed this many bytes.
  uint64_t budget = 0;

  static ImplantSpec make(std::string function, Bytes payload, PayloadKind kind, uint64_t budget);
};

struct ImplantResult {
  uint64_t placeholder_start = 0;  ///< virtual address
  uint64_t placeholder_length = 0;
  uint64_t jump_length = 0;
  uint64_t payload_address = 0;
  /// First original instruction, where control lands after the placeholder.
  uint64_t resume_address = 0;
};

/// Length of the jump that skips a placeholder of `length` bytes: rel8 when it reaches.
uint64_t skip_jump_length(uint64_t length);

/// Rewrite a function's entry placeholder with the payload. Throws
/// NoPlaceholder or PayloadTooLarge, and InvalidArgument for an inconsistent spec.
ImplantResult implant(BinaryImage& image, const ImplantSpec& spec);

/// Random straight-line register-only instructions totalling at most `budget` bytes.
Bytes generate_junk(uint64_t budget, Rng& rng);

/// Compiler invocations that build sources with an entry NOP pad of `pad_bytes`.
struct PlaceholderRecipe {
  uint64_t pad_bytes = kDefaultPlaceholderSize;
  std::string compiler = "gcc";
  std::vector<std::string> flags;
  struct Step {
    std::filesystem::path source;
    std::filesystem::path output;
    std::vector<std::string> argv;
  };
  std::vector<Step> steps;

  std::string script() const;
};

PlaceholderRecipe prepare_placeholders(const std::vector<std::filesystem::path>& sources,
                                       const std::filesystem::path& out_dir,
                                       uint64_t pad_bytes = kDefaultPlaceholderSize,
                                       std::string compiler = "gcc");

}  // namespace binvar
