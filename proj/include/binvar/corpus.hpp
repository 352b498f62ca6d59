#pragma once

#include <cstdint>

#include "binvar/instruction.hpp"

namespace binvar {

/// Synthetic fixture binaries: every function runs to completion in the
/// emulator from any register state and carries an entry NOP placeholder.
struct CorpusOptions {
  uint64_t seed = 0;
  unsigned functions = 36;
  uint64_t pad_bytes = 128;
  /// Share of functions starting with endbr64.
  double endbr_share = 0.25;
};

Bytes synthesize_corpus(const CorpusOptions& options);

}  // namespace binvar
