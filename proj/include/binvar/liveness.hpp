#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/regs.hpp"

namespace binvar {

/// Per-instruction live sets of one function, indexed in address order
/// (the order of FunctionView::instructions()).
struct LivenessMap {
  std::vector<LiveSet> live_in;
  std::vector<LiveSet> live_out;
  /// Index of the first instruction of each block.
  std::vector<size_t> block_first;
  /// Registers never live and never referenced anywhere in the function.
  RegSet clobberable;

  size_t size() const { return live_in.size(); }
};

/// Half-open instruction index interval.
using IndexInterval = std::pair<size_t, size_t>;

struct LiveRange {
  Reg reg;
  IndexInterval span;
};

/// Live sets assumed after a return: callee-saved, rsp and rax; no flags.
LiveSet exit_live();
/// After a jump leaving the function (tail call): exit set plus argument registers.
LiveSet tail_exit_live();

/// Backward dataflow to a fixpoint over the CFG. Throws OpaqueFunction.
LivenessMap compute_liveness(const FunctionView& fn);

/// One round of the transfer functions over an existing map; returns true when
/// nothing changes (the map is a fixpoint).
bool is_fixpoint(const FunctionView& fn, const LivenessMap& map);

/// Maximal runs of instructions whose live-in has no status flag.
std::vector<IndexInterval> dead_flag_regions(const LivenessMap& map);

/// Maximal intervals within blocks where `reg` is live before every instruction.
std::vector<LiveRange> live_ranges(const FunctionView& fn, const LivenessMap& map, Reg reg);

/// Transfer function of one instruction.
inline LiveSet transfer(const Instruction& in, LiveSet out) {
  return {(out.regs - in.kills()) | in.uses(), (out.flags - in.flags_written) | in.flags_read};
}

}  // namespace binvar
