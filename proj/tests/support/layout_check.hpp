#pragma once

#include <string>
#include <vector>

#include "binvar/bbreorder.hpp"
#include "binvar/image.hpp"

namespace binvar::testing {

/// Compares a reordered function with its original block by block: same
/// instructions, every in-function branch lands on the moved copy of its
/// original target block, external targets unchanged, rel8 displacements in
/// range. Returns the first problem, or empty.
inline std::string check_reordered(const FunctionView& orig, const FunctionView& moved,
                                   const std::vector<size_t>& permutation) {
  if (moved.length != orig.length) return "length changed";
  std::vector<uint64_t> new_start(orig.blocks.size());
  uint64_t at = orig.start;
  for (size_t k : permutation) {
    new_start[k] = at;
    at += orig.blocks[k].size_bytes();
  }
  if (at > orig.end()) return "layout overruns function";
  std::vector<Instruction> flat;
  for (const auto* in : moved.instructions()) flat.push_back(*in);
  auto find_at = [&](uint64_t addr) -> const Instruction* {
    for (const auto& in : flat)
      if (in.address == addr) return &in;
    return nullptr;
  };
  for (size_t k = 0; k < orig.blocks.size(); ++k) {
    uint64_t addr = new_start[k];
    for (const Instruction& o : orig.blocks[k].instructions) {
      const Instruction* n = find_at(addr);
      if (!n) return "no instruction at moved address " + std::to_string(addr);
      if (n->mnemonic != o.mnemonic || n->size() != o.size()) return "instruction changed at " + std::to_string(addr);
      if (o.branch_target) {
        if (!n->branch_target) return "branch lost";
        uint64_t want = *o.branch_target;
        if (want >= orig.start && want < orig.end()) {
          const auto tb = orig.block_at(want);
          if (!tb || orig.blocks[*tb].start != want) return "branch into the middle of a block";
          want = new_start[*tb];
        }
        if (*n->branch_target != want) return "branch target moved wrongly at " + std::to_string(addr);
        if (n->rel_width == 8) {
          const int64_t disp = static_cast<int64_t>(*n->branch_target) - static_cast<int64_t>(n->end());
          if (disp < -128 || disp > 127) return "rel8 displacement out of range";
        }
      } else if (!o.rip_relative && n->bytes != o.bytes) {
        return "bytes changed at " + std::to_string(addr);
      }
      addr += o.size();
    }
  }
  return {};
}

}  // namespace binvar::testing
