#include "binvar/liveness.hpp"

#include "binvar/error.hpp"

namespace binvar {

LiveSet exit_live() { return {abi::kExitLive, {}}; }
LiveSet tail_exit_live() { return {abi::kExitLive | abi::kArgs, {}}; }

namespace {

struct Flat {
  std::vector<const Instruction*> insns;
  std::vector<size_t> first;
};

Flat flatten(const FunctionView& fn) {
  Flat f;
  for (const auto& b : fn.blocks) {
    f.first.push_back(f.insns.size());
    for (const auto& in : b.instructions) f.insns.push_back(&in);
  }
  return f;
}

LiveSet block_out(const FunctionView& fn, size_t bi, const LivenessMap& m) {
  const BasicBlock& b = fn.blocks[bi];
  LiveSet out;
  if (b.terminator_kind == Terminator::Return || b.successors.empty()) out |= exit_live();
  if (b.exits) out |= tail_exit_live();
  for (size_t s : b.successors) out |= m.live_in[m.block_first[s]];
  return out;
}

/// Recompute one block bottom-up; returns whether its live-in changed.
bool update_block(const FunctionView& fn, size_t bi, LivenessMap& m, const Flat& flat) {
  const size_t first = m.block_first[bi];
  const size_t last = first + fn.blocks[bi].instructions.size();
  const LiveSet before = m.live_in[first];
  LiveSet live = block_out(fn, bi, m);
  for (size_t i = last; i-- > first;) {
    m.live_out[i] = live;
    live = transfer(*flat.insns[i], live);
    m.live_in[i] = live;
  }
  return !(before == m.live_in[first]);
}

}  // namespace

LivenessMap compute_liveness(const FunctionView& fn) {
  if (fn.opaque) throw Error(ErrorKind::OpaqueFunction, fn.name + " (" + fn.opaque_reason + ")");
  if (fn.blocks.empty()) throw Error(ErrorKind::EmptyFunction, fn.name);
  const Flat flat = flatten(fn);
  LivenessMap m;
  m.block_first = flat.first;
  m.live_in.assign(flat.insns.size(), {});
  m.live_out.assign(flat.insns.size(), {});

  // Reverse order converges fastest for mostly forward CFGs. The first sweep
  // must visit every block even if its live-in happens to stay empty.
  for (size_t bi = fn.blocks.size(); bi-- > 0;) update_block(fn, bi, m, flat);
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t bi = fn.blocks.size(); bi-- > 0;) changed |= update_block(fn, bi, m, flat);
  }

  RegSet touched, live;
  for (size_t i = 0; i < flat.insns.size(); ++i) {
    touched |= flat.insns[i]->regs_read | flat.insns[i]->regs_written | flat.insns[i]->explicit_regs;
    live |= m.live_in[i].regs | m.live_out[i].regs;
  }
  m.clobberable = RegSet::all() - touched - live - RegSet{Reg::Rsp, Reg::Rbp};
  return m;
}

bool is_fixpoint(const FunctionView& fn, const LivenessMap& map) {
  LivenessMap copy = map;
  const Flat flat = flatten(fn);
  for (size_t bi = fn.blocks.size(); bi-- > 0;) update_block(fn, bi, copy, flat);
  return copy.live_in == map.live_in && copy.live_out == map.live_out;
}

std::vector<IndexInterval> dead_flag_regions(const LivenessMap& map) {
  std::vector<IndexInterval> out;
  size_t i = 0;
  while (i < map.size()) {
    if (!map.live_in[i].flags.empty()) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < map.size() && map.live_in[j].flags.empty()) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

std::vector<LiveRange> live_ranges(const FunctionView& fn, const LivenessMap& map, Reg reg) {
  std::vector<LiveRange> out;
  for (size_t bi = 0; bi < fn.blocks.size(); ++bi) {
    const size_t first = map.block_first[bi];
    const size_t last = first + fn.blocks[bi].instructions.size();
    size_t i = first;
    while (i < last) {
      if (!map.live_in[i].regs.contains(reg)) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < last && map.live_in[j].regs.contains(reg)) ++j;
      out.push_back({reg, {i, j}});
      i = j;
    }
  }
  return out;
}

}  // namespace binvar
