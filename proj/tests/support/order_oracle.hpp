#pragma once

// Brute-force check of instruction orders inside one block, phrased as
// reaching definitions rather than pairwise dependences: an order is valid
// when every read sees the same producer as in the original order, the last
// writer of everything live at block exit is unchanged, memory-touching
// instructions keep their relative order, fences keep the same predecessors
// and a closing control transfer stays last.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/liveness.hpp"

namespace binvar::testing {

namespace detail {

inline constexpr int kLocations = kNumGprs + kNumFlags;

inline std::vector<int> reads_of(const Instruction& in) {
  std::vector<int> out;
  for (Reg r : in.uses().items()) out.push_back(hw(r));
  for (Flag f : in.flags_read.items()) out.push_back(kNumGprs + static_cast<int>(f));
  return out;
}

inline std::vector<int> writes_of(const Instruction& in) {
  std::vector<int> out;
  for (Reg r : in.regs_written.items()) out.push_back(hw(r));
  for (Flag f : in.flags_written.items()) out.push_back(kNumGprs + static_cast<int>(f));
  return out;
}

inline bool is_fence(const Instruction& in) {
  return in.barrier || in.flow == Flow::Call || in.flow == Flow::IndirectCall || in.flow == Flow::Trap;
}

struct Trace {
  std::vector<std::vector<int>> producers;  ///< per original instruction, per read
  std::vector<int> last_writer;
  std::vector<size_t> ordered;
};

inline Trace trace_order(const BasicBlock& b, const std::vector<size_t>& order) {
  Trace t;
  t.producers.resize(b.instructions.size());
  t.last_writer.assign(kLocations, -1);
  for (size_t idx : order) {
    const Instruction& in = b.instructions[idx];
    for (int loc : reads_of(in)) t.producers[idx].push_back(t.last_writer[loc]);
    for (int loc : writes_of(in)) t.last_writer[loc] = static_cast<int>(idx);
    if (in.ordered()) t.ordered.push_back(idx);
  }
  return t;
}

}  // namespace detail

inline bool order_is_valid(const BasicBlock& b, const LiveSet& live_out, const std::vector<size_t>& order) {
  using namespace detail;
  const size_t n = b.instructions.size();
  if (order.size() != n) return false;
  std::vector<size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (!std::is_permutation(order.begin(), order.end(), identity.begin())) return false;
  const Trace want = trace_order(b, identity), got = trace_order(b, order);
  if (want.producers != got.producers || want.ordered != got.ordered) return false;
  for (Reg r : live_out.regs.items())
    if (want.last_writer[hw(r)] != got.last_writer[hw(r)]) return false;
  for (Flag f : live_out.flags.items())
    if (want.last_writer[kNumGprs + static_cast<int>(f)] != got.last_writer[kNumGprs + static_cast<int>(f)])
      return false;
  for (size_t pos = 0; pos < n; ++pos) {
    const Instruction& in = b.instructions[order[pos]];
    if (in.is_control_transfer() && !is_fence(in) && order[pos] != n - 1) return false;
    if (order[pos] == n - 1 && b.instructions[n - 1].is_control_transfer() && pos != n - 1) return false;
    if (is_fence(in)) {
      std::set<size_t> before(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(pos));
      std::set<size_t> orig;
      for (size_t k = 0; k < order[pos]; ++k) orig.insert(k);
      if (before != orig) return false;
    }
  }
  return true;
}

/// Every valid order of the block, by enumeration of all permutations.
inline std::vector<std::vector<size_t>> all_valid_orders(const BasicBlock& b, const LiveSet& live_out) {
  std::vector<size_t> perm(b.instructions.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<size_t>> out;
  do {
    if (order_is_valid(b, live_out, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Number of permutations that respect a dependence mask.
inline uint64_t brute_force_topological_count(const std::vector<uint32_t>& deps) {
  std::vector<size_t> perm(deps.size());
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t count = 0;
  do {
    uint32_t seen = 0;
    bool ok = true;
    for (size_t v : perm) {
      if ((deps[v] & ~seen) != 0) {
        ok = false;
        break;
      }
      seen |= 1u << v;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace binvar::testing
