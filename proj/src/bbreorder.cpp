#include "binvar/bbreorder.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "binvar/error.hpp"

namespace binvar {

bool ReorderPlan::identity() const {
  for (size_t i = 0; i < permutation.size(); ++i)
    if (permutation[i] != i) return false;
  return true;
}

namespace {

/// Does control run off the end of this block into the next one?
bool falls_through(const BasicBlock& b) {
  switch (b.terminator_kind) {
    case Terminator::Jump:
    case Terminator::Return:
    case Terminator::Indirect:
      return false;
    default:
      return true;
  }
}

}  // namespace

std::vector<std::vector<size_t>> fallthrough_chains(const FunctionView& fn) {
  std::vector<std::vector<size_t>> chains;
  for (size_t i = 0; i < fn.blocks.size(); ++i) {
    if (i == 0 || !falls_through(fn.blocks[i - 1])) chains.emplace_back();
    chains.back().push_back(i);
  }
  return chains;
}

bool respects_fallthrough(const FunctionView& fn, const std::vector<size_t>& order) {
  if (order.empty() || order[0] != 0) return false;
  for (size_t p = 0; p < order.size(); ++p) {
    const size_t b = order[p];
    if (!falls_through(fn.blocks[b])) continue;
    if (b + 1 == fn.blocks.size()) {
      if (p + 1 != order.size()) return false;  // runs off the function end
    } else if (p + 1 == order.size() || order[p + 1] != b + 1) {
      return false;
    }
  }
  return true;
}

namespace {

struct Layout {
  std::vector<uint64_t> new_start;  // per original block index
};

Layout layout_of(const FunctionView& fn, const std::vector<size_t>& order) {
  Layout l;
  l.new_start.assign(fn.blocks.size(), 0);
  uint64_t at = fn.start;
  for (size_t b : order) {
    l.new_start[b] = at;
    at += fn.blocks[b].size_bytes();
  }
  return l;
}

std::map<uint64_t, size_t> block_index(const FunctionView& fn) {
  std::map<uint64_t, size_t> m;
  for (size_t i = 0; i < fn.blocks.size(); ++i) m[fn.blocks[i].start] = i;
  return m;
}

}  // namespace

std::vector<DisplacementViolation> check_layout(const FunctionView& fn, const std::vector<size_t>& order) {
  std::vector<DisplacementViolation> out;
  const Layout l = layout_of(fn, order);
  const auto index = block_index(fn);
  for (size_t b = 0; b < fn.blocks.size(); ++b) {
    uint64_t at = l.new_start[b];
    for (const Instruction& in : fn.blocks[b].instructions) {
      const uint64_t end = at + in.size();
      if (in.is_rel_branch && in.branch_target) {
        uint64_t target = *in.branch_target;
        if (auto it = index.find(target); it != index.end()) target = l.new_start[it->second];
        const int64_t disp = static_cast<int64_t>(target - end);
        const int64_t limit = in.rel_width == 8 ? 127 : INT32_MAX;
        const int64_t low = in.rel_width == 8 ? -128 : INT32_MIN;
        if (disp < low || disp > limit) out.push_back({in.address, disp, limit, false});
      }
      if (in.rip_relative) {
        if (in.enc.disp_size != 4) {
          out.push_back({in.address, 0, 0, true});
        } else {
          int64_t old = 0;
          for (unsigned i = 0; i < 4; ++i) old |= int64_t{in.bytes[in.enc.disp_offset + i]} << (8 * i);
          old = static_cast<int32_t>(old);
          const uint64_t target = in.end() + static_cast<uint64_t>(old);
          const int64_t disp = static_cast<int64_t>(target - end);
          if (disp < INT32_MIN || disp > INT32_MAX) out.push_back({in.address, disp, INT32_MAX, true});
        }
      }
      at = end;
    }
  }
  return out;
}

ReorderPlan plan_reorder(const FunctionView& fn, Rng& rng, int max_attempts) {
  if (fn.opaque) throw Error(ErrorKind::OpaqueFunction, fn.name);
  ReorderPlan plan;
  plan.function = fn.name;
  for (size_t i = 0; i < fn.blocks.size(); ++i) plan.permutation.push_back(i);

  auto chains = fallthrough_chains(fn);
  // The entry chain is pinned first; a chain that runs off the function end is pinned last.
  std::vector<std::vector<size_t>> movable(chains.begin() + (chains.empty() ? 0 : 1), chains.end());
  std::optional<std::vector<size_t>> tail;
  if (!movable.empty() && falls_through(fn.blocks[movable.back().back()])) {
    tail = movable.back();
    movable.pop_back();
  }
  if (movable.size() < 2) {
    plan.feasible = check_layout(fn, plan.permutation).empty();
    return plan;
  }
  std::vector<size_t> idx(movable.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const std::vector<size_t> identity = idx;
  std::vector<DisplacementViolation> last_violations;
  std::vector<size_t> last_order;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    do {
      rng.shuffle(std::span<size_t>(idx));
    } while (idx == identity);
    std::vector<size_t> order = chains.front();
    for (size_t c : idx) order.insert(order.end(), movable[c].begin(), movable[c].end());
    if (tail) order.insert(order.end(), tail->begin(), tail->end());
    auto violations = check_layout(fn, order);
    if (violations.empty()) {
      plan.permutation = std::move(order);
      plan.feasible = true;
      return plan;
    }
    last_violations = std::move(violations);
    last_order = std::move(order);
  }
  plan.permutation = std::move(last_order);
  plan.violations = std::move(last_violations);
  plan.feasible = false;
  return plan;
}

Bytes render_reorder(const FunctionView& fn, const ReorderPlan& plan) {
  if (!plan.feasible) throw Error(ErrorKind::InfeasiblePlan, fn.name + ": plan has violations");
  std::vector<size_t> sorted = plan.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != fn.blocks.size())
      throw Error(ErrorKind::InfeasiblePlan, fn.name + ": permutation is not a bijection over blocks");
  if (!respects_fallthrough(fn, plan.permutation))
    throw Error(ErrorKind::InfeasiblePlan, fn.name + ": permutation breaks a fallthrough");
  if (!check_layout(fn, plan.permutation).empty())
    throw Error(ErrorKind::InfeasiblePlan, fn.name + ": displacement out of range");

  const Layout l = layout_of(fn, plan.permutation);
  const auto index = block_index(fn);
  Bytes out;
  out.reserve(fn.length);
  for (size_t b : plan.permutation) {
    uint64_t at = l.new_start[b];
    for (const Instruction& in : fn.blocks[b].instructions) {
      std::optional<uint64_t> target;
      if (in.is_rel_branch && in.branch_target)
        if (auto it = index.find(*in.branch_target); it != index.end()) target = l.new_start[it->second];
      const Bytes bytes = relocate_instruction(in, at, target);
      out.insert(out.end(), bytes.begin(), bytes.end());
      at += bytes.size();
    }
  }
  return out;
}

TransformReport apply_reorder(BinaryImage& image, const std::string& function, const ReorderPlan& plan) {
  const FunctionView* fn = image.find_function(function);
  if (!fn) throw Error(ErrorKind::UnknownFunction, function);
  TransformReport r;
  r.function = function;
  r.technique = Technique::BlockReorder;
  r.sites_considered = 1;
  const Bytes bytes = render_reorder(*fn, plan);
  if (!plan.identity()) {
    const uint64_t start = fn->start, length = fn->length;
    patch_bytes(image, start, bytes, length);
    r.sites_transformed = 1;
  }
  return r;
}

std::vector<Eligibility> eligibility_report(const BinaryImage& image, uint64_t seed) {
  std::vector<Eligibility> out;
  for (const FunctionView& fn : image.functions) {
    Eligibility e{fn.name, false, {}};
    if (fn.opaque) {
      e.reason = "opaque";
    } else if (fn.blocks.size() <= 1) {
      e.reason = "single_block";
    } else {
      Rng rng(technique_seed(seed, fn.name, Technique::BlockReorder));
      const ReorderPlan plan = plan_reorder(fn, rng);
      if (plan.identity()) {
        e.reason = "fallthrough_locked";
      } else if (!plan.feasible) {
        const bool rip = std::all_of(plan.violations.begin(), plan.violations.end(),
                                     [](const DisplacementViolation& v) { return v.rip_relative; });
        e.reason = rip ? "rip_relative_unfixable" : "displacement_bound";
      } else {
        e.eligible = true;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace binvar
