#pragma once

#include <string>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/inplace.hpp"
#include "binvar/rng.hpp"

namespace binvar {

struct DisplacementViolation {
  uint64_t address = 0;  ///< instruction whose displacement no longer fits
  int64_t required = 0;
  int64_t limit = 0;     ///< 127 for rel8, INT32_MAX for rel32 and rip-relative
  bool rip_relative = false;
};

struct ReorderPlan {
  std::string function;
  std::vector<size_t> permutation;  ///< block indices in their new layout order
  bool feasible = false;
  std::vector<DisplacementViolation> violations;

  bool identity() const;
};

/// Maximal runs of blocks linked by fallthrough; they must stay adjacent.
std::vector<std::vector<size_t>> fallthrough_chains(const FunctionView& fn);

/// Check a block order: adjacency of fallthrough pairs is assumed; returns
/// the displacement violations of the resulting layout.
std::vector<DisplacementViolation> check_layout(const FunctionView& fn, const std::vector<size_t>& order);

/// Whether `order` keeps every fallthrough successor right after its block,
/// the entry block first and a block that runs off the function end last.
bool respects_fallthrough(const FunctionView& fn, const std::vector<size_t>& order);

inline constexpr int kDefaultMaxAttempts = 64;

ReorderPlan plan_reorder(const FunctionView& fn, Rng& rng, int max_attempts = kDefaultMaxAttempts);

/// New function bytes for a feasible plan; throws InfeasiblePlan.
Bytes render_reorder(const FunctionView& fn, const ReorderPlan& plan);

/// Rewrites the function in the image. Throws InfeasiblePlan.
TransformReport apply_reorder(BinaryImage& image, const std::string& function, const ReorderPlan& plan);

struct Eligibility {
  std::string function;
  bool eligible = false;
  std::string reason;  ///< opaque, single_block, fallthrough_locked, displacement_bound, rip_relative_unfixable
};

std::vector<Eligibility> eligibility_report(const BinaryImage& image, uint64_t seed = 0);

}  // namespace binvar
