#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/liveness.hpp"
#include "binvar/rng.hpp"

namespace binvar {

enum class Technique : uint8_t { Subst, IntraReorder, PreserveReorder, RegReassign, BlockReorder };
std::string_view to_string(Technique t);
std::optional<Technique> parse_technique(std::string_view s);

struct TransformReport {
  std::string function;
  Technique technique = Technique::Subst;
  uint32_t sites_considered = 0;
  uint32_t sites_transformed = 0;
  uint64_t rng_seed = 0;
  double elapsed = 0;
  bool timed_out = false;
  /// Why sites were skipped, e.g. "push_length_mixed" or "rex_change".
  std::vector<std::string> skipped;
};

struct TransformResult {
  Bytes code;  ///< new bytes for the whole function, same length as before
  TransformReport report;
};

/// Cooperative time limit; techniques poll it between sites.
class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds = std::nullopt);
  bool expired() const;
  /// Throws Timeout when expired.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
  bool zero_ = false;
};

// Substitution rules (loaded from the JSON rule file).
enum class RuleKind : uint8_t { OpcodeSwap, Imm8Negate, DirectionSwap };
enum class OperandForm : uint8_t { SameRegister, Register, RegisterRegister };

struct SubstitutionRule {
  std::string name;
  RuleKind kind = RuleKind::OpcodeSwap;
  std::vector<std::pair<uint8_t, uint8_t>> pairs;  ///< opcode byte pairs (both directions)
  uint8_t opcode = 0;                              ///< imm8_negate
  std::pair<uint8_t, uint8_t> ext_pair{0, 0};      ///< imm8_negate ModRM.reg extensions
  OperandForm operands = OperandForm::Register;
  std::vector<unsigned> widths;
  FlagSet requires_dead;
  std::optional<FlagSet> live_flags_within;
  std::vector<int64_t> exclude_imm;
};

struct RuleSet {
  int version = 0;
  std::vector<SubstitutionRule> rules;
};

/// The built-in rule file.
const RuleSet& builtin_rules();
RuleSet parse_rules(std::string_view json_text);
inline constexpr int kRuleSetVersion = 1;

/// A rule match at one instruction, with the replacement bytes.
struct SubstitutionSite {
  size_t index = 0;  ///< instruction index in address order
  const SubstitutionRule* rule = nullptr;
  Bytes replacement;
};

/// All sites where a rule matches and its flag condition holds.
std::vector<SubstitutionSite> find_substitution_sites(const FunctionView& fn, const LivenessMap& live,
                                                      const RuleSet& rules = builtin_rules());
/// Length-preserving replacement for `in` under `rule`, ignoring flags.
std::optional<Bytes> apply_rule(const SubstitutionRule& rule, const Instruction& in);

TransformResult substitute_instructions(const FunctionView& fn, const LivenessMap& live, Rng& rng,
                                        const Deadline& deadline = Deadline{},
                                        const RuleSet& rules = builtin_rules());

/// Dependence DAG of one block: deps[j] has bit i set when i must precede j.
std::vector<uint32_t> block_dependences(const BasicBlock& block, const LivenessMap& live, size_t first_index);
/// Number of topological orders of a DAG (n <= 20).
uint64_t count_topological_orders(const std::vector<uint32_t>& deps);
/// Uniformly random topological order (exact for n <= 16, randomized ready-list otherwise).
std::vector<size_t> sample_topological_order(const std::vector<uint32_t>& deps, Rng& rng);
/// Bytes of `in` moved to `new_address`, with rip-relative and branch
/// displacements adjusted to keep their targets. Throws InfeasiblePlan.
Bytes relocate_instruction(const Instruction& in, uint64_t new_address,
                           std::optional<uint64_t> new_branch_target = std::nullopt);
/// Re-lay the instructions of a block in `order`, re-encoding rip-relative displacements.
Bytes relayout_block(const BasicBlock& block, const std::vector<size_t>& order);

TransformResult reorder_intra_bb(const FunctionView& fn, const LivenessMap& live, Rng& rng,
                                 const Deadline& deadline = Deadline{});

TransformResult reorder_preservation_code(const FunctionView& fn, Rng& rng, const Deadline& deadline = Deadline{});

/// Rewrite every occurrence of `from` in an instruction's register fields to
/// `to`, keeping the length. Validated by re-decoding; empty on failure.
std::optional<Bytes> rename_register(const Instruction& in, Reg from, Reg to);

TransformResult reassign_registers(const FunctionView& fn, const LivenessMap& live, Rng& rng,
                                   const Deadline& deadline = Deadline{});

/// Per-function random stream for a technique.
uint64_t technique_seed(uint64_t seed, std::string_view function, Technique t);

using FunctionFilter = std::function<bool(const FunctionView&)>;

/// Runs the requested in-place techniques in fixed order for each function,
/// patching the image after each one. A technique that exceeds budget_seconds
/// on a function is abandoned for that function and reported as timed out.
std::vector<TransformReport> apply_all_inplace(BinaryImage& image, const FunctionFilter& filter,
                                               std::optional<double> budget_seconds, uint64_t seed,
                                               const std::vector<Technique>& techniques = {
                                                   Technique::Subst, Technique::IntraReorder,
                                                   Technique::PreserveReorder, Technique::RegReassign},
                                               const RuleSet& rules = builtin_rules());

/// Register mask used when checking a technique with the emulator: register
/// reassignment may leave dead registers with different values.
RegSet comparable_registers(Technique t);

}  // namespace binvar
