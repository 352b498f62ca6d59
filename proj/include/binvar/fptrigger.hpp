#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binvar/image.hpp"
#include "binvar/implant.hpp"
#include "binvar/oracle.hpp"
#include "binvar/rng.hpp"

namespace binvar {

struct DistributionItem {
  std::string token;
  Bytes encoding;  ///< one concrete instance
  std::string asm_text;
  double weight = 0;
  /// False for instructions that would leave a dead region when placed in
  /// one (returns, indirect and external branches); never sampled.
  bool materializable = true;
};

struct InstructionDistribution {
  std::vector<DistributionItem> items;
  std::string source;

  double weight_of(std::string_view token) const;
};

/// Frequency of every normalized instruction over the non-opaque functions.
/// Throws EmptyImage.
InstructionDistribution extract_distribution(const BinaryImage& image);

enum class BudgetUnit : uint8_t { Instructions, Bytes };
enum class SearchOutcome : uint8_t { Running, ThresholdReached, BudgetExhausted };
std::string_view to_string(SearchOutcome o);

struct CandidateLog {
  std::vector<size_t> items;   ///< distribution indices, in evaluation order
  std::vector<double> scores;  ///< score with each candidate appended
  size_t chosen = 0;           ///< position in `items`
};

struct TriggerSearchState {
  std::vector<size_t> prefix;  ///< distribution indices
  Tokens prefix_tokens;
  Bytes prefix_bytes;
  uint64_t budget = 0;
  BudgetUnit unit = BudgetUnit::Instructions;
  double threshold = 0;
  unsigned num_candidates = 20;
  double initial_score = 0;
  std::vector<double> best_score_history;
  std::vector<CandidateLog> iterations;
  SearchOutcome outcome = SearchOutcome::Running;
  uint64_t rng_seed = 0;
  std::string tie_break = "lowest_index";

  uint64_t used() const { return unit == BudgetUnit::Instructions ? prefix.size() : prefix_bytes.size(); }
  double final_score() const { return best_score_history.empty() ? initial_score : best_score_history.back(); }
};

inline constexpr unsigned kDefaultNumCandidates = 20;

struct TriggerSearchOptions {
  uint64_t budget = 100;
  BudgetUnit unit = BudgetUnit::Instructions;
  double threshold = 0.9;
  unsigned num_candidates = kDefaultNumCandidates;
};

/// Greedy prefix search: each round draws candidates from the distribution,
/// scores victim-with-prefix-plus-candidate against the target and keeps the best.
TriggerSearchState sample_fp_trigger(SimilarityOracle& oracle, const InstructionDistribution& dist,
                                     const Tokens& victim, const Tokens& target,
                                     const TriggerSearchOptions& options, Rng& rng);

/// Weighted sampling of k distinct materializable items.
std::vector<size_t> draw_candidates(const InstructionDistribution& dist, unsigned k, Rng& rng);

/// Write the prefix behind a skip jump in the victim's placeholder.
std::optional<ImplantResult> materialize_trigger(BinaryImage& image, const std::string& victim_func,
                                                 const TriggerSearchState& state);

struct TriggeredPair {
  Tokens variant;  ///< victim with the trigger in place
  Tokens target;
  bool attacked = true;  ///< label dissimilar; success means predicted similar
};

struct TransferRow {
  std::string oracle;
  size_t pairs = 0;
  size_t predicted_similar = 0;
  /// Correct dissimilar decisions over attacked pairs (1 - ASR).
  double accuracy = 0;
};

std::vector<TransferRow> transfer_matrix(const std::vector<SimilarityOracle*>& oracles,
                                         const std::vector<TriggeredPair>& corpus);

}  // namespace binvar
