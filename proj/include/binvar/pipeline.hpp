#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "binvar/inplace.hpp"

namespace binvar {

inline constexpr const char* kToolkitVersion = "0.4.0";
inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  uint64_t seed = 0;
  double timeout = 10.0;  ///< seconds per technique per function
  std::vector<double> budgets{20, 40, 60, 80, 100};
  std::string oracle = "ref";
  double threshold = 0.5;
  std::filesystem::path output_dir = "out";
  std::vector<std::string> stages{"transform", "nop", "junk", "fp_trigger", "eval"};
  std::vector<std::string> techniques{"subst", "intra", "preserve", "reassign", "bbr"};
  double negatives_per_positive = 1.0;
  bool transformed_negatives = true;
  uint64_t fp_budget = 20;  ///< instructions
  /// Search stops once the oracle score reaches this; defaults to `threshold`.
  std::optional<double> fp_threshold;
  unsigned fp_candidates = 20;

  std::string to_json() const;
};

/// Fields present in the JSON override the defaults; unknown keys are rejected.
RunConfig parse_run_config(const std::string& json_text, RunConfig base = {});

struct StageFailure {
  std::string stage;
  std::string kind;
  std::string message;
};

struct PipelineResult {
  std::vector<StageFailure> failures;
  size_t variants = 0;
  int exit_code() const { return failures.empty() ? 0 : 1; }
};

/// Writes variants/, reports/, eval/ and manifest.json under config.output_dir.
PipelineResult run_pipeline(const RunConfig& config, const std::vector<std::filesystem::path>& inputs);

/// Block reordering for every function, with a skip reason where no plan applies.
std::vector<TransformReport> apply_block_reorder(BinaryImage& image, uint64_t seed);

}  // namespace binvar
