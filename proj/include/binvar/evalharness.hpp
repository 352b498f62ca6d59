#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "binvar/oracle.hpp"
#include "binvar/rng.hpp"

namespace binvar {

enum class PairLabel : uint8_t { Similar, Dissimilar };
std::string_view to_string(PairLabel l);

struct FunctionRef {
  std::string binary;
  std::string name;
  auto operator<=>(const FunctionRef&) const = default;
};

inline const std::string kBaselineTag = "none";

struct PairRecord {
  FunctionRef a;
  FunctionRef b;
  PairLabel label = PairLabel::Similar;
  std::string transformation;
  double budget = 0;
  std::optional<double> score;
  std::optional<PairLabel> prediction;
  std::string error;  ///< set when scoring failed; such pairs are left out of metrics
};

/// One variant binary and, per variant function, the baseline function it came from.
struct VariantManifest {
  std::string variant_path;
  std::string baseline_path;
  std::string transformation;
  double budget = 0;
  uint64_t seed = 0;
  std::map<std::string, std::string> linkage;  ///< variant function -> baseline function
};

struct PairOptions {
  double negatives_per_positive = 1.0;
  /// Negatives pair an original with another function's variant; when false
  /// the other function is taken untransformed from the baseline.
  bool transformed_negatives = true;
};

/// Positives (original, own variant) and seeded negatives per manifest.
/// `baseline_functions` lists the functions of each baseline binary.
/// Throws MissingLinkage.
std::vector<PairRecord> build_pairs(const std::map<std::string, std::vector<std::string>>& baseline_functions,
                                    const std::vector<VariantManifest>& variants, const PairOptions& options,
                                    Rng& rng);

using TokenLookup = std::function<const Tokens*(const FunctionRef&)>;

/// Scores every pair; failures are recorded on the pair, never thrown.
void score_pairs(std::vector<PairRecord>& pairs, SimilarityOracle& oracle, const TokenLookup& tokens);

struct MetricsRow {
  std::string transformation;
  double budget = 0;
  uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
  uint64_t errored = 0;
  double precision = 0, recall = 0, f1 = 0;
  /// Difference to the untransformed group, when one was scored.
  std::optional<double> d_precision, d_recall, d_f1;
};

/// Fill precision, recall and f1 from the confusion counts (0 for empty denominators).
void finish_metrics(MetricsRow& row);
MetricsRow metrics_from_counts(uint64_t tp, uint64_t fp, uint64_t tn, uint64_t fn);

/// One row per (transformation, budget), ordered by tag then budget.
std::vector<MetricsRow> compute_metrics(const std::vector<PairRecord>& pairs);

/// Fraction of attacked (dissimilar, fp_trigger) pairs predicted similar.
double asr(const std::vector<PairRecord>& pairs, const std::string& tag = "fp_trigger");

struct SweepReport {
  std::vector<MetricsRow> rows;
  std::vector<std::string> trend_violations;  ///< recall rising with budget
  bool precision_constant = true;
};

/// Builds, scores and summarises one variant set per budget.
/// `make_variants(budget)` returns the manifests for that budget.
SweepReport budget_sweep(const std::string& transformation, const std::vector<double>& budgets,
                         const std::map<std::string, std::vector<std::string>>& baseline_functions,
                         const std::function<std::vector<VariantManifest>(double)>& make_variants,
                         SimilarityOracle& oracle, const TokenLookup& tokens, const PairOptions& options,
                         uint64_t seed);

std::string metrics_csv(const std::vector<MetricsRow>& rows);
std::string sweep_json(const std::vector<SweepReport>& sweeps);
std::string pairs_json(const std::vector<PairRecord>& pairs);

inline const std::vector<double> kDefaultBudgets{20, 40, 60, 80, 100};

}  // namespace binvar
