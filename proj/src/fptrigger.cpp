#include "binvar/fptrigger.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "binvar/error.hpp"

namespace binvar {

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Running: return "running";
    case SearchOutcome::ThresholdReached: return "threshold_reached";
    case SearchOutcome::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

double InstructionDistribution::weight_of(std::string_view token) const {
  for (const auto& it : items)
    if (it.token == token) return it.weight;
  return 0;
}

namespace {

// Representative bytes that keep the token but cannot leave a dead region:
// direct branches are re-encoded as rel32 to the next instruction.
std::optional<Bytes> dead_region_encoding(const Instruction& in, const BinaryImage& image) {
  switch (in.flow) {
    case Flow::None:
      return in.bytes;
    case Flow::Jump:
      if (!in.branch_target) return std::nullopt;
      return Bytes{0xE9, 0, 0, 0, 0};
    case Flow::Call:
      if (!in.branch_target || !image.function_containing(*in.branch_target)) return std::nullopt;
      return Bytes{0xE8, 0, 0, 0, 0};
    case Flow::CondJump: {
      if (!in.branch_target || in.enc.opcode_len == 0) return std::nullopt;
      const uint8_t op = in.bytes[in.enc.opcode_offset];
      uint8_t cc;
      if (in.enc.opcode_len == 1 && op >= 0x70 && op <= 0x7F)
        cc = op - 0x70;
      else if (in.enc.opcode_len == 2 && op == 0x0F && in.bytes[in.enc.opcode_offset + 1] >= 0x80 &&
               in.bytes[in.enc.opcode_offset + 1] <= 0x8F)
        cc = in.bytes[in.enc.opcode_offset + 1] - 0x80;
      else
        return std::nullopt;  // loop, jrcxz: rel8 only
      return Bytes{0x0F, static_cast<uint8_t>(0x80 + cc), 0, 0, 0, 0};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

InstructionDistribution extract_distribution(const BinaryImage& image) {
  InstructionDistribution d;
  d.source = image.path;
  std::map<std::string, size_t> index;
  for (const FunctionView& fn : image.functions) {
    if (fn.opaque) continue;
    for (const Instruction* in : fn.instructions()) {
      if (fn.padding_region) {
        const uint64_t off = in->address - fn.start;
        if (off >= fn.padding_region->offset && off < fn.padding_region->offset + fn.padding_region->length)
          continue;
      }
      const std::string tok = normalize_instruction(*in, &image);
      auto [it, fresh] = index.try_emplace(tok, d.items.size());
      if (fresh) {
        DistributionItem item;
        item.token = tok;
        item.asm_text = in->text();
        if (auto enc = dead_region_encoding(*in, image))
          item.encoding = std::move(*enc);
        else {
          item.encoding = in->bytes;
          item.materializable = false;
        }
        d.items.push_back(std::move(item));
      }
      d.items[it->second].weight += 1;
    }
  }
  if (d.items.empty()) throw Error(ErrorKind::EmptyImage, "no instructions in non-opaque functions of " + image.path);
  return d;
}

std::vector<size_t> draw_candidates(const InstructionDistribution& dist, unsigned k, Rng& rng) {
  // Weighted sampling without replacement by exponential keys.
  std::vector<std::pair<double, size_t>> keyed;
  for (size_t i = 0; i < dist.items.size(); ++i) {
    const auto& it = dist.items[i];
    if (!it.materializable || it.weight <= 0) continue;
    double u = rng.unit();
    if (u <= 0) u = 0x1.0p-53;
    keyed.emplace_back(std::log(u) / it.weight, i);
  }
  const size_t take = std::min<size_t>(k, keyed.size());
  std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(take), keyed.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
  std::vector<size_t> out;
  for (size_t i = 0; i < take; ++i) out.push_back(keyed[i].second);
  return out;
}

namespace {

const std::string kSkipJumpToken = "jmp label";

Tokens with_prefix(const Tokens& prefix, const std::string* extra, const Tokens& victim) {
  Tokens t;
  t.reserve(prefix.size() + victim.size() + 2);
  if (!prefix.empty() || extra) t.push_back(kSkipJumpToken);
  t.insert(t.end(), prefix.begin(), prefix.end());
  if (extra) t.push_back(*extra);
  t.insert(t.end(), victim.begin(), victim.end());
  return t;
}

}  // namespace

TriggerSearchState sample_fp_trigger(SimilarityOracle& oracle, const InstructionDistribution& dist,
                                     const Tokens& victim, const Tokens& target,
                                     const TriggerSearchOptions& options, Rng& rng) {
  if (options.num_candidates < 1) throw Error(ErrorKind::InvalidArgument, "num_candidates must be at least 1");
  if (victim.empty() || target.empty()) throw Error(ErrorKind::EmptyFunction, "victim and target need tokens");
  if (std::none_of(dist.items.begin(), dist.items.end(),
                   [](const DistributionItem& it) { return it.materializable && it.weight > 0; }))
    throw Error(ErrorKind::EmptyDistribution, "no sampleable instructions in distribution");

  TriggerSearchState st;
  st.budget = options.budget;
  st.unit = options.unit;
  st.threshold = options.threshold;
  st.num_candidates = options.num_candidates;
  st.rng_seed = rng.seed();
  st.initial_score = oracle.score(victim, target);
  if (st.initial_score >= options.threshold) {
    st.outcome = SearchOutcome::ThresholdReached;
    return st;
  }
  // The skip jump is not counted against the budget.
  for (;;) {
    if (st.used() >= options.budget) {
      st.outcome = SearchOutcome::BudgetExhausted;
      return st;
    }
    CandidateLog log;
    for (size_t idx : draw_candidates(dist, options.num_candidates, rng)) {
      if (options.unit == BudgetUnit::Bytes && st.prefix_bytes.size() + dist.items[idx].encoding.size() > options.budget)
        continue;
      log.items.push_back(idx);
    }
    if (log.items.empty()) {
      st.outcome = SearchOutcome::BudgetExhausted;
      return st;
    }
    for (size_t idx : log.items)
      log.scores.push_back(oracle.score(with_prefix(st.prefix_tokens, &dist.items[idx].token, victim), target));
    log.chosen = 0;
    for (size_t i = 1; i < log.scores.size(); ++i)
      if (log.scores[i] > log.scores[log.chosen]) log.chosen = i;
    const DistributionItem& pick = dist.items[log.items[log.chosen]];
    st.prefix.push_back(log.items[log.chosen]);
    st.prefix_tokens.push_back(pick.token);
    st.prefix_bytes.insert(st.prefix_bytes.end(), pick.encoding.begin(), pick.encoding.end());
    st.best_score_history.push_back(log.scores[log.chosen]);
    st.iterations.push_back(std::move(log));
    if (st.best_score_history.back() >= options.threshold) {
      st.outcome = SearchOutcome::ThresholdReached;
      return st;
    }
  }
}

std::optional<ImplantResult> materialize_trigger(BinaryImage& image, const std::string& victim_func,
                                                 const TriggerSearchState& state) {
  if (state.prefix.empty()) return std::nullopt;
  return implant(image, ImplantSpec::make(victim_func, state.prefix_bytes, PayloadKind::FpTrigger, 0));
}

std::vector<TransferRow> transfer_matrix(const std::vector<SimilarityOracle*>& oracles,
                                         const std::vector<TriggeredPair>& corpus) {
  std::vector<TransferRow> rows;
  for (SimilarityOracle* o : oracles) {
    TransferRow r;
    r.oracle = o->name();
    size_t correct = 0;
    for (const TriggeredPair& p : corpus) {
      const bool similar = o->similar(o->score(p.variant, p.target));
      ++r.pairs;
      if (similar) ++r.predicted_similar;
      if (similar != p.attacked) ++correct;
    }
    r.accuracy = r.pairs ? static_cast<double>(correct) / static_cast<double>(r.pairs) : 0.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace binvar
