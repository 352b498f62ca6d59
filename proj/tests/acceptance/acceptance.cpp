// One line per acceptance criterion. Tolerances are fixed here; a failing
// criterion is reported, never relaxed.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binvar/bbreorder.hpp"
#include "binvar/evalharness.hpp"
#include "binvar/fptrigger.hpp"
#include "binvar/implant.hpp"
#include "binvar/pipeline.hpp"
#include "binvar/semnop.hpp"
#include "flag_oracle.hpp"
#include "layout_check.hpp"
#include "order_oracle.hpp"
#include "random_block.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

// Pinned tolerances.
constexpr size_t kMinRealElfs = 10;
constexpr double kRoundTripSeconds = 10;
constexpr size_t kNopPerBudget = 100;
constexpr uint32_t kNopTrials = 50;
constexpr double kNopMean20Lo = 4, kNopMean20Hi = 10;     // 7 +- 3
constexpr double kNopMean100Lo = 15, kNopMean100Hi = 35;  // 25 +- 10
constexpr double kNopSeconds = 120;
constexpr unsigned kMinCorpusFunctions = 30;
constexpr uint32_t kEquivTrials = 100;
constexpr double kInplaceSeconds = 300;
constexpr int kRandomBlocks = 200;
constexpr size_t kMaxBlockInstructions = 8;
constexpr int kJunkImplants = 100;
constexpr double kJunk20Lo = 3, kJunk20Hi = 9;     // 6 +- 3
constexpr double kJunk100Lo = 9, kJunk100Hi = 23;  // 16 +- 7
constexpr int kTriggerPairs = 50;
constexpr double kTriggerThreshold = 0.9;
constexpr uint64_t kTriggerBudget = 100;
constexpr double kTriggerRate = 0.9;
constexpr double kTriggerSeconds = 300;
constexpr int kMetricMatrices = 1000;
constexpr double kFlagSeconds = 60;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool is_elf64(const std::filesystem::path& p) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec) || std::filesystem::file_size(p, ec) < 64) return false;
  FILE* f = std::fopen(p.c_str(), "rb");
  if (!f) return false;
  unsigned char h[5] = {};
  const size_t n = std::fread(h, 1, 5, f);
  std::fclose(f);
  return n == 5 && h[0] == 0x7f && h[1] == 'E' && h[2] == 'L' && h[3] == 'F' && h[4] == 2;
}

// 1 -------------------------------------------------------------------------
Outcome elf_roundtrip(const std::filesystem::path& scratch) {
  std::vector<std::filesystem::path> files;
  for (const char* dir : {"/usr/bin", "/bin", "/usr/sbin"}) {
    if (!std::filesystem::exists(dir)) continue;
    std::vector<std::filesystem::path> here;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (is_elf64(e.path())) here.push_back(e.path());
    std::sort(here.begin(), here.end());
    for (const auto& p : here) {
      if (files.size() >= 12) break;
      files.push_back(p);
    }
  }
  for (const auto& p : build_fixtures(scratch / "fixtures")) files.push_back(p);
  const auto t0 = Clock::now();
  size_t ok = 0;
  std::string first_bad;
  for (const auto& p : files) {
    try {
      const Bytes raw = read_file(p);
      if (serialize(parse_elf(raw, p.string())) == raw)
        ++ok;
      else if (first_bad.empty())
        first_bad = p.string();
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = p.string() + " (" + e.what() + ")";
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = ok == files.size() && files.size() >= kMinRealElfs && secs < kRoundTripSeconds;
  return {pass, fmt("%zu/%zu byte-identical, %.2fs%s%s", ok, files.size(), secs, first_bad.empty() ? "" : ", first mismatch ",
                    first_bad.c_str())};
}

// 2 -------------------------------------------------------------------------
Outcome semnop_identity() {
  const auto t0 = Clock::now();
  const NopGrammar g = build_grammar();
  const std::vector<uint64_t> budgets{20, 40, 60, 80, 100};
  const auto pool = generate_pool(g, budgets, kNopPerBudget, 2024);
  std::set<Bytes> distinct;
  size_t failures = 0;
  std::map<uint64_t, double> insns;
  for (size_t i = 0; i < pool.size(); ++i) {
    distinct.insert(pool[i].bytes);
    if (!verify_identity(pool[i].bytes, kNopTrials, 1000 + i)) ++failures;
    insns[pool[i].budget] += static_cast<double>(pool[i].instruction_count);
  }
  const double m20 = insns[20] / kNopPerBudget, m100 = insns[100] / kNopPerBudget;
  const double secs = seconds_since(t0);
  const bool pass = distinct.size() == budgets.size() * kNopPerBudget && failures == 0 && m20 >= kNopMean20Lo &&
                    m20 <= kNopMean20Hi && m100 >= kNopMean100Lo && m100 <= kNopMean100Hi && secs < kNopSeconds;
  return {pass, fmt("%zu unique, %zu identity failures, mean insns %.2f@20 %.2f@100, %.1fs", distinct.size(), failures,
                    m20, m100, secs)};
}

// 3 -------------------------------------------------------------------------
Outcome inplace_equivalence() {
  const auto t0 = Clock::now();
  const BinaryImage& img = corpus_image(0);
  size_t counterexamples = 0, length_changes = 0;
  std::ostringstream per;
  std::string first;
  for (Technique t : {Technique::Subst, Technique::IntraReorder, Technique::PreserveReorder, Technique::RegReassign}) {
    BinaryImage v = img;
    const auto reports = apply_all_inplace(v, nullptr, 60.0, 0, {t});
    size_t changed = 0;
    for (const auto& r : reports) changed += r.sites_transformed > 0;
    for (const auto& f : img.functions) {
      if (v.function(f.name).length != f.length) ++length_changes;
      const auto res = function_equivalent(img, v, f.name, comparable_registers(t), kEquivTrials, 99);
      if (!res) {
        ++counterexamples;
        if (first.empty()) first = std::string(to_string(t)) + ":" + f.name + " " + res.counterexample->cause;
      }
    }
    per << to_string(t) << "=" << changed << " ";
  }
  const double secs = seconds_since(t0);
  const bool pass = img.functions.size() >= kMinCorpusFunctions && counterexamples == 0 && length_changes == 0 &&
                    secs < kInplaceSeconds;
  return {pass, fmt("%zu functions, transformed per technique: %s, %zu counterexamples, %zu length changes, %.2fs%s%s",
                    img.functions.size(), per.str().c_str(), counterexamples, length_changes, secs,
                    first.empty() ? "" : ", first ", first.c_str())};
}

// 4 -------------------------------------------------------------------------
Outcome intra_block_orders() {
  Rng rng(404);
  size_t violations = 0, reordered = 0, sampled = 0;
  for (int t = 0; t < kRandomBlocks; ++t) {
    const Bytes code = random_block(rng, 1 + rng.below(kMaxBlockInstructions - 1));
    const FunctionView fn = disassemble_function("b", 0x401000, code);
    const auto live = compute_liveness(fn);
    const BasicBlock& b = fn.blocks[0];
    const auto valid = all_valid_orders(b, live.live_out.back());
    std::set<Bytes> valid_bytes;
    for (const auto& order : valid) valid_bytes.insert(relayout_block(b, order));

    const auto deps = block_dependences(b, live, 0);
    for (int s = 0; s < 10; ++s, ++sampled)
      if (!order_is_valid(b, live.live_out.back(), sample_topological_order(deps, rng))) ++violations;

    const auto r = reorder_intra_bb(fn, live, rng);
    if (r.code != code) ++reordered;
    if (!valid_bytes.count(r.code)) ++violations;
  }
  return {violations == 0, fmt("%d blocks (<= %zu insns), %zu sampled orders plus %zu rewritten blocks checked, %zu violations",
                               kRandomBlocks, kMaxBlockInstructions, sampled, reordered, violations)};
}

// 5 -------------------------------------------------------------------------
Outcome block_reordering() {
  size_t applied = 0, problems = 0, rel8 = 0;
  std::string first;
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const BinaryImage& img = corpus_image(seed);
    for (const auto& f : img.functions) {
      Rng rng(technique_seed(seed, f.name, Technique::BlockReorder));
      const auto plan = plan_reorder(f, rng);
      if (!plan.feasible || plan.identity()) continue;
      BinaryImage v = img;
      apply_reorder(v, f.name, plan);
      ++applied;
      const FunctionView& nf = v.function(f.name);
      std::string why = check_reordered(f, nf, plan.permutation);
      if (why.empty()) {
        const auto res = function_equivalent(img, v, f.name, RegSet::all(), kEquivTrials, seed);
        if (!res) why = "emulator: " + res.counterexample->cause;
      }
      for (const auto* in : nf.instructions()) {
        if (in->rel_width != 8 || !in->branch_target) continue;
        ++rel8;
        const int64_t disp = static_cast<int64_t>(*in->branch_target) - static_cast<int64_t>(in->end());
        if (disp < -128 || disp > 127) why = "rel8 out of range";
      }
      if (!why.empty()) {
        ++problems;
        if (first.empty()) first = f.name + ": " + why;
      }
    }
  }
  return {applied > 0 && problems == 0, fmt("%zu plans applied over 4 corpora, %zu rel8 branches checked, %zu problems%s%s",
                                            applied, rel8, problems, first.empty() ? "" : ", first ", first.c_str())};
}

// 6 -------------------------------------------------------------------------
Outcome junk_insertion() {
  const BinaryImage& img = corpus_image(0);
  const auto snap = snapshot_of(img);
  size_t executed = 0, bad_landing = 0;
  std::map<uint64_t, std::pair<double, int>> counts;
  for (int i = 0; i < kJunkImplants; ++i) {
    const uint64_t budget = i % 2 ? 100 : 20;
    const FunctionView& f = img.functions[static_cast<size_t>(i) % img.functions.size()];
    BinaryImage v = img;
    Rng rng(Rng::mix(6, static_cast<uint64_t>(i)));
    const Bytes junk = generate_junk(budget - skip_jump_length(f.padding_region->length), rng);
    const auto r = implant(v, ImplantSpec::make(f.name, junk, PayloadKind::JunkCode, budget));
    counts[budget].first += static_cast<double>(decode_all(junk).size());
    counts[budget].second += 1;
    const FunctionView& nf = v.function(f.name);
    EmuConfig cfg;
    cfg.trace = true;
    cfg.snapshot = snap;
    Rng srng(static_cast<uint64_t>(i));
    const auto trace = run(v.bytes_at(nf.start, nf.length), nf.start, 0, random_state(srng), cfg).trace;
    const auto at = std::find(trace.begin(), trace.end(), r.placeholder_start);
    if (at == trace.end() || at + 1 == trace.end() || *(at + 1) != r.resume_address) ++bad_landing;
    for (uint64_t a : trace)
      if (a >= r.payload_address && a < r.resume_address) ++executed;
  }
  const double m20 = counts[20].first / counts[20].second, m100 = counts[100].first / counts[100].second;
  const bool pass = executed == 0 && bad_landing == 0 && m20 >= kJunk20Lo && m20 <= kJunk20Hi && m100 >= kJunk100Lo &&
                    m100 <= kJunk100Hi;
  return {pass, fmt("%d implants, %zu payload instructions executed, %zu wrong landings, mean insns %.2f@20 %.2f@100",
                    kJunkImplants, executed, bad_landing, m20, m100)};
}

// 7 -------------------------------------------------------------------------
InstructionDistribution target_distribution(const InstructionDistribution& whole, const Tokens& target) {
  std::map<std::string, double> count;
  for (const auto& t : target) count[t] += 1;
  InstructionDistribution d;
  d.source = "target";
  for (const auto& it : whole.items) {
    if (!count.count(it.token)) continue;
    DistributionItem copy = it;
    copy.weight = count[it.token];
    d.items.push_back(copy);
  }
  return d;
}

Outcome trigger_search() {
  const auto t0 = Clock::now();
  NgramOracle oracle;
  size_t reached = 0, argmax_bad = 0, nondeterministic = 0, missing_tokens = 0;
  double prefix_insns = 0, prefix_bytes = 0;
  for (int i = 0; i < kTriggerPairs; ++i) {
    const BinaryImage& img = corpus_image(static_cast<uint64_t>(i / 25));
    const size_t n = img.functions.size();
    const FunctionView& victim = img.functions[static_cast<size_t>(i) % n];
    const FunctionView& target = img.functions[(static_cast<size_t>(i) * 7 + 3) % n];
    const Tokens vt = tokenize(img, victim).tokens, tt = tokenize(img, target).tokens;
    const auto dist = target_distribution(extract_distribution(img), tt);
    std::set<std::string> have;
    for (const auto& it : dist.items) have.insert(it.token);
    for (const auto& t : tt) missing_tokens += !have.count(t);
    TriggerSearchOptions opt;
    opt.budget = kTriggerBudget;
    opt.threshold = kTriggerThreshold;
    opt.num_candidates = kDefaultNumCandidates;
    Rng a(static_cast<uint64_t>(i)), b(static_cast<uint64_t>(i));
    const auto st = sample_fp_trigger(oracle, dist, vt, tt, opt, a);
    const auto again = sample_fp_trigger(oracle, dist, vt, tt, opt, b);
    if (again.prefix != st.prefix || again.prefix_bytes != st.prefix_bytes) ++nondeterministic;
    if (st.outcome == SearchOutcome::ThresholdReached) {
      ++reached;
      prefix_insns += static_cast<double>(st.prefix.size());
      prefix_bytes += static_cast<double>(st.prefix_bytes.size());
    }
    for (size_t k = 0; k < st.iterations.size(); ++k) {
      const auto& log = st.iterations[k];
      const double best = *std::max_element(log.scores.begin(), log.scores.end());
      bool ok = log.scores[log.chosen] == best && st.prefix[k] == log.items[log.chosen];
      for (size_t j = 0; j < log.chosen; ++j) ok = ok && log.scores[j] < best;
      argmax_bad += !ok;
    }
  }
  const double rate = static_cast<double>(reached) / kTriggerPairs;
  const double secs = seconds_since(t0);
  const bool pass = rate >= kTriggerRate && argmax_bad == 0 && nondeterministic == 0 && secs < kTriggerSeconds;
  return {pass, fmt("reached %.2f on %zu/%d pairs (need %.0f%%), mean successful prefix %.2f insns / %.2f bytes, "
                    "%zu argmax violations, %zu non-reproducible, %zu target tokens without a sampleable item, %.1fs",
                    kTriggerThreshold, reached, kTriggerPairs, kTriggerRate * 100,
                    reached ? prefix_insns / static_cast<double>(reached) : 0.0,
                    reached ? prefix_bytes / static_cast<double>(reached) : 0.0, argmax_bad, nondeterministic,
                    missing_tokens, secs)};
}

// 8 -------------------------------------------------------------------------
Outcome metrics_correctness() {
  Rng rng(808);
  size_t mismatches = 0;
  for (int t = 0; t < kMetricMatrices; ++t) {
    const uint64_t c[4] = {rng.below(40), rng.below(40), rng.below(40), rng.below(40)};
    std::vector<PairRecord> pairs;
    const PairLabel labels[4][2] = {{PairLabel::Similar, PairLabel::Similar},
                                {PairLabel::Dissimilar, PairLabel::Similar},
                                {PairLabel::Dissimilar, PairLabel::Dissimilar},
                                {PairLabel::Similar, PairLabel::Dissimilar}};
    for (int k = 0; k < 4; ++k)
      for (uint64_t j = 0; j < c[k]; ++j) {
        PairRecord p;
        p.label = labels[k][0];
        p.prediction = labels[k][1];
        p.transformation = "x";
        pairs.push_back(p);
      }
    rng.shuffle(std::span<PairRecord>(pairs));
    const auto rows = compute_metrics(pairs);
    if (pairs.empty()) {
      mismatches += !rows.empty();
      continue;
    }
    const auto& r = rows.at(0);
    const double tp = static_cast<double>(c[0]), fp = static_cast<double>(c[1]), fn = static_cast<double>(c[3]);
    const double p = tp + fp > 0 ? tp / (tp + fp) : 0.0;
    const double rc = tp + fn > 0 ? tp / (tp + fn) : 0.0;
    const double f1 = p + rc > 0 ? 2 * p * rc / (p + rc) : 0.0;
    if (r.tp != c[0] || r.fp != c[1] || r.tn != c[2] || r.fn != c[3] || r.precision != p || r.recall != rc || r.f1 != f1)
      ++mismatches;
  }

  // Semantic-NOP sweep with untransformed negatives.
  const BinaryImage& img = corpus_image(0);
  std::map<FunctionRef, Tokens> tokens;
  std::map<std::string, std::vector<std::string>> baseline{{img.path, {}}};
  for (const auto& f : img.functions) {
    baseline[img.path].push_back(f.name);
    tokens[{img.path, f.name}] = tokenize(img, f).tokens;
  }
  const NopGrammar g = build_grammar();
  auto make = [&](double budget) {
    BinaryImage v = img;
    v.path = "nop_" + std::to_string(static_cast<int>(budget));
    VariantManifest m{v.path, img.path, "nop", budget, 8, {}};
    for (const auto& f : img.functions) {
      Rng r(technique_seed(static_cast<uint64_t>(budget), f.name, Technique::Subst));
      const auto nop = derive_sequence(g, static_cast<uint64_t>(budget), r);
      implant(v, ImplantSpec::make(f.name, nop.bytes, PayloadKind::SemanticNop, static_cast<uint64_t>(budget)));
      m.linkage[f.name] = f.name;
    }
    for (const auto& f : v.functions) tokens[{v.path, f.name}] = tokenize(v, f).tokens;
    return std::vector<VariantManifest>{m};
  };
  TokenLookup lookup = [&](const FunctionRef& r) -> const Tokens* {
    auto it = tokens.find(r);
    return it == tokens.end() ? nullptr : &it->second;
  };
  NgramOracle oracle;
  const auto rep = budget_sweep("nop", kDefaultBudgets, baseline, make, oracle, lookup, {1.0, false}, 8);
  bool negatives_fixed = true;
  std::ostringstream curve;
  for (const auto& r : rep.rows) {
    negatives_fixed = negatives_fixed && r.fp == rep.rows[0].fp && r.tn == rep.rows[0].tn;
    curve << fmt("%g:P=%.3f/R=%.3f ", r.budget, r.precision, r.recall);
  }
  const bool pass = mismatches == 0 && rep.precision_constant && negatives_fixed;
  return {pass, fmt("%d random matrices, %zu mismatches; sweep %s(fp=%llu tn=%llu at every budget, negatives %s), "
                    "%zu recall trend violations",
                    kMetricMatrices, mismatches, curve.str().c_str(),
                    static_cast<unsigned long long>(rep.rows.empty() ? 0 : rep.rows[0].fp),
                    static_cast<unsigned long long>(rep.rows.empty() ? 0 : rep.rows[0].tn),
                    negatives_fixed ? "fixed" : "varying", rep.trend_violations.size())};
}

// 9 -------------------------------------------------------------------------
Outcome flag_fidelity() {
  const auto t0 = Clock::now();
  size_t mismatches = 0, runs = 0;
  Rng rng(909);
  for (AluOp op : {AluOp::Add, AluOp::Sub, AluOp::Cmp}) {
    Assembler a(0x401000);
    a.alu(op, Reg::Rax, Reg::Rbx, Width::B);
    a.ret();
    const Bytes code = a.finish();
    for (unsigned x = 0; x < 256; ++x) {
      for (unsigned y = 0; y < 256; ++y) {
        MachineState s = random_state(rng);
        s.reg(Reg::Rax) = (s.reg(Reg::Rax) & ~0xFFULL) | x;
        s.reg(Reg::Rbx) = (s.reg(Reg::Rbx) & ~0xFFULL) | y;
        const uint64_t before = s.reg(Reg::Rax);
        const MachineState out = run(code, 0x401000, 0, s).state;
        ++runs;
        const RefFlags r = op == AluOp::Add ? ref_add(x, y, 8) : ref_sub(x, y, 8);
        const uint64_t want = op == AluOp::Cmp ? before : (before & ~0xFFULL) | r.result;
        const bool ok = out.flag(Flag::CF) == r.cf && out.flag(Flag::PF) == r.pf && out.flag(Flag::AF) == r.af &&
                        out.flag(Flag::ZF) == r.zf && out.flag(Flag::SF) == r.sf && out.flag(Flag::OF) == r.of &&
                        out.undefined.empty() && out.reg(Reg::Rax) == want;
        mismatches += !ok;
      }
    }
  }
  const double secs = seconds_since(t0);
  return {mismatches == 0 && secs < kFlagSeconds,
          fmt("%zu add/sub/cmp 8-bit runs, %zu mismatches, %.2fs", runs, mismatches, secs)};
}

// 10 ------------------------------------------------------------------------
Outcome pipeline_determinism(const std::filesystem::path& scratch) {
  std::vector<std::filesystem::path> inputs{write_corpus(scratch, 0)};
  for (const auto& p : build_fixtures(scratch / "fixtures10")) inputs.push_back(p);
  RunConfig cfg;
  cfg.seed = 10;
  cfg.output_dir = scratch / "run";
  const auto r1 = run_pipeline(cfg, inputs);
  const auto first = read_tree(cfg.output_dir);
  const auto r2 = run_pipeline(cfg, inputs);
  const auto second = read_tree(cfg.output_dir);
  size_t differing = 0;
  for (const auto& [k, v] : first) {
    auto it = second.find(k);
    differing += it == second.end() || it->second != v;
  }
  differing += second.size() > first.size() ? second.size() - first.size() : 0;
  const bool pass = !first.empty() && first == second && r1.exit_code() == 0 && r2.exit_code() == 0;
  return {pass, fmt("%zu inputs, %zu files, %zu variants, %zu differing files, exit codes %d/%d", inputs.size(),
                    first.size(), r1.variants, differing, r1.exit_code(), r2.exit_code())};
}

}  // namespace

int main() {
  const auto scratch = scratch_dir("acceptance");
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"elf_roundtrip", [&] { return elf_roundtrip(scratch); }},
      {"semantic_nop_identity", semnop_identity},
      {"inplace_equivalence", inplace_equivalence},
      {"intra_block_order_validity", intra_block_orders},
      {"block_reordering", block_reordering},
      {"junk_insertion", junk_insertion},
      {"fp_trigger_search", trigger_search},
      {"metrics_correctness", metrics_correctness},
      {"emulator_flag_fidelity", flag_fidelity},
      {"pipeline_determinism", [&] { return pipeline_determinism(scratch); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::filesystem::remove_all(scratch);
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
