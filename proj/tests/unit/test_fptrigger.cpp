#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "binvar/assembler.hpp"
#include "binvar/elf_writer.hpp"
#include "binvar/fptrigger.hpp"
#include "test_util.hpp"

using namespace binvar;
using namespace binvar::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

BinaryImage image_of(const std::vector<std::string>& hex_functions) {
  ElfBuilder b;
  int i = 0;
  for (const auto& h : hex_functions) b.add_function("f" + std::to_string(i++), from_hex(h));
  return parse_elf(b.build(), "dist");
}

Tokens tokens_of(const BinaryImage& img, const std::string& name) { return tokenize(img, img.function(name)).tokens; }

void expect_argmax_logs(const TriggerSearchState& st) {
  ASSERT_EQ(st.iterations.size(), st.prefix.size());
  ASSERT_EQ(st.best_score_history.size(), st.prefix.size());
  for (size_t k = 0; k < st.iterations.size(); ++k) {
    const CandidateLog& log = st.iterations[k];
    ASSERT_EQ(log.items.size(), log.scores.size());
    ASSERT_LT(log.chosen, log.items.size());
    const double best = *std::max_element(log.scores.begin(), log.scores.end());
    EXPECT_EQ(log.scores[log.chosen], best);
    for (size_t i = 0; i < log.chosen; ++i) EXPECT_LT(log.scores[i], best);
    EXPECT_EQ(st.prefix[k], log.items[log.chosen]);
    EXPECT_EQ(st.best_score_history[k], best);
  }
}

}  // namespace

TEST(Distribution, CountsTokens) {
  const auto img = image_of({"9090c3"});
  const auto d = extract_distribution(img);
  ASSERT_EQ(d.items.size(), 2u);
  EXPECT_EQ(d.weight_of("nop"), 2);
  EXPECT_EQ(d.weight_of("ret"), 1);
  EXPECT_FALSE(d.items[1].materializable);
  const auto two = extract_distribution(image_of({"9090c3", "90c3"}));
  EXPECT_EQ(two.weight_of("nop"), 3);
  EXPECT_EQ(two.weight_of("ret"), 2);
}

TEST(Distribution, MatchesIndependentCount) {
  const BinaryImage& img = corpus_image(4);
  std::map<std::string, double> count;
  for (const auto& f : img.functions) {
    const Bytes code(img.bytes_at(f.start, f.length).begin(), img.bytes_at(f.start, f.length).end());
    const uint64_t skip_lo = f.start + f.padding_region->offset;
    const uint64_t skip_hi = skip_lo + f.padding_region->length;
    for (const auto& in : decode_all(code, f.start))
      if (in.address < skip_lo || in.address >= skip_hi) count[normalize_instruction(in, &img)] += 1;
  }
  const auto d = extract_distribution(img);
  ASSERT_EQ(d.items.size(), count.size());
  for (const auto& it : d.items) EXPECT_EQ(it.weight, count[it.token]) << it.token;
  EXPECT_EQ(kind_of([] { extract_distribution(BinaryImage{}); }), ErrorKind::EmptyImage);
}

TEST(Distribution, BranchesGetNeutralEncodings) {
  const auto img = image_of({"7400" "e800000000" "eb00" "c3", "c3"});
  const auto d = extract_distribution(img);
  for (const auto& it : d.items) {
    if (it.token == "je label") EXPECT_EQ(to_hex(it.encoding), "0f8400000000");
    if (it.token == "jmp label") EXPECT_EQ(to_hex(it.encoding), "e900000000");
    if (it.token == "call innerfunc") EXPECT_EQ(to_hex(it.encoding), "e800000000");
    if (it.token == "ret") EXPECT_FALSE(it.materializable);
  }
}

TEST(Candidates, DistinctAndMaterializable) {
  const auto d = extract_distribution(corpus_image(0));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto c = draw_candidates(d, 20, rng);
    EXPECT_EQ(c.size(), std::min<size_t>(20, d.items.size()));
    std::vector<size_t> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (size_t i : c) EXPECT_TRUE(d.items[i].materializable);
  }
}

TEST(Search, VictimEqualsTarget) {
  const BinaryImage& img = corpus_image(0);
  const auto d = extract_distribution(img);
  NgramOracle o;
  Rng rng(0);
  const Tokens t = tokens_of(img, img.functions[3].name);
  const auto st = sample_fp_trigger(o, d, t, t, {}, rng);
  EXPECT_EQ(st.outcome, SearchOutcome::ThresholdReached);
  EXPECT_EQ(st.initial_score, 1.0);
  EXPECT_TRUE(st.prefix.empty());
}

TEST(Search, ZeroBudget) {
  const BinaryImage& img = corpus_image(0);
  const auto d = extract_distribution(img);
  NgramOracle o;
  Rng rng(0);
  TriggerSearchOptions opt;
  opt.budget = 0;
  const auto st = sample_fp_trigger(o, d, tokens_of(img, img.functions[0].name), tokens_of(img, img.functions[1].name),
                                    opt, rng);
  EXPECT_EQ(st.outcome, SearchOutcome::BudgetExhausted);
  EXPECT_TRUE(st.prefix.empty());
}

TEST(Search, Errors) {
  NgramOracle o;
  Rng rng(0);
  const auto d = extract_distribution(image_of({"9090c3"}));
  TriggerSearchOptions opt;
  opt.num_candidates = 0;
  EXPECT_EQ(kind_of([&] { sample_fp_trigger(o, d, {"a"}, {"b"}, opt, rng); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { sample_fp_trigger(o, d, {}, {"b"}, {}, rng); }), ErrorKind::EmptyFunction);
  EXPECT_EQ(kind_of([&] { sample_fp_trigger(o, InstructionDistribution{}, {"a"}, {"b"}, {}, rng); }),
            ErrorKind::EmptyDistribution);
}

TEST(Search, ArgmaxLogsAndDeterminism) {
  const BinaryImage& img = corpus_image(0);
  const auto d = extract_distribution(img);
  NgramOracle o;
  for (int p = 0; p < 5; ++p) {
    const Tokens v = tokens_of(img, img.functions[2 * p].name), t = tokens_of(img, img.functions[2 * p + 1].name);
    TriggerSearchOptions opt;
    opt.budget = 30;
    Rng a(p), b(p);
    const auto s1 = sample_fp_trigger(o, d, v, t, opt, a);
    const auto s2 = sample_fp_trigger(o, d, v, t, opt, b);
    EXPECT_EQ(s1.prefix, s2.prefix);
    EXPECT_EQ(s1.best_score_history, s2.best_score_history);
    expect_argmax_logs(s1);
    EXPECT_LE(s1.prefix.size(), opt.budget);
    EXPECT_NE(s1.outcome, SearchOutcome::Running);
    if (s1.outcome == SearchOutcome::ThresholdReached) EXPECT_GE(s1.final_score(), opt.threshold);
    if (s1.outcome == SearchOutcome::BudgetExhausted) EXPECT_EQ(s1.prefix.size(), opt.budget);
    for (const auto& log : s1.iterations) EXPECT_EQ(log.items.size(), kDefaultNumCandidates);
  }
}

TEST(Search, ByteBudget) {
  const BinaryImage& img = corpus_image(0);
  const auto d = extract_distribution(img);
  NgramOracle o;
  Rng rng(2);
  TriggerSearchOptions opt;
  opt.unit = BudgetUnit::Bytes;
  opt.budget = 40;
  opt.threshold = 1.0;
  const auto st = sample_fp_trigger(o, d, tokens_of(img, img.functions[0].name),
                                    tokens_of(img, img.functions[1].name), opt, rng);
  EXPECT_LE(st.prefix_bytes.size(), 40u);
  EXPECT_EQ(st.used(), st.prefix_bytes.size());
}

TEST(Materialize, LayoutAndTrace) {
  const BinaryImage& orig = corpus_image(0);
  const auto d = extract_distribution(orig);
  NgramOracle o;
  Rng rng(5);
  TriggerSearchOptions opt;
  opt.budget = 14;
  opt.threshold = 1.0;
  const std::string victim = orig.functions[0].name;
  const auto st = sample_fp_trigger(o, d, tokens_of(orig, victim), tokens_of(orig, orig.functions[7].name), opt, rng);
  ASSERT_EQ(st.prefix.size(), 14u);

  BinaryImage img = orig;
  const auto r = materialize_trigger(img, victim, st);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->jump_length, 2u);
  const auto prefix = img.bytes_at(r->payload_address, st.prefix_bytes.size());
  EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), st.prefix_bytes.begin()));
  size_t gap = 0;
  const auto insns = decode_all(st.prefix_bytes, r->payload_address, &gap);
  EXPECT_EQ(gap, st.prefix_bytes.size());
  EXPECT_EQ(insns.size(), 14u);
  for (const auto& in : insns)
    EXPECT_TRUE(in.flow == Flow::None || in.flow == Flow::Jump || in.flow == Flow::CondJump || in.flow == Flow::Call);
  for (uint64_t a = r->payload_address + st.prefix_bytes.size(); a < r->resume_address; ++a)
    EXPECT_EQ(img.bytes_at(a, 1)[0], 0x90);

  const auto& f = img.function(victim);
  Rng srng(1);
  EmuConfig cfg;
  cfg.trace = true;
  const auto snap = snapshot_of(img);
  cfg.snapshot = snap;
  const auto trace = run(img.bytes_at(f.start, f.length), f.start, 0, random_state(srng), cfg).trace;
  EXPECT_EQ(trace[0], r->placeholder_start);
  EXPECT_EQ(trace[1], r->resume_address);
  EXPECT_TRUE(function_equivalent(orig, img, victim, RegSet::all(), 20));

  // The attacked tokens are exactly jmp + prefix + victim.
  Tokens expect{"jmp label"};
  expect.insert(expect.end(), st.prefix_tokens.begin(), st.prefix_tokens.end());
  const Tokens base = tokens_of(orig, victim);
  expect.insert(expect.end(), base.begin(), base.end());
  EXPECT_EQ(tokens_of(img, victim), expect);
}

TEST(Materialize, EmptyPrefixIsNoOp) {
  BinaryImage img = corpus_image(0);
  const Bytes before = img.raw;
  EXPECT_FALSE(materialize_trigger(img, img.functions[0].name, TriggerSearchState{}));
  EXPECT_EQ(img.raw, before);
}

TEST(Transfer, SingleOracleIsOneMinusAsr) {
  NgramOracle ref, ref_again, tri(3);
  std::vector<TriggeredPair> corpus{
      {{"a", "b", "c"}, {"a", "b", "c"}, true},
      {{"a", "b", "c"}, {"x", "y"}, true},
      {{"a", "b", "c", "d"}, {"a", "b", "c"}, true},
      {{"p", "q"}, {"r", "s"}, true},
  };
  const auto rows = transfer_matrix({&ref, &ref_again, &tri}, corpus);
  ASSERT_EQ(rows.size(), 3u);
  size_t similar = 0;
  for (const auto& p : corpus) similar += ref.similar(reference_score(p.variant, p.target));
  EXPECT_DOUBLE_EQ(rows[0].accuracy, 1.0 - static_cast<double>(similar) / corpus.size());
  EXPECT_EQ(rows[0].predicted_similar, rows[1].predicted_similar);
  EXPECT_DOUBLE_EQ(rows[0].accuracy, rows[1].accuracy);
  EXPECT_EQ(rows[2].oracle, "ref3");
}
