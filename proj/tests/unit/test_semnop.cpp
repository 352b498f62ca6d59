#include <gtest/gtest.h>

#include <set>

#include "binvar/assembler.hpp"
#include "binvar/error.hpp"
#include "binvar/semnop.hpp"

using namespace binvar;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST(Grammar, ReducedStatesAndPairedProductions) {
  const NopGrammar g = build_grammar();
  EXPECT_EQ(g.nonterminals, (std::vector<NopState>{NopState::S, NopState::S_ef, NopState::S_ef_r}));
  EXPECT_EQ(g.start, NopState::S);
  bool save_flags = false, push_reg = false, add_sub = false;
  for (const auto& p : g.productions) {
    save_flags |= p.lhs == NopState::S && p.id == ProductionId::SaveFlags;
    push_reg |= p.lhs == NopState::S_ef && p.id == ProductionId::PushReg;
    add_sub |= p.lhs == NopState::S_ef_r && p.id == ProductionId::AddSub;
    // Flag-clobbering terminals only appear once flags are saved.
    if (p.lhs == NopState::S) EXPECT_NE(p.id, ProductionId::FlagOnly);
    if (p.id == ProductionId::Clobber) EXPECT_EQ(p.lhs, NopState::S_ef_r);
  }
  EXPECT_TRUE(save_flags && push_reg && add_sub);
  for (NopState s : g.nonterminals) EXPECT_FALSE(g.for_state(s).empty());
  EXPECT_FALSE(g.pool.contains(Reg::Rsp));
  EXPECT_FALSE(g.pool.contains(Reg::Rbp));
  EXPECT_TRUE(build_grammar({.allow_rbp = true}).pool.contains(Reg::Rbp));
}

TEST(Derive, BudgetOneIsSingleNop) {
  const NopGrammar g = build_grammar();
  Rng rng(0);
  const auto s = derive_sequence(g, 1, rng);
  EXPECT_EQ(s.bytes, Bytes{0x90});
  EXPECT_EQ(s.instruction_count, 1u);
}

TEST(Derive, ExactLengthAndIdentity) {
  const NopGrammar g = build_grammar();
  for (uint64_t budget : {2, 5, 17, 40, 100, 300}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      const auto s = derive_sequence(g, budget, rng);
      EXPECT_EQ(s.bytes.size(), budget);
      EXPECT_EQ(s.byte_len, budget);
      EXPECT_EQ(s.asm_lines.size(), s.instruction_count);
      std::string why;
      EXPECT_TRUE(verify_identity(s.bytes, 20, seed + 100, &why)) << why << "\n" << s.asm_text();
      EXPECT_EQ(check_balanced(s.bytes), "") << s.asm_text();
      ASSERT_TRUE(s.derivation);
      EXPECT_NE(s.derivation->production, ProductionId::Empty);
      EXPECT_LE(s.derivation->nesting(), g.max_depth);
    }
  }
}

TEST(Derive, LargeBudgetsUseFlagSavingShape) {
  const NopGrammar g = build_grammar();
  int wrapped = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto s = derive_sequence(g, 100, rng);
    const std::string text = s.asm_text();
    wrapped += text.find("pushfq") != std::string::npos && text.find("popfq") != std::string::npos;
  }
  EXPECT_GT(wrapped, 25);
}

TEST(Derive, BudgetErrors) {
  const NopGrammar g = build_grammar();
  Rng rng(0);
  EXPECT_EQ(kind_of([&] { derive_sequence(g, 0, rng); }), ErrorKind::BudgetTooSmall);
  EXPECT_EQ(kind_of([&] { derive_sequence(g, kMaxNopBudget + 1, rng); }), ErrorKind::InvalidArgument);
}

TEST(Derive, SameSeedSameBytes) {
  const NopGrammar g = build_grammar();
  Rng a(77), b(77);
  EXPECT_EQ(derive_sequence(g, 60, a).bytes, derive_sequence(g, 60, b).bytes);
}

TEST(Identity, RejectsNonIdentities) {
  EXPECT_FALSE(verify_identity(from_hex("4883c001"), 5, 0));  // add rax, 1
  EXPECT_FALSE(verify_identity(from_hex("50"), 5, 0));        // push rax
  EXPECT_FALSE(verify_identity(from_hex("4839d8"), 5, 0));    // cmp rax, rbx
  EXPECT_TRUE(verify_identity(from_hex("9c4839d89d"), 5, 0));
  EXPECT_TRUE(verify_identity(from_hex("904889c0"), 5, 0));
}

TEST(Balance, DetectsUnmatchedPairs) {
  EXPECT_EQ(check_balanced(from_hex("9c535b9d")), "");
  EXPECT_NE(check_balanced(from_hex("53")), "");
  EXPECT_NE(check_balanced(from_hex("9c535d9d")), "");
  EXPECT_NE(check_balanced(from_hex("9c4883c0059d")), "");
  EXPECT_EQ(check_balanced(from_hex("9c4883c0054883e8059d")), "");
  EXPECT_NE(check_balanced(from_hex("539c5b9d")), "");
}

TEST(Pool, DedupeKeepsFirst) {
  SemNopSequence a, b, c;
  a.bytes = {0x90};
  a.rng_seed = 1;
  b.bytes = {0x90};
  b.rng_seed = 2;
  c.bytes = {0x90, 0x90};
  const auto out = dedupe_pool({a, b, c});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].rng_seed, 1u);
}

TEST(Pool, UniqueAcrossBudgets) {
  const NopGrammar g = build_grammar();
  const auto pool = generate_pool(g, {20, 40}, 60, 5);
  ASSERT_EQ(pool.size(), 120u);
  std::set<Bytes> distinct;
  for (const auto& s : pool) distinct.insert(s.bytes);
  EXPECT_EQ(distinct.size(), 120u);
  EXPECT_EQ(generate_pool(g, {20, 40}, 60, 5)[37].bytes, pool[37].bytes);
}

TEST(Pool, TinyBudgetExhausts) {
  const NopGrammar g = build_grammar();
  EXPECT_EQ(kind_of([&] { generate_pool(g, {2}, 500, 0, 20); }), ErrorKind::PoolExhausted);
}
