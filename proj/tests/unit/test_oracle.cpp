#include <gtest/gtest.h>

#include <cmath>

#include "binvar/assembler.hpp"
#include "binvar/elf_writer.hpp"
#include "binvar/oracle.hpp"
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

std::string stub(const std::string& args) { return std::string(BINVAR_ORACLE_STUB) + " " + args; }

std::string norm(const std::string& hex, uint64_t addr = 0x1000) { return normalize_instruction(*decode(from_hex(hex), addr)); }

}  // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(norm("488d3551970200"), "lea reg8 [addr]");  // lea rsi, [rip+0x29751]
  EXPECT_EQ(norm("90"), "nop");
  EXPECT_EQ(norm("4889d8"), "mov reg8 reg8");
  EXPECT_EQ(norm("83c007"), "add reg4 imm");
  EXPECT_EQ(norm("6689c8"), "mov reg2 reg2");
  EXPECT_EQ(norm("88e0"), "mov reg1 reg1");
  EXPECT_EQ(norm("ebfe"), "jmp label");
  EXPECT_EQ(norm("0f8400000000"), "je label");
  EXPECT_EQ(norm("c3"), "ret");
  EXPECT_EQ(norm("0f28c1"), "movaps xmm xmm");
}

TEST(Normalize, CallLocality) {
  ElfBuilder b;
  const uint64_t callee = b.next_function_address();
  Assembler c(callee);
  c.ret();
  b.add_function("callee", c.finish());
  Assembler a(b.next_function_address());
  a.call_abs(callee);
  a.call_abs(0x10);
  a.ret();
  b.add_function("caller", a.finish());
  const BinaryImage img = parse_elf(b.build());
  const auto t = tokenize(img, img.function("caller"));
  EXPECT_EQ(t.tokens, (Tokens{"call innerfunc", "call externfunc", "ret"}));
  EXPECT_EQ(t.name, "caller");
}

TEST(Tokenize, SkipsPlaceholderFill) {
  ElfBuilder b;
  Assembler a(b.next_function_address());
  for (int i = 0; i < 20; ++i) a.nop();
  a.mov(Reg::Rax, Reg::Rdi);
  a.nop();
  a.nop();
  a.ret();
  b.add_function("f", a.finish());
  const BinaryImage img = parse_elf(b.build());
  EXPECT_EQ(tokenize(img, img.function("f")).tokens, (Tokens{"mov reg8 reg8", "nop", "nop", "ret"}));
}

TEST(Cosine, EdgeCases) {
  const Tokens a{"push reg8", "mov reg8 reg8", "ret"};
  EXPECT_DOUBLE_EQ(reference_score(a, a), 1.0);
  EXPECT_DOUBLE_EQ(reference_score(a, Tokens{"x", "y", "z"}), 0.0);
  EXPECT_DOUBLE_EQ(reference_score(Tokens{"ret"}, Tokens{"ret"}), 1.0);
  EXPECT_DOUBLE_EQ(reference_score(Tokens{"ret"}, Tokens{"nop"}), 0.0);
  EXPECT_EQ(kind_of([&] { reference_score(a, Tokens{}); }), ErrorKind::EmptyFunction);
}

TEST(Cosine, LonghandValues) {
  // Ten distinct tokens against the same list with two tokens prepended:
  // nine shared bigrams, 9 vs 11 bigrams in total.
  Tokens base;
  for (char c = 'a'; c < 'k'; ++c) base.push_back(std::string(1, c));
  Tokens longer{"x", "y"};
  longer.insert(longer.end(), base.begin(), base.end());
  EXPECT_NEAR(reference_score(base, longer), 9.0 / (3.0 * std::sqrt(11.0)), 1e-12);

  // pq qp pq qr = {pq:2, qp:1, qr:1}; pq qr = {pq:1, qr:1}; dot 3, norms sqrt(6), sqrt(2).
  EXPECT_NEAR(reference_score(Tokens{"p", "q", "p", "q", "r"}, Tokens{"p", "q", "r"}), 3.0 / std::sqrt(12.0), 1e-12);
  // Trigram width: abc bcd vs abc: dot 1, norms sqrt(2), 1.
  EXPECT_NEAR(ngram_cosine(Tokens{"a", "b", "c", "d"}, Tokens{"a", "b", "c"}, 3), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Cosine, SymmetricAndBounded) {
  Rng rng(8);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e"};
  for (int t = 0; t < 500; ++t) {
    Tokens x, y;
    for (uint64_t i = 0, n = 1 + rng.below(30); i < n; ++i) x.push_back(vocab[rng.below(vocab.size())]);
    for (uint64_t i = 0, n = 1 + rng.below(30); i < n; ++i) y.push_back(vocab[rng.below(vocab.size())]);
    const double s = reference_score(x, y);
    EXPECT_NEAR(s, reference_score(y, x), 1e-12);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(Oracle, TokenCapTruncatesAndLogs) {
  NgramOracle o(2, 0.5, 3);
  const Tokens a{"a", "b", "c", "d", "e"}, b{"a", "b", "c", "x", "y"};
  EXPECT_DOUBLE_EQ(o.score(a, b), 1.0);
  EXPECT_EQ(o.truncations(), 2u);
  ASSERT_EQ(o.log().size(), 2u);
  EXPECT_NE(o.log()[0].find("from 5 to 3"), std::string::npos);
  EXPECT_TRUE(o.similar(0.5));
  EXPECT_FALSE(o.similar(0.49));
}

TEST(Oracle, MakeOracleSpecs) {
  EXPECT_EQ(make_oracle("ref")->name(), "ref");
  EXPECT_EQ(make_oracle("ref:3")->name(), "ref3");
  EXPECT_EQ(make_oracle("ref", 0.7)->threshold(), 0.7);
  EXPECT_EQ(kind_of([] { make_oracle("ref:abc"); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { make_oracle("bogus"); }), ErrorKind::InvalidArgument);
}

TEST(ExternalOracle, FixedScore) {
  auto o = make_oracle("cmd:" + stub("score 0.5"));
  EXPECT_DOUBLE_EQ(o->score({"a"}, {"b"}), 0.5);
  EXPECT_DOUBLE_EQ(o->score({"a", "c"}, {"b"}), 0.5);
}

TEST(ExternalOracle, ProtocolErrors) {
  EXPECT_EQ(kind_of([] { make_oracle("cmd:" + stub("malformed"))->score({"a"}, {"b"}); }),
            ErrorKind::ProtocolViolation);
  EXPECT_EQ(kind_of([] { make_oracle("cmd:" + stub("wrong-id"))->score({"a"}, {"b"}); }),
            ErrorKind::ProtocolViolation);
  EXPECT_EQ(kind_of([] { make_oracle("cmd:" + stub("score 1.5"))->score({"a"}, {"b"}); }),
            ErrorKind::ProtocolViolation);
}

TEST(ExternalOracle, Timeout) {
  ExternalOracleOptions opt;
  opt.timeout = std::chrono::milliseconds(200);
  ExternalOracle o(stub("sleep 5"), 0.5, opt);
  const auto t0 = std::chrono::steady_clock::now();
  EXPECT_EQ(kind_of([&] { o.score({"a"}, {"b"}); }), ErrorKind::Timeout);
  EXPECT_LT(std::chrono::steady_clock::now() - t0, std::chrono::seconds(3));
}

TEST(ExternalOracle, CrashRestartsThenGivesUp) {
  ExternalOracle o(stub("crash-on BOOM"));
  EXPECT_DOUBLE_EQ(o.score({"a"}, {"b"}), 0.75);
  EXPECT_EQ(kind_of([&] { o.score({"BOOM"}, {"b"}); }), ErrorKind::OracleUnavailable);
  EXPECT_DOUBLE_EQ(o.score({"a"}, {"c"}), 0.75);
  EXPECT_EQ(kind_of([] { make_oracle("cmd:/nonexistent/oracle")->score({"a"}, {"b"}); }),
            ErrorKind::OracleUnavailable);
}
