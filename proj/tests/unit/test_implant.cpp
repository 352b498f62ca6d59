#include <gtest/gtest.h>

#include "binvar/assembler.hpp"
#include "binvar/elf_writer.hpp"
#include "binvar/implant.hpp"
#include "binvar/semnop.hpp"
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

BinaryImage padded_image(uint64_t pad, bool endbr = false) {
  ElfBuilder b;
  Assembler a(b.next_function_address());
  if (endbr) a.endbr64();
  for (uint64_t i = 0; i < pad; ++i) a.nop();
  a.push(Reg::Rbx);
  a.mov(Reg::Rbx, Reg::Rdi);
  a.alu_imm(AluOp::Add, Reg::Rbx, 3);
  a.mov(Reg::Rax, Reg::Rbx);
  a.pop(Reg::Rbx);
  a.ret();
  b.add_function("f", a.finish());
  Assembler c(b.next_function_address());
  c.mov(Reg::Rax, Reg::Rdi);
  c.ret();
  b.add_function("bare", c.finish());
  return parse_elf(b.build());
}

std::vector<uint64_t> trace_of(const BinaryImage& img, const std::string& name) {
  const auto& f = img.function(name);
  Rng rng(1);
  EmuConfig cfg;
  cfg.trace = true;
  return run(img.bytes_at(f.start, f.length), f.start, 0, random_state(rng), cfg).trace;
}

}  // namespace

TEST(Implant, SkipJumpLength) {
  EXPECT_EQ(skip_jump_length(2), 2u);
  EXPECT_EQ(skip_jump_length(129), 2u);
  EXPECT_EQ(skip_jump_length(130), 5u);
  EXPECT_EQ(skip_jump_length(4096), 5u);
}

TEST(Implant, SemanticNopKeepsBehaviour) {
  const BinaryImage orig = padded_image(128);
  const NopGrammar g = build_grammar();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    BinaryImage img = orig;
    Rng rng(seed);
    const auto nop = derive_sequence(g, 100, rng);
    const auto r = implant(img, ImplantSpec::make("f", nop.bytes, PayloadKind::SemanticNop, 100));
    EXPECT_EQ(r.jump_length, 0u);
    EXPECT_EQ(r.payload_address, r.placeholder_start);
    EXPECT_EQ(img.bytes_at(r.payload_address, 100)[0], nop.bytes[0]);
    EXPECT_TRUE(function_equivalent(orig, img, "f", RegSet::all(), 30));
    EXPECT_EQ(img.raw.size(), orig.raw.size());
  }
}

TEST(Implant, JunkIsNeverExecuted) {
  const BinaryImage orig = padded_image(128);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    BinaryImage img = orig;
    Rng rng(seed);
    const Bytes junk = generate_junk(100 - skip_jump_length(128), rng);
    const auto r = implant(img, ImplantSpec::make("f", junk, PayloadKind::JunkCode, 100));
    EXPECT_EQ(r.jump_length, 2u);
    EXPECT_EQ(r.payload_address, r.placeholder_start + 2);
    EXPECT_EQ(r.resume_address, r.placeholder_start + 128);
    const auto trace = trace_of(img, "f");
    ASSERT_GE(trace.size(), 2u);
    EXPECT_EQ(trace[0], r.placeholder_start);
    EXPECT_EQ(trace[1], r.resume_address);
    for (uint64_t a : trace) EXPECT_FALSE(a > r.placeholder_start && a < r.resume_address);
    EXPECT_TRUE(function_equivalent(orig, img, "f", RegSet::all(), 10));
  }
}

TEST(Implant, LongPlaceholderUsesRel32) {
  BinaryImage img = padded_image(200);
  const auto r = implant(img, ImplantSpec::make("f", Bytes{0x90, 0x90}, PayloadKind::JunkCode, 0));
  EXPECT_EQ(r.jump_length, 5u);
  EXPECT_EQ(img.bytes_at(r.placeholder_start, 1)[0], 0xe9);
  EXPECT_EQ(trace_of(img, "f")[1], r.resume_address);
}

TEST(Implant, EndbrIsKept) {
  BinaryImage img = padded_image(64, true);
  const auto& f = img.function("f");
  const uint64_t start = f.start;
  const auto r = implant(img, ImplantSpec::make("f", Bytes{0x48, 0x89, 0xc0}, PayloadKind::SemanticNop, 0));
  EXPECT_EQ(r.placeholder_start, start + 4);
  EXPECT_EQ(to_hex(img.bytes_at(start, 4)), "f30f1efa");
}

TEST(Implant, OnlyPlaceholderBytesChange) {
  const BinaryImage orig = padded_image(128);
  BinaryImage img = orig;
  Rng rng(3);
  const auto r = implant(img, ImplantSpec::make("f", generate_junk(60, rng), PayloadKind::JunkCode, 0));
  const uint64_t lo = *orig.file_offset(r.placeholder_start);
  const uint64_t hi = lo + r.placeholder_length;
  for (size_t i = 0; i < orig.raw.size(); ++i)
    if (i < lo || i >= hi) ASSERT_EQ(img.raw[i], orig.raw[i]) << i;
}

TEST(Implant, Errors) {
  BinaryImage img = padded_image(64);
  EXPECT_EQ(kind_of([&] { implant(img, ImplantSpec::make("f", Bytes(200, 0x90), PayloadKind::JunkCode, 0)); }),
            ErrorKind::PayloadTooLarge);
  EXPECT_EQ(kind_of([&] { implant(img, ImplantSpec::make("f", Bytes(30, 0x90), PayloadKind::JunkCode, 20)); }),
            ErrorKind::PayloadTooLarge);
  EXPECT_EQ(kind_of([&] { implant(img, ImplantSpec::make("bare", Bytes{0x90}, PayloadKind::JunkCode, 0)); }),
            ErrorKind::NoPlaceholder);
  EXPECT_EQ(kind_of([&] { implant(img, ImplantSpec::make("zzz", Bytes{0x90}, PayloadKind::JunkCode, 0)); }),
            ErrorKind::UnknownFunction);
  ImplantSpec bad = ImplantSpec::make("f", Bytes{0x90}, PayloadKind::JunkCode, 0);
  bad.skip_jump = false;
  EXPECT_EQ(kind_of([&] { implant(img, bad); }), ErrorKind::InvalidArgument);
}

TEST(Junk, FitsBudgetAndDecodes) {
  for (uint64_t budget : {1, 5, 20, 64, 100}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const Bytes j = generate_junk(budget, rng);
      EXPECT_LE(j.size(), budget);
      size_t gap = 0;
      const auto insns = decode_all(j, 0, &gap);
      EXPECT_EQ(gap, j.size());
      for (const auto& in : insns) {
        EXPECT_FALSE(in.is_control_transfer());
        EXPECT_FALSE(in.touches_memory());
      }
    }
  }
  Rng rng(0);
  EXPECT_THROW(generate_junk(0, rng), Error);
}

TEST(Recipe, FlagsAndScript) {
  const auto r = prepare_placeholders({"a.c", "dir/b.c"}, "out", 128);
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[1].output, std::filesystem::path("out/b.elf"));
  EXPECT_NE(r.script().find("-fpatchable-function-entry=128"), std::string::npos);
  const auto none = prepare_placeholders({"a.c"}, "out", 0);
  EXPECT_EQ(none.script().find("patchable"), std::string::npos);
}

TEST(Recipe, ZeroPadBuildsWithoutPlaceholders) {
  const auto dir = scratch_dir("nopad");
  const auto built = build_fixtures(dir, 0);
  if (built.empty()) GTEST_SKIP() << "gcc unavailable";
  for (const auto& p : built) {
    const BinaryImage img = load_elf(p);
    for (const auto& f : img.functions) EXPECT_FALSE(detect_padding(f, 100).has_value()) << f.name;
  }
  std::filesystem::remove_all(dir);
}
