#include <gtest/gtest.h>

#include "binvar/elf_writer.hpp"
#include "binvar/error.hpp"
#include "binvar/image.hpp"
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

Bytes small_elf() {
  ElfBuilder b;
  Assembler a(b.next_function_address());
  for (int i = 0; i < 16; ++i) a.nop();
  a.mov(Reg::Rax, Reg::Rdi);
  a.ret();
  b.add_function("f", a.finish());
  Assembler c(b.next_function_address());
  c.endbr64();
  c.alu(AluOp::Xor, Reg::Rax, Reg::Rax, Width::D);
  c.ret();
  b.add_function("g", c.finish());
  return b.build();
}

}  // namespace

TEST(Image, RoundTripSynthetic) {
  const Bytes raw = small_elf();
  const BinaryImage img = parse_elf(raw);
  EXPECT_EQ(serialize(img), raw);
  ASSERT_EQ(img.functions.size(), 2u);
  EXPECT_EQ(img.functions[0].name, "f");
  EXPECT_EQ(img.functions[0].start, ElfBuilder::kTextBase);
}

TEST(Image, RoundTripSystemBinaries) {
  int checked = 0;
  for (const char* p : {"/bin/ls", "/bin/cat", "/usr/bin/env"}) {
    if (!std::filesystem::exists(p)) continue;
    const Bytes raw = read_file(p);
    EXPECT_EQ(serialize(parse_elf(raw, p)), raw) << p;
    ++checked;
  }
  if (checked == 0) GTEST_SKIP() << "no system binaries";
}

TEST(Image, Errors) {
  EXPECT_EQ(kind_of([] { parse_elf(Bytes{1, 2, 3, 4}); }), ErrorKind::MalformedElf);
  Bytes raw = small_elf();
  Bytes truncated(raw.begin(), raw.begin() + 40);
  EXPECT_EQ(kind_of([&] { parse_elf(truncated); }), ErrorKind::MalformedElf);
  Bytes m = raw;
  m[18] = 3;  // e_machine = EM_386
  m[19] = 0;
  EXPECT_EQ(kind_of([&] { parse_elf(m); }), ErrorKind::UnsupportedArch);
  Bytes c = raw;
  c[4] = 1;  // ELFCLASS32
  EXPECT_EQ(kind_of([&] { parse_elf(c); }), ErrorKind::UnsupportedArch);
  const BinaryImage img = parse_elf(raw);
  EXPECT_EQ(kind_of([&] { img.function("nope"); }), ErrorKind::UnknownFunction);
}

TEST(Image, PatchKeepsLengthAndRedecodes) {
  BinaryImage img = parse_elf(small_elf());
  const FunctionView& f = img.function("f");
  const uint64_t mov_addr = f.start + 16;
  const Bytes rev = from_hex("488bc7");  // mov rax, rdi via 8B
  replace_instruction(img, mov_addr, rev);
  const auto insns = img.function("f").instructions();
  EXPECT_EQ(insns[16]->bytes, rev);
  EXPECT_EQ(kind_of([&] { patch_bytes(img, mov_addr, Bytes{0x90}, 3); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([&] { replace_instruction(img, mov_addr + 1, Bytes{0x90}); }), ErrorKind::OutOfFunctionRange);
  EXPECT_EQ(kind_of([&] { patch_bytes(img, 0x10, Bytes{0x90}); }), ErrorKind::OutOfFunctionRange);
  const Bytes out = serialize(img);
  EXPECT_EQ(out.size(), small_elf().size());
}

TEST(Image, PaddingDetection) {
  const BinaryImage img = parse_elf(small_elf());
  const auto& f = img.function("f");
  ASSERT_TRUE(f.padding_region.has_value());
  EXPECT_EQ(*f.padding_region, (PaddingRegion{0, 16}));
  EXPECT_EQ(entry_insertion_offset(f), 0u);
  const auto& g = img.function("g");
  EXPECT_FALSE(g.padding_region.has_value());
  EXPECT_EQ(entry_insertion_offset(g), 4u);
}

TEST(Image, BlocksAndSuccessors) {
  Assembler a(0x1000);
  Label out = a.new_label();
  a.test(Reg::Rdi, Reg::Rdi);
  a.jcc(Cond::E, out, BranchWidth::Rel8);
  a.inc(Reg::Rax);
  a.bind(out);
  a.ret();
  const Bytes code = a.finish();
  const FunctionView fn = disassemble_function("h", 0x1000, code);
  ASSERT_EQ(fn.blocks.size(), 3u);
  EXPECT_EQ(fn.blocks[0].terminator_kind, Terminator::CondJump);
  EXPECT_EQ(fn.blocks[0].successors.size(), 2u);
  EXPECT_EQ(fn.blocks[0].fallthrough, 1u);
  EXPECT_EQ(fn.blocks[2].terminator_kind, Terminator::Return);
  EXPECT_EQ(fn.block_at(fn.blocks[2].start), 2u);
}

TEST(Image, CorpusFunctionsAreUsable) {
  const BinaryImage& img = corpus_image();
  EXPECT_GE(img.functions.size(), 30u);
  for (const auto& f : img.functions) {
    EXPECT_FALSE(f.opaque) << f.name << " " << f.opaque_reason;
    ASSERT_TRUE(f.padding_region.has_value()) << f.name;
    EXPECT_EQ(f.padding_region->length, 128u);
    EXPECT_EQ(f.padding_region->offset, entry_insertion_offset(f));
  }
}

TEST(Image, CompilerRecipeYieldsPlaceholders) {
  const auto dir = scratch_dir("recipe");
  const auto built = build_fixtures(dir);
  if (built.empty()) GTEST_SKIP() << "gcc unavailable";
  for (const auto& p : built) {
    const Bytes raw = read_file(p);
    const BinaryImage img = parse_elf(raw, p.string());
    EXPECT_EQ(serialize(img), raw);
    int padded = 0;
    for (const auto& f : img.functions)
      if (f.padding_region && f.padding_region->length >= 128) ++padded;
    EXPECT_GT(padded, 0) << p;
  }
  std::filesystem::remove_all(dir);
}
