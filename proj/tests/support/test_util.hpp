#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <map>
#include <optional>
#include <unistd.h>
#include <vector>

#include "binvar/assembler.hpp"
#include "binvar/corpus.hpp"
#include "binvar/implant.hpp"
#include "binvar/emulator.hpp"
#include "binvar/image.hpp"
#include "binvar/inplace.hpp"

namespace binvar::testing {

inline const BinaryImage& corpus_image(uint64_t seed = 0) {
  static std::map<uint64_t, BinaryImage> cache;
  auto it = cache.find(seed);
  if (it == cache.end()) {
    CorpusOptions o;
    o.seed = seed;
    it = cache.emplace(seed, parse_elf(synthesize_corpus(o), "corpus_" + std::to_string(seed))).first;
  }
  return it->second;
}

inline std::span<const uint8_t> function_bytes(const BinaryImage& img, const FunctionView& f) {
  return img.bytes_at(f.start, f.length);
}

/// Original vs transformed function on random states; flags are dead at exit.
inline EquivalenceResult function_equivalent(const BinaryImage& a, const BinaryImage& b, const std::string& name,
                                             RegSet regs, uint32_t trials, uint64_t seed = 7) {
  const FunctionView& fa = a.function(name);
  const FunctionView& fb = b.function(name);
  const auto snap = snapshot_of(a);
  EquivalenceOptions o;
  o.trials = trials;
  o.reg_mask = regs;
  o.flag_mask = FlagSet{};
  o.snapshot = snap;
  Rng rng(seed);
  return equivalent(Program{function_bytes(a, fa), fa.start, 0}, Program{function_bytes(b, fb), fb.start, 0}, o, rng);
}

inline bool have_gcc() { return std::system("gcc --version >/dev/null 2>&1") == 0; }

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("binvar_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

#ifndef BINVAR_FIXTURE_DIR
#define BINVAR_FIXTURE_DIR "tests/fixtures"
#endif
#ifndef BINVAR_ORACLE_STUB
#define BINVAR_ORACLE_STUB "oracle_stub"
#endif
#ifndef BINVAR_CLI
#define BINVAR_CLI "binvar"
#endif

/// Every regular file under `root`, keyed by relative path.
inline std::map<std::string, Bytes> read_tree(const std::filesystem::path& root) {
  std::map<std::string, Bytes> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root))
    if (e.is_regular_file()) out[std::filesystem::relative(e.path(), root).string()] = read_file(e.path());
  return out;
}

/// Writes the synthetic corpus to `dir` and returns its path.
inline std::filesystem::path write_corpus(const std::filesystem::path& dir, uint64_t seed = 0, unsigned functions = 36) {
  CorpusOptions o;
  o.seed = seed;
  o.functions = functions;
  const auto p = dir / ("corpus" + std::to_string(seed) + ".elf");
  write_file(p, synthesize_corpus(o));
  return p;
}

/// Compile the C fixtures with the placeholder recipe; empty without gcc.
inline std::vector<std::filesystem::path> build_fixtures(const std::filesystem::path& out_dir, uint64_t pad = 128) {
  if (!have_gcc()) return {};
  std::vector<std::filesystem::path> sources;
  for (const auto& e : std::filesystem::directory_iterator(BINVAR_FIXTURE_DIR))
    if (e.path().extension() == ".c") sources.push_back(e.path());
  std::sort(sources.begin(), sources.end());
  std::filesystem::create_directories(out_dir);
  const auto recipe = prepare_placeholders(sources, out_dir, pad);
  std::vector<std::filesystem::path> out;
  for (const auto& st : recipe.steps) {
    std::string cmd;
    for (const auto& a : st.argv) cmd += "'" + a + "' ";
    if (std::system((cmd + "2>/dev/null").c_str()) == 0) out.push_back(st.output);
  }
  return out;
}

}  // namespace binvar::testing
