#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "binvar/instruction.hpp"
#include "binvar/regs.hpp"
#include "binvar/rng.hpp"

namespace binvar {

/// Nonterminals of the reduced grammar: S (flags live), S_ef (flags saved),
/// S_ef_r (flags saved and at least one register stacked).
enum class NopState : uint8_t { S, S_ef, S_ef_r };
std::string_view to_string(NopState s);

enum class TerminalKind : uint8_t {
  PureNop,           ///< nop, mov r,r, xchg r,r, lea r,[r+0]
  SaveRestorePair,   ///< pushfq/popfq, push r/pop r
  InvertiblePair,    ///< add k,r / sub k,r
  SelfInversePair,   ///< xchg r1,r2 twice
  FlagOnly,          ///< cmp/test: writes flags only (needs saved flags)
  Clobber,           ///< overwrites a stacked register
  Epsilon,
  Sequence,
};
std::string_view to_string(TerminalKind k);

enum class ProductionId : uint8_t {
  Empty,        // X -> ε
  Pure,         // X -> pure nop
  Seq,          // X -> X X
  SaveFlags,    // S -> pushfq S_ef popfq
  PushReg,      // S_ef / S_ef_r -> push r S_ef_r pop r
  AddSub,       // -> add k,r X sub k,r
  SubAdd,       // -> sub k,r X add k,r
  XchgPair,     // -> xchg r1,r2 X xchg r1,r2
  FlagOnly,     // -> cmp/test
  Clobber,      // S_ef_r -> op on a stacked register
};

struct Production {
  NopState lhs;
  ProductionId id;
  TerminalKind kind;
  std::string rhs;  ///< readable right-hand side
  double weight = 1;
};

struct NopGrammar {
  std::vector<NopState> nonterminals;
  NopState start = NopState::S;
  std::vector<Production> productions;
  int max_depth = 12;
  /// Registers available to push/pop, pairs and clobbers.
  RegSet pool;

  std::vector<const Production*> for_state(NopState s) const;
};

struct GrammarOptions {
  bool allow_rbp = false;
  int max_depth = 12;
};

inline constexpr int kGrammarVersion = 1;

NopGrammar build_grammar(const GrammarOptions& options = {});

struct DerivationNode;
using DerivationChild = std::variant<std::string, std::shared_ptr<DerivationNode>>;

/// One production application; children are terminals (assembly text) and
/// nested states in emission order.
struct DerivationNode {
  NopState state = NopState::S;
  ProductionId production = ProductionId::Empty;
  std::vector<DerivationChild> children;

  /// Compact bracketed rendering of the tree.
  std::string render() const;
  /// Deepest chain of nested (non-sequencing) states.
  int nesting() const;
};

struct SemNopSequence {
  Bytes bytes;
  std::vector<std::string> asm_lines;
  size_t byte_len = 0;
  size_t instruction_count = 0;
  std::shared_ptr<DerivationNode> derivation;
  uint64_t rng_seed = 0;
  uint64_t budget = 0;

  std::string asm_text() const;
};

inline constexpr uint64_t kMaxNopBudget = 4096;

/// Random derivation filled with 1-byte NOPs to exactly `budget` bytes and
/// checked for identity on the emulator. Throws BudgetTooSmall.
SemNopSequence derive_sequence(const NopGrammar& grammar, uint64_t budget, Rng& rng);

/// Identity check: registers, the six flags, rsp and memory outside the
/// stack scratch window are unchanged after running the bytes.
bool verify_identity(std::span<const uint8_t> bytes, uint32_t trials, uint64_t seed, std::string* why = nullptr);

/// Unique by byte string, first occurrence kept.
std::vector<SemNopSequence> dedupe_pool(std::vector<SemNopSequence> sequences);

/// `count` unique sequences per budget. Duplicates are regenerated with fresh
/// seeds up to `retries` times per slot; throws PoolExhausted beyond that.
std::vector<SemNopSequence> generate_pool(const NopGrammar& grammar, const std::vector<uint64_t>& budgets,
                                          size_t count, uint64_t seed, int retries = 200);

/// Checks the balancedness property: pushes/pops and pushfq/popfq nest, add/sub
/// pairs match. Empty when fine, otherwise a description.
std::string check_balanced(std::span<const uint8_t> bytes);

}  // namespace binvar
