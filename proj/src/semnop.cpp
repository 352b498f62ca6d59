#include "binvar/semnop.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "binvar/assembler.hpp"
#include "binvar/emulator.hpp"
#include "binvar/error.hpp"

namespace binvar {

std::string_view to_string(NopState s) {
  switch (s) {
    case NopState::S: return "S";
    case NopState::S_ef: return "S_ef";
    case NopState::S_ef_r: return "S_ef_r";
  }
  return "?";
}

std::string_view to_string(TerminalKind k) {
  switch (k) {
    case TerminalKind::PureNop: return "pure_nop";
    case TerminalKind::SaveRestorePair: return "save_restore_pair";
    case TerminalKind::InvertiblePair: return "invertible_pair";
    case TerminalKind::SelfInversePair: return "self_inverse_pair";
    case TerminalKind::FlagOnly: return "flag_only";
    case TerminalKind::Clobber: return "clobber";
    case TerminalKind::Epsilon: return "epsilon";
    case TerminalKind::Sequence: return "sequence";
  }
  return "?";
}

std::vector<const Production*> NopGrammar::for_state(NopState s) const {
  std::vector<const Production*> out;
  for (const auto& p : productions)
    if (p.lhs == s) out.push_back(&p);
  return out;
}

NopGrammar build_grammar(const GrammarOptions& options) {
  NopGrammar g;
  g.nonterminals = {NopState::S, NopState::S_ef, NopState::S_ef_r};
  g.start = NopState::S;
  g.max_depth = options.max_depth;
  g.pool = RegSet::all() - RegSet{Reg::Rsp};
  if (!options.allow_rbp) g.pool.erase(Reg::Rbp);

  using P = ProductionId;
  using K = TerminalKind;
  auto add = [&](NopState lhs, P id, K kind, std::string rhs, double w) {
    g.productions.push_back({lhs, id, kind, std::move(rhs), w});
  };
  // Weights set the mix of long pairs and short terminals; they were tuned so
  // that mean instruction counts sit near 7 at 20 bytes and 25 at 100 bytes.
  add(NopState::S, P::Empty, K::Epsilon, "ε", 1.0);
  add(NopState::S, P::Pure, K::PureNop, "nop | mov r,r | xchg r,r | lea r,[r+0]", 1.0);
  add(NopState::S, P::Seq, K::Sequence, "S S", 0);
  add(NopState::S, P::SaveFlags, K::SaveRestorePair, "pushfq S_ef popfq", 4.0);
  add(NopState::S, P::XchgPair, K::SelfInversePair, "xchg r1,r2 S xchg r1,r2", 0.5);

  add(NopState::S_ef, P::Empty, K::Epsilon, "ε", 0.6);
  add(NopState::S_ef, P::Pure, K::PureNop, "nop | mov r,r | xchg r,r | lea r,[r+0]", 1.0);
  add(NopState::S_ef, P::Seq, K::Sequence, "S_ef S_ef", 0);
  add(NopState::S_ef, P::FlagOnly, K::FlagOnly, "cmp r,k | cmp r1,r2 | test r,r | test r,k", 0.7);
  add(NopState::S_ef, P::PushReg, K::SaveRestorePair, "push r S_ef_r pop r", 2.5);
  add(NopState::S_ef, P::AddSub, K::InvertiblePair, "add k,r S_ef sub k,r", 0.8);
  add(NopState::S_ef, P::SubAdd, K::InvertiblePair, "sub k,r S_ef add k,r", 0.8);
  add(NopState::S_ef, P::XchgPair, K::SelfInversePair, "xchg r1,r2 S_ef xchg r1,r2", 0.5);

  add(NopState::S_ef_r, P::Empty, K::Epsilon, "ε", 0.6);
  add(NopState::S_ef_r, P::Pure, K::PureNop, "nop | mov r,r | xchg r,r | lea r,[r+0]", 1.0);
  add(NopState::S_ef_r, P::Seq, K::Sequence, "S_ef_r S_ef_r", 0);
  add(NopState::S_ef_r, P::FlagOnly, K::FlagOnly, "cmp r,k | cmp r1,r2 | test r,r | test r,k", 0.7);
  add(NopState::S_ef_r, P::Clobber, K::Clobber, "op r (r stacked): mov/xor/and/or/not/neg/inc/dec", 1.2);
  add(NopState::S_ef_r, P::PushReg, K::SaveRestorePair, "push r S_ef_r pop r", 1.2);
  add(NopState::S_ef_r, P::AddSub, K::InvertiblePair, "add k,r S_ef_r sub k,r", 0.8);
  add(NopState::S_ef_r, P::SubAdd, K::InvertiblePair, "sub k,r S_ef_r add k,r", 0.8);
  add(NopState::S_ef_r, P::XchgPair, K::SelfInversePair, "xchg r1,r2 S_ef_r xchg r1,r2", 0.5);
  return g;
}

std::string DerivationNode::render() const {
  std::ostringstream os;
  os << to_string(state) << "[";
  bool first = true;
  for (const auto& c : children) {
    if (!first) os << "; ";
    first = false;
    if (auto* s = std::get_if<std::string>(&c))
      os << *s;
    else
      os << std::get<std::shared_ptr<DerivationNode>>(c)->render();
  }
  os << "]";
  return os.str();
}

int DerivationNode::nesting() const {
  int best = 0;
  for (const auto& c : children) {
    if (auto* n = std::get_if<std::shared_ptr<DerivationNode>>(&c)) {
      const int d = (*n)->nesting() + (production == ProductionId::Seq ? 0 : 1);
      best = std::max(best, d);
    }
  }
  return best;
}

std::string SemNopSequence::asm_text() const {
  std::string out;
  for (const auto& l : asm_lines) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

namespace {

struct Ctx {
  bool flags_saved = false;
  RegSet stacked;

  NopState state() const {
    if (!flags_saved) return NopState::S;
    return stacked.empty() ? NopState::S_ef : NopState::S_ef_r;
  }
};

struct Piece {
  Bytes bytes;
  std::string text;
};

template <typename F>
Piece piece(F&& emit) {
  Assembler a;
  emit(a);
  Piece p;
  p.bytes = a.finish();
  auto in = decode(p.bytes);
  p.text = in ? in->text() : to_hex(p.bytes);
  return p;
}

struct Instantiated {
  std::vector<Piece> open, close;
  std::optional<Ctx> inner;
  size_t cost() const {
    size_t n = 0;
    for (const auto& p : open) n += p.bytes.size();
    for (const auto& p : close) n += p.bytes.size();
    return n;
  }
};

class Deriver {
 public:
  Deriver(const NopGrammar& g, Rng& rng, uint64_t budget) : g_(g), rng_(rng), remaining_(budget) {}

  std::shared_ptr<DerivationNode> expand(Ctx ctx, int depth, bool top) {
    const NopState state = ctx.state();
    std::vector<std::shared_ptr<DerivationNode>> items;
    for (;;) {
      std::vector<const Production*> cands;
      for (const Production* p : g_.for_state(state)) {
        if (p->id == ProductionId::Seq || p->weight <= 0) continue;
        if (p->id == ProductionId::Empty && top) continue;
        const bool nests = p->id == ProductionId::SaveFlags || p->id == ProductionId::PushReg ||
                           p->id == ProductionId::AddSub || p->id == ProductionId::SubAdd ||
                           p->id == ProductionId::XchgPair;
        if (nests && depth >= g_.max_depth) continue;
        cands.push_back(p);
      }
      std::optional<std::pair<const Production*, Instantiated>> chosen;
      while (!cands.empty() && !chosen) {
        double total = 0;
        for (const Production* p : cands) total += p->weight;
        double x = rng_.unit() * total;
        size_t pick = 0;
        for (; pick + 1 < cands.size(); ++pick) {
          if (x < cands[pick]->weight) break;
          x -= cands[pick]->weight;
        }
        const Production* p = cands[pick];
        if (p->id == ProductionId::Empty) break;
        auto inst = instantiate(*p, ctx);
        if (inst && inst->cost() <= remaining_)
          chosen.emplace(p, std::move(*inst));
        else
          cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      if (!chosen) break;
      auto& [prod, inst] = *chosen;
      auto node = std::make_shared<DerivationNode>();
      node->state = state;
      node->production = prod->id;
      remaining_ -= inst.cost();
      for (auto& pc : inst.open) {
        emit(pc);
        node->children.emplace_back(pc.text);
      }
      if (inst.inner) node->children.emplace_back(expand(*inst.inner, depth + 1, false));
      for (auto& pc : inst.close) {
        emit(pc);
        node->children.emplace_back(pc.text);
      }
      items.push_back(std::move(node));
    }
    if (items.empty()) {
      auto e = std::make_shared<DerivationNode>();
      e->state = state;
      e->production = ProductionId::Empty;
      return e;
    }
    // X -> X X, right-associated.
    std::shared_ptr<DerivationNode> acc = items.back();
    for (size_t i = items.size() - 1; i-- > 0;) {
      auto seq = std::make_shared<DerivationNode>();
      seq->state = state;
      seq->production = ProductionId::Seq;
      seq->children.emplace_back(items[i]);
      seq->children.emplace_back(acc);
      acc = seq;
    }
    return acc;
  }

  Bytes& bytes() { return out_; }

 private:
  const NopGrammar& g_;
  Rng& rng_;
  uint64_t remaining_;
  Bytes out_;

  void emit(const Piece& p) { out_.insert(out_.end(), p.bytes.begin(), p.bytes.end()); }

  Reg any_reg() {
    auto regs = g_.pool.items();
    return rng_.pick(regs);
  }
  int32_t imm() { return static_cast<int32_t>(rng_.range(1, 0xFFFF)); }

  Piece pure_nop() {
    const Reg r = any_reg();
    switch (rng_.below(4)) {
      case 0: return piece([](Assembler& a) { a.nop(1); });
      case 1: return piece([&](Assembler& a) { a.mov(r, r); });
      case 2: return piece([&](Assembler& a) { a.xchg(r, r); });
      default: return piece([&](Assembler& a) { a.lea(r, Mem::at(r, 0)); });
    }
  }

  std::optional<Instantiated> instantiate(const Production& p, const Ctx& ctx) {
    Instantiated in;
    switch (p.id) {
      case ProductionId::Pure: {
        // Prefer something that fits; a bare nop always does when any byte is left.
        Piece pc = pure_nop();
        if (pc.bytes.size() > remaining_) pc = piece([](Assembler& a) { a.nop(1); });
        in.open.push_back(std::move(pc));
        return in;
      }
      case ProductionId::SaveFlags: {
        in.open.push_back(piece([](Assembler& a) { a.pushfq(); }));
        in.close.push_back(piece([](Assembler& a) { a.popfq(); }));
        Ctx inner = ctx;
        inner.flags_saved = true;
        in.inner = inner;
        return in;
      }
      case ProductionId::PushReg: {
        const Reg r = any_reg();
        in.open.push_back(piece([&](Assembler& a) { a.push(r); }));
        in.close.push_back(piece([&](Assembler& a) { a.pop(r); }));
        Ctx inner = ctx;
        inner.stacked.insert(r);
        in.inner = inner;
        return in;
      }
      case ProductionId::AddSub:
      case ProductionId::SubAdd: {
        const Reg r = any_reg();
        const int32_t k = imm();
        const AluOp first = p.id == ProductionId::AddSub ? AluOp::Add : AluOp::Sub;
        const AluOp second = p.id == ProductionId::AddSub ? AluOp::Sub : AluOp::Add;
        in.open.push_back(piece([&](Assembler& a) { a.alu_imm(first, r, k); }));
        in.close.push_back(piece([&](Assembler& a) { a.alu_imm(second, r, k); }));
        Ctx inner = ctx;
        inner.stacked.erase(r);
        in.inner = inner;
        return in;
      }
      case ProductionId::XchgPair: {
        const Reg r1 = any_reg();
        Reg r2 = any_reg();
        if (r1 == r2) return std::nullopt;
        in.open.push_back(piece([&](Assembler& a) { a.xchg(r1, r2); }));
        in.close.push_back(piece([&](Assembler& a) { a.xchg(r1, r2); }));
        Ctx inner = ctx;
        inner.stacked.erase(r1);
        inner.stacked.erase(r2);
        in.inner = inner;
        return in;
      }
      case ProductionId::FlagOnly: {
        const Reg r = any_reg();
        const Reg r2 = any_reg();
        const int32_t k = imm();
        switch (rng_.below(4)) {
          case 0: in.open.push_back(piece([&](Assembler& a) { a.alu_imm(AluOp::Cmp, r, k); })); break;
          case 1: in.open.push_back(piece([&](Assembler& a) { a.cmp(r, r2); })); break;
          case 2: in.open.push_back(piece([&](Assembler& a) { a.test(r, r); })); break;
          default: in.open.push_back(piece([&](Assembler& a) { a.test_imm(r, k); })); break;
        }
        return in;
      }
      case ProductionId::Clobber: {
        const auto stacked = ctx.stacked.items();
        if (stacked.empty()) return std::nullopt;
        const Reg r = rng_.pick(stacked);
        const int32_t k = imm();
        switch (rng_.below(8)) {
          case 0: in.open.push_back(piece([&](Assembler& a) { a.mov_imm(r, k, Width::D); })); break;
          case 1: in.open.push_back(piece([&](Assembler& a) { a.alu_imm(AluOp::Xor, r, k); })); break;
          case 2: in.open.push_back(piece([&](Assembler& a) { a.alu_imm(AluOp::And, r, k); })); break;
          case 3: in.open.push_back(piece([&](Assembler& a) { a.alu_imm(AluOp::Or, r, k); })); break;
          case 4: in.open.push_back(piece([&](Assembler& a) { a.not_(r); })); break;
          case 5: in.open.push_back(piece([&](Assembler& a) { a.neg(r); })); break;
          case 6: in.open.push_back(piece([&](Assembler& a) { a.inc(r); })); break;
          default: in.open.push_back(piece([&](Assembler& a) { a.dec(r); })); break;
        }
        return in;
      }
      case ProductionId::Empty:
      case ProductionId::Seq:
        break;
    }
    return std::nullopt;
  }
};

}  // namespace

bool verify_identity(std::span<const uint8_t> bytes, uint32_t trials, uint64_t seed, std::string* why) {
  Bytes with_ret(bytes.begin(), bytes.end());
  with_ret.push_back(0xC3);
  static const Bytes kRet{0xC3};
  EquivalenceOptions opt;
  opt.trials = trials;
  opt.max_steps = 100000;
  Rng rng(seed);
  const auto res = equivalent(Program{with_ret, 0x401000, 0}, Program{kRet, 0x401000, 0}, opt, rng);
  if (!res && why) *why = res.counterexample->cause;
  return res.equivalent;
}

SemNopSequence derive_sequence(const NopGrammar& grammar, uint64_t budget, Rng& rng) {
  if (budget < 1) throw Error(ErrorKind::BudgetTooSmall, "budget must be at least one byte");
  if (budget > kMaxNopBudget) throw Error(ErrorKind::InvalidArgument, "budget above 4096 bytes");
  SemNopSequence seq;
  seq.rng_seed = rng.seed();
  seq.budget = budget;
  Deriver d(grammar, rng, budget);
  seq.derivation = d.expand(Ctx{}, 0, true);
  seq.bytes = std::move(d.bytes());
  seq.bytes.resize(budget, 0x90);  // remainder as 1-byte NOPs
  seq.byte_len = seq.bytes.size();
  for (const Instruction& in : decode_all(seq.bytes)) seq.asm_lines.push_back(in.text());
  seq.instruction_count = seq.asm_lines.size();
  std::string why;
  if (!verify_identity(seq.bytes, 8, rng.next(), &why))
    throw Error(ErrorKind::InvalidArgument, "derived sequence is not an identity: " + why);
  return seq;
}

std::vector<SemNopSequence> dedupe_pool(std::vector<SemNopSequence> sequences) {
  std::set<Bytes> seen;
  std::vector<SemNopSequence> out;
  for (auto& s : sequences)
    if (seen.insert(s.bytes).second) out.push_back(std::move(s));
  return out;
}

std::vector<SemNopSequence> generate_pool(const NopGrammar& grammar, const std::vector<uint64_t>& budgets,
                                          size_t count, uint64_t seed, int retries) {
  std::vector<SemNopSequence> out;
  std::set<Bytes> seen;
  uint64_t stream = 0;
  for (uint64_t budget : budgets) {
    for (size_t i = 0; i < count; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt <= retries && !placed; ++attempt) {
        Rng rng(Rng::mix(seed, stream++));
        SemNopSequence s = derive_sequence(grammar, budget, rng);
        if (seen.insert(s.bytes).second) {
          out.push_back(std::move(s));
          placed = true;
        }
      }
      if (!placed) {
        std::ostringstream os;
        os << "could not find " << count << " unique sequences at budget " << budget << " (got " << i << ")";
        throw Error(ErrorKind::PoolExhausted, os.str());
      }
    }
  }
  return out;
}

std::string check_balanced(std::span<const uint8_t> bytes) {
  std::vector<std::string> stack;
  std::map<std::pair<std::string, int64_t>, int64_t> pairs;
  for (const Instruction& in : decode_all(bytes)) {
    const std::string& m = in.mnemonic;
    if (m == "pushfq") {
      stack.push_back("flags");
    } else if (m == "popfq") {
      if (stack.empty() || stack.back() != "flags") return "popfq without matching pushfq";
      stack.pop_back();
    } else if (m == "push") {
      stack.push_back(in.op_str);
    } else if (m == "pop") {
      if (stack.empty() || stack.back() != in.op_str) return "pop " + in.op_str + " without matching push";
      stack.pop_back();
    } else if ((m == "add" || m == "sub") && in.operands.size() == 2 && in.operands[1].imm()) {
      pairs[{in.operands[0].reg() ? in.operands[0].reg()->name : "?", *in.operands[1].imm()}] += m == "add" ? 1 : -1;
    }
  }
  if (!stack.empty()) return "unclosed " + stack.back();
  for (const auto& [key, n] : pairs)
    if (n != 0) return "unmatched add/sub on " + key.first;
  return {};
}

}  // namespace binvar
