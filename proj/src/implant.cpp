#include "binvar/implant.hpp"

#include <set>
#include <sstream>

#include "binvar/assembler.hpp"
#include "binvar/error.hpp"

namespace binvar {

std::string_view to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::SemanticNop: return "nop";
    case PayloadKind::JunkCode: return "junk";
    case PayloadKind::FpTrigger: return "fp_trigger";
  }
  return "?";
}

std::optional<PayloadKind> parse_payload_kind(std::string_view s) {
  if (s == "nop" || s == "semantic_nop") return PayloadKind::SemanticNop;
  if (s == "junk" || s == "junk_code") return PayloadKind::JunkCode;
  if (s == "fp_trigger") return PayloadKind::FpTrigger;
  return std::nullopt;
}

ImplantSpec ImplantSpec::make(std::string function, Bytes payload, PayloadKind kind, uint64_t budget) {
  ImplantSpec s;
  s.function = std::move(function);
  s.payload = std::move(payload);
  s.kind = kind;
  s.skip_jump = kind != PayloadKind::SemanticNop;
  s.budget = budget;
  return s;
}

uint64_t skip_jump_length(uint64_t length) { return length <= 129 ? 2 : 5; }

ImplantResult implant(BinaryImage& image, const ImplantSpec& spec) {
  if (spec.kind == PayloadKind::SemanticNop && spec.skip_jump)
    throw Error(ErrorKind::InvalidArgument, "semantic NOPs are executed, not skipped");
  if (spec.kind != PayloadKind::SemanticNop && !spec.skip_jump)
    throw Error(ErrorKind::InvalidArgument, "dead payloads need a skip jump");
  FunctionView* fn = image.find_function(spec.function);
  if (!fn) throw Error(ErrorKind::UnknownFunction, spec.function);
  if (!fn->padding_region) throw Error(ErrorKind::NoPlaceholder, spec.function + " has no entry NOP pad");
  const PaddingRegion pad = *fn->padding_region;
  // Executed payloads must sit on the entry path.
  if (!spec.skip_jump && pad.offset != entry_insertion_offset(*fn))
    throw Error(ErrorKind::NoPlaceholder, spec.function + ": NOP pad is not on the entry path");

  ImplantResult r;
  r.placeholder_start = fn->start + pad.offset;
  r.placeholder_length = pad.length;
  r.resume_address = r.placeholder_start + pad.length;
  r.jump_length = spec.skip_jump ? skip_jump_length(pad.length) : 0;
  r.payload_address = r.placeholder_start + r.jump_length;

  const uint64_t need = spec.payload.size() + r.jump_length;
  if (need > pad.length) {
    std::ostringstream os;
    os << spec.function << ": payload needs " << need << " bytes, placeholder has " << pad.length;
    throw Error(ErrorKind::PayloadTooLarge, os.str());
  }
  if (spec.budget > 0 && need > spec.budget) {
    std::ostringstream os;
    os << spec.function << ": payload needs " << need << " bytes, budget is " << spec.budget;
    throw Error(ErrorKind::PayloadTooLarge, os.str());
  }

  Bytes region;
  if (spec.skip_jump) {
    Assembler a(r.placeholder_start);
    a.jmp_abs(r.resume_address, r.jump_length == 2 ? BranchWidth::Rel8 : BranchWidth::Rel32);
    region = a.finish();
  }
  region.insert(region.end(), spec.payload.begin(), spec.payload.end());
  region.resize(pad.length, 0x90);
  patch_bytes(image, r.placeholder_start, region, pad.length);
  return r;
}

namespace {

// Registers junk may name; rsp is left out so that even stray execution keeps
// the stack usable.
Reg junk_reg(Rng& rng) {
  static const Reg kRegs[] = {Reg::Rax, Reg::Rcx, Reg::Rdx, Reg::Rbx, Reg::Rbp, Reg::Rsi, Reg::Rdi, Reg::R8,
                              Reg::R9,  Reg::R10, Reg::R11, Reg::R12, Reg::R13, Reg::R14, Reg::R15};
  return kRegs[rng.below(std::size(kRegs))];
}

Bytes junk_instruction(Rng& rng) {
  Assembler a;
  const Reg d = junk_reg(rng);
  const Reg s = junk_reg(rng);
  const Width w = rng.chance(0.5) ? Width::Q : Width::D;
  const int32_t small = static_cast<int32_t>(rng.range(-128, 127));
  const int32_t wide = static_cast<int32_t>(rng.range(-0x100000, 0x100000));
  static const AluOp kOps[] = {AluOp::Add, AluOp::Or, AluOp::And, AluOp::Sub, AluOp::Xor, AluOp::Cmp};
  const AluOp op = kOps[rng.below(std::size(kOps))];
  switch (rng.below(14)) {
    case 0: a.mov(d, s, w); break;
    case 1: a.alu(op, d, s, w); break;
    case 2: a.alu_imm(op, d, small, w); break;
    case 3: a.alu_imm(op, d, wide, w); break;
    case 4: a.mov_imm(d, wide, Width::D); break;
    case 5: a.lea(d, Mem::at(s, small), w); break;
    case 6: a.lea(d, Mem::indexed(s, d == Reg::Rsp ? Reg::Rax : d, uint8_t(1u << rng.below(4)), wide)); break;
    case 7: a.test(d, s, w); break;
    case 8:
      switch (rng.below(4)) {
        case 0: a.inc(d, w); break;
        case 1: a.dec(d, w); break;
        case 2: a.neg(d, w); break;
        default: a.not_(d, w); break;
      }
      break;
    case 9: a.shift(static_cast<ShiftOp>(std::array{4, 5, 7}[rng.below(3)]), d, uint8_t(rng.range(1, 31)), w); break;
    case 10: a.imul(d, s, w); break;
    case 11: a.xchg(d, s, w); break;
    case 12: a.cmov(static_cast<Cond>(rng.below(16)), d, s, w); break;
    default: a.movzx_b(d, s); break;
  }
  return a.finish();
}

}  // namespace

Bytes generate_junk(uint64_t budget, Rng& rng) {
  if (budget < 1) throw Error(ErrorKind::BudgetTooSmall, "junk budget must be at least one byte");
  // Fresh pool of distinct instructions per call, drawn without replacement.
  // The pool size caps long payloads near the counts seen in practice.
  constexpr size_t kPoolSize = 18;
  std::vector<Bytes> pool;
  std::set<Bytes> seen;
  for (size_t tries = 0; pool.size() < kPoolSize && tries < kPoolSize * 8; ++tries) {
    Bytes b = junk_instruction(rng);
    if (seen.insert(b).second) pool.push_back(std::move(b));
  }
  rng.shuffle(std::span<Bytes>(pool));
  Bytes out;
  for (const Bytes& b : pool) {
    if (out.size() + b.size() > budget) continue;
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string PlaceholderRecipe::script() const {
  std::ostringstream os;
  for (const auto& st : steps) {
    bool first = true;
    for (const auto& arg : st.argv) {
      os << (first ? "" : " ") << arg;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

PlaceholderRecipe prepare_placeholders(const std::vector<std::filesystem::path>& sources,
                                       const std::filesystem::path& out_dir, uint64_t pad_bytes,
                                       std::string compiler) {
  PlaceholderRecipe r;
  r.pad_bytes = pad_bytes;
  r.compiler = std::move(compiler);
  // No CET landing pad, so the pad starts exactly at the symbol. Static and
  // unoptimised-frame-free output keeps fixtures small and self-contained.
  r.flags = {"-O2", "-fcf-protection=none", "-fno-stack-protector", "-fno-asynchronous-unwind-tables",
             "-fno-pie", "-no-pie", "-nostdlib", "-static", "-Wl,-e,0"};
  if (pad_bytes > 0) r.flags.push_back("-fpatchable-function-entry=" + std::to_string(pad_bytes));
  for (const auto& src : sources) {
    PlaceholderRecipe::Step st;
    st.source = src;
    st.output = out_dir / src.stem();
    st.output += ".elf";
    st.argv.push_back(r.compiler);
    st.argv.insert(st.argv.end(), r.flags.begin(), r.flags.end());
    st.argv.push_back(src.string());
    st.argv.push_back("-o");
    st.argv.push_back(st.output.string());
    r.steps.push_back(std::move(st));
  }
  return r;
}

}  // namespace binvar
