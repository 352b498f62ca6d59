#include "binvar/inplace.hpp"

#include <algorithm>
#include <bit>
#include <nlohmann/json.hpp>

#include "binvar/error.hpp"
#include "rules_data.hpp"

namespace binvar {

std::string_view to_string(Technique t) {
  switch (t) {
    case Technique::Subst: return "subst";
    case Technique::IntraReorder: return "intra";
    case Technique::PreserveReorder: return "preserve";
    case Technique::RegReassign: return "reassign";
    case Technique::BlockReorder: return "bbr";
  }
  return "?";
}

std::optional<Technique> parse_technique(std::string_view s) {
  for (Technique t : {Technique::Subst, Technique::IntraReorder, Technique::PreserveReorder, Technique::RegReassign,
                      Technique::BlockReorder})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

Deadline::Deadline(std::optional<double> seconds) {
  if (!seconds) return;
  if (*seconds <= 0) {
    zero_ = true;
    return;
  }
  until_ = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
}

bool Deadline::expired() const {
  if (zero_) return true;
  return until_ && std::chrono::steady_clock::now() >= *until_;
}

void Deadline::check() const {
  if (expired()) throw Error(ErrorKind::Timeout, "time budget exhausted");
}

// ---------------------------------------------------------------------------
// Rules

namespace {

uint8_t hex_byte(const std::string& s) { return static_cast<uint8_t>(std::stoul(s, nullptr, 16)); }

FlagSet parse_flags(const nlohmann::json& arr) {
  FlagSet out;
  for (const auto& f : arr) {
    auto flag = parse_flag(f.get<std::string>());
    if (!flag) throw Error(ErrorKind::InvalidArgument, "unknown flag in rule file: " + f.get<std::string>());
    out.insert(*flag);
  }
  return out;
}

}  // namespace

RuleSet parse_rules(std::string_view json_text) {
  RuleSet set;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("rule file: ") + e.what());
  }
  set.version = doc.value("version", 0);
  for (const auto& r : doc.at("rules")) {
    SubstitutionRule rule;
    rule.name = r.at("name").get<std::string>();
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "opcode_swap")
      rule.kind = RuleKind::OpcodeSwap;
    else if (kind == "imm8_negate")
      rule.kind = RuleKind::Imm8Negate;
    else if (kind == "direction_swap")
      rule.kind = RuleKind::DirectionSwap;
    else
      throw Error(ErrorKind::InvalidArgument, "unknown rule kind " + kind);
    if (r.contains("pairs"))
      for (const auto& p : r["pairs"]) rule.pairs.emplace_back(hex_byte(p[0]), hex_byte(p[1]));
    if (r.contains("opcode")) rule.opcode = hex_byte(r["opcode"]);
    if (r.contains("ext_pair")) rule.ext_pair = {r["ext_pair"][0].get<uint8_t>(), r["ext_pair"][1].get<uint8_t>()};
    const std::string ops = r.value("operands", "register");
    rule.operands = ops == "same_register"       ? OperandForm::SameRegister
                    : ops == "register_register" ? OperandForm::RegisterRegister
                                                 : OperandForm::Register;
    for (const auto& w : r.value("widths", nlohmann::json::array())) rule.widths.push_back(w.get<unsigned>());
    if (r.contains("requires_dead")) rule.requires_dead = parse_flags(r["requires_dead"]);
    if (r.contains("live_flags_within")) rule.live_flags_within = parse_flags(r["live_flags_within"]);
    for (const auto& v : r.value("exclude_imm", nlohmann::json::array())) rule.exclude_imm.push_back(v.get<int64_t>());
    set.rules.push_back(std::move(rule));
  }
  return set;
}

const RuleSet& builtin_rules() {
  static const RuleSet rules = parse_rules(detail::kBuiltinRules);
  return rules;
}

std::optional<Bytes> apply_rule(const SubstitutionRule& rule, const Instruction& in) {
  const Encoding& e = in.enc;
  if (e.vex || e.opcode_len != 1 || e.modrm_offset == 0 || in.operands.empty()) return std::nullopt;
  for (size_t i = 0; i < e.prefix_len; ++i)
    if (in.bytes[i] != 0x66) return std::nullopt;
  const unsigned width = in.operands[0].size;
  if (std::find(rule.widths.begin(), rule.widths.end(), width) == rule.widths.end()) return std::nullopt;
  const uint8_t opcode = in.bytes[e.opcode_offset];
  const uint8_t modrm = in.bytes[e.modrm_offset];
  if ((modrm >> 6) != 3) return std::nullopt;
  const uint8_t rex = e.has_rex ? in.bytes[e.prefix_len] : 0;
  const uint8_t reg = (modrm >> 3) & 7, rm = modrm & 7;

  Bytes out = in.bytes;
  switch (rule.kind) {
    case RuleKind::OpcodeSwap: {
      if (rule.operands == OperandForm::SameRegister && (reg != rm || ((rex >> 2) & 1) != (rex & 1)))
        return std::nullopt;
      std::optional<uint8_t> partner;
      for (auto [a, b] : rule.pairs) {
        if (opcode == a) partner = b;
        if (opcode == b) partner = a;
      }
      if (!partner) return std::nullopt;
      out[e.opcode_offset] = *partner;
      break;
    }
    case RuleKind::Imm8Negate: {
      if (opcode != rule.opcode || e.imm_size != 1) return std::nullopt;
      uint8_t ext;
      if (reg == rule.ext_pair.first)
        ext = rule.ext_pair.second;
      else if (reg == rule.ext_pair.second)
        ext = rule.ext_pair.first;
      else
        return std::nullopt;
      const auto imm = static_cast<int8_t>(in.bytes[e.imm_offset]);
      if (std::find(rule.exclude_imm.begin(), rule.exclude_imm.end(), imm) != rule.exclude_imm.end())
        return std::nullopt;
      out[e.modrm_offset] = static_cast<uint8_t>((modrm & 0xC7) | (ext << 3));
      out[e.imm_offset] = static_cast<uint8_t>(-imm);
      break;
    }
    case RuleKind::DirectionSwap: {
      std::optional<uint8_t> partner;
      for (auto [a, b] : rule.pairs) {
        if (opcode == a) partner = b;
        if (opcode == b) partner = a;
      }
      if (!partner) return std::nullopt;
      out[e.opcode_offset] = *partner;
      out[e.modrm_offset] = static_cast<uint8_t>(0xC0 | (rm << 3) | reg);
      if (e.has_rex) {
        const uint8_t r = (rex >> 2) & 1, b = rex & 1;
        out[e.prefix_len] = static_cast<uint8_t>((rex & 0xFA) | (b << 2) | r);
      }
      break;
    }
  }
  // The replacement must decode to an instruction of the same length.
  auto check = decode(out, in.address);
  if (!check || check->size() != in.size()) return std::nullopt;
  return out;
}

std::vector<SubstitutionSite> find_substitution_sites(const FunctionView& fn, const LivenessMap& live,
                                                      const RuleSet& rules) {
  std::vector<SubstitutionSite> sites;
  const auto insns = fn.instructions();
  for (size_t i = 0; i < insns.size(); ++i) {
    const FlagSet live_flags = live.live_out[i].flags;
    for (const SubstitutionRule& rule : rules.rules) {
      if (rule.requires_dead.intersects(live_flags)) continue;
      if (rule.live_flags_within && !live_flags.subset_of(*rule.live_flags_within)) continue;
      if (auto repl = apply_rule(rule, *insns[i])) {
        sites.push_back({i, &rule, std::move(*repl)});
        break;
      }
    }
  }
  return sites;
}

namespace {

Bytes function_bytes(const FunctionView& fn) {
  Bytes out;
  out.reserve(fn.length);
  for (const Instruction* in : fn.instructions()) out.insert(out.end(), in->bytes.begin(), in->bytes.end());
  return out;
}

TransformReport new_report(const FunctionView& fn, Technique t, const Rng& rng) {
  TransformReport r;
  r.function = fn.name;
  r.technique = t;
  r.rng_seed = rng.seed();
  return r;
}

}  // namespace

TransformResult substitute_instructions(const FunctionView& fn, const LivenessMap& live, Rng& rng,
                                        const Deadline& deadline, const RuleSet& rules) {
  TransformResult res{function_bytes(fn), new_report(fn, Technique::Subst, rng)};
  const auto insns = fn.instructions();
  const auto sites = find_substitution_sites(fn, live, rules);
  res.report.sites_considered = static_cast<uint32_t>(sites.size());
  for (const SubstitutionSite& s : sites) {
    deadline.check();
    if (!rng.chance(0.5)) continue;
    const uint64_t off = insns[s.index]->address - fn.start;
    std::copy(s.replacement.begin(), s.replacement.end(), res.code.begin() + static_cast<std::ptrdiff_t>(off));
    ++res.report.sites_transformed;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Intra-block reordering

std::vector<uint32_t> block_dependences(const BasicBlock& block, const LivenessMap& live, size_t first) {
  const size_t n = block.instructions.size();
  if (n > 32) throw Error(ErrorKind::InvalidArgument, "block too large for dependence mask");
  FlagSet used_flags;
  for (size_t i = 0; i < n; ++i) used_flags |= live.live_in[first + i].flags | live.live_out[first + i].flags;

  std::vector<uint32_t> deps(n, 0);
  for (size_t j = 0; j < n; ++j) {
    const Instruction& b = block.instructions[j];
    const bool b_fence = b.barrier || b.flow == Flow::Call || b.flow == Flow::IndirectCall || b.flow == Flow::Trap;
    const bool b_last_ct = j + 1 == n && b.is_control_transfer();
    for (size_t i = 0; i < j; ++i) {
      const Instruction& a = block.instructions[i];
      const bool a_fence = a.barrier || a.flow == Flow::Call || a.flow == Flow::IndirectCall || a.flow == Flow::Trap;
      bool dep = a_fence || b_fence || b_last_ct || a.is_control_transfer();
      dep = dep || a.regs_written.intersects(b.uses() | b.regs_written) || a.uses().intersects(b.regs_written);
      const FlagSet aw = a.flags_written & used_flags, bw = b.flags_written & used_flags;
      dep = dep || aw.intersects(b.flags_read | bw) || a.flags_read.intersects(bw);
      dep = dep || (a.ordered() && b.ordered());
      if (dep) deps[j] |= uint32_t{1} << i;
    }
  }
  return deps;
}

uint64_t count_topological_orders(const std::vector<uint32_t>& deps) {
  const size_t n = deps.size();
  if (n > 20) throw Error(ErrorKind::InvalidArgument, "too many nodes to count orders");
  const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<uint64_t> ways(size_t{1} << n, 0);
  ways[full] = 1;
  for (uint32_t s = full; s-- > 0;) {
    uint64_t total = 0;
    for (size_t v = 0; v < n; ++v)
      if (!(s >> v & 1) && (deps[v] & ~s) == 0) total += ways[s | (1u << v)];
    ways[s] = total;
  }
  return ways[0];
}

std::vector<size_t> sample_topological_order(const std::vector<uint32_t>& deps, Rng& rng) {
  const size_t n = deps.size();
  std::vector<size_t> order;
  order.reserve(n);
  if (n <= 16) {
    const uint32_t full = (1u << n) - 1;
    std::vector<uint64_t> ways(size_t{1} << n, 0);
    ways[full] = 1;
    for (uint32_t s = full; s-- > 0;) {
      uint64_t total = 0;
      for (size_t v = 0; v < n; ++v)
        if (!(s >> v & 1) && (deps[v] & ~s) == 0) total += ways[s | (1u << v)];
      ways[s] = total;
    }
    uint32_t placed = 0;
    while (order.size() < n) {
      uint64_t pick = rng.below(ways[placed]);
      for (size_t v = 0; v < n; ++v) {
        if ((placed >> v & 1) || (deps[v] & ~placed) != 0) continue;
        const uint64_t w = ways[placed | (1u << v)];
        if (pick < w) {
          order.push_back(v);
          placed |= 1u << v;
          break;
        }
        pick -= w;
      }
    }
    return order;
  }
  uint32_t placed = 0;
  while (order.size() < n) {
    std::vector<size_t> ready;
    for (size_t v = 0; v < n; ++v)
      if (!(placed >> v & 1) && (deps[v] & ~placed) == 0) ready.push_back(v);
    const size_t v = rng.pick(ready);
    order.push_back(v);
    placed |= 1u << v;
  }
  return order;
}

namespace {

int64_t read_disp(const Bytes& b, size_t off, unsigned size) {
  uint64_t v = 0;
  for (unsigned i = 0; i < size; ++i) v |= uint64_t{b[off + i]} << (8 * i);
  if (size < 8 && (v >> (8 * size - 1)) & 1) v |= ~uint64_t{0} << (8 * size);
  return static_cast<int64_t>(v);
}

void write_disp(Bytes& b, size_t off, unsigned size, int64_t v) {
  for (unsigned i = 0; i < size; ++i) b[off + i] = static_cast<uint8_t>(static_cast<uint64_t>(v) >> (8 * i));
}

}  // namespace

Bytes relocate_instruction(const Instruction& in, uint64_t new_address, std::optional<uint64_t> new_branch_target) {
  Bytes out = in.bytes;
  if (new_address == in.address && (!new_branch_target || new_branch_target == in.branch_target)) return out;
  const uint64_t new_end = new_address + in.size();
  if (in.rip_relative) {
    if (in.enc.disp_size != 4) throw Error(ErrorKind::InvalidArgument, "rip-relative without disp32");
    const uint64_t target = in.end() + static_cast<uint64_t>(read_disp(out, in.enc.disp_offset, 4));
    const int64_t disp = static_cast<int64_t>(target - new_end);
    if (disp < INT32_MIN || disp > INT32_MAX) throw Error(ErrorKind::InfeasiblePlan, "rip displacement overflow");
    write_disp(out, in.enc.disp_offset, 4, disp);
  }
  if (in.is_rel_branch && in.branch_target) {
    const unsigned size = in.rel_width / 8;
    const size_t off = in.size() - size;
    const uint64_t target = new_branch_target.value_or(*in.branch_target);
    const int64_t disp = static_cast<int64_t>(target - new_end);
    if (size == 1 ? (disp < -128 || disp > 127) : (disp < INT32_MIN || disp > INT32_MAX))
      throw Error(ErrorKind::InfeasiblePlan, "branch displacement out of range");
    write_disp(out, off, size, disp);
  }
  return out;
}

Bytes relayout_block(const BasicBlock& block, const std::vector<size_t>& order) {
  Bytes out;
  uint64_t addr = block.start;
  for (size_t i : order) {
    const Instruction& in = block.instructions[i];
    const Bytes b = relocate_instruction(in, addr);
    out.insert(out.end(), b.begin(), b.end());
    addr += b.size();
  }
  return out;
}

TransformResult reorder_intra_bb(const FunctionView& fn, const LivenessMap& live, Rng& rng, const Deadline& deadline) {
  TransformResult res{function_bytes(fn), new_report(fn, Technique::IntraReorder, rng)};
  for (size_t bi = 0; bi < fn.blocks.size(); ++bi) {
    deadline.check();
    const BasicBlock& b = fn.blocks[bi];
    const size_t n = b.instructions.size();
    if (n < 2) continue;
    ++res.report.sites_considered;
    if (n > 32) {
      res.report.skipped.push_back("block_too_large");
      continue;
    }
    const auto deps = block_dependences(b, live, live.block_first[bi]);
    std::vector<size_t> identity(n);
    for (size_t i = 0; i < n; ++i) identity[i] = i;
    // Blocks with a single valid order are left alone.
    bool alternative = false;
    for (size_t j = 1; j < n && !alternative; ++j)
      if (!(deps[j] >> (j - 1) & 1)) alternative = true;
    if (!alternative) continue;
    std::vector<size_t> order;
    for (int attempt = 0; attempt < 64; ++attempt) {
      order = sample_topological_order(deps, rng);
      if (order != identity) break;
    }
    if (order == identity) continue;
    const Bytes bytes = relayout_block(b, order);
    std::copy(bytes.begin(), bytes.end(), res.code.begin() + static_cast<std::ptrdiff_t>(b.start - fn.start));
    ++res.report.sites_transformed;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Register-preservation reordering

namespace {

std::optional<Reg> single_push_pop(const Instruction& in, uint8_t base_opcode) {
  const Bytes& b = in.bytes;
  if (b.size() == 1 && b[0] >= base_opcode && b[0] < base_opcode + 8) return reg_from_hw(b[0] - base_opcode);
  if (b.size() == 2 && b[0] == 0x41 && b[1] >= base_opcode && b[1] < base_opcode + 8)
    return reg_from_hw(8 + b[1] - base_opcode);
  return std::nullopt;
}

bool is_entry_filler(const Instruction& in) {
  return in.mnemonic == "endbr64" || in.mnemonic.starts_with("nop");
}

bool is_rsp_adjust(const Instruction& in) {
  if (in.mnemonic != "sub" && in.mnemonic != "add") return false;
  if (in.operands.size() != 2) return false;
  const auto* r = in.operands[0].reg();
  return r && r->gpr == Reg::Rsp && in.operands[1].imm();
}

bool references_stack_frame(const Instruction& in) {
  if (in.mnemonic == "leave" || in.mnemonic == "enter") return true;
  if (!in.explicit_regs.contains(Reg::Rsp)) return false;
  if (is_rsp_adjust(in)) return false;
  return true;
}

}  // namespace

TransformResult reorder_preservation_code(const FunctionView& fn, Rng& rng, const Deadline& deadline) {
  TransformResult res{function_bytes(fn), new_report(fn, Technique::PreserveReorder, rng)};
  deadline.check();
  const auto insns = fn.instructions();
  size_t i = 0;
  while (i < insns.size() && is_entry_filler(*insns[i])) ++i;
  const size_t pro_begin = i;
  std::vector<Reg> pushed;
  while (i < insns.size() && single_push_pop(*insns[i], 0x50)) pushed.push_back(*single_push_pop(*insns[i++], 0x50));
  const size_t pro_end = i;
  if (pushed.size() < 2) return res;
  res.report.sites_considered = 1;
  {
    RegSet seen;
    for (Reg r : pushed) {
      if (seen.contains(r) || r == Reg::Rsp) {
        res.report.skipped.push_back("repeated_push");
        return res;
      }
      seen.insert(r);
    }
  }

  const size_t k = pushed.size();
  std::vector<size_t> epilogues;  // index of the first pop of each epilogue
  std::vector<bool> in_epilogue(insns.size(), false);
  for (size_t j = pro_end; j < insns.size(); ++j) {
    const Instruction& in = *insns[j];
    const bool leaves = in.flow == Flow::Return || (in.flow == Flow::Jump && in.branch_target &&
                                                    (*in.branch_target < fn.start || *in.branch_target >= fn.end()));
    if (!leaves) continue;
    if (j < pro_end + k) {
      res.report.skipped.push_back("epilogue_mismatch");
      return res;
    }
    for (size_t p = 0; p < k; ++p) {
      auto r = single_push_pop(*insns[j - k + p], 0x58);
      if (!r || *r != pushed[k - 1 - p]) {
        res.report.skipped.push_back("epilogue_mismatch");
        return res;
      }
      in_epilogue[j - k + p] = true;
    }
    epilogues.push_back(j - k);
  }
  for (size_t j = 0; j < insns.size(); ++j) {
    if ((j >= pro_begin && j < pro_end) || in_epilogue[j]) continue;
    if (references_stack_frame(*insns[j])) {
      res.report.skipped.push_back("stack_reference");
      return res;
    }
  }

  // Permute within groups of equal encoding length.
  std::vector<size_t> perm(k);
  for (size_t s = 0; s < k; ++s) perm[s] = s;
  std::vector<std::vector<size_t>> groups(3);
  for (size_t s = 0; s < k; ++s) groups[insns[pro_begin + s]->size()].push_back(s);
  const bool movable = std::any_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() >= 2; });
  if (!movable) {
    res.report.skipped.push_back("push_length_mixed");
    return res;
  }
  std::vector<size_t> identity = perm;
  for (int attempt = 0; attempt < 64 && perm == identity; ++attempt) {
    for (const auto& g : groups) {
      std::vector<size_t> slots = g;
      rng.shuffle(std::span<size_t>(slots));
      for (size_t q = 0; q < g.size(); ++q) perm[g[q]] = slots[q];
    }
  }
  if (perm == identity) return res;

  // New push order: slot s pushes pushed[perm[s]].
  uint64_t off = insns[pro_begin]->address - fn.start;
  for (size_t s = 0; s < k; ++s) {
    const Bytes& b = insns[pro_begin + perm[s]]->bytes;
    std::copy(b.begin(), b.end(), res.code.begin() + static_cast<std::ptrdiff_t>(off));
    off += b.size();
  }
  for (size_t e : epilogues) {
    // Pop slot p restores the register pushed in slot k-1-p.
    uint64_t at = insns[e]->address - fn.start;
    for (size_t p = 0; p < k; ++p) {
      const Reg r = pushed[perm[k - 1 - p]];
      // Original epilogue slot that pops r.
      const size_t orig = e + (k - 1 - static_cast<size_t>(std::find(pushed.begin(), pushed.end(), r) - pushed.begin()));
      const Bytes& b = insns[orig]->bytes;
      std::copy(b.begin(), b.end(), res.code.begin() + static_cast<std::ptrdiff_t>(at));
      at += b.size();
    }
  }
  res.report.sites_transformed = 1;
  return res;
}

// ---------------------------------------------------------------------------
// Register reassignment

namespace {

struct Field {
  enum Kind { OpcodeReg, ModrmReg, ModrmRm, SibBase, SibIndex } kind;
  uint8_t value;  // full 4-bit register number
};

RegSet swap_in(RegSet s, Reg a, Reg b) {
  const bool ha = s.contains(a), hb = s.contains(b);
  s.erase(a);
  s.erase(b);
  if (ha) s.insert(b);
  if (hb) s.insert(a);
  return s;
}

std::optional<Reg> swap_reg(std::optional<Reg> r, Reg a, Reg b) {
  if (r == a) return b;
  if (r == b) return a;
  return r;
}

bool renamed_equal(const Instruction& orig, const Instruction& now, Reg from, Reg to) {
  if (orig.size() != now.size() || orig.mnemonic != now.mnemonic || orig.operands.size() != now.operands.size())
    return false;
  for (size_t i = 0; i < orig.operands.size(); ++i) {
    const Operand& a = orig.operands[i];
    const Operand& b = now.operands[i];
    if (a.kind() != b.kind() || a.size != b.size) return false;
    if (auto* ra = a.reg()) {
      const auto* rb = b.reg();
      if (rb->high_byte || ra->high_byte) return false;
      if (ra->gpr) {
        if (!rb->gpr || swap_reg(ra->gpr, from, to) != rb->gpr || ra->width != rb->width) return false;
      } else if (ra->id != rb->id) {
        return false;
      }
    } else if (auto* ma = a.mem()) {
      const auto* mb = b.mem();
      if (swap_reg(ma->base, from, to) != mb->base || swap_reg(ma->index, from, to) != mb->index ||
          ma->scale != mb->scale || ma->disp != mb->disp || ma->rip_relative != mb->rip_relative ||
          ma->has_segment != mb->has_segment)
        return false;
    } else if (!(a == b)) {
      return false;
    }
  }
  return swap_in(orig.regs_read, from, to) == now.regs_read &&
         swap_in(orig.regs_written, from, to) == now.regs_written && orig.flags_read == now.flags_read &&
         orig.flags_written == now.flags_written;
}

}  // namespace

std::optional<Bytes> rename_register(const Instruction& in, Reg from, Reg to) {
  const Encoding& e = in.enc;
  if (e.vex || e.opcode_len == 0) return std::nullopt;
  for (const Operand& o : in.operands)
    if (auto* r = o.reg(); r && r->high_byte) return std::nullopt;
  const uint8_t rex = e.has_rex ? in.bytes[e.prefix_len] : 0;
  const uint8_t R = (rex >> 2) & 1, X = (rex >> 1) & 1, B = rex & 1;

  std::vector<Field> fields;
  const uint8_t last_op = in.bytes[e.opcode_offset + e.opcode_len - 1];
  if (e.modrm_offset == 0) {
    const bool opreg = e.opcode_len == 1 ? ((last_op >= 0x50 && last_op <= 0x5F) || (last_op >= 0x91 && last_op <= 0x97) ||
                                            (last_op == 0x90 && B) || (last_op >= 0xB0 && last_op <= 0xBF))
                                         : (e.opcode_len == 2 && last_op >= 0xC8 && last_op <= 0xCF);
    if (opreg) fields.push_back({Field::OpcodeReg, static_cast<uint8_t>((last_op & 7) | (B << 3))});
  } else {
    const uint8_t modrm = in.bytes[e.modrm_offset];
    const uint8_t mod = modrm >> 6, reg = (modrm >> 3) & 7, rm = modrm & 7;
    fields.push_back({Field::ModrmReg, static_cast<uint8_t>(reg | (R << 3))});
    if (mod == 3) {
      fields.push_back({Field::ModrmRm, static_cast<uint8_t>(rm | (B << 3))});
    } else if (rm == 4) {
      const uint8_t sib = in.bytes[e.modrm_offset + 1];
      const uint8_t base = sib & 7, idx = (sib >> 3) & 7;
      if (!(base == 5 && mod == 0)) fields.push_back({Field::SibBase, static_cast<uint8_t>(base | (B << 3))});
      if ((idx | (X << 3)) != 4) fields.push_back({Field::SibIndex, static_cast<uint8_t>(idx | (X << 3))});
    } else if (!(rm == 5 && mod == 0)) {
      fields.push_back({Field::ModrmRm, static_cast<uint8_t>(rm | (B << 3))});
    }
  }
  std::vector<size_t> matching;
  for (size_t i = 0; i < fields.size(); ++i)
    if (fields[i].value == hw(from)) matching.push_back(i);
  if (matching.empty()) return std::nullopt;

  const uint8_t t = hw(to);
  // Try every subset of candidate fields, largest first; a ModRM.reg that is an
  // opcode extension only survives validation when left alone.
  const uint32_t nsub = 1u << matching.size();
  std::vector<uint32_t> subsets;
  for (uint32_t s = 1; s < nsub; ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](uint32_t a, uint32_t b) { return std::popcount(a) > std::popcount(b); });
  for (uint32_t s : subsets) {
    Bytes out = in.bytes;
    uint8_t new_rex = rex;
    bool ok = true;
    for (size_t q = 0; q < matching.size() && ok; ++q) {
      if (!(s >> q & 1)) continue;
      const Field& f = fields[matching[q]];
      const uint8_t hi = t >> 3, lo = t & 7;
      switch (f.kind) {
        case Field::OpcodeReg: {
          const size_t at = e.opcode_offset + e.opcode_len - 1;
          out[at] = static_cast<uint8_t>((out[at] & 0xF8) | lo);
          new_rex = static_cast<uint8_t>((new_rex & ~1) | hi);
          break;
        }
        case Field::ModrmReg:
          out[e.modrm_offset] = static_cast<uint8_t>((out[e.modrm_offset] & 0xC7) | (lo << 3));
          new_rex = static_cast<uint8_t>((new_rex & ~4) | (hi << 2));
          break;
        case Field::ModrmRm: {
          const uint8_t mod = out[e.modrm_offset] >> 6;
          if (mod != 3 && (lo == 4 || (lo == 5 && mod == 0))) ok = false;
          out[e.modrm_offset] = static_cast<uint8_t>((out[e.modrm_offset] & 0xF8) | lo);
          new_rex = static_cast<uint8_t>((new_rex & ~1) | hi);
          break;
        }
        case Field::SibBase: {
          const uint8_t mod = out[e.modrm_offset] >> 6;
          if (lo == 5 && mod == 0) ok = false;
          out[e.modrm_offset + 1] = static_cast<uint8_t>((out[e.modrm_offset + 1] & 0xF8) | lo);
          new_rex = static_cast<uint8_t>((new_rex & ~1) | hi);
          break;
        }
        case Field::SibIndex:
          if (t == 4) ok = false;
          out[e.modrm_offset + 1] = static_cast<uint8_t>((out[e.modrm_offset + 1] & 0xC7) | (lo << 3));
          new_rex = static_cast<uint8_t>((new_rex & ~2) | (hi << 1));
          break;
      }
    }
    if (!ok) continue;
    if (!e.has_rex && (new_rex & 0x0F)) continue;  // would need a REX prefix: length change
    if (e.has_rex) out[e.prefix_len] = static_cast<uint8_t>(0x40 | (new_rex & 0x0F));
    auto now = decode(out, in.address);
    if (now && renamed_equal(in, *now, from, to)) return out;
  }
  return std::nullopt;
}

TransformResult reassign_registers(const FunctionView& fn, const LivenessMap& live, Rng& rng,
                                   const Deadline& deadline) {
  TransformResult res{function_bytes(fn), new_report(fn, Technique::RegReassign, rng)};
  const auto insns = fn.instructions();
  std::vector<bool> locked(insns.size(), false);
  const RegSet fixed{Reg::Rsp, Reg::Rbp};
  for (size_t bi = 0; bi < fn.blocks.size(); ++bi) {
    const size_t first = live.block_first[bi];
    const size_t last = first + fn.blocks[bi].instructions.size();
    for (size_t k = first; k < last; ++k) {
      deadline.check();
      if (locked[k]) continue;
      const Instruction& def = *insns[k];
      for (Reg r1 : ((def.kills() & def.explicit_regs) - def.uses() - fixed).items()) {
        if (def.implicit_regs().contains(r1)) continue;
        size_t e = k;
        while (e < last && live.live_out[e].regs.contains(r1)) ++e;
        if (e == last) continue;  // value escapes the block
        bool usable = true;
        RegSet busy = fixed | RegSet{r1};
        for (size_t j = k; j <= e; ++j) {
          const Instruction& in = *insns[j];
          if (locked[j] || in.implicit_regs().contains(r1)) usable = false;
          busy |= in.regs_read | in.regs_written | in.explicit_regs | live.live_in[j].regs | live.live_out[j].regs;
        }
        if (!usable) continue;
        ++res.report.sites_considered;
        const auto free = (RegSet::all() - busy).items();
        if (free.empty()) {
          res.report.skipped.push_back("no_free_register");
          continue;
        }
        if (!rng.chance(0.5)) continue;
        std::vector<Reg> order = free;
        rng.shuffle(std::span<Reg>(order));
        bool done = false;
        for (Reg r2 : order) {
          std::vector<std::pair<size_t, Bytes>> edits;
          bool ok = true;
          for (size_t j = k; j <= e && ok; ++j) {
            if (!insns[j]->explicit_regs.contains(r1)) continue;
            auto b = rename_register(*insns[j], r1, r2);
            if (!b)
              ok = false;
            else
              edits.emplace_back(j, std::move(*b));
          }
          if (!ok) continue;
          for (auto& [j, b] : edits)
            std::copy(b.begin(), b.end(), res.code.begin() + static_cast<std::ptrdiff_t>(insns[j]->address - fn.start));
          for (size_t j = k; j <= e; ++j) locked[j] = true;
          done = true;
          break;
        }
        if (done) {
          ++res.report.sites_transformed;
          break;  // this instruction is now locked
        }
        res.report.skipped.push_back("rex_change");
      }
    }
  }
  return res;
}

RegSet comparable_registers(Technique t) {
  return t == Technique::RegReassign ? abi::kExitLive : RegSet::all();
}

// ---------------------------------------------------------------------------

uint64_t technique_seed(uint64_t seed, std::string_view function, Technique t) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : function) h = (h ^ static_cast<uint8_t>(c)) * 0x100000001b3ULL;
  return Rng::mix(Rng::mix(seed, h), static_cast<uint64_t>(t));
}

std::vector<TransformReport> apply_all_inplace(BinaryImage& image, const FunctionFilter& filter,
                                               std::optional<double> budget_seconds, uint64_t seed,
                                               const std::vector<Technique>& techniques, const RuleSet& rules) {
  static constexpr Technique kOrder[] = {Technique::Subst, Technique::IntraReorder, Technique::PreserveReorder,
                                         Technique::RegReassign};
  std::vector<TransformReport> reports;
  std::vector<std::string> names;
  for (const auto& f : image.functions)
    if (!filter || filter(f)) names.push_back(f.name);
  for (const std::string& name : names) {
    for (Technique t : kOrder) {
      if (std::find(techniques.begin(), techniques.end(), t) == techniques.end()) continue;
      const FunctionView& fn = *image.find_function(name);
      Rng rng(technique_seed(seed, name, t));
      TransformReport report;
      report.function = name;
      report.technique = t;
      report.rng_seed = rng.seed();
      if (fn.opaque) {
        report.skipped.push_back("opaque");
        reports.push_back(std::move(report));
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const Deadline deadline(budget_seconds);
      try {
        deadline.check();
        TransformResult r;
        if (t == Technique::PreserveReorder) {
          r = reorder_preservation_code(fn, rng, deadline);
        } else {
          const LivenessMap live = compute_liveness(fn);
          if (t == Technique::Subst)
            r = substitute_instructions(fn, live, rng, deadline, rules);
          else if (t == Technique::IntraReorder)
            r = reorder_intra_bb(fn, live, rng, deadline);
          else
            r = reassign_registers(fn, live, rng, deadline);
        }
        deadline.check();
        report = std::move(r.report);
        if (report.sites_transformed > 0) {
          const uint64_t start = fn.start, length = fn.length;
          patch_bytes(image, start, r.code, length);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Timeout) throw;
        report.timed_out = true;
        report.sites_transformed = 0;
      }
      report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace binvar
