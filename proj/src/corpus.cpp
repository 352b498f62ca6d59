#include "binvar/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "binvar/assembler.hpp"
#include "binvar/elf_writer.hpp"
#include "binvar/rng.hpp"

namespace binvar {

namespace {

constexpr uint64_t kDataSize = 512;

class FunctionGen {
 public:
  FunctionGen(Rng& rng, uint64_t base, uint64_t data, const std::vector<uint64_t>& callees,
              const CorpusOptions& opt)
      : rng_(rng), a_(base), data_(data), callees_(callees), opt_(opt) {}

  Bytes generate() {
    if (rng_.chance(opt_.endbr_share)) a_.endbr64();
    for (uint64_t i = 0; i < opt_.pad_bytes; ++i) a_.nop(1);

    std::vector<Reg> saved{Reg::Rbx, Reg::Rbp, Reg::R12, Reg::R13, Reg::R14, Reg::R15};
    rng_.shuffle(std::span<Reg>(saved));
    saved.resize(rng_.below(5));
    for (Reg r : saved) a_.push(r);
    frame_ = rng_.chance(0.3) ? 0x28 : 0;
    if (frame_) a_.alu_imm(AluOp::Sub, Reg::Rsp, frame_);

    work_ = {Reg::Rax, Reg::Rdi, Reg::Rsi, Reg::Rdx, Reg::Rcx, Reg::R8, Reg::R9, Reg::R10, Reg::R11};
    work_.insert(work_.end(), saved.begin(), saved.end());
    saved_ = saved;

    exit_ = a_.new_label();
    const int segments = static_cast<int>(rng_.range(2, 5));
    for (int s = 0; s < segments; ++s) {
      switch (rng_.below(7)) {
        case 0: straight(static_cast<int>(rng_.range(3, 9))); break;
        case 1: diamond(); break;
        case 2: loop(); break;
        case 3: memory(); break;
        case 4: frame_ ? locals() : straight(4); break;
        case 5: callees_.empty() ? diamond() : call(); break;
        default: early_exit(); break;
      }
    }
    straight(static_cast<int>(rng_.range(1, 4)));
    a_.bind(exit_);
    epilogue();
    return a_.finish();
  }

 private:
  Rng& rng_;
  Assembler a_;
  uint64_t data_;
  const std::vector<uint64_t>& callees_;
  const CorpusOptions& opt_;
  std::vector<Reg> work_;
  std::vector<Reg> saved_;
  int32_t frame_ = 0;
  Label exit_;
  std::vector<Reg> reserved_;

  Reg reg() {
    for (;;) {
      Reg r = rng_.pick(work_);
      if (std::find(reserved_.begin(), reserved_.end(), r) == reserved_.end()) return r;
    }
  }
  Width width() { return rng_.chance(0.7) ? Width::Q : Width::D; }
  int32_t imm8() { return static_cast<int32_t>(rng_.range(-100, 100)); }

  void op() {
    const Reg d = reg(), s = reg();
    const Width w = width();
    static constexpr std::array kOps{AluOp::Add, AluOp::Or, AluOp::And, AluOp::Sub, AluOp::Xor};
    switch (rng_.below(16)) {
      case 0: a_.mov(d, s, w); break;
      case 1: a_.mov_rev(d, s, w); break;
      case 2: a_.alu(rng_.pick(kOps), d, s, w); break;
      case 3: a_.alu_imm(rng_.chance(0.5) ? AluOp::Add : AluOp::Sub, d, imm8(), w); break;
      case 4: a_.alu_imm(rng_.pick(kOps), d, static_cast<int32_t>(rng_.range(-5000, 5000)), w); break;
      case 5: a_.xor_(d, d, Width::D); break;
      case 6: a_.lea(d, Mem::indexed(s, reg() == Reg::Rsp ? Reg::Rax : reg(), uint8_t(1u << rng_.below(4)), imm8()), w); break;
      case 7: a_.lea(d, Mem::at(s, imm8()), w); break;
      case 8: rng_.chance(0.5) ? a_.inc(d, w) : a_.dec(d, w); break;
      case 9: rng_.chance(0.5) ? a_.neg(d, w) : a_.not_(d, w); break;
      case 10: a_.shift(static_cast<ShiftOp>(std::array{4, 5, 7}[rng_.below(3)]), d, uint8_t(rng_.range(1, 15)), w); break;
      case 11: a_.imul(d, s, w); break;
      case 12: a_.mov_imm(d, rng_.range(0, 100000), Width::D); break;
      case 13:
        a_.cmp(d, s, w);
        a_.cmov(static_cast<Cond>(rng_.below(16)), reg(), reg(), w);
        break;
      case 14:
        rng_.chance(0.5) ? a_.test(d, d, w) : a_.test(d, s, w);
        a_.setcc(static_cast<Cond>(rng_.below(16)), reg());
        break;
      default: a_.xchg(d, s, w); break;
    }
  }

  void straight(int n) {
    for (int i = 0; i < n; ++i) op();
  }

  void compare() {
    if (rng_.chance(0.5))
      a_.cmp(reg(), reg(), width());
    else
      a_.alu_imm(AluOp::Cmp, reg(), imm8(), width());
  }

  BranchWidth bw() { return rng_.chance(0.6) ? BranchWidth::Rel8 : BranchWidth::Rel32; }

  void diamond() {
    Label other = a_.new_label(), join = a_.new_label();
    compare();
    a_.jcc(static_cast<Cond>(rng_.below(16)), other, bw());
    straight(static_cast<int>(rng_.range(1, 5)));
    a_.jmp(join, bw());
    a_.bind(other);
    straight(static_cast<int>(rng_.range(1, 5)));
    if (rng_.chance(0.4)) {
      // Second arm ends in a jump too, so neither arm falls into the join.
      a_.jmp(join, bw());
    }
    a_.bind(join);
  }

  void loop() {
    const Reg counter = reg();
    reserved_.push_back(counter);
    a_.mov_imm(counter, rng_.range(1, 6), Width::D);
    Label top = a_.new_label();
    a_.bind(top);
    straight(static_cast<int>(rng_.range(1, 4)));
    a_.dec(counter, Width::D);
    a_.jcc(Cond::NE, top, BranchWidth::Rel8);
    reserved_.pop_back();
  }

  int32_t data_offset() { return static_cast<int32_t>(rng_.below(kDataSize / 8) * 8); }

  void memory() {
    const Reg r = reg();
    a_.load(r, Mem::rip(data_ + data_offset()));
    op();
    if (rng_.chance(0.5))
      a_.alu_load(AluOp::Add, reg(), Mem::rip(data_ + data_offset()));
    a_.store(Mem::rip(data_ + data_offset()), reg(), width());
  }

  void locals() {
    const int32_t slot = static_cast<int32_t>(rng_.below(static_cast<uint64_t>(frame_) / 8) * 8);
    a_.store(Mem::at(Reg::Rsp, slot), reg());
    op();
    a_.load(reg(), Mem::at(Reg::Rsp, slot));
  }

  void call() {
    for (Reg r : {Reg::Rdi, Reg::Rsi})
      if (rng_.chance(0.5)) a_.mov(r, reg());
    a_.call_abs(rng_.pick(callees_));
    if (rng_.chance(0.5)) a_.add(reg(), Reg::Rax);
  }

  void early_exit() {
    compare();
    a_.jcc(static_cast<Cond>(rng_.below(16)), exit_, BranchWidth::Rel32);
    straight(static_cast<int>(rng_.range(1, 3)));
  }

  void epilogue() {
    if (frame_) a_.alu_imm(AluOp::Add, Reg::Rsp, frame_);
    for (auto it = saved_.rbegin(); it != saved_.rend(); ++it) a_.pop(*it);
    a_.ret();
  }
};

}  // namespace

Bytes synthesize_corpus(const CorpusOptions& options) {
  Rng rng(options.seed);
  ElfBuilder b;
  Bytes data(kDataSize);
  for (auto& x : data) x = static_cast<uint8_t>(rng.below(256));
  b.set_data(data);
  std::vector<uint64_t> callees;
  for (unsigned i = 0; i < options.functions; ++i) {
    const uint64_t at = b.next_function_address();
    Rng frng = rng.fork(i);
    FunctionGen gen(frng, at, b.data_address(), callees, options);
    char name[32];
    std::snprintf(name, sizeof name, "fx_%03u", i);
    b.add_function(name, gen.generate());
    callees.push_back(at);
  }
  return b.build();
}

}  // namespace binvar
