#pragma once

#include <array>

#include "binvar/assembler.hpp"
#include "binvar/rng.hpp"

namespace binvar::testing {

/// Straight-line block of `n` random instructions over a few registers (so
/// dependences are common) followed by ret.
inline Bytes random_block(Rng& rng, size_t n, uint64_t base = 0x401000) {
  static constexpr std::array<Reg, 4> kRegs{Reg::Rax, Reg::Rbx, Reg::Rcx, Reg::Rdx};
  Assembler a(base);
  auto r = [&] { return kRegs[rng.below(kRegs.size())]; };
  for (size_t i = 0; i < n; ++i) {
    switch (rng.below(12)) {
      case 0: a.mov(r(), r()); break;
      case 1: a.mov_imm(r(), rng.range(0, 100), Width::D); break;
      case 2: a.alu(AluOp::Add, r(), r()); break;
      case 3: a.alu_imm(AluOp::Sub, r(), static_cast<int32_t>(rng.range(1, 9))); break;
      case 4: a.cmp(r(), r()); break;
      case 5: a.cmov(Cond::E, r(), r()); break;
      case 6: a.lea(r(), Mem::at(r(), 8)); break;
      case 7: a.load(r(), Mem::at(Reg::Rsp, -16)); break;
      case 8: a.store(Mem::at(Reg::Rsp, -24), r()); break;
      case 9: a.inc(r()); break;
      case 10: a.alu(AluOp::Adc, r(), r()); break;
      default: a.xchg(r(), r()); break;
    }
  }
  a.ret();
  return a.finish();
}

}  // namespace binvar::testing
