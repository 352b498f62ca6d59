#pragma once

// Reference x86 arithmetic flags, written from the architectural definitions
// with plain unsigned and signed range checks. Used to cross-check the emulator.

#include <bit>
#include <cstdint>

namespace binvar::testing {

struct RefFlags {
  bool cf, pf, af, zf, sf, of;
  uint64_t result;
};

inline uint64_t width_mask(unsigned bits) { return bits == 64 ? ~0ULL : (1ULL << bits) - 1; }

inline int64_t as_signed(uint64_t v, unsigned bits) {
  if (bits == 64) return static_cast<int64_t>(v);
  const uint64_t sign = 1ULL << (bits - 1);
  return (v & sign) ? static_cast<int64_t>(v | ~width_mask(bits)) : static_cast<int64_t>(v);
}

inline bool even_parity_low_byte(uint64_t r) { return std::popcount(static_cast<unsigned>(r & 0xFF)) % 2 == 0; }

inline RefFlags ref_add(uint64_t a, uint64_t b, unsigned bits) {
  const uint64_t m = width_mask(bits);
  a &= m;
  b &= m;
  RefFlags f{};
  f.result = (a + b) & m;
  f.cf = bits == 64 ? f.result < a : (a + b) > m;
  const long double sum = static_cast<long double>(as_signed(a, bits)) + static_cast<long double>(as_signed(b, bits));
  const long double lo = -static_cast<long double>(1ULL << (bits - 1 == 63 ? 62 : bits - 1)) * (bits == 64 ? 2 : 1);
  const long double hi = -lo - 1;
  f.of = sum < lo || sum > hi;
  f.af = (a & 0xF) + (b & 0xF) > 0xF;
  f.zf = f.result == 0;
  f.sf = (f.result >> (bits - 1)) & 1;
  f.pf = even_parity_low_byte(f.result);
  return f;
}

inline RefFlags ref_sub(uint64_t a, uint64_t b, unsigned bits) {
  const uint64_t m = width_mask(bits);
  a &= m;
  b &= m;
  RefFlags f{};
  f.result = (a - b) & m;
  f.cf = a < b;
  const long double diff = static_cast<long double>(as_signed(a, bits)) - static_cast<long double>(as_signed(b, bits));
  const long double lo = -static_cast<long double>(1ULL << (bits - 1 == 63 ? 62 : bits - 1)) * (bits == 64 ? 2 : 1);
  const long double hi = -lo - 1;
  f.of = diff < lo || diff > hi;
  f.af = (a & 0xF) < (b & 0xF);
  f.zf = f.result == 0;
  f.sf = (f.result >> (bits - 1)) & 1;
  f.pf = even_parity_low_byte(f.result);
  return f;
}

}  // namespace binvar::testing
