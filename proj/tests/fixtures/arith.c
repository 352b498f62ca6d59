long sum_to(long n) {
  long s = 0;
  for (long i = 0; i < n; ++i) s += i * 3 + (i & 5);
  return s;
}

long clamp(long x, long lo, long hi) { return x < lo ? lo : x > hi ? hi : x; }

unsigned long mix(unsigned long a, unsigned long b) {
  a ^= b >> 7;
  a *= 0x9e3779b97f4a7c15UL;
  return a ^ (a >> 29) ^ b;
}

long pick(long a, long b, long c) {
  if (a > b) return clamp(a, c, b + c);
  return sum_to(a & 15) + mix(b, c);
}
