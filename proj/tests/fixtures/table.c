static long table[16] = {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3};

long lookup(unsigned i) { return table[i & 15]; }

long count_above(long k) {
  long n = 0;
  for (int i = 0; i < 16; ++i)
    if (table[i] > k) ++n;
  return n;
}

void bump(long d) {
  for (int i = 0; i < 16; ++i) table[i] += d;
}

long weighted(long a, long b) { return lookup(a) * b - lookup(b) * a + count_above(a); }
