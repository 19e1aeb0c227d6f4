static unsigned rotl(unsigned x, unsigned r) { return (x << r) | (x >> (32 - r)); }

__attribute__((export_name("main")))
unsigned run(void) {
  unsigned h = 0x811c9dc5u;
  for (unsigned i = 0; i < 64; ++i) {
    h ^= i * 0x9e3779b9u;
    h = rotl(h, (i % 13) + 1);
    h += h >> 11;
    h &= 0xffffffffu;
  }
  return h ^ __builtin_popcount(h);
}
