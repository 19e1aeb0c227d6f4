static unsigned char src[64], dst[64];

__attribute__((export_name("main")))
int run(void) {
  for (int i = 0; i < 64; ++i) src[i] = (unsigned char)(i * 7 + 3);
  __builtin_memcpy(dst, src, 64);
  __builtin_memset(src, 0xa5, 32);
  int acc = 0;
  for (int i = 0; i < 64; ++i) acc += dst[i] ^ src[i & 31];
  return acc;
}
