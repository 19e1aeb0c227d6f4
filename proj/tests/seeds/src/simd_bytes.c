#include <wasm_simd128.h>

static unsigned char bytes[32];

__attribute__((export_name("main")))
int run(void) {
  for (int i = 0; i < 32; ++i) bytes[i] = (unsigned char)(i * 11 + 5);
  v128_t a = wasm_v128_load(bytes);
  v128_t b = wasm_v128_load(bytes + 16);
  v128_t s = wasm_i8x16_add_sat(a, b);
  v128_t m = wasm_i8x16_max(a, wasm_i8x16_sub_sat(b, s));
  v128_t sh = wasm_i8x16_shuffle(s, m, 0, 17, 2, 19, 4, 21, 6, 23, 8, 25, 10, 27, 12, 29, 14, 31);
  sh = wasm_i8x16_shl(sh, 1);
  return wasm_i8x16_bitmask(sh) ^ wasm_i8x16_extract_lane(sh, 3);
}
