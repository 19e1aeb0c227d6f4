#include <wasm_simd128.h>

__attribute__((export_name("main")))
long long run(void) {
  v128_t v = wasm_i64x2_make(0x0123456789abcdefll, -42ll);
  v128_t w = wasm_i64x2_splat(7);
  for (int i = 0; i < 6; ++i) {
    v = wasm_i64x2_add(wasm_i64x2_mul(v, w), wasm_i64x2_splat(i));
    w = wasm_v128_xor(w, wasm_i64x2_shl(v, 3));
  }
  return wasm_i64x2_extract_lane(v, 0) ^ wasm_i64x2_extract_lane(w, 1);
}
