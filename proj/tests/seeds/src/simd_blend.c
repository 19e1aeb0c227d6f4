#include <wasm_simd128.h>

__attribute__((export_name("main")))
float run(void) {
  v128_t a = wasm_f32x4_make(1.5f, -2.25f, 3.75f, -0.5f);
  v128_t b = wasm_f32x4_splat(0.25f);
  for (int i = 0; i < 10; ++i) {
    v128_t mask = wasm_f32x4_gt(a, b);
    v128_t blended = wasm_v128_bitselect(wasm_f32x4_mul(a, b), wasm_f32x4_add(a, b), mask);
    a = wasm_f32x4_max(blended, wasm_f32x4_neg(a));
    b = wasm_f32x4_add(b, wasm_f32x4_splat(0.125f));
  }
  return wasm_f32x4_extract_lane(a, 0) + wasm_f32x4_extract_lane(a, 3);
}
