#include <wasm_simd128.h>

static int buf[16];

__attribute__((export_name("main")))
int run(void) {
  for (int i = 0; i < 16; ++i) buf[i] = i * 3 - 7;
  v128_t acc = wasm_i32x4_splat(0);
  for (int i = 0; i < 16; i += 4) {
    v128_t a = wasm_v128_load(&buf[i]);
    v128_t b = wasm_i32x4_splat(i + 1);
    acc = wasm_i32x4_add(acc, wasm_i32x4_mul(a, b));
  }
  return wasm_i32x4_extract_lane(acc, 0) + wasm_i32x4_extract_lane(acc, 1) +
         wasm_i32x4_extract_lane(acc, 2) + wasm_i32x4_extract_lane(acc, 3);
}
