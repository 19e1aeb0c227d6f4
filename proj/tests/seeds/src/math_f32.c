__attribute__((export_name("main")))
float run(void) {
  float acc = 0.0f;
  for (int i = 1; i <= 20; ++i) {
    float f = (float)i;
    acc += __builtin_fabsf(-f) / (f + 1.0f);
    acc = __builtin_copysignf(acc, f - 10.0f);
    acc += (float)(int)acc * 0.5f;
  }
  return acc;
}
