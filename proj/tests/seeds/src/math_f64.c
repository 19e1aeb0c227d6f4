__attribute__((export_name("main")))
double run(void) {
  double acc = 0.0, x = 1.5;
  for (int i = 0; i < 24; ++i) {
    acc += __builtin_sqrt(x) * 0.75 - 1.0 / (x + 2.0);
    x = x * 1.25 + 0.125;
    if (acc > 100.0) acc -= 50.0;
  }
  return __builtin_floor(acc * 1000.0) / 1000.0;
}
