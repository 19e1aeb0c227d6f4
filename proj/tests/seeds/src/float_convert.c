__attribute__((export_name("main")))
int run(void) {
  double d = 3.9;
  float f = 2.5f;
  int acc = 0;
  for (int i = 0; i < 16; ++i) {
    acc += (int)d + (int)f;
    acc += (int)(unsigned)(d * 2.0);
    d = d * 1.5 + (double)acc * 0.001;
    f = (float)d - (float)i;
    if (d > 1e9) d = 1.1;
  }
  return acc + (int)(long long)d;
}
