static int process(const int* v, int n) {
  int local[8];
  for (int i = 0; i < n && i < 8; ++i) local[i] = v[i] * 2 + 1;
  int s = 0;
  for (int i = 0; i < n && i < 8; ++i) s += local[i];
  return s;
}

__attribute__((export_name("main")))
int run(void) {
  int vals[8] = {3, 1, 4, 1, 5, 9, 2, 6};
  int acc = process(vals, 8);
  vals[0] = acc;
  return process(vals, 4) - acc;
}
