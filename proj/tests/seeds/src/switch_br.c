static int classify(int x) {
  switch (x & 7) {
  case 0: return x + 1;
  case 1: return x * 2;
  case 2: return x - 3;
  case 3: return x / 2;
  case 4: return x << 1;
  case 5: return x >> 2;
  case 6: return ~x;
  default: return -x;
  }
}

__attribute__((export_name("main")))
int run(void) {
  int acc = 0;
  for (int i = 0; i < 32; ++i) acc += classify(acc + i);
  return acc;
}
