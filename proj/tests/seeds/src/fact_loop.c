__attribute__((export_name("main")))
int run(void) {
  int n = 5, acc = 1;
  while (n) { acc *= n; n -= 1; }
  return acc;
}
