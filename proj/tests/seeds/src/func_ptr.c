static int add(int a, int b) { return a + b; }
static int sub(int a, int b) { return a - b; }
static int mix(int a, int b) { return (a ^ b) + (a & b); }

typedef int (*binop)(int, int);
static binop ops[3] = {add, sub, mix};

__attribute__((export_name("main")))
int run(void) {
  int acc = 7;
  for (int i = 0; i < 9; ++i) acc = ops[i % 3](acc, i * 3 + 1);
  return acc;
}
