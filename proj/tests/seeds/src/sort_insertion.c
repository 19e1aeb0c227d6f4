static int data[16] = {9, 4, 7, 1, 8, 2, 6, 3, 5, 0, 15, 11, 13, 10, 14, 12};

__attribute__((export_name("main")))
int run(void) {
  for (int i = 1; i < 16; ++i) {
    int key = data[i], j = i - 1;
    while (j >= 0 && data[j] > key) { data[j + 1] = data[j]; --j; }
    data[j + 1] = key;
  }
  int sum = 0;
  for (int i = 0; i < 16; ++i) sum = sum * 31 + data[i];
  return sum;
}
