// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
int main() { std::puts("wasmdiff-vm: not yet wired"); return 1; }
