// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wasmdiff {

// Deterministic random stream. All sampling goes through explicit helpers so
// generated binaries are reproducible from (corpus, seed) alone; distribution
// classes from <random> are avoided because their output is not pinned by the
// standard.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    uint32_t next_u32() { return uint32_t(engine_()); }

    // Uniform in [0, n); n must be > 0. Lemire-style rejection-free reduction
    // would bias for huge n; the plain modulo bias is irrelevant here but the
    // masked-rejection loop keeps draws exactly uniform and stable.
    uint64_t below(uint64_t n) {
        if (n <= 1)
            return 0;
        uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        while (true) {
            const uint64_t v = engine_() & mask;
            if (v < n)
                return v;
        }
    }

    size_t index(size_t n) { return size_t(below(n)); }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[index(v.size())];
    }

    // True with probability num/den.
    bool chance(uint64_t num, uint64_t den) {
        if (num >= den)
            return true;
        return below(den) < num;
    }

    uint8_t next_byte() { return uint8_t(engine_()); }

    std::vector<uint8_t> bytes(size_t n) {
        std::vector<uint8_t> out(n);
        for (auto& b : out)
            b = next_byte();
        return out;
    }

    // Derives an independent child stream; stable given (seed, salt).
    Rng fork(uint64_t salt) {
        uint64_t x = next_u64() ^ (salt * 0x9e3779b97f4a7c15ull);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wasmdiff
