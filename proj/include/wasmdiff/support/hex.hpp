// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wasmdiff {

// Canonical rendering of runtime values, used both by the harness when
// normalizing runtime output and by instrumentation probes:
//   i32/f32 -> 8 lowercase hex digits of the raw bits
//   i64/f64 -> 16 digits
//   v128    -> 32 digits, bytes in memory order (lane 0 byte 0 first)
// Scalars print the bit pattern as one hex number (most significant digit
// first); vectors print byte-by-byte so in-Wasm probes can emit them without
// cross-lane arithmetic.

inline char hex_digit(unsigned v) { return "0123456789abcdef"[v & 0xf]; }

inline std::string hex_u32(uint32_t v) {
    std::string s(8, '0');
    for (int i = 7; i >= 0; --i, v >>= 4)
        s[size_t(i)] = hex_digit(v);
    return s;
}

inline std::string hex_u64(uint64_t v) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        s[size_t(i)] = hex_digit(v);
    return s;
}

inline std::string hex_bytes(const uint8_t* data, size_t n) {
    std::string s;
    s.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) {
        s += hex_digit(data[i] >> 4);
        s += hex_digit(data[i]);
    }
    return s;
}

inline std::string hex_v128(const std::array<uint8_t, 16>& bytes) {
    return hex_bytes(bytes.data(), bytes.size());
}

inline std::optional<unsigned> hex_nibble(char c) {
    if (c >= '0' && c <= '9') return unsigned(c - '0');
    if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
    return std::nullopt;
}

inline std::optional<std::vector<uint8_t>> from_hex(std::string_view s) {
    if (s.size() % 2 != 0)
        return std::nullopt;
    std::vector<uint8_t> out;
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        auto hi = hex_nibble(s[i]), lo = hex_nibble(s[i + 1]);
        if (!hi || !lo)
            return std::nullopt;
        out.push_back(uint8_t((*hi << 4) | *lo));
    }
    return out;
}

}  // namespace wasmdiff
