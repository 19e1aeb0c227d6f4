// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <type_traits>
#include <vector>

#include "wasmdiff/core/errors.hpp"

namespace wasmdiff::leb {

// Decoding works on a cursor into a byte buffer so callers can report the
// absolute offset of the bad byte.
struct Cursor {
    const uint8_t* data = nullptr;
    size_t size = 0;
    size_t pos = 0;

    uint8_t byte() {
        if (pos >= size)
            throw MalformedBinary(pos, "unexpected end of input");
        return data[pos++];
    }
};

template <typename T>
T read_unsigned(Cursor& c) {
    static_assert(std::is_unsigned_v<T> && sizeof(T) >= 4);
    constexpr unsigned maxBits = sizeof(T) * 8;
    constexpr unsigned maxBytes = (maxBits + 6) / 7;
    T result = 0;
    unsigned shift = 0;
    for (unsigned i = 0; i < maxBytes; ++i) {
        const size_t at = c.pos;
        const uint8_t b = c.byte();
        if (i + 1 == maxBytes && (b >> (maxBits - shift)) != 0)
            throw MalformedBinary(at, "unsigned LEB128 out of range");
        result |= T(b & 0x7f) << shift;
        if ((b & 0x80) == 0)
            return result;
        shift += 7;
    }
    throw MalformedBinary(c.pos, "unsigned LEB128 too long");
}

template <typename T>
T read_signed(Cursor& c) {
    static_assert(std::is_signed_v<T> && sizeof(T) >= 4);
    using U = std::make_unsigned_t<T>;
    constexpr unsigned maxBits = sizeof(T) * 8;
    constexpr unsigned maxBytes = (maxBits + 6) / 7;
    U result = 0;
    unsigned shift = 0;
    for (unsigned i = 0; i < maxBytes; ++i) {
        const size_t at = c.pos;
        const uint8_t b = c.byte();
        result |= U(b & 0x7f) << shift;
        shift += 7;
        if ((b & 0x80) == 0) {
            if (shift < maxBits) {
                if ((b & 0x40) != 0)
                    result |= ~U(0) << shift;
            } else {
                // Final byte: unused high bits must be a pure sign extension.
                const unsigned used = maxBits - (shift - 7);
                const uint8_t rest = uint8_t(b >> (used - 1));
                if (rest != 0 && rest != uint8_t(0x7f >> (used - 1)))
                    throw MalformedBinary(at, "signed LEB128 sign extension invalid");
            }
            return T(result);
        }
    }
    throw MalformedBinary(c.pos, "signed LEB128 too long");
}

// 33-bit signed integer used by block types, widened to int64_t.
inline int64_t read_s33(Cursor& c) {
    uint64_t result = 0;
    unsigned shift = 0;
    for (unsigned i = 0; i < 5; ++i) {
        const size_t at = c.pos;
        const uint8_t b = c.byte();
        result |= uint64_t(b & 0x7f) << shift;
        shift += 7;
        if ((b & 0x80) == 0) {
            if (shift >= 33) {
                const unsigned used = 33 - (shift - 7);
                const uint8_t rest = uint8_t(b >> (used - 1));
                if (rest != 0 && rest != uint8_t(0x7f >> (used - 1)))
                    throw MalformedBinary(at, "s33 sign extension invalid");
            } else if ((b & 0x40) != 0) {
                result |= ~uint64_t(0) << shift;
            }
            const uint64_t low = result & ((uint64_t(1) << 33) - 1);
            return ((low >> 32) & 1) ? int64_t(low | (~uint64_t(0) << 33)) : int64_t(low);
        }
    }
    throw MalformedBinary(c.pos, "s33 too long");
}

template <typename T>
void write_unsigned(std::vector<uint8_t>& out, T value) {
    static_assert(std::is_unsigned_v<T>);
    do {
        uint8_t b = value & 0x7f;
        value >>= 7;
        if (value != 0)
            b |= 0x80;
        out.push_back(b);
    } while (value != 0);
}

template <typename T>
void write_signed(std::vector<uint8_t>& out, T value) {
    static_assert(std::is_signed_v<T>);
    bool more = true;
    while (more) {
        uint8_t b = value & 0x7f;
        value >>= 7;  // arithmetic shift
        if ((value == 0 && (b & 0x40) == 0) || (value == -1 && (b & 0x40) != 0))
            more = false;
        else
            b |= 0x80;
        out.push_back(b);
    }
}

inline void write_s33(std::vector<uint8_t>& out, int64_t value) { write_signed<int64_t>(out, value); }

}  // namespace wasmdiff::leb
