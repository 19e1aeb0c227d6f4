// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "wasmdiff/corpus/ast.hpp"

namespace wasmdiff {

namespace detail {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr uint64_t kFnvPrime = 0x100000001b3ull;

inline uint64_t fnv1a(uint64_t h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xff;
        h *= kFnvPrime;
    }
    return h;
}

inline uint64_t fingerprint_walk(uint64_t h, const AstNode& node) {
    // Depth-first over opcodes only; immediates are stripped. Structure
    // markers keep differently-shaped trees with equal opcode sequences apart.
    h = fnv1a(h, opcode_value(node.instruction.op));
    h = fnv1a(h, 0x28);  // '('
    for (uint32_t i = 0; i < node.children.size(); ++i) {
        if (i == node.elseChildStart)
            h = fnv1a(h, opcode_value(Opcode::Else));
        h = fingerprint_walk(h, node.children[i]);
    }
    h = fnv1a(h, 0x29);  // ')'
    return h;
}

}  // namespace detail

/// 64-bit structural hash over the opcode tree, immediates stripped.
/// Equal trees-modulo-immediates hash equal; collisions only cost corpus
/// diversity, never correctness.
inline uint64_t fingerprint(const AstNode& node) {
    return detail::fingerprint_walk(detail::kFnvOffset, node);
}

}  // namespace wasmdiff
