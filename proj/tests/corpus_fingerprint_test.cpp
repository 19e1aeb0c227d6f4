// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/corpus/fingerprint.hpp"

#include <gtest/gtest.h>

#include <map>

#include "wasmdiff/core/decoder.hpp"
#include "testutil.hpp"

using namespace wasmdiff;

namespace {

AstNode leaf(Opcode op, int32_t imm = 0) {
    AstNode n;
    n.instruction.op = op;
    n.instruction.bits = uint64_t(int64_t(imm));
    return n;
}

AstNode parent(Opcode op, std::vector<AstNode> children) {
    AstNode n;
    n.instruction.op = op;
    n.paramChildCount = uint32_t(children.size());
    n.children = std::move(children);
    return n;
}

// Opcode sequence of the stripped preorder walk, with structure markers;
// the independent definition the hash is checked against.
void structure_string(const AstNode& n, std::string& out) {
    out += std::to_string(opcode_value(n.instruction.op));
    out += '(';
    for (uint32_t i = 0; i < n.children.size(); ++i) {
        if (i == n.elseChildStart)
            out += "|else|";
        structure_string(n.children[i], out);
    }
    out += ')';
}

std::string structure_string(const AstNode& n) {
    std::string s;
    structure_string(n, s);
    return s;
}

}  // namespace

TEST(fingerprint, immediates_are_stripped) {
    EXPECT_EQ(fingerprint(leaf(Opcode::I32Const, 5)), fingerprint(leaf(Opcode::I32Const, 9)));
}

TEST(fingerprint, equal_shapes_hash_equal) {
    // Both factorial prologue sub-trees: local.set over i32.const.
    auto a = parent(Opcode::LocalSet, {leaf(Opcode::I32Const, 5)});
    a.instruction.bits = 0;
    auto b = parent(Opcode::LocalSet, {leaf(Opcode::I32Const, 1)});
    b.instruction.bits = 1;
    EXPECT_EQ(fingerprint(a), fingerprint(b));
}

TEST(fingerprint, different_shapes_hash_different) {
    const auto small = parent(Opcode::LocalSet, {leaf(Opcode::I32Const)});
    const auto big = parent(
        Opcode::LocalSet,
        {parent(Opcode::I32Add, {leaf(Opcode::I32Const), leaf(Opcode::LocalGet)})});
    EXPECT_NE(fingerprint(small), fingerprint(big));
}

TEST(fingerprint, factorial_prologue_pair_collapses) {
    const auto mod = decode_module(wasmdiff::test::factorial_module_bytes());
    const auto roots = parse_function_asts(mod, 0);
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_EQ(fingerprint(roots[0]), fingerprint(roots[1]));
    EXPECT_NE(fingerprint(roots[0]), fingerprint(roots[2]));
    EXPECT_NE(fingerprint(roots[2]), fingerprint(roots[3]));
}

// Exhaustive oracle: over every depth<=2 tree built from a 10-opcode
// alphabet, two trees hash equal iff their stripped opcode structures are
// equal (no collisions in this universe).
TEST(fingerprint, exhaustive_depth2_trees_over_10_opcode_alphabet) {
    const std::vector<Opcode> alphabet = {
        Opcode::I32Const, Opcode::I32Add,  Opcode::I32Sub,   Opcode::LocalGet,
        Opcode::LocalSet, Opcode::I32Mul,  Opcode::Drop,     Opcode::I64Const,
        Opcode::I32Eqz,   Opcode::GlobalGet,
    };
    std::vector<AstNode> trees;
    for (Opcode root : alphabet) {
        trees.push_back(leaf(root));
        for (Opcode c0 : alphabet) {
            trees.push_back(parent(root, {leaf(c0)}));
            for (Opcode c1 : alphabet)
                trees.push_back(parent(root, {leaf(c0), leaf(c1)}));
        }
    }
    ASSERT_EQ(trees.size(), 10u + 100u + 1000u);
    std::map<uint64_t, std::string> seen;
    for (const auto& t : trees) {
        const uint64_t fp = fingerprint(t);
        const std::string sig = structure_string(t);
        auto [it, inserted] = seen.emplace(fp, sig);
        if (!inserted)
            EXPECT_EQ(it->second, sig) << "fingerprint collision";
    }
    EXPECT_EQ(seen.size(), trees.size());
}
