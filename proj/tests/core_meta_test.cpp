// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/core/instr_table.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wasmdiff;

TEST(instruction_meta, totality_over_supported_set) {
    size_t n = 0;
    for (const auto& m : all_instruction_meta()) {
        EXPECT_NO_THROW(instruction_meta(m.op));
        EXPECT_EQ(&instruction_meta(m.op), &m);
        ++n;
    }
    EXPECT_EQ(n, all_instruction_meta().size());
}

TEST(instruction_meta, simd_opcode_count_is_236) {
    size_t vec = 0;
    for (const auto& m : all_instruction_meta())
        if (m.group == InstrGroup::Vector)
            ++vec;
    EXPECT_EQ(vec, 236u);
}

TEST(instruction_meta, inventory_exceeds_430_instructions) {
    EXPECT_GT(all_instruction_meta().size(), 430u);
}

TEST(instruction_meta, opcode_values_unique) {
    std::set<uint32_t> seen;
    for (const auto& m : all_instruction_meta())
        EXPECT_TRUE(seen.insert(opcode_value(m.op)).second) << m.name;
}

TEST(instruction_meta, names_unique) {
    std::set<std::string_view> seen;
    for (const auto& m : all_instruction_meta())
        EXPECT_TRUE(seen.insert(m.name).second) << m.name;
}

TEST(instruction_meta, i64_add_row) {
    const auto& m = instruction_meta(Opcode::I64Add);
    EXPECT_EQ(m.name, "i64.add");
    EXPECT_EQ(m.group, InstrGroup::Numeric);
    EXPECT_EQ(m.stackTemplate.params, (std::vector<ValType>{ValType::I64, ValType::I64}));
    EXPECT_EQ(m.stackTemplate.results, (std::vector<ValType>{ValType::I64}));
    EXPECT_FALSE(m.stackTemplate.variadic);
    EXPECT_EQ(m.constraintTemplate, ConstraintKind::None);
}

TEST(instruction_meta, drop_row) {
    const auto& m = instruction_meta(Opcode::Drop);
    EXPECT_EQ(m.group, InstrGroup::Parametric);
    EXPECT_EQ(m.stackTemplate.params, (std::vector<ValType>{ValType::Wildcard}));
    EXPECT_TRUE(m.stackTemplate.results.empty());
    EXPECT_EQ(m.constraintTemplate, ConstraintKind::None);
}

TEST(instruction_meta, call_row) {
    const auto& m = instruction_meta(Opcode::Call);
    EXPECT_EQ(m.group, InstrGroup::Control);
    EXPECT_TRUE(m.stackTemplate.variadic);
    EXPECT_EQ(m.constraintTemplate, ConstraintKind::DirectCall);
}

TEST(instruction_meta, select_is_wildcard_ternary) {
    const auto& m = instruction_meta(Opcode::Select);
    EXPECT_EQ(m.stackTemplate.params,
              (std::vector<ValType>{ValType::Wildcard, ValType::Wildcard, ValType::I32}));
    EXPECT_EQ(m.stackTemplate.results, (std::vector<ValType>{ValType::Wildcard}));
}

TEST(instruction_meta, memory_rows_carry_access_width) {
    EXPECT_EQ(instruction_meta(Opcode::I32Load).accessBytes, 4);
    EXPECT_EQ(instruction_meta(Opcode::I64Load).accessBytes, 8);
    EXPECT_EQ(instruction_meta(Opcode::I32Load8U).accessBytes, 1);
    EXPECT_EQ(instruction_meta(Opcode::V128Load).accessBytes, 16);
    EXPECT_EQ(instruction_meta(Opcode::V128Load).naturalAlignLog2(), 4);
    EXPECT_EQ(instruction_meta(Opcode::I32Load).naturalAlignLog2(), 2);
    EXPECT_EQ(instruction_meta(Opcode::I32Load8U).naturalAlignLog2(), 0);
}

TEST(instruction_meta, group_constraint_invariant) {
    // Variable/Memory/Table/Control rows must declare a constraint template, so
    // concretized contexts can satisfy the non-empty-constraints invariant.
    for (const auto& m : all_instruction_meta()) {
        switch (m.group) {
        case InstrGroup::Variable:
        case InstrGroup::Memory:
        case InstrGroup::Table:
        case InstrGroup::Control:
            EXPECT_NE(m.constraintTemplate, ConstraintKind::None) << m.name;
            break;
        default:
            break;
        }
    }
}

TEST(instruction_meta, unknown_opcode_throws) {
    EXPECT_THROW(instruction_meta(Opcode(0xfdb0)), UnknownOpcode);  // reserved SIMD slot
    EXPECT_THROW(instruction_meta(Opcode(0x27)), UnknownOpcode);
}
