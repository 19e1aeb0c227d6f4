// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/core/validator.hpp"

#include <gtest/gtest.h>

#include "wasmdiff/core/decoder.hpp"
#include "testutil.hpp"

using namespace wasmdiff;

namespace {

WasmModule single_func_module(FuncType type, std::vector<Instruction> body,
                              std::vector<std::pair<uint32_t, ValType>> locals = {}) {
    WasmModule mod;
    mod.types.push_back(std::move(type));
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.localRuns = std::move(locals);
    fb.body = std::move(body);
    mod.code.push_back(std::move(fb));
    return mod;
}

}  // namespace

TEST(validate, factorial_fixture_ok) {
    const auto mod = decode_module(wasmdiff::test::factorial_module_bytes());
    EXPECT_TRUE(validate_module(mod).ok());
}

TEST(validate, missing_result_is_violation) {
    // function typed []->[i32] with empty body
    const auto mod = single_func_module(FuncType{{}, {ValType::I32}}, {});
    const auto res = validate_module(mod);
    ASSERT_FALSE(res.ok());
    EXPECT_NE(res.to_string().find("underflow"), std::string::npos);
}

TEST(validate, dangling_call_is_violation) {
    // call 7 in a 1-function module
    const auto mod = single_func_module(FuncType{}, {make_index_instr(Opcode::Call, 7)});
    const auto res = validate_module(mod);
    ASSERT_FALSE(res.ok());
    EXPECT_NE(res.to_string().find("call target out of range"), std::string::npos);
}

TEST(validate, type_mismatch) {
    // i32.const 0; i64.const 0; i32.add
    auto mod = single_func_module(FuncType{{}, {ValType::I32}},
                                  {make_i32_const(0), make_index_instr(Opcode::I64Const, 0),
                                   make_instr(Opcode::I32Add)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, unreachable_makes_stack_polymorphic) {
    // unreachable; i32.add  — valid per the spec's polymorphic stack rules
    auto mod = single_func_module(FuncType{{}, {ValType::I32}},
                                  {make_instr(Opcode::Unreachable), make_instr(Opcode::I32Add)});
    EXPECT_TRUE(validate_module(mod).ok());
}

TEST(validate, values_remaining_is_violation) {
    auto mod = single_func_module(FuncType{}, {make_i32_const(1)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, block_signature_checked) {
    // block (result i32) with empty body
    Instruction block = make_instr(Opcode::Block);
    block.bits = uint64_t(int64_t(-1));  // i32 result shorthand
    auto mod = single_func_module(FuncType{{}, {ValType::I32}},
                                  {block, make_instr(Opcode::End)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, loop_label_has_param_arity) {
    // loop (result i32) whose br 0 targets the loop start: branch carries no values
    Instruction loop = make_instr(Opcode::Loop);
    loop.bits = uint64_t(int64_t(-1));
    auto mod = single_func_module(
        FuncType{{}, {ValType::I32}},
        {loop, make_index_instr(Opcode::Br, 0), make_instr(Opcode::End)});
    EXPECT_TRUE(validate_module(mod).ok());
}

TEST(validate, if_without_else_needs_matching_signature) {
    Instruction ifi = make_instr(Opcode::If);
    ifi.bits = uint64_t(int64_t(-1));  // (result i32) with no else arm producing it
    auto mod = single_func_module(
        FuncType{{}, {ValType::I32}},
        {make_i32_const(1), ifi, make_i32_const(2), make_instr(Opcode::End)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, global_set_immutable_rejected) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    Global g;
    g.type = GlobalType{ValType::I32, false};
    g.init = const_expr_i32(0);
    mod.globals.push_back(g);
    FunctionBody fb;
    fb.body = {make_i32_const(1), make_index_instr(Opcode::GlobalSet, 0)};
    mod.code.push_back(fb);
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, duplicate_export_names_rejected) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions = {0, 0};
    mod.code.resize(2);
    mod.exports.push_back({"f", ExternalKind::Function, 0});
    mod.exports.push_back({"f", ExternalKind::Function, 1});
    const auto res = validate_module(mod);
    ASSERT_FALSE(res.ok());
    EXPECT_NE(res.to_string().find("duplicate export"), std::string::npos);
}

TEST(validate, nul_and_empty_export_names_are_distinct) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions = {0, 0, 0};
    mod.code.resize(3);
    mod.exports.push_back({std::string("\0jCeH", 5), ExternalKind::Function, 0});
    mod.exports.push_back({"", ExternalKind::Function, 1});
    mod.exports.push_back({"fj", ExternalKind::Function, 2});
    EXPECT_TRUE(validate_module(mod).ok());
}

TEST(validate, export_of_missing_item_rejected) {
    WasmModule mod;
    mod.exports.push_back({"m", ExternalKind::Memory, 0});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, memory_limits_min_above_max_rejected) {
    WasmModule mod;
    mod.memories.push_back(MemoryType{{4, 2}});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, alignment_above_natural_rejected) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    mod.memories.push_back(MemoryType{{1, std::nullopt}});
    Instruction load;
    load.op = Opcode::I32Load;
    load.bits = 3;  // 2^3 > natural alignment 4 bytes
    load.idx2 = 0;
    FunctionBody fb;
    fb.body = {make_i32_const(0), load, make_instr(Opcode::Drop)};
    mod.code.push_back(fb);
    EXPECT_FALSE(validate_module(mod).ok());

    mod.code[0].body[1].bits = 2;  // exactly natural: fine
    EXPECT_TRUE(validate_module(mod).ok());
}

TEST(validate, memory_instruction_without_memory_rejected) {
    auto mod = single_func_module(FuncType{{}, {ValType::I32}},
                                  {make_i32_const(0), make_index_instr(Opcode::I32Load, 0)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, data_segment_offset_must_be_i32) {
    WasmModule mod;
    mod.memories.push_back(MemoryType{{1, std::nullopt}});
    DataSegment seg;
    seg.mode = SegmentMode::Active;
    Instruction i64c;
    i64c.op = Opcode::I64Const;
    i64c.bits = 0;
    seg.offset.instrs = {i64c};
    seg.bytes = {1};
    mod.data.push_back(seg);
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, element_type_must_match_table) {
    WasmModule mod;
    mod.tables.push_back(TableType{ValType::ExternRef, {1, std::nullopt}});
    ElementSegment seg;
    seg.mode = SegmentMode::Active;
    seg.offset = const_expr_i32(0);
    seg.refType = ValType::FuncRef;
    mod.elements.push_back(seg);
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, br_table_arity_mismatch_rejected) {
    // block (result i32) / block (no result) with br_table over both
    Instruction outer = make_instr(Opcode::Block);
    outer.bits = uint64_t(int64_t(-1));
    Instruction inner = make_instr(Opcode::Block);
    inner.bits = uint64_t(int64_t(-64));
    Instruction brt = make_instr(Opcode::BrTable);
    brt.list = {0, 1};  // targets with different arities
    auto mod = single_func_module(FuncType{{}, {ValType::I32}},
                                  {outer, inner, make_i32_const(0), brt,
                                   make_instr(Opcode::End), make_i32_const(1),
                                   make_instr(Opcode::End)});
    EXPECT_FALSE(validate_module(mod).ok());
}

TEST(validate, call_indirect_requires_funcref_table) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    mod.tables.push_back(TableType{ValType::ExternRef, {1, std::nullopt}});
    Instruction ci = make_instr(Opcode::CallIndirect);
    ci.bits = 0;
    ci.idx2 = 0;
    FunctionBody fb;
    fb.body = {make_i32_const(0), ci};
    mod.code.push_back(fb);
    EXPECT_FALSE(validate_module(mod).ok());
}
