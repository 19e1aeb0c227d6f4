// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/corpus/ast.hpp"

#include <gtest/gtest.h>

#include <filesystem>

#include "wasmdiff/core/decoder.hpp"
#include "wasmdiff/core/validator.hpp"
#include "wasmdiff/support/fs.hpp"
#include "testutil.hpp"

using namespace wasmdiff;

namespace {

std::vector<AstNode> parse_first_function(const std::vector<uint8_t>& bytes) {
    const auto mod = decode_module(bytes);
    return parse_function_asts(mod, mod.num_imported_funcs());
}

}  // namespace

TEST(parse_asts, factorial_yields_four_roots) {
    const auto roots = parse_first_function(wasmdiff::test::factorial_module_bytes());
    ASSERT_EQ(roots.size(), 4u);
    // Roots 1 and 2: local.set over i32.const.
    EXPECT_EQ(roots[0].instruction.op, Opcode::LocalSet);
    ASSERT_EQ(roots[0].children.size(), 1u);
    EXPECT_EQ(roots[0].children[0].instruction.op, Opcode::I32Const);
    EXPECT_EQ(roots[1].instruction.op, Opcode::LocalSet);
    // Root 3: the loop, carrying its nested body.
    EXPECT_EQ(roots[2].instruction.op, Opcode::Loop);
    EXPECT_TRUE(roots[2].isNesting);
    EXPECT_EQ(roots[2].paramChildCount, 0u);
    EXPECT_EQ(roots[2].children.size(), 2u);
    // Root 4: trailing local.get leaf.
    EXPECT_EQ(roots[3].instruction.op, Opcode::LocalGet);
    EXPECT_TRUE(roots[3].children.empty());
}

TEST(parse_asts, const_becomes_child_of_local_set) {
    // [i32.const 5, local.set 0]
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.localRuns = {{1, ValType::I32}};
    fb.body = {make_i32_const(5), make_index_instr(Opcode::LocalSet, 0)};
    mod.code.push_back(fb);
    const auto roots = parse_function_asts(mod, 0);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(roots[0].instruction.op, Opcode::LocalSet);
    ASSERT_EQ(roots[0].children.size(), 1u);
    EXPECT_EQ(roots[0].children[0].instruction.i32_value(), 5);
}

TEST(parse_asts, single_constant_is_leaf_root) {
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::I32}});
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.body = {make_i32_const(1)};
    mod.code.push_back(fb);
    const auto roots = parse_function_asts(mod, 0);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_TRUE(roots[0].children.empty());
    EXPECT_TRUE(roots[0].context.stackType.params.empty());
    EXPECT_EQ(roots[0].context.stackType.results, (std::vector<ValType>{ValType::I32}));
}

TEST(parse_asts, serialization_reproduces_factorial_body) {
    const auto mod = decode_module(wasmdiff::test::factorial_module_bytes());
    const auto roots = parse_function_asts(mod, 0);
    EXPECT_EQ(serialize_roots(roots), mod.code[0].body);
}

TEST(parse_asts, if_else_arms_are_children_of_if) {
    // i32.const 1; if (result i32) then i32.const 2 else i32.const 3 end
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::I32}});
    mod.functions.push_back(0);
    Instruction ifi = make_instr(Opcode::If);
    ifi.bits = uint64_t(int64_t(-1));
    FunctionBody fb;
    fb.body = {make_i32_const(1), ifi, make_i32_const(2), make_instr(Opcode::Else),
               make_i32_const(3), make_instr(Opcode::End)};
    mod.code.push_back(fb);
    const auto roots = parse_function_asts(mod, 0);
    ASSERT_EQ(roots.size(), 1u);
    const AstNode& n = roots[0];
    EXPECT_EQ(n.instruction.op, Opcode::If);
    EXPECT_EQ(n.paramChildCount, 1u);  // condition
    ASSERT_EQ(n.children.size(), 3u);
    EXPECT_EQ(n.children[0].instruction.i32_value(), 1);
    EXPECT_EQ(n.children[1].instruction.i32_value(), 2);
    EXPECT_EQ(n.children[2].instruction.i32_value(), 3);
    EXPECT_EQ(n.elseChildStart, 2u);
    EXPECT_EQ(serialize_roots(roots), mod.code[0].body);
}

TEST(parse_asts, underflow_in_unreachable_code) {
    // After return, drop pops a phantom value; the function is unparseable.
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.body = {make_instr(Opcode::Return), make_instr(Opcode::Drop)};
    mod.code.push_back(fb);
    ASSERT_TRUE(validate_module(mod).ok());
    EXPECT_THROW(parse_function_asts(mod, 0), UnresolvableContext);
}

TEST(extract_context, call_concretized_from_callee_signature) {
    // callee: (i32,i32)->(i64); caller invokes it
    WasmModule mod;
    mod.types.push_back(FuncType{{ValType::I32, ValType::I32}, {ValType::I64}});
    mod.types.push_back(FuncType{{}, {ValType::I64}});
    mod.functions = {0, 1};
    FunctionBody callee;
    callee.body = {make_index_instr(Opcode::LocalGet, 0), make_instr(Opcode::Drop),
                   make_index_instr(Opcode::I64Const, 9)};
    FunctionBody caller;
    caller.body = {make_i32_const(1), make_i32_const(2), make_index_instr(Opcode::Call, 0)};
    mod.code = {callee, caller};
    ASSERT_TRUE(validate_module(mod).ok());

    const auto ctx = extract_context(mod, 1, 2);
    EXPECT_EQ(ctx.stackType.params, (std::vector<ValType>{ValType::I32, ValType::I32}));
    EXPECT_EQ(ctx.stackType.results, (std::vector<ValType>{ValType::I64}));
    EXPECT_FALSE(ctx.stackType.variadic);
    ASSERT_EQ(ctx.constraints.size(), 1u);
    EXPECT_EQ(ctx.constraints[0].kind, ConstraintKind::DirectCall);
    EXPECT_EQ(ctx.constraints[0].index, 0u);
    ASSERT_TRUE(ctx.constraints[0].signature.has_value());
    EXPECT_EQ(ctx.constraints[0].signature->params.size(), 2u);
}

TEST(extract_context, local_get_binds_type_and_index) {
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::F32}});
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.localRuns = {{3, ValType::F32}};
    fb.body = {make_index_instr(Opcode::LocalGet, 2)};
    mod.code.push_back(fb);
    const auto ctx = extract_context(mod, 0, 0);
    EXPECT_TRUE(ctx.stackType.params.empty());
    EXPECT_EQ(ctx.stackType.results, (std::vector<ValType>{ValType::F32}));
    ASSERT_EQ(ctx.constraints.size(), 1u);
    EXPECT_EQ(ctx.constraints[0].kind, ConstraintKind::LocalRef);
    EXPECT_EQ(ctx.constraints[0].index, 2u);
    EXPECT_EQ(ctx.constraints[0].valueType, ValType::F32);
}

TEST(extract_context, i32_const_has_no_constraints) {
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::I32}});
    mod.functions.push_back(0);
    FunctionBody fb;
    fb.body = {make_i32_const(5)};
    mod.code.push_back(fb);
    const auto ctx = extract_context(mod, 0, 0);
    EXPECT_TRUE(ctx.constraints.empty());
    EXPECT_TRUE(ctx.stackType.is_concrete());
}

// Context soundness: concretized types agree with the metadata templates and
// constraints are present wherever the group demands them.
namespace {

void check_node_soundness(const AstNode& n) {
    const auto& meta = instruction_meta(n.instruction.op);
    const StackType& st = n.context.stackType;
    EXPECT_TRUE(st.is_concrete()) << meta.name;
    if (!meta.stackTemplate.variadic) {
        ASSERT_EQ(st.params.size(), meta.stackTemplate.params.size()) << meta.name;
        ASSERT_EQ(st.results.size(), meta.stackTemplate.results.size()) << meta.name;
        for (size_t i = 0; i < st.params.size(); ++i)
            if (meta.stackTemplate.params[i] != ValType::Wildcard)
                EXPECT_EQ(st.params[i], meta.stackTemplate.params[i]) << meta.name;
        for (size_t i = 0; i < st.results.size(); ++i)
            if (meta.stackTemplate.results[i] != ValType::Wildcard)
                EXPECT_EQ(st.results[i], meta.stackTemplate.results[i]) << meta.name;
    }
    switch (meta.group) {
    case InstrGroup::Variable:
    case InstrGroup::Memory:
    case InstrGroup::Table:
    case InstrGroup::Control:
        EXPECT_FALSE(n.context.constraints.empty()) << meta.name;
        break;
    default:
        break;
    }
    EXPECT_EQ(n.children.size() >= n.paramChildCount, true);
    if (!n.isNesting)
        EXPECT_EQ(n.children.size(), st.params.size()) << meta.name;
    else
        EXPECT_EQ(n.paramChildCount, st.params.size()) << meta.name;
    for (const auto& c : n.children)
        check_node_soundness(c);
}

}  // namespace

TEST(parse_asts, seed_corpus_serialization_oracle) {
    namespace fs = std::filesystem;
    const auto seedDir = wasmdiff::test::env_path_opt("WASMDIFF_SEEDS");
    if (!seedDir || !fs::exists(*seedDir))
        GTEST_SKIP() << "seed corpus not built";
    size_t binaries = 0, functionsParsed = 0, functionsSkipped = 0;
    for (const auto& entry : fs::directory_iterator(*seedDir)) {
        if (entry.path().extension() != ".wasm")
            continue;
        ++binaries;
        const auto mod = decode_module(read_file(entry.path()));
        ASSERT_TRUE(validate_module(mod).ok()) << entry.path();
        const uint32_t imported = mod.num_imported_funcs();
        for (uint32_t i = 0; i < mod.code.size(); ++i) {
            std::vector<AstNode> roots;
            try {
                roots = parse_function_asts(mod, imported + i);
            } catch (const UnresolvableContext&) {
                ++functionsSkipped;
                continue;
            } catch (const StackUnderflow&) {
                ++functionsSkipped;
                continue;
            }
            ++functionsParsed;
            // In-order serialization must reproduce the body exactly.
            ASSERT_EQ(serialize_roots(roots), mod.code[i].body) << entry.path() << " func " << i;
            for (const auto& r : roots)
                check_node_soundness(r);
        }
    }
    ASSERT_GE(binaries, 50u);
    EXPECT_GT(functionsParsed, 0u);
    // Real-world refuse (unreachable code etc.) may skip a few functions, but
    // the bulk must parse.
    EXPECT_LT(functionsSkipped, functionsParsed);
}
