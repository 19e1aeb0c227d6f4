// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wasmdiff/core/module.hpp"
#include "wasmdiff/core/typing.hpp"

namespace wasmdiff {

struct Violation {
    std::string message;
    std::optional<uint32_t> funcIndex;  // joint index space, when function-scoped
};

struct ValidationResult {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }

    std::string to_string() const {
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty())
                s += "; ";
            if (v.funcIndex)
                s += "func " + std::to_string(*v.funcIndex) + ": ";
            s += v.message;
        }
        return s;
    }
};

namespace detail {

constexpr uint64_t kMaxMemoryPages = 65536;

// Constant expressions: t.const, ref.null, ref.func, and global.get of an
// imported immutable global, producing exactly one value of the expected type.
inline std::optional<std::string> check_const_expr(const WasmModule& mod, const ConstExpr& e,
                                                   ValType expected) {
    std::vector<ValType> stack;
    for (const auto& ins : e.instrs) {
        switch (ins.op) {
        case Opcode::I32Const: stack.push_back(ValType::I32); break;
        case Opcode::I64Const: stack.push_back(ValType::I64); break;
        case Opcode::F32Const: stack.push_back(ValType::F32); break;
        case Opcode::F64Const: stack.push_back(ValType::F64); break;
        case Opcode::V128Const: stack.push_back(ValType::V128); break;
        case Opcode::RefNull: {
            auto t = val_type_from_byte(uint8_t(ins.bits));
            if (!t)
                return "ref.null with invalid heap type in constant expression";
            stack.push_back(*t);
            break;
        }
        case Opcode::RefFunc:
            if (!mod.func_type(ins.index()))
                return "ref.func target out of range in constant expression";
            stack.push_back(ValType::FuncRef);
            break;
        case Opcode::GlobalGet: {
            const uint32_t importedGlobals = mod.num_imported(ExternalKind::Global);
            if (ins.index() >= importedGlobals)
                return "constant expression may only read imported globals";
            auto gt = mod.global_type(ins.index());
            if (!gt)
                return "global.get out of range in constant expression";
            if (gt->mutable_)
                return "constant expression may not read mutable globals";
            stack.push_back(gt->type);
            break;
        }
        default:
            return std::string("non-constant instruction in constant expression: ") +
                   std::string(instruction_meta(ins.op).name);
        }
    }
    if (stack.size() != 1)
        return "constant expression must produce exactly one value";
    if (stack[0] != expected)
        return std::string("constant expression type mismatch: expected ") +
               val_type_name(expected) + ", got " + val_type_name(stack[0]);
    return std::nullopt;
}

inline std::optional<std::string> check_limits(const Limits& l, uint64_t cap, const char* what) {
    if (l.min > cap)
        return std::string(what) + " minimum exceeds limit";
    if (l.max) {
        if (*l.max > cap)
            return std::string(what) + " maximum exceeds limit";
        if (l.min > *l.max)
            return std::string(what) + " minimum exceeds maximum";
    }
    return std::nullopt;
}

}  // namespace detail

/// Validates stack balance of every function body against its signature and
/// the consistency of all cross-section index references.
inline ValidationResult validate_module(const WasmModule& mod) {
    ValidationResult res;
    auto fail = [&](std::string msg, std::optional<uint32_t> func = std::nullopt) {
        res.violations.push_back({std::move(msg), func});
    };

    for (size_t i = 0; i < mod.functions.size(); ++i)
        if (mod.functions[i] >= mod.types.size())
            fail("function " + std::to_string(i) + ": unresolved type index");

    for (const auto& im : mod.imports) {
        switch (im.kind) {
        case ExternalKind::Function:
            if (im.typeIndex >= mod.types.size())
                fail("import " + im.module + "." + im.name + ": unresolved type index");
            break;
        case ExternalKind::Table:
            if (auto e = detail::check_limits(im.table.limits, 0xffffffff, "imported table"))
                fail(*e);
            break;
        case ExternalKind::Memory:
            if (auto e = detail::check_limits(im.memory.limits, detail::kMaxMemoryPages,
                                              "imported memory"))
                fail(*e);
            break;
        case ExternalKind::Global:
            break;
        }
    }

    for (const auto& t : mod.tables)
        if (auto e = detail::check_limits(t.limits, 0xffffffff, "table"))
            fail(*e);

    if (mod.num_memories() > 1)
        fail("at most one memory is allowed");
    for (const auto& m : mod.memories)
        if (auto e = detail::check_limits(m.limits, detail::kMaxMemoryPages, "memory"))
            fail(*e);

    {
        const uint32_t importedGlobals = mod.num_imported(ExternalKind::Global);
        for (size_t i = 0; i < mod.globals.size(); ++i) {
            if (auto e = detail::check_const_expr(mod, mod.globals[i].init, mod.globals[i].type.type))
                fail("global " + std::to_string(importedGlobals + i) + ": " + *e);
        }
    }

    {
        std::set<std::string> names;
        for (const auto& e : mod.exports) {
            if (!names.insert(e.name).second)
                fail("duplicate export name");
            bool resolved = false;
            switch (e.kind) {
            case ExternalKind::Function: resolved = e.index < mod.num_funcs(); break;
            case ExternalKind::Table: resolved = e.index < mod.num_tables(); break;
            case ExternalKind::Memory: resolved = e.index < mod.num_memories(); break;
            case ExternalKind::Global: resolved = e.index < mod.num_globals(); break;
            }
            if (!resolved)
                fail("export references missing " + std::string(external_kind_name(e.kind)));
        }
    }

    if (mod.start) {
        const FuncType* ft = mod.func_type(*mod.start);
        if (!ft)
            fail("start function index unresolved");
        else if (!ft->params.empty() || !ft->results.empty())
            fail("start function must have empty signature");
    }

    for (size_t i = 0; i < mod.elements.size(); ++i) {
        const auto& seg = mod.elements[i];
        const std::string where = "element segment " + std::to_string(i) + ": ";
        if (seg.mode == SegmentMode::Active) {
            auto tt = mod.table_type(seg.tableIndex);
            if (!tt) {
                fail(where + "unresolved table index");
            } else {
                if (tt->elem != seg.refType)
                    fail(where + "reference type mismatch with table");
                if (auto e = detail::check_const_expr(mod, seg.offset, ValType::I32))
                    fail(where + *e);
            }
        }
        for (uint32_t f : seg.funcIndices)
            if (f >= mod.num_funcs())
                fail(where + "unresolved function index");
        for (const auto& e : seg.exprs)
            if (auto err = detail::check_const_expr(mod, e, seg.refType))
                fail(where + *err);
    }

    for (size_t i = 0; i < mod.data.size(); ++i) {
        const auto& seg = mod.data[i];
        if (seg.mode != SegmentMode::Active)
            continue;
        const std::string where = "data segment " + std::to_string(i) + ": ";
        if (!mod.memory_type(seg.memoryIndex))
            fail(where + "unresolved memory index");
        else if (auto e = detail::check_const_expr(mod, seg.offset, ValType::I32))
            fail(where + *e);
    }

    // Per-function stack typing; only meaningful once indices resolved.
    if (res.ok()) {
        const uint32_t imported = mod.num_imported_funcs();
        for (size_t i = 0; i < mod.code.size(); ++i) {
            const uint32_t funcIdx = imported + uint32_t(i);
            FunctionTyper typer(mod, funcIdx);
            if (auto e = typer.run(false))
                fail(*e, funcIdx);
        }
    }
    return res;
}

}  // namespace wasmdiff
