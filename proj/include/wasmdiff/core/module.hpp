// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wasmdiff/core/instr_table.hpp"
#include "wasmdiff/core/opcodes.hpp"
#include "wasmdiff/core/types.hpp"

namespace wasmdiff {

// One decoded instruction. The immediate fields are interpreted per the
// opcode's ImmKind:
//   bits  - const value bits (i32/i64 sign-extended, f32/f64 raw), block type
//           (s33), or the primary index (label/func/local/global/table/type/
//           elem/data), or memarg align
//   idx2  - memarg offset, call_indirect table index, second table/memory index
//   lane  - lane index for *_lane opcodes
//   bytes - v128.const payload or i8x16.shuffle lane selectors
//   list  - br_table targets (default last) or select-t value types (as bytes)
struct Instruction {
    Opcode op{};
    uint64_t bits = 0;
    uint32_t idx2 = 0;
    uint8_t lane = 0;
    std::array<uint8_t, 16> bytes{};
    std::vector<uint32_t> list;
    uint32_t byteOffset = 0;  // offset within the enclosing function body

    bool operator==(const Instruction& o) const {
        // Structural equality; byte offsets are derived, not identity.
        return op == o.op && bits == o.bits && idx2 == o.idx2 && lane == o.lane &&
               bytes == o.bytes && list == o.list;
    }

    int32_t i32_value() const { return int32_t(uint32_t(bits)); }
    int64_t i64_value() const { return int64_t(bits); }
    uint32_t f32_bits() const { return uint32_t(bits); }
    uint64_t f64_bits() const { return bits; }
    int64_t block_type() const { return int64_t(bits); }
    uint32_t index() const { return uint32_t(bits); }
    uint32_t mem_align() const { return uint32_t(bits); }
    uint32_t mem_offset() const { return idx2; }
};

inline Instruction make_instr(Opcode op) { Instruction i; i.op = op; return i; }

inline Instruction make_i32_const(int32_t v) {
    Instruction i;
    i.op = Opcode::I32Const;
    i.bits = uint64_t(int64_t(v));
    return i;
}

inline Instruction make_index_instr(Opcode op, uint32_t index) {
    Instruction i;
    i.op = op;
    i.bits = index;
    return i;
}

struct FuncType {
    std::vector<ValType> params;
    std::vector<ValType> results;
    bool operator==(const FuncType&) const = default;

    StackType stack_type() const { return StackType{params, results, false}; }
};

struct Limits {
    uint64_t min = 0;
    std::optional<uint64_t> max;
    bool operator==(const Limits&) const = default;
};

struct TableType {
    ValType elem = ValType::FuncRef;
    Limits limits;
    bool operator==(const TableType&) const = default;
};

struct MemoryType {
    Limits limits;
    bool operator==(const MemoryType&) const = default;
};

struct GlobalType {
    ValType type = ValType::I32;
    bool mutable_ = false;
    bool operator==(const GlobalType&) const = default;
};

enum class ExternalKind : uint8_t { Function = 0, Table = 1, Memory = 2, Global = 3 };

inline const char* external_kind_name(ExternalKind k) {
    switch (k) {
    case ExternalKind::Function: return "func";
    case ExternalKind::Table: return "table";
    case ExternalKind::Memory: return "memory";
    case ExternalKind::Global: return "global";
    }
    return "?";
}

struct Import {
    std::string module;
    std::string name;
    ExternalKind kind = ExternalKind::Function;
    uint32_t typeIndex = 0;  // kind == Function
    TableType table;         // kind == Table
    MemoryType memory;       // kind == Memory
    GlobalType global;       // kind == Global
    bool operator==(const Import&) const = default;
};

struct Export {
    std::string name;  // arbitrary bytes, compared verbatim
    ExternalKind kind = ExternalKind::Function;
    uint32_t index = 0;
    bool operator==(const Export&) const = default;
};

// A constant expression (global init, segment offset), without the final end.
struct ConstExpr {
    std::vector<Instruction> instrs;
    bool operator==(const ConstExpr&) const = default;
};

inline ConstExpr const_expr_i32(int32_t v) { return ConstExpr{{make_i32_const(v)}}; }

struct Global {
    GlobalType type;
    ConstExpr init;
    bool operator==(const Global&) const = default;
};

enum class SegmentMode : uint8_t { Active = 0, Passive = 1, Declarative = 2 };

struct ElementSegment {
    SegmentMode mode = SegmentMode::Active;
    uint32_t tableIndex = 0;  // Active only
    ConstExpr offset;         // Active only
    ValType refType = ValType::FuncRef;
    bool usesExprs = false;  // encoded with expressions rather than func indices
    std::vector<uint32_t> funcIndices;
    std::vector<ConstExpr> exprs;
    bool operator==(const ElementSegment&) const = default;
};

struct DataSegment {
    SegmentMode mode = SegmentMode::Active;  // Declarative unused
    uint32_t memoryIndex = 0;
    ConstExpr offset;  // Active only
    std::vector<uint8_t> bytes;
    bool operator==(const DataSegment&) const = default;
};

struct FunctionBody {
    // Local declarations as (count, type) runs, exactly as encoded.
    std::vector<std::pair<uint32_t, ValType>> localRuns;
    // Instructions excluding the implicit function-terminating end; nested
    // end/else opcodes are present.
    std::vector<Instruction> body;
    bool operator==(const FunctionBody&) const = default;

    std::vector<ValType> flat_locals() const {
        std::vector<ValType> out;
        for (const auto& [count, type] : localRuns)
            out.insert(out.end(), count, type);
        return out;
    }
};

struct CustomSection {
    std::string name;
    std::vector<uint8_t> bytes;          // payload after the name
    uint8_t afterKnownSection = 0;       // id of the last non-custom section seen before it
    bool operator==(const CustomSection&) const = default;
};

// Decoded intermediate representation of all 13 Wasm sections.
struct WasmModule {
    std::vector<FuncType> types;
    std::vector<Import> imports;
    std::vector<uint32_t> functions;  // type indices, local functions only
    std::vector<TableType> tables;    // local tables only
    std::vector<MemoryType> memories;
    std::vector<Global> globals;
    std::vector<Export> exports;
    std::optional<uint32_t> start;
    std::vector<ElementSegment> elements;
    std::vector<FunctionBody> code;
    std::vector<DataSegment> data;
    std::optional<uint32_t> dataCount;
    std::vector<CustomSection> customs;

    bool operator==(const WasmModule&) const = default;

    // --- index space helpers (imports precede local definitions) ---
    uint32_t num_imported(ExternalKind k) const {
        uint32_t n = 0;
        for (const auto& im : imports)
            if (im.kind == k)
                ++n;
        return n;
    }
    uint32_t num_imported_funcs() const { return num_imported(ExternalKind::Function); }
    uint32_t num_funcs() const { return num_imported_funcs() + uint32_t(functions.size()); }
    uint32_t num_tables() const { return num_imported(ExternalKind::Table) + uint32_t(tables.size()); }
    uint32_t num_memories() const { return num_imported(ExternalKind::Memory) + uint32_t(memories.size()); }
    uint32_t num_globals() const { return num_imported(ExternalKind::Global) + uint32_t(globals.size()); }

    // Type index of a function in the joint index space, or nullopt if out of range.
    std::optional<uint32_t> func_type_index(uint32_t funcIdx) const {
        uint32_t i = 0;
        for (const auto& im : imports) {
            if (im.kind != ExternalKind::Function)
                continue;
            if (i == funcIdx)
                return im.typeIndex;
            ++i;
        }
        const uint32_t local = funcIdx - i;
        if (local < functions.size())
            return functions[local];
        return std::nullopt;
    }

    const FuncType* func_type(uint32_t funcIdx) const {
        auto ti = func_type_index(funcIdx);
        if (!ti || *ti >= types.size())
            return nullptr;
        return &types[*ti];
    }

    std::optional<TableType> table_type(uint32_t tableIdx) const {
        uint32_t i = 0;
        for (const auto& im : imports) {
            if (im.kind != ExternalKind::Table)
                continue;
            if (i == tableIdx)
                return im.table;
            ++i;
        }
        const uint32_t local = tableIdx - i;
        if (local < tables.size())
            return tables[local];
        return std::nullopt;
    }

    std::optional<MemoryType> memory_type(uint32_t memIdx) const {
        uint32_t i = 0;
        for (const auto& im : imports) {
            if (im.kind != ExternalKind::Memory)
                continue;
            if (i == memIdx)
                return im.memory;
            ++i;
        }
        const uint32_t local = memIdx - i;
        if (local < memories.size())
            return memories[local];
        return std::nullopt;
    }

    std::optional<GlobalType> global_type(uint32_t globalIdx) const {
        uint32_t i = 0;
        for (const auto& im : imports) {
            if (im.kind != ExternalKind::Global)
                continue;
            if (i == globalIdx)
                return im.global;
            ++i;
        }
        const uint32_t local = globalIdx - i;
        if (local < globals.size())
            return globals[local].type;
        return std::nullopt;
    }

    // Body of a local function given its joint-space index.
    const FunctionBody* local_body(uint32_t funcIdx) const {
        const uint32_t imported = num_imported_funcs();
        if (funcIdx < imported)
            return nullptr;
        const uint32_t local = funcIdx - imported;
        return local < code.size() ? &code[local] : nullptr;
    }

    // Interns a function type, reusing an existing entry when present.
    uint32_t intern_type(const FuncType& ft) {
        for (size_t i = 0; i < types.size(); ++i)
            if (types[i] == ft)
                return uint32_t(i);
        types.push_back(ft);
        return uint32_t(types.size() - 1);
    }
};

}  // namespace wasmdiff
