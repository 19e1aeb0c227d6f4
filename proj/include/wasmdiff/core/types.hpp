// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wasmdiff {

// Value types. Wildcard stands for the "t" placeholder in stack-type
// templates; it never appears in an encoded binary or in a concretized type.
enum class ValType : uint8_t {
    I32,
    I64,
    F32,
    F64,
    V128,
    FuncRef,
    ExternRef,
    Wildcard,
};

inline bool is_ref_type(ValType t) { return t == ValType::FuncRef || t == ValType::ExternRef; }
inline bool is_num_type(ValType t) {
    return t == ValType::I32 || t == ValType::I64 || t == ValType::F32 || t == ValType::F64;
}

inline const char* val_type_name(ValType t) {
    switch (t) {
    case ValType::I32: return "i32";
    case ValType::I64: return "i64";
    case ValType::F32: return "f32";
    case ValType::F64: return "f64";
    case ValType::V128: return "v128";
    case ValType::FuncRef: return "funcref";
    case ValType::ExternRef: return "externref";
    case ValType::Wildcard: return "t";
    }
    return "?";
}

// Binary encodings per the value type grammar.
inline std::optional<ValType> val_type_from_byte(uint8_t b) {
    switch (b) {
    case 0x7f: return ValType::I32;
    case 0x7e: return ValType::I64;
    case 0x7d: return ValType::F32;
    case 0x7c: return ValType::F64;
    case 0x7b: return ValType::V128;
    case 0x70: return ValType::FuncRef;
    case 0x6f: return ValType::ExternRef;
    default: return std::nullopt;
    }
}

inline uint8_t val_type_to_byte(ValType t) {
    switch (t) {
    case ValType::I32: return 0x7f;
    case ValType::I64: return 0x7e;
    case ValType::F32: return 0x7d;
    case ValType::F64: return 0x7c;
    case ValType::V128: return 0x7b;
    case ValType::FuncRef: return 0x70;
    case ValType::ExternRef: return 0x6f;
    case ValType::Wildcard: break;
    }
    return 0;
}

// (params -> results) on the operand stack. A template may carry Wildcard
// entries or the variadic flag; a concretized StackType has neither.
struct StackType {
    std::vector<ValType> params;
    std::vector<ValType> results;
    bool variadic = false;

    bool operator==(const StackType&) const = default;

    bool is_concrete() const {
        if (variadic)
            return false;
        for (ValType t : params)
            if (t == ValType::Wildcard)
                return false;
        for (ValType t : results)
            if (t == ValType::Wildcard)
                return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < params.size(); ++i)
            s += std::string(i ? "," : "") + val_type_name(params[i]);
        if (variadic)
            s += params.empty() ? "t*" : ",t*";
        s += "]->[";
        for (size_t i = 0; i < results.size(); ++i)
            s += std::string(i ? "," : "") + val_type_name(results[i]);
        if (variadic)
            s += results.empty() ? "t*" : ",t*";
        s += "]";
        return s;
    }
};

enum class ConstraintKind : uint8_t {
    None,
    LocalRef,
    GlobalRef,
    MemoryRange,
    TableRef,
    DirectCall,
    IndirectCall,
    BlockSig,
};

inline const char* constraint_kind_name(ConstraintKind k) {
    switch (k) {
    case ConstraintKind::None: return "none";
    case ConstraintKind::LocalRef: return "local";
    case ConstraintKind::GlobalRef: return "global";
    case ConstraintKind::MemoryRange: return "memory";
    case ConstraintKind::TableRef: return "table";
    case ConstraintKind::DirectCall: return "call";
    case ConstraintKind::IndirectCall: return "call_indirect";
    case ConstraintKind::BlockSig: return "block";
    }
    return "?";
}

// Cross-section requirement an instruction imposes on the module.
struct SemanticConstraint {
    ConstraintKind kind = ConstraintKind::None;
    uint32_t index = 0;
    std::optional<ValType> valueType;
    std::optional<uint64_t> pageMin;
    std::optional<uint64_t> pageMax;
    std::optional<StackType> signature;

    bool operator==(const SemanticConstraint&) const = default;
};

}  // namespace wasmdiff
