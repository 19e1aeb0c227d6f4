// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wasmdiff/core/errors.hpp"
#include "wasmdiff/core/opcodes.hpp"
#include "wasmdiff/core/types.hpp"

namespace wasmdiff {

// One row of the per-opcode metadata table: group, stack-type template and
// the semantic-constraint template the instruction imposes.
struct InstructionMeta {
    Opcode op{};
    std::string_view name;
    InstrGroup group{};
    StackType stackTemplate;
    ConstraintKind constraintTemplate = ConstraintKind::None;
    ImmKind imm = ImmKind::None;
    uint8_t accessBytes = 0;  // memory footprint of one access, 0 if not a memory access

    // Natural alignment exponent; immediate align must not exceed this.
    uint8_t naturalAlignLog2() const {
        uint8_t n = 0;
        for (uint8_t b = accessBytes; b > 1; b >>= 1)
            ++n;
        return n;
    }
};

namespace detail {

inline StackType parse_stack_template(std::string_view s) {
    StackType st;
    bool lhs = true;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    while (true) {
        skip();
        if (i >= s.size())
            break;
        if (s.compare(i, 2, "->") == 0) {
            lhs = false;
            i += 2;
            continue;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ')
            ++j;
        const std::string_view tok = s.substr(i, j - i);
        i = j;
        ValType t;
        if (tok == "i32") t = ValType::I32;
        else if (tok == "i64") t = ValType::I64;
        else if (tok == "f32") t = ValType::F32;
        else if (tok == "f64") t = ValType::F64;
        else if (tok == "v128") t = ValType::V128;
        else if (tok == "funcref") t = ValType::FuncRef;
        else if (tok == "externref") t = ValType::ExternRef;
        else if (tok == "t") t = ValType::Wildcard;
        else if (tok == "t*") { st.variadic = true; continue; }
        else { assert(false && "bad stack template token"); continue; }
        (lhs ? st.params : st.results).push_back(t);
    }
    return st;
}

struct MetaTables {
    std::vector<InstructionMeta> all;
    std::unordered_map<uint32_t, size_t> byValue;

    MetaTables() {
#define WASMDIFF_OPCODE_ROW(enumName, value, text, grp, stack, constraint, immKind, bytes)        \
        {                                                                                          \
            InstructionMeta m;                                                                     \
            m.op = Opcode::enumName;                                                               \
            m.name = text;                                                                         \
            m.group = InstrGroup::grp;                                                             \
            m.stackTemplate = parse_stack_template(stack);                                         \
            m.constraintTemplate = ConstraintKind::constraint;                                     \
            m.imm = ImmKind::immKind;                                                              \
            m.accessBytes = bytes;                                                                 \
            byValue.emplace(uint32_t(value), all.size());                                          \
            all.push_back(std::move(m));                                                           \
        }
        WASMDIFF_FOREACH_OPCODE(WASMDIFF_OPCODE_ROW)
#undef WASMDIFF_OPCODE_ROW
    }
};

inline const MetaTables& meta_tables() {
    static const MetaTables tables;
    return tables;
}

}  // namespace detail

/// Looks up the metadata row for an opcode; total over the supported set.
inline const InstructionMeta& instruction_meta(Opcode op) {
    const auto& t = detail::meta_tables();
    auto it = t.byValue.find(opcode_value(op));
    if (it == t.byValue.end())
        throw UnknownOpcode("unknown opcode 0x" + std::to_string(opcode_value(op)));
    return t.all[it->second];
}

inline const InstructionMeta* find_instruction_meta(uint32_t rawValue) {
    const auto& t = detail::meta_tables();
    auto it = t.byValue.find(rawValue);
    return it == t.byValue.end() ? nullptr : &t.all[it->second];
}

/// Every supported opcode, in table order.
inline const std::vector<InstructionMeta>& all_instruction_meta() {
    return detail::meta_tables().all;
}

inline std::string_view opcode_name(Opcode op) { return instruction_meta(op).name; }

}  // namespace wasmdiff
