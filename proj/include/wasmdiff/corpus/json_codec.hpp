// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <string>

#include "wasmdiff/corpus/ast.hpp"
#include "wasmdiff/support/hex.hpp"

namespace wasmdiff {

// Lossless JSON form of corpus records: 64-bit immediates travel as strings
// (JSON numbers stop being exact at 2^53), byte blobs as hex.

inline nlohmann::json instruction_to_json(const Instruction& ins) {
    nlohmann::json j;
    j["op"] = std::string(instruction_meta(ins.op).name);
    if (ins.bits != 0)
        j["bits"] = hex_u64(ins.bits);
    if (ins.idx2 != 0)
        j["idx2"] = ins.idx2;
    if (ins.lane != 0)
        j["lane"] = ins.lane;
    if (ins.bytes != std::array<uint8_t, 16>{})
        j["bytes"] = hex_v128(ins.bytes);
    if (!ins.list.empty())
        j["list"] = ins.list;
    return j;
}

inline Opcode opcode_from_name(const std::string& name) {
    for (const auto& m : all_instruction_meta())
        if (m.name == name)
            return m.op;
    throw UnknownOpcode("no opcode named " + name);
}

inline Instruction instruction_from_json(const nlohmann::json& j) {
    Instruction ins;
    ins.op = opcode_from_name(j.at("op").get<std::string>());
    if (j.contains("bits")) {
        auto bytes = from_hex(j["bits"].get<std::string>());
        if (!bytes || bytes->size() != 8)
            throw std::runtime_error("bad bits field");
        uint64_t v = 0;
        for (uint8_t b : *bytes)
            v = (v << 8) | b;
        ins.bits = v;
    }
    if (j.contains("idx2"))
        ins.idx2 = j["idx2"].get<uint32_t>();
    if (j.contains("lane"))
        ins.lane = j["lane"].get<uint8_t>();
    if (j.contains("bytes")) {
        auto bytes = from_hex(j["bytes"].get<std::string>());
        if (!bytes || bytes->size() != 16)
            throw std::runtime_error("bad bytes field");
        std::copy(bytes->begin(), bytes->end(), ins.bytes.begin());
    }
    if (j.contains("list"))
        ins.list = j["list"].get<std::vector<uint32_t>>();
    return ins;
}

inline nlohmann::json val_types_to_json(const std::vector<ValType>& ts) {
    nlohmann::json arr = nlohmann::json::array();
    for (ValType t : ts)
        arr.push_back(val_type_name(t));
    return arr;
}

inline ValType val_type_from_name(const std::string& s) {
    for (uint8_t b : {0x7f, 0x7e, 0x7d, 0x7c, 0x7b, 0x70, 0x6f}) {
        ValType t = *val_type_from_byte(b);
        if (s == val_type_name(t))
            return t;
    }
    if (s == "t")
        return ValType::Wildcard;
    throw std::runtime_error("unknown value type " + s);
}

inline std::vector<ValType> val_types_from_json(const nlohmann::json& arr) {
    std::vector<ValType> out;
    for (const auto& e : arr)
        out.push_back(val_type_from_name(e.get<std::string>()));
    return out;
}

inline nlohmann::json stack_type_to_json(const StackType& st) {
    nlohmann::json j;
    j["params"] = val_types_to_json(st.params);
    j["results"] = val_types_to_json(st.results);
    if (st.variadic)
        j["variadic"] = true;
    return j;
}

inline StackType stack_type_from_json(const nlohmann::json& j) {
    StackType st;
    st.params = val_types_from_json(j.at("params"));
    st.results = val_types_from_json(j.at("results"));
    st.variadic = j.value("variadic", false);
    return st;
}

inline nlohmann::json constraint_to_json(const SemanticConstraint& c) {
    nlohmann::json j;
    j["kind"] = constraint_kind_name(c.kind);
    j["index"] = c.index;
    if (c.valueType)
        j["type"] = val_type_name(*c.valueType);
    if (c.pageMin)
        j["pageMin"] = *c.pageMin;
    if (c.pageMax)
        j["pageMax"] = *c.pageMax;
    if (c.signature)
        j["sig"] = stack_type_to_json(*c.signature);
    return j;
}

inline SemanticConstraint constraint_from_json(const nlohmann::json& j) {
    SemanticConstraint c;
    const std::string kind = j.at("kind").get<std::string>();
    for (int k = 0; k <= int(ConstraintKind::BlockSig); ++k) {
        if (kind == constraint_kind_name(ConstraintKind(k))) {
            c.kind = ConstraintKind(k);
            break;
        }
    }
    c.index = j.value("index", 0u);
    if (j.contains("type"))
        c.valueType = val_type_from_name(j["type"].get<std::string>());
    if (j.contains("pageMin"))
        c.pageMin = j["pageMin"].get<uint64_t>();
    if (j.contains("pageMax"))
        c.pageMax = j["pageMax"].get<uint64_t>();
    if (j.contains("sig"))
        c.signature = stack_type_from_json(j["sig"]);
    return c;
}

inline nlohmann::json ast_node_to_json(const AstNode& n) {
    nlohmann::json j;
    j["instr"] = instruction_to_json(n.instruction);
    j["type"] = stack_type_to_json(n.context.stackType);
    if (!n.context.constraints.empty()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : n.context.constraints)
            cs.push_back(constraint_to_json(c));
        j["constraints"] = cs;
    }
    if (n.paramChildCount)
        j["paramChildren"] = n.paramChildCount;
    if (n.elseChildStart != UINT32_MAX)
        j["elseStart"] = n.elseChildStart;
    if (n.isNesting)
        j["nesting"] = true;
    if (!n.children.empty()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : n.children)
            cs.push_back(ast_node_to_json(c));
        j["children"] = cs;
    }
    return j;
}

inline AstNode ast_node_from_json(const nlohmann::json& j) {
    AstNode n;
    n.instruction = instruction_from_json(j.at("instr"));
    n.context.stackType = stack_type_from_json(j.at("type"));
    if (j.contains("constraints"))
        for (const auto& c : j["constraints"])
            n.context.constraints.push_back(constraint_from_json(c));
    n.paramChildCount = j.value("paramChildren", 0u);
    n.elseChildStart = j.value("elseStart", UINT32_MAX);
    n.isNesting = j.value("nesting", false);
    if (j.contains("children"))
        for (const auto& c : j["children"])
            n.children.push_back(ast_node_from_json(c));
    return n;
}

}  // namespace wasmdiff
