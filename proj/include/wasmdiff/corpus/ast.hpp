// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasmdiff/core/module.hpp"
#include "wasmdiff/core/typing.hpp"

namespace wasmdiff {

/// Concretized context bound to one instruction: its stack type with all
/// wildcards and variadic segments resolved, plus the semantic constraints
/// the instruction imposes on the module.
struct ConcreteContext {
    StackType stackType;
    std::vector<SemanticConstraint> constraints;

    bool operator==(const ConcreteContext&) const = default;
};

/// An instruction index could not be resolved against the module, or the
/// instruction sits on a polymorphic stack; the binary is skipped.
class UnresolvableContext : public std::runtime_error {
public:
    explicit UnresolvableContext(const std::string& reason)
        : std::runtime_error("unresolvable context: " + reason) {}
};

/// A node requires more preceding roots than exist. Indicates disagreement
/// with the validator; the surrounding function is skipped.
class StackUnderflow : public std::runtime_error {
public:
    explicit StackUnderflow(const std::string& reason)
        : std::runtime_error("ast stack underflow: " + reason) {}
};

// One instruction with concretized context and child sub-trees.
//
// children layout: the first paramChildCount children produced this node's
// stack parameters (in push order); for block/loop/if the remaining children
// are the nested body roots in source order. For if-nodes, elseChildStart is
// the absolute child index where the else arm begins (UINT32_MAX if no else).
// else/end delimiters are not nodes; serialization re-synthesizes them.
struct AstNode {
    Instruction instruction;
    ConcreteContext context;
    std::vector<AstNode> children;
    uint32_t paramChildCount = 0;
    uint32_t elseChildStart = UINT32_MAX;
    bool isNesting = false;

    bool operator==(const AstNode&) const = default;

    size_t instruction_count() const {
        size_t n = 1;
        if (isNesting)
            ++n;  // closing end
        if (elseChildStart != UINT32_MAX)
            ++n;  // else delimiter
        for (const auto& c : children)
            n += c.instruction_count();
        return n;
    }

    size_t depth() const {
        size_t d = 0;
        for (const auto& c : children)
            d = std::max(d, c.depth());
        return d + 1;
    }
};

/// In-order serialization of a sub-tree back into a stack-balanced
/// instruction sequence (byte offsets are not reproduced).
inline void serialize_node(const AstNode& node, std::vector<Instruction>& out) {
    for (uint32_t i = 0; i < node.paramChildCount; ++i)
        serialize_node(node.children[i], out);
    out.push_back(node.instruction);
    if (node.isNesting) {
        for (uint32_t i = node.paramChildCount; i < node.children.size(); ++i) {
            if (i == node.elseChildStart)
                out.push_back(make_instr(Opcode::Else));
            serialize_node(node.children[i], out);
        }
        if (node.elseChildStart != UINT32_MAX && node.elseChildStart >= node.children.size())
            out.push_back(make_instr(Opcode::Else));  // empty else arm
        out.push_back(make_instr(Opcode::End));
    }
}

inline std::vector<Instruction> serialize_roots(const std::vector<AstNode>& roots) {
    std::vector<Instruction> out;
    for (const auto& r : roots)
        serialize_node(r, out);
    return out;
}

namespace detail {

inline bool is_nesting(Opcode op) {
    return op == Opcode::Block || op == Opcode::Loop || op == Opcode::If;
}

struct AstParser {
    const std::vector<Instruction>& instrs;
    const std::vector<TypedInstr>& typings;
    size_t pos = 0;

    AstNode make_node(const Instruction& ins, const TypedInstr& ty) const {
        if (!ty.precise)
            throw UnresolvableContext("instruction at +" + std::to_string(ins.byteOffset) +
                                      " sits on a polymorphic stack");
        AstNode n;
        n.instruction = ins;
        n.context.stackType = ty.type;
        n.context.constraints = ty.constraints;
        return n;
    }

    // Pops this node's parameters off the pending roots, attaching them in
    // stack order as the leading children.
    void adopt_params(AstNode& node, std::vector<AstNode>& roots) const {
        const size_t nparams = node.context.stackType.params.size();
        if (roots.size() < nparams)
            throw StackUnderflow(std::string(instruction_meta(node.instruction.op).name) +
                                 " needs " + std::to_string(nparams) + " operands, only " +
                                 std::to_string(roots.size()) + " roots pending");
        std::vector<AstNode> params(std::make_move_iterator(roots.end() - ptrdiff_t(nparams)),
                                    std::make_move_iterator(roots.end()));
        roots.erase(roots.end() - ptrdiff_t(nparams), roots.end());
        node.paramChildCount = uint32_t(nparams);
        node.children.insert(node.children.begin(), std::make_move_iterator(params.begin()),
                             std::make_move_iterator(params.end()));
    }

    // Parses up to an unmatched else/end (left unconsumed) or the end of input.
    std::vector<AstNode> parse_region() {
        std::vector<AstNode> roots;
        while (pos < instrs.size()) {
            const Instruction& ins = instrs[pos];
            if (ins.op == Opcode::End || ins.op == Opcode::Else)
                break;
            const TypedInstr& ty = typings[pos];
            AstNode node = make_node(ins, ty);
            ++pos;
            if (is_nesting(ins.op)) {
                node.isNesting = true;
                std::vector<AstNode> body = parse_region();
                std::vector<AstNode> elseArm;
                bool hasElse = false;
                if (pos < instrs.size() && instrs[pos].op == Opcode::Else) {
                    hasElse = true;
                    ++pos;
                    elseArm = parse_region();
                }
                if (pos >= instrs.size() || instrs[pos].op != Opcode::End)
                    throw UnresolvableContext("unterminated block");
                ++pos;  // consume end
                node.children = std::move(body);
                if (hasElse) {
                    node.elseChildStart = uint32_t(node.children.size());
                    node.children.insert(node.children.end(),
                                         std::make_move_iterator(elseArm.begin()),
                                         std::make_move_iterator(elseArm.end()));
                }
            }
            adopt_params(node, roots);
            if (node.elseChildStart != UINT32_MAX)
                node.elseChildStart += node.paramChildCount;
            roots.push_back(std::move(node));
        }
        return roots;
    }
};

}  // namespace detail

/// Parses a validated function body into AST roots whose in-order
/// serialization reproduces the body. typings must come from FunctionTyper
/// over the same body.
inline std::vector<AstNode> parse_asts(const std::vector<Instruction>& instrs,
                                       const std::vector<TypedInstr>& typings) {
    if (instrs.size() != typings.size())
        throw UnresolvableContext("typing/instruction count mismatch");
    detail::AstParser parser{instrs, typings};
    auto roots = parser.parse_region();
    if (parser.pos != instrs.size())
        throw UnresolvableContext("unbalanced block structure in body");
    return roots;
}

/// Runs the typing pass over one local function and parses its body.
inline std::vector<AstNode> parse_function_asts(const WasmModule& mod, uint32_t funcIdx) {
    FunctionTyper typer(mod, funcIdx);
    if (auto err = typer.run(true))
        throw UnresolvableContext(*err);
    const FunctionBody* body = mod.local_body(funcIdx);
    return parse_asts(body->body, typer.typings());
}

/// Concretizes the context of the instruction at bodyIndex of a function.
inline ConcreteContext extract_context(const WasmModule& mod, uint32_t funcIdx, size_t bodyIndex) {
    FunctionTyper typer(mod, funcIdx);
    if (auto err = typer.run(true))
        throw UnresolvableContext(*err);
    const auto& ts = typer.typings();
    if (bodyIndex >= ts.size())
        throw UnresolvableContext("instruction index out of range");
    if (!ts[bodyIndex].precise)
        throw UnresolvableContext("instruction sits on a polymorphic stack");
    return ConcreteContext{ts[bodyIndex].type, ts[bodyIndex].constraints};
}

}  // namespace wasmdiff
