// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wasmdiff/core/encoder.hpp"
#include "wasmdiff/core/validator.hpp"
#include "wasmdiff/corpus/corpus.hpp"
#include "wasmdiff/support/rng.hpp"
#include "wasmdiff/support/sha256.hpp"

namespace wasmdiff {

struct GenConfig {
    uint32_t subtreesPerFunction = 6;
    uint32_t maxCallDepth = 3;
    // Entry signature is () -> entryResultTypes; empty means one random type
    // among the five value types, drawn per binary.
    std::vector<ValType> entryResultTypes;
    uint64_t memoryPageCap = 16;
    uint64_t seed = 0;
    std::string entryExportName = "main";
};

struct MutationLogEntry {
    std::string strategy;
    std::string site;
    std::string before;
    std::string after;
};

struct GeneratedBinary {
    std::vector<uint8_t> bytes;
    WasmModule moduleIR;
    std::string entryExportName;
    uint64_t seed = 0;
    std::vector<uint64_t> corpusFingerprints;
    std::vector<MutationLogEntry> mutationLog;

    std::string id() const { return sha256_hex(bytes); }
};

class EmptyCorpus : public std::runtime_error {
public:
    EmptyCorpus() : std::runtime_error("corpus has no usable entries") {}
};

class GenerationFailed : public std::runtime_error {
public:
    explicit GenerationFailed(const std::string& diagnostics)
        : std::runtime_error("generation failed: " + diagnostics) {}
};

// Hook applied to each sampled sub-tree during Steps I and II; the mutator
// module plugs its AST-level strategies in here.
using AstMutator = std::function<AstNode(AstNode, Rng&, std::vector<MutationLogEntry>&)>;

namespace gendetail {

// Local/global index rewriting uses the fixed type slot map.
inline std::optional<uint32_t> type_slot(ValType t) {
    switch (t) {
    case ValType::I32: return 0;
    case ValType::I64: return 1;
    case ValType::F32: return 2;
    case ValType::F64: return 3;
    case ValType::V128: return 4;
    default: return std::nullopt;
    }
}

constexpr ValType kSlotTypes[5] = {ValType::I32, ValType::I64, ValType::F32, ValType::F64,
                                   ValType::V128};

inline bool type_list_has_ref(const std::vector<ValType>& ts) {
    for (ValType t : ts)
        if (is_ref_type(t) || t == ValType::Wildcard)
            return true;
    return false;
}

// A sampled sub-tree must stay valid inside a freshly assembled entry body:
// no returns, no branches escaping the tree, no reference-typed values, and
// no table/segment instructions whose targets Step III does not rebuild.
inline bool tree_eligible(const AstNode& n, uint32_t depth) {
    switch (n.instruction.op) {
    case Opcode::Return:
    case Opcode::RefNull:
    case Opcode::RefIsNull:
    case Opcode::RefFunc:
    case Opcode::TableGet:
    case Opcode::TableSet:
    case Opcode::TableInit:
    case Opcode::ElemDrop:
    case Opcode::TableCopy:
    case Opcode::TableGrow:
    case Opcode::TableSize:
    case Opcode::TableFill:
    case Opcode::MemoryInit:
    case Opcode::DataDrop:
        return false;
    case Opcode::Br:
    case Opcode::BrIf:
        if (n.instruction.index() >= depth)
            return false;
        break;
    case Opcode::BrTable:
        for (uint32_t t : n.instruction.list)
            if (t >= depth)
                return false;
        break;
    default:
        break;
    }
    if (type_list_has_ref(n.context.stackType.params) ||
        type_list_has_ref(n.context.stackType.results))
        return false;
    for (uint32_t i = 0; i < n.children.size(); ++i) {
        const uint32_t childDepth = (n.isNesting && i >= n.paramChildCount) ? depth + 1 : depth;
        if (!tree_eligible(n.children[i], childDepth))
            return false;
    }
    return true;
}

inline bool tree_has_calls(const AstNode& n) {
    if (n.instruction.op == Opcode::Call || n.instruction.op == Opcode::CallIndirect)
        return true;
    for (const auto& c : n.children)
        if (tree_has_calls(c))
            return true;
    return false;
}

// Rewrites every variable instruction's immediate to the slot index matching
// its bound value type. localBase shifts past the enclosing function's params.
inline void rewrite_variable_indices(AstNode& n, uint32_t localBase) {
    const Opcode op = n.instruction.op;
    if (op == Opcode::LocalGet || op == Opcode::LocalSet || op == Opcode::LocalTee ||
        op == Opcode::GlobalGet || op == Opcode::GlobalSet) {
        const bool isLocal = op != Opcode::GlobalGet && op != Opcode::GlobalSet;
        for (auto& c : n.context.constraints) {
            if (c.kind != (isLocal ? ConstraintKind::LocalRef : ConstraintKind::GlobalRef))
                continue;
            if (!c.valueType)
                continue;
            const auto slot = type_slot(*c.valueType);
            if (!slot)
                continue;
            const uint32_t idx = isLocal ? localBase + *slot : *slot;
            n.instruction.bits = idx;
            c.index = idx;
        }
    }
    for (auto& c : n.children)
        rewrite_variable_indices(c, localBase);
}

struct CallSite {
    bool indirect = false;
    StackType signature;
};

inline void collect_call_sites(const AstNode& n, std::vector<CallSite>& out) {
    // Serialization order: param children, the node, then nested children.
    for (uint32_t i = 0; i < n.paramChildCount; ++i)
        collect_call_sites(n.children[i], out);
    if (n.instruction.op == Opcode::Call || n.instruction.op == Opcode::CallIndirect) {
        CallSite site;
        site.indirect = n.instruction.op == Opcode::CallIndirect;
        for (const auto& c : n.context.constraints) {
            if ((c.kind == ConstraintKind::DirectCall || c.kind == ConstraintKind::IndirectCall) &&
                c.signature)
                site.signature = *c.signature;
        }
        out.push_back(std::move(site));
    }
    for (uint32_t i = n.paramChildCount; i < n.children.size(); ++i)
        collect_call_sites(n.children[i], out);
}

struct MemAccess {
    bool present = false;    // any memory-touching instruction at all
    int64_t maxByte = -1;    // highest statically determinable byte, -1 if none
};

inline void scan_memory_access(const AstNode& n, MemAccess& acc) {
    const auto& meta = instruction_meta(n.instruction.op);
    const bool touches =
        meta.constraintTemplate == ConstraintKind::MemoryRange ||
        (meta.group == InstrGroup::Vector && meta.accessBytes > 0);
    if (touches) {
        acc.present = true;
        const AstNode* addr =
            n.paramChildCount > 0 ? &n.children[0] : nullptr;
        const bool addrConst = addr && addr->instruction.op == Opcode::I32Const;
        if (meta.accessBytes > 0 && addrConst) {
            const uint64_t base = uint32_t(addr->instruction.i32_value());
            acc.maxByte = std::max<int64_t>(
                acc.maxByte, int64_t(base + n.instruction.mem_offset() + meta.accessBytes - 1));
        } else if (n.instruction.op == Opcode::MemoryFill ||
                   n.instruction.op == Opcode::MemoryCopy) {
            // [dst, src-or-val, len]: coverable when dst and len are constant.
            if (n.paramChildCount == 3 &&
                n.children[0].instruction.op == Opcode::I32Const &&
                n.children[2].instruction.op == Opcode::I32Const) {
                const uint64_t dst = uint32_t(n.children[0].instruction.i32_value());
                const uint64_t len = uint32_t(n.children[2].instruction.i32_value());
                if (len > 0)
                    acc.maxByte = std::max<int64_t>(acc.maxByte, int64_t(dst + len - 1));
                if (n.instruction.op == Opcode::MemoryCopy &&
                    n.children[1].instruction.op == Opcode::I32Const) {
                    const uint64_t src = uint32_t(n.children[1].instruction.i32_value());
                    if (len > 0)
                        acc.maxByte = std::max<int64_t>(acc.maxByte, int64_t(src + len - 1));
                }
            }
        }
    }
    for (const auto& c : n.children)
        scan_memory_access(c, acc);
}

}  // namespace gendetail

// Assembles validated binaries bottom-up from corpus entries:
//   Step I   build a functional entry body from sampled sub-trees
//   Step II  synthesize callees so every call/call_indirect resolves
//   Step III supplement memory/data/table/element/global/export sections
class Generator {
public:
    Generator(const Corpus& corpus, GenConfig cfg, AstMutator mutator = {})
        : corpus_(corpus), cfg_(std::move(cfg)), mutator_(std::move(mutator))
    {
        for (const auto& e : corpus_.entries()) {
            if (gendetail::tree_eligible(e.root, 0)) {
                eligible_.push_back(&e);
                if (!gendetail::tree_has_calls(e.root))
                    eligibleCallFree_.push_back(&e);
            }
        }
    }

    GeneratedBinary generate() {
        if (corpus_.empty())
            throw EmptyCorpus();
        if (eligible_.empty())
            throw GenerationFailed("no corpus entry is eligible for assembly");

        Rng rng(cfg_.seed);
        out_ = GeneratedBinary{};
        out_.seed = cfg_.seed;
        out_.entryExportName = cfg_.entryExportName;
        mod_ = WasmModule{};
        trees_.clear();
        tableSlots_.clear();

        std::vector<ValType> resultTypes = cfg_.entryResultTypes;
        if (resultTypes.empty())
            resultTypes.push_back(gendetail::kSlotTypes[rng.index(5)]);

        // Step I: the entry function is index 0.
        build_function(FuncType{{}, resultTypes}, cfg_.maxCallDepth, rng);

        // Step III.
        supplement_sections(rng);

        const auto verdict = validate_module(mod_);
        if (!verdict.ok())
            throw GenerationFailed(verdict.to_string());

        out_.bytes = encode_module(mod_);
        out_.moduleIR = mod_;
        return std::move(out_);
    }

private:
    const Corpus& corpus_;
    GenConfig cfg_;
    AstMutator mutator_;
    std::vector<const CorpusEntry*> eligible_;
    std::vector<const CorpusEntry*> eligibleCallFree_;

    WasmModule mod_;
    GeneratedBinary out_;
    std::vector<std::vector<AstNode>> trees_;  // per local function, for Step III scans
    std::vector<uint32_t> tableSlots_;

    // Builds one function from sampled sub-trees and recursively synthesizes
    // its callees (Steps I and II). Returns the new function's index.
    uint32_t build_function(const FuncType& sig, uint32_t depthBudget, Rng& rng) {
        const uint32_t funcIdx = uint32_t(mod_.functions.size());
        mod_.functions.push_back(mod_.intern_type(sig));
        mod_.code.emplace_back();
        trees_.emplace_back();

        const uint32_t localBase = uint32_t(sig.params.size());
        const auto& pool = depthBudget > 0 ? eligible_ : eligibleCallFree_;

        std::vector<AstNode> trees;
        if (!pool.empty()) {
            for (uint32_t i = 0; i < cfg_.subtreesPerFunction; ++i) {
                const CorpusEntry* entry = pool[rng.index(pool.size())];
                out_.corpusFingerprints.push_back(entry->fingerprint);
                AstNode tree = entry->root;
                if (mutator_)
                    tree = mutator_(std::move(tree), rng, out_.mutationLog);
                gendetail::rewrite_variable_indices(tree, localBase);
                trees.push_back(std::move(tree));
            }
        }

        // Step II: every call site gets its own synthesized callee, so the
        // call graph stays a tree with no recursion.
        std::vector<gendetail::CallSite> sites;
        for (const auto& t : trees)
            gendetail::collect_call_sites(t, sites);
        std::vector<uint32_t> calleeIndices;
        std::vector<uint32_t> calleeSlots;
        for (const auto& site : sites) {
            // DirectCall/IndirectCall constraints carry the callee signature
            // itself (the i32 table index is not part of it).
            FuncType calleeSig{site.signature.params, site.signature.results};
            const uint32_t callee =
                build_function(calleeSig, depthBudget > 0 ? depthBudget - 1 : 0, rng);
            calleeIndices.push_back(callee);
            if (site.indirect) {
                calleeSlots.push_back(uint32_t(tableSlots_.size()));
                tableSlots_.push_back(callee);
            } else {
                calleeSlots.push_back(0);
            }
        }

        // Serialize and patch the flat body: rewrite call targets, and route
        // each call_indirect to its table slot via an inserted drop + const.
        std::vector<Instruction> body;
        {
            std::vector<Instruction> raw = serialize_roots(trees);
            size_t siteIdx = 0;
            for (auto& ins : raw) {
                if (ins.op == Opcode::Call) {
                    ins.bits = calleeIndices.at(siteIdx);
                    ++siteIdx;
                    body.push_back(ins);
                } else if (ins.op == Opcode::CallIndirect) {
                    body.push_back(make_instr(Opcode::Drop));
                    body.push_back(make_i32_const(int32_t(calleeSlots.at(siteIdx))));
                    ins.bits = mod_.functions[calleeIndices.at(siteIdx)];
                    ins.idx2 = 0;
                    ++siteIdx;
                    body.push_back(ins);
                } else {
                    body.push_back(ins);
                }
            }
        }

        // Drop whatever the sampled trees left on the stack, then match the
        // signature's results from the typed locals.
        size_t leftovers = 0;
        for (const auto& t : trees)
            leftovers += t.context.stackType.results.size();
        for (size_t i = 0; i < leftovers; ++i)
            body.push_back(make_instr(Opcode::Drop));
        for (ValType t : sig.results) {
            const auto slot = gendetail::type_slot(t);
            if (!slot)
                throw GenerationFailed("entry result type has no local slot");
            body.push_back(make_index_instr(Opcode::LocalGet, localBase + *slot));
        }

        FunctionBody fb;
        fb.localRuns = {{1, ValType::I32}, {1, ValType::I64}, {1, ValType::F32},
                        {1, ValType::F64}, {1, ValType::V128}};
        fb.body = std::move(body);
        mod_.code[funcIdx] = std::move(fb);
        trees_[funcIdx] = std::move(trees);
        return funcIdx;
    }

    void supplement_sections(Rng& rng) {
        // (a) memory and data
        gendetail::MemAccess acc;
        for (const auto& trees : trees_)
            for (const auto& t : trees)
                gendetail::scan_memory_access(t, acc);
        if (acc.present) {
            const uint64_t pageBytes = 65536;
            uint64_t pages = 1;
            if (acc.maxByte >= 0)
                pages = (uint64_t(acc.maxByte) + pageBytes) / pageBytes;
            pages = std::min(std::max<uint64_t>(pages, 1), cfg_.memoryPageCap);
            mod_.memories.push_back(MemoryType{{pages, cfg_.memoryPageCap}});
            if (acc.maxByte >= 0) {
                const uint64_t coveredEnd =
                    std::min<uint64_t>(uint64_t(acc.maxByte), pages * pageBytes - 1);
                DataSegment seg;
                seg.mode = SegmentMode::Active;
                seg.offset = const_expr_i32(0);
                seg.bytes = rng.bytes(size_t(coveredEnd + 1));
                mod_.data.push_back(std::move(seg));
            }
        }

        // (b) table and element entries for every indirect slot
        if (!tableSlots_.empty()) {
            mod_.tables.push_back(
                TableType{ValType::FuncRef, {tableSlots_.size(), tableSlots_.size()}});
            ElementSegment seg;
            seg.mode = SegmentMode::Active;
            seg.tableIndex = 0;
            seg.offset = const_expr_i32(0);
            seg.funcIndices = tableSlots_;
            mod_.elements.push_back(std::move(seg));
        }

        // (c) exactly five mutable globals, one per value type, random inits
        for (ValType t : gendetail::kSlotTypes) {
            Global g;
            g.type = GlobalType{t, true};
            Instruction init;
            switch (t) {
            case ValType::I32:
                init = make_i32_const(int32_t(rng.next_u32()));
                break;
            case ValType::I64:
                init.op = Opcode::I64Const;
                init.bits = rng.next_u64();
                break;
            case ValType::F32: {
                init.op = Opcode::F32Const;
                // Small decimal values keep float paths NaN-free by default.
                const float f = float(int32_t(rng.below(2048)) - 1024) * 0.5f;
                init.bits = std::bit_cast<uint32_t>(f);
                break;
            }
            case ValType::F64: {
                init.op = Opcode::F64Const;
                const double d = double(int64_t(rng.below(1 << 20)) - (1 << 19)) * 0.25;
                init.bits = std::bit_cast<uint64_t>(d);
                break;
            }
            default:
                init.op = Opcode::V128Const;
                for (auto& b : init.bytes)
                    b = rng.next_byte();
                break;
            }
            g.init.instrs = {init};
            mod_.globals.push_back(std::move(g));
        }

        // (d) export the entry
        mod_.exports.push_back(Export{cfg_.entryExportName, ExternalKind::Function, 0});
    }
};

/// Full pipeline; deterministic in (corpus, cfg, mutator behavior).
inline GeneratedBinary generate_binary(const Corpus& corpus, const GenConfig& cfg,
                                       AstMutator mutator = {}) {
    return Generator(corpus, cfg, std::move(mutator)).generate();
}

}  // namespace wasmdiff
