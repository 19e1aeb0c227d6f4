// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wasmdiff/core/instr_table.hpp"
#include "wasmdiff/core/module.hpp"

namespace wasmdiff {

// Per-instruction result of the typing pass: the concretized stack type (the
// template with wildcards and variadic segments resolved against the module)
// plus the bound semantic constraints.
struct TypedInstr {
    StackType type;
    std::vector<SemanticConstraint> constraints;
    bool reachable = true;
    // False when a type had to be guessed under a polymorphic (unreachable)
    // stack; such instructions are valid but not usable as corpus context.
    bool precise = true;
};

inline std::optional<FuncType> block_type_to_func_type(const WasmModule& mod, int64_t bt) {
    if (bt >= 0) {
        if (uint64_t(bt) >= mod.types.size())
            return std::nullopt;
        return mod.types[size_t(bt)];
    }
    if (bt == -64)
        return FuncType{};
    const auto vt = val_type_from_byte(uint8_t(0x80 + bt));
    if (!vt)
        return std::nullopt;
    FuncType ft;
    ft.results.push_back(*vt);
    return ft;
}

// Functions that may be referenced by ref.func: mentioned in element segments,
// global initializers, exports, or the start section.
inline std::set<uint32_t> declared_func_refs(const WasmModule& mod) {
    std::set<uint32_t> out;
    for (const auto& seg : mod.elements) {
        for (uint32_t f : seg.funcIndices)
            out.insert(f);
        for (const auto& e : seg.exprs)
            for (const auto& ins : e.instrs)
                if (ins.op == Opcode::RefFunc)
                    out.insert(ins.index());
    }
    for (const auto& g : mod.globals)
        for (const auto& ins : g.init.instrs)
            if (ins.op == Opcode::RefFunc)
                out.insert(ins.index());
    for (const auto& e : mod.exports)
        if (e.kind == ExternalKind::Function)
            out.insert(e.index);
    if (mod.start)
        out.insert(*mod.start);
    return out;
}

// Stack-type checker for one function body, per the standard validation
// algorithm (operand stack of optional types + control frame stack). Also
// concretizes each instruction's stack type and semantic constraints, which
// the corpus builder reuses as instruction context.
class FunctionTyper {
public:
    // funcIdx is in the joint (imports-first) function index space and must
    // name a local function.
    FunctionTyper(const WasmModule& mod, uint32_t funcIdx)
        : mod_(mod), funcIdx_(funcIdx)
    {
        const FuncType* ft = mod.func_type(funcIdx);
        const FunctionBody* body = mod.local_body(funcIdx);
        if (ft) {
            locals_ = ft->params;
            results_ = ft->results;
        }
        if (body) {
            for (ValType t : body->flat_locals())
                locals_.push_back(t);
            body_ = body;
        }
        declaredRefs_ = declared_func_refs(mod);
    }

    // Runs the pass. Returns the first violation as a message, or nullopt if
    // the body is well typed. Typings are collected when requested and are
    // complete only on success.
    std::optional<std::string> run(bool collectTypings = false) {
        if (!mod_.func_type(funcIdx_))
            return "function type index out of range";
        if (!body_)
            return "missing function body";
        collect_ = collectTypings;
        typings_.clear();
        vals_.clear();
        ctrls_.clear();
        push_ctrl(Opcode::Block, {}, results_);
        for (const auto& ins : body_->body) {
            cur_ = TypedInstr{};
            cur_.reachable = !ctrls_.back().unreachable;
            if (auto err = step(ins))
                return "instr +" + std::to_string(ins.byteOffset) + " (" +
                       std::string(instruction_meta(ins.op).name) + "): " + *err;
            if (collect_) {
                finish_typing();
                typings_.push_back(std::move(cur_));
            }
        }
        if (ctrls_.size() != 1)
            return "unclosed block at function end";
        // Implicit end of the function frame.
        if (auto err = pop_vals(results_))
            return "function result: " + *err;
        if (vals_.size() != ctrls_.back().height)
            return "values remain on stack at function end";
        return std::nullopt;
    }

    const std::vector<TypedInstr>& typings() const { return typings_; }

private:
    using MaybeType = std::optional<ValType>;  // nullopt = unknown (polymorphic)

    struct Frame {
        Opcode opcode;
        std::vector<ValType> start;
        std::vector<ValType> end;
        size_t height = 0;
        bool unreachable = false;
    };

    const WasmModule& mod_;
    uint32_t funcIdx_;
    const FunctionBody* body_ = nullptr;
    std::vector<ValType> locals_;
    std::vector<ValType> results_;
    std::set<uint32_t> declaredRefs_;

    std::vector<MaybeType> vals_;
    std::vector<Frame> ctrls_;
    bool collect_ = false;
    TypedInstr cur_;
    std::vector<MaybeType> curPopped_;
    std::vector<TypedInstr> typings_;

    std::optional<std::string> err_;

    // --- operand stack ---
    void push_val(MaybeType t) {
        vals_.push_back(t);
        if (collect_)
            cur_.type.results.push_back(t.value_or(ValType::Wildcard));
        if (!t)
            cur_.precise = false;
    }

    MaybeType pop_raw() {
        Frame& f = ctrls_.back();
        if (vals_.size() == f.height) {
            if (f.unreachable) {
                curPopped_.push_back(std::nullopt);
                cur_.precise = false;
                return std::nullopt;
            }
            err_ = "stack underflow";
            return std::nullopt;
        }
        MaybeType t = vals_.back();
        vals_.pop_back();
        curPopped_.push_back(t);
        if (!t)
            cur_.precise = false;
        return t;
    }

    MaybeType pop_expect(ValType expect) {
        MaybeType got = pop_raw();
        if (err_)
            return std::nullopt;
        if (got && *got != expect) {
            err_ = std::string("type mismatch: expected ") + val_type_name(expect) + ", got " +
                   val_type_name(*got);
            return std::nullopt;
        }
        return got ? got : MaybeType(expect);
    }

    std::optional<std::string> pop_vals(const std::vector<ValType>& types) {
        for (auto it = types.rbegin(); it != types.rend(); ++it) {
            pop_expect(*it);
            if (err_)
                return take_err();
        }
        return std::nullopt;
    }

    void push_vals(const std::vector<ValType>& types) {
        for (ValType t : types)
            push_val(t);
    }

    std::optional<std::string> take_err() {
        auto e = err_;
        err_.reset();
        return e;
    }

    // --- control stack ---
    void push_ctrl(Opcode op, std::vector<ValType> in, std::vector<ValType> out) {
        Frame f;
        f.opcode = op;
        f.start = std::move(in);
        f.end = std::move(out);
        f.height = vals_.size();
        ctrls_.push_back(std::move(f));
        push_vals(ctrls_.back().start);
        // Params re-pushed on block entry are bookkeeping, not node results.
        if (collect_)
            cur_.type.results.clear();
    }

    std::optional<std::string> pop_ctrl(Frame& out) {
        if (ctrls_.empty())
            return "control stack underflow";
        Frame f = ctrls_.back();
        if (auto e = pop_vals(f.end))
            return e;
        if (vals_.size() != f.height)
            return "values remain on stack at end of block";
        ctrls_.pop_back();
        out = std::move(f);
        return std::nullopt;
    }

    const std::vector<ValType>& label_types(const Frame& f) const {
        return f.opcode == Opcode::Loop ? f.start : f.end;
    }

    void set_unreachable() {
        Frame& f = ctrls_.back();
        vals_.resize(f.height);
        f.unreachable = true;
    }

    Frame* label(uint32_t depth) {
        if (depth >= ctrls_.size())
            return nullptr;
        return &ctrls_[ctrls_.size() - 1 - depth];
    }

    // --- constraints ---
    void add_constraint(SemanticConstraint c) { cur_.constraints.push_back(std::move(c)); }

    void add_block_sig(uint32_t index, StackType sig) {
        SemanticConstraint c;
        c.kind = ConstraintKind::BlockSig;
        c.index = index;
        c.signature = std::move(sig);
        add_constraint(std::move(c));
    }

    void finish_typing() {
        // Params were recorded top-of-stack first.
        std::vector<ValType> params;
        params.reserve(curPopped_.size());
        for (auto it = curPopped_.rbegin(); it != curPopped_.rend(); ++it)
            params.push_back(it->value_or(ValType::Wildcard));
        cur_.type.params = std::move(params);
        curPopped_.clear();
    }

    std::optional<std::string> step(const Instruction& ins) {
        curPopped_.clear();
        const InstructionMeta& meta = instruction_meta(ins.op);

        switch (ins.op) {
        case Opcode::Nop:
            add_block_sig(0, StackType{});
            return std::nullopt;
        case Opcode::Unreachable:
            add_block_sig(0, StackType{});
            set_unreachable();
            return std::nullopt;

        case Opcode::Block:
        case Opcode::Loop:
        case Opcode::If: {
            auto ft = block_type_to_func_type(mod_, ins.block_type());
            if (!ft)
                return "invalid block type";
            if (ins.op == Opcode::If)
                if (pop_expect(ValType::I32); err_)
                    return take_err();
            if (auto e = pop_vals(ft->params))
                return e;
            add_block_sig(ins.block_type() >= 0 ? uint32_t(ins.block_type()) : 0,
                          StackType{ft->params, ft->results, false});
            push_ctrl(ins.op, ft->params, ft->results);
            // The node's net effect: params consumed, results produced at end.
            if (collect_)
                cur_.type.results = ft->results;
            return std::nullopt;
        }

        case Opcode::Else: {
            Frame f;
            if (auto e = pop_ctrl(f))
                return e;
            if (f.opcode != Opcode::If)
                return "else without matching if";
            add_block_sig(0, StackType{f.start, f.end, false});
            push_ctrl(Opcode::Else, f.start, f.end);
            return std::nullopt;
        }

        case Opcode::End: {
            Frame f;
            if (auto e = pop_ctrl(f))
                return e;
            if (f.opcode == Opcode::If && f.start != f.end)
                return "if without else must have matching signature";
            add_block_sig(0, StackType{f.start, f.end, false});
            push_vals(f.end);
            return std::nullopt;
        }

        case Opcode::Br: {
            Frame* t = label(ins.index());
            if (!t)
                return "branch label out of range";
            const auto types = label_types(*t);
            if (auto e = pop_vals(types))
                return e;
            add_block_sig(ins.index(), StackType{types, {}, false});
            set_unreachable();
            return std::nullopt;
        }

        case Opcode::BrIf: {
            Frame* t = label(ins.index());
            if (!t)
                return "branch label out of range";
            if (pop_expect(ValType::I32); err_)
                return take_err();
            const auto types = label_types(*t);
            if (auto e = pop_vals(types))
                return e;
            push_vals(types);
            add_block_sig(ins.index(), StackType{types, types, false});
            return std::nullopt;
        }

        case Opcode::BrTable: {
            if (ins.list.empty())
                return "br_table without targets";
            Frame* d = label(ins.list.back());
            if (!d)
                return "br_table default label out of range";
            const auto defTypes = label_types(*d);
            if (pop_expect(ValType::I32); err_)
                return take_err();
            for (size_t i = 0; i + 1 < ins.list.size(); ++i) {
                Frame* t = label(ins.list[i]);
                if (!t)
                    return "br_table label out of range";
                if (label_types(*t) != defTypes)
                    return "br_table labels have mismatching types";
            }
            if (auto e = pop_vals(defTypes))
                return e;
            add_block_sig(ins.list.back(), StackType{defTypes, {}, false});
            set_unreachable();
            return std::nullopt;
        }

        case Opcode::Return: {
            if (auto e = pop_vals(results_))
                return e;
            add_block_sig(0, StackType{results_, {}, false});
            set_unreachable();
            return std::nullopt;
        }

        case Opcode::Call: {
            const FuncType* ft = mod_.func_type(ins.index());
            if (!ft)
                return "call target out of range";
            if (auto e = pop_vals(ft->params))
                return e;
            push_vals(ft->results);
            SemanticConstraint c;
            c.kind = ConstraintKind::DirectCall;
            c.index = ins.index();
            c.signature = ft->stack_type();
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::CallIndirect: {
            if (ins.index() >= mod_.types.size())
                return "call_indirect type index out of range";
            const auto tt = mod_.table_type(ins.idx2);
            if (!tt)
                return "call_indirect table out of range";
            if (tt->elem != ValType::FuncRef)
                return "call_indirect table is not funcref";
            const FuncType& ft = mod_.types[ins.index()];
            if (pop_expect(ValType::I32); err_)
                return take_err();
            if (auto e = pop_vals(ft.params))
                return e;
            push_vals(ft.results);
            SemanticConstraint c;
            c.kind = ConstraintKind::IndirectCall;
            c.index = ins.index();
            c.signature = ft.stack_type();
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::Drop:
            pop_raw();
            return err_ ? take_err() : std::nullopt;

        case Opcode::Select: {
            if (pop_expect(ValType::I32); err_)
                return take_err();
            MaybeType t1 = pop_raw();
            if (err_)
                return take_err();
            MaybeType t2 = pop_raw();
            if (err_)
                return take_err();
            if (t1 && is_ref_type(*t1))
                return "untyped select cannot take reference types";
            if (t2 && is_ref_type(*t2))
                return "untyped select cannot take reference types";
            if (t1 && t2 && *t1 != *t2)
                return "select operand types differ";
            push_val(t1 ? t1 : t2);
            return std::nullopt;
        }

        case Opcode::SelectT: {
            if (ins.list.size() != 1)
                return "select t requires exactly one type";
            const auto vt = val_type_from_byte(uint8_t(ins.list[0]));
            if (!vt)
                return "select t has invalid type";
            if (pop_expect(ValType::I32); err_)
                return take_err();
            if (pop_expect(*vt); err_)
                return take_err();
            if (pop_expect(*vt); err_)
                return take_err();
            push_val(*vt);
            return std::nullopt;
        }

        case Opcode::LocalGet:
        case Opcode::LocalSet:
        case Opcode::LocalTee: {
            if (ins.index() >= locals_.size())
                return "local index out of range";
            const ValType t = locals_[ins.index()];
            if (ins.op != Opcode::LocalGet)
                if (pop_expect(t); err_)
                    return take_err();
            if (ins.op != Opcode::LocalSet)
                push_val(t);
            SemanticConstraint c;
            c.kind = ConstraintKind::LocalRef;
            c.index = ins.index();
            c.valueType = t;
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::GlobalGet:
        case Opcode::GlobalSet: {
            const auto gt = mod_.global_type(ins.index());
            if (!gt)
                return "global index out of range";
            if (ins.op == Opcode::GlobalSet) {
                if (!gt->mutable_)
                    return "global.set of immutable global";
                if (pop_expect(gt->type); err_)
                    return take_err();
            } else {
                push_val(gt->type);
            }
            SemanticConstraint c;
            c.kind = ConstraintKind::GlobalRef;
            c.index = ins.index();
            c.valueType = gt->type;
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::TableGet:
        case Opcode::TableSet:
        case Opcode::TableGrow:
        case Opcode::TableFill:
        case Opcode::TableSize: {
            const auto tt = mod_.table_type(ins.index());
            if (!tt)
                return "table index out of range";
            const ValType et = tt->elem;
            switch (ins.op) {
            case Opcode::TableGet:
                if (pop_expect(ValType::I32); err_) return take_err();
                push_val(et);
                break;
            case Opcode::TableSet:
                if (pop_expect(et); err_) return take_err();
                if (pop_expect(ValType::I32); err_) return take_err();
                break;
            case Opcode::TableGrow:
                if (pop_expect(ValType::I32); err_) return take_err();
                if (pop_expect(et); err_) return take_err();
                push_val(ValType::I32);
                break;
            case Opcode::TableFill:
                if (pop_expect(ValType::I32); err_) return take_err();
                if (pop_expect(et); err_) return take_err();
                if (pop_expect(ValType::I32); err_) return take_err();
                break;
            default:  // TableSize
                push_val(ValType::I32);
                break;
            }
            SemanticConstraint c;
            c.kind = ConstraintKind::TableRef;
            c.index = ins.index();
            c.valueType = et;
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::TableInit: {
            const auto tt = mod_.table_type(ins.idx2);
            if (!tt)
                return "table index out of range";
            if (ins.index() >= mod_.elements.size())
                return "element segment index out of range";
            if (mod_.elements[ins.index()].refType != tt->elem)
                return "table.init element type mismatch";
            if (auto e = pop_vals({ValType::I32, ValType::I32, ValType::I32}))
                return e;
            SemanticConstraint c;
            c.kind = ConstraintKind::TableRef;
            c.index = ins.idx2;
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::TableCopy: {
            const auto dst = mod_.table_type(ins.index());
            const auto src = mod_.table_type(ins.idx2);
            if (!dst || !src)
                return "table index out of range";
            if (dst->elem != src->elem)
                return "table.copy element type mismatch";
            if (auto e = pop_vals({ValType::I32, ValType::I32, ValType::I32}))
                return e;
            SemanticConstraint c;
            c.kind = ConstraintKind::TableRef;
            c.index = ins.index();
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::ElemDrop: {
            if (ins.index() >= mod_.elements.size())
                return "element segment index out of range";
            SemanticConstraint c;
            c.kind = ConstraintKind::TableRef;
            c.index = ins.index();
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::RefNull: {
            const auto vt = val_type_from_byte(uint8_t(ins.bits));
            if (!vt || !is_ref_type(*vt))
                return "ref.null with invalid heap type";
            push_val(*vt);
            return std::nullopt;
        }

        case Opcode::RefIsNull: {
            MaybeType t = pop_raw();
            if (err_)
                return take_err();
            if (t && !is_ref_type(*t))
                return "ref.is_null expects a reference";
            push_val(ValType::I32);
            return std::nullopt;
        }

        case Opcode::RefFunc: {
            if (!mod_.func_type(ins.index()))
                return "ref.func target out of range";
            if (!declaredRefs_.contains(ins.index()))
                return "ref.func target not declared";
            push_val(ValType::FuncRef);
            SemanticConstraint c;
            c.kind = ConstraintKind::DirectCall;
            c.index = ins.index();
            c.signature = mod_.func_type(ins.index())->stack_type();
            add_constraint(std::move(c));
            return std::nullopt;
        }

        case Opcode::MemoryInit: {
            if (!mod_.dataCount)
                return "memory.init requires a data count section";
            if (ins.index() >= *mod_.dataCount)
                return "data segment index out of range";
            break;  // falls through to the generic memory path below
        }
        case Opcode::DataDrop: {
            if (!mod_.dataCount)
                return "data.drop requires a data count section";
            if (ins.index() >= *mod_.dataCount)
                return "data segment index out of range";
            SemanticConstraint c;
            c.kind = ConstraintKind::MemoryRange;
            add_constraint(std::move(c));
            return std::nullopt;
        }
        default:
            break;
        }

        // Generic path: concrete template, optionally with a memory constraint.
        if (meta.constraintTemplate == ConstraintKind::MemoryRange) {
            const auto mt = mod_.memory_type(0);
            if (!mt)
                return "memory instruction without memory";
            if (meta.imm == ImmKind::MemArg || meta.imm == ImmKind::MemArgLane) {
                if (ins.mem_align() > meta.naturalAlignLog2())
                    return "alignment exceeds natural alignment";
            }
            if ((meta.imm == ImmKind::MemArgLane || meta.imm == ImmKind::Lane) &&
                meta.accessBytes != 0 && ins.lane >= 16 / meta.accessBytes)
                return "lane index out of range";
            SemanticConstraint c;
            c.kind = ConstraintKind::MemoryRange;
            c.pageMin = mt->limits.min;
            c.pageMax = mt->limits.max;
            add_constraint(std::move(c));
        } else if (meta.imm == ImmKind::Lane) {
            // extract/replace lane: lane count depends on the shape in the name
            const uint32_t laneBits = meta.name.find("i8x16") != std::string_view::npos ? 16
                                    : meta.name.find("16x8") != std::string_view::npos ? 8
                                    : meta.name.find("32x4") != std::string_view::npos ? 4
                                    : 2;
            if (ins.lane >= laneBits)
                return "lane index out of range";
        } else if (meta.imm == ImmKind::Shuffle) {
            for (uint8_t l : ins.bytes)
                if (l >= 32)
                    return "shuffle lane index out of range";
        }

        if (!meta.stackTemplate.is_concrete())
            return "internal: opcode with non-concrete template reached generic path";
        if (auto e = pop_vals(meta.stackTemplate.params))
            return e;
        push_vals(meta.stackTemplate.results);
        return std::nullopt;
    }
};

}  // namespace wasmdiff
