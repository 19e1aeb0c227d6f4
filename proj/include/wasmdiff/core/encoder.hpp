// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wasmdiff/core/errors.hpp"
#include "wasmdiff/core/instr_table.hpp"
#include "wasmdiff/core/leb128.hpp"
#include "wasmdiff/core/module.hpp"

namespace wasmdiff {

namespace detail {

class ModuleEncoder {
public:
    std::vector<uint8_t> encode(const WasmModule& m) {
        out_ = {0x00, 0x61, 0x73, 0x6d, 0x01, 0x00, 0x00, 0x00};
        emit_customs(m, 0);
        if (!m.types.empty()) { section(1, [&] { type_section(m); }); emit_customs(m, 1); }
        if (!m.imports.empty()) { section(2, [&] { import_section(m); }); emit_customs(m, 2); }
        if (!m.functions.empty()) { section(3, [&] { vec_u32(m.functions); }); emit_customs(m, 3); }
        if (!m.tables.empty()) { section(4, [&] { table_section(m); }); emit_customs(m, 4); }
        if (!m.memories.empty()) { section(5, [&] { memory_section(m); }); emit_customs(m, 5); }
        if (!m.globals.empty()) { section(6, [&] { global_section(m); }); emit_customs(m, 6); }
        if (!m.exports.empty()) { section(7, [&] { export_section(m); }); emit_customs(m, 7); }
        if (m.start) { section(8, [&] { u32(*m.start); }); emit_customs(m, 8); }
        if (!m.elements.empty()) { section(9, [&] { element_section(m); }); emit_customs(m, 9); }
        if (m.dataCount) { section(12, [&] { u32(*m.dataCount); }); emit_customs(m, 12); }
        if (!m.code.empty()) { section(10, [&] { code_section(m); }); emit_customs(m, 10); }
        if (!m.data.empty()) { section(11, [&] { data_section(m); }); emit_customs(m, 11); }
        // Customs anchored after sections the module does not emit.
        for (const auto& cs : m.customs)
            if (!emitted_.contains(&cs))
                custom_section(cs);
        return std::move(out_);
    }

private:
    std::vector<uint8_t> out_;
    std::set<const CustomSection*> emitted_;

    void u32(uint32_t v) { leb::write_unsigned<uint32_t>(out_, v); }
    void byte(uint8_t b) { out_.push_back(b); }

    template <typename F>
    void section(uint8_t id, F&& fill) {
        byte(id);
        std::vector<uint8_t> saved;
        saved.swap(out_);
        fill();
        std::vector<uint8_t> payload;
        payload.swap(out_);
        out_.swap(saved);
        u32(uint32_t(payload.size()));
        out_.insert(out_.end(), payload.begin(), payload.end());
    }

    void emit_customs(const WasmModule& m, uint8_t afterId) {
        for (const auto& cs : m.customs) {
            if (cs.afterKnownSection == afterId && !emitted_.contains(&cs)) {
                custom_section(cs);
                emitted_.insert(&cs);
            }
        }
    }

    void custom_section(const CustomSection& cs) {
        section(0, [&] {
            name(cs.name);
            out_.insert(out_.end(), cs.bytes.begin(), cs.bytes.end());
        });
    }

    void name(const std::string& s) {
        u32(uint32_t(s.size()));
        out_.insert(out_.end(), s.begin(), s.end());
    }

    void vec_u32(const std::vector<uint32_t>& v) {
        u32(uint32_t(v.size()));
        for (uint32_t x : v)
            u32(x);
    }

    void val_type(ValType t) {
        if (t == ValType::Wildcard)
            throw EncodingOverflow("wildcard type cannot be encoded");
        byte(val_type_to_byte(t));
    }

    void func_type(const FuncType& ft) {
        byte(0x60);
        u32(uint32_t(ft.params.size()));
        for (ValType t : ft.params)
            val_type(t);
        u32(uint32_t(ft.results.size()));
        for (ValType t : ft.results)
            val_type(t);
    }

    void limits(const Limits& l) {
        if (l.min > 0xffffffffull || (l.max && *l.max > 0xffffffffull))
            throw EncodingOverflow("limits exceed u32 range");
        if (l.max) {
            byte(0x01);
            u32(uint32_t(l.min));
            u32(uint32_t(*l.max));
        } else {
            byte(0x00);
            u32(uint32_t(l.min));
        }
    }

    void table_type(const TableType& t) {
        val_type(t.elem);
        limits(t.limits);
    }

    void global_type(const GlobalType& g) {
        val_type(g.type);
        byte(g.mutable_ ? 1 : 0);
    }

    void type_section(const WasmModule& m) {
        u32(uint32_t(m.types.size()));
        for (const auto& t : m.types)
            func_type(t);
    }

    void import_section(const WasmModule& m) {
        u32(uint32_t(m.imports.size()));
        for (const auto& im : m.imports) {
            name(im.module);
            name(im.name);
            byte(uint8_t(im.kind));
            switch (im.kind) {
            case ExternalKind::Function: u32(im.typeIndex); break;
            case ExternalKind::Table: table_type(im.table); break;
            case ExternalKind::Memory: limits(im.memory.limits); break;
            case ExternalKind::Global: global_type(im.global); break;
            }
        }
    }

    void table_section(const WasmModule& m) {
        u32(uint32_t(m.tables.size()));
        for (const auto& t : m.tables)
            table_type(t);
    }

    void memory_section(const WasmModule& m) {
        u32(uint32_t(m.memories.size()));
        for (const auto& mem : m.memories)
            limits(mem.limits);
    }

    void global_section(const WasmModule& m) {
        u32(uint32_t(m.globals.size()));
        for (const auto& g : m.globals) {
            global_type(g.type);
            const_expr(g.init);
        }
    }

    void export_section(const WasmModule& m) {
        u32(uint32_t(m.exports.size()));
        for (const auto& e : m.exports) {
            name(e.name);
            byte(uint8_t(e.kind));
            u32(e.index);
        }
    }

    void element_section(const WasmModule& m) {
        u32(uint32_t(m.elements.size()));
        for (const auto& seg : m.elements) {
            uint32_t flags = 0;
            const bool passive = seg.mode == SegmentMode::Passive;
            const bool declarative = seg.mode == SegmentMode::Declarative;
            const bool active = seg.mode == SegmentMode::Active;
            const bool explicitTable = active && seg.tableIndex != 0;
            if (passive || declarative)
                flags |= 0x1;
            if (declarative || explicitTable)
                flags |= 0x2;
            if (seg.usesExprs)
                flags |= 0x4;
            u32(flags);
            if (explicitTable)
                u32(seg.tableIndex);
            if (active)
                const_expr(seg.offset);
            if (flags != 0 && flags != 4) {
                if (seg.usesExprs)
                    val_type(seg.refType);
                else
                    byte(0x00);
            }
            if (seg.usesExprs) {
                u32(uint32_t(seg.exprs.size()));
                for (const auto& e : seg.exprs)
                    const_expr(e);
            } else {
                vec_u32(seg.funcIndices);
            }
        }
    }

    void code_section(const WasmModule& m) {
        u32(uint32_t(m.code.size()));
        for (const auto& fb : m.code) {
            std::vector<uint8_t> saved;
            saved.swap(out_);
            u32(uint32_t(fb.localRuns.size()));
            for (const auto& [count, type] : fb.localRuns) {
                u32(count);
                val_type(type);
            }
            for (const auto& ins : fb.body)
                instruction(ins);
            byte(0x0b);
            std::vector<uint8_t> payload;
            payload.swap(out_);
            out_.swap(saved);
            u32(uint32_t(payload.size()));
            out_.insert(out_.end(), payload.begin(), payload.end());
        }
    }

    void data_section(const WasmModule& m) {
        u32(uint32_t(m.data.size()));
        for (const auto& seg : m.data) {
            if (seg.mode == SegmentMode::Passive) {
                u32(1);
            } else if (seg.memoryIndex != 0) {
                u32(2);
                u32(seg.memoryIndex);
                const_expr(seg.offset);
            } else {
                u32(0);
                const_expr(seg.offset);
            }
            u32(uint32_t(seg.bytes.size()));
            out_.insert(out_.end(), seg.bytes.begin(), seg.bytes.end());
        }
    }

    void const_expr(const ConstExpr& e) {
        for (const auto& ins : e.instrs)
            instruction(ins);
        byte(0x0b);
    }

    void instruction(const Instruction& ins) {
        const InstructionMeta& meta = instruction_meta(ins.op);
        const uint32_t raw = opcode_value(ins.op);
        if (raw > 0xff) {
            byte(uint8_t(raw >> 8));
            leb::write_unsigned<uint32_t>(out_, raw & 0xff);
        } else {
            byte(uint8_t(raw));
        }
        switch (meta.imm) {
        case ImmKind::None:
            break;
        case ImmKind::BlockType:
            leb::write_s33(out_, ins.block_type());
            break;
        case ImmKind::LabelIdx:
        case ImmKind::FuncIdx:
        case ImmKind::LocalIdx:
        case ImmKind::GlobalIdx:
        case ImmKind::TableIdx:
        case ImmKind::ElemIdx:
        case ImmKind::DataIdx:
            u32(ins.index());
            break;
        case ImmKind::BrTable:
            if (ins.list.empty())
                throw EncodingOverflow("br_table requires at least a default target");
            u32(uint32_t(ins.list.size() - 1));
            for (uint32_t t : ins.list)
                u32(t);
            break;
        case ImmKind::CallIndirect:
        case ImmKind::TableCopy:
        case ImmKind::TableInit:
            u32(ins.index());
            u32(ins.idx2);
            break;
        case ImmKind::MemInit:
            u32(ins.index());
            u32(ins.idx2);
            break;
        case ImmKind::MemCopy:
            u32(uint32_t(ins.bits));
            u32(ins.idx2);
            break;
        case ImmKind::MemIdx:
            u32(uint32_t(ins.bits));
            break;
        case ImmKind::MemArg:
        case ImmKind::MemArgLane:
            u32(ins.mem_align());
            u32(ins.mem_offset());
            if (meta.imm == ImmKind::MemArgLane)
                byte(ins.lane);
            break;
        case ImmKind::Lane:
            byte(ins.lane);
            break;
        case ImmKind::Shuffle:
            for (uint8_t b : ins.bytes)
                byte(b);
            break;
        case ImmKind::ConstI32:
            leb::write_signed<int32_t>(out_, ins.i32_value());
            break;
        case ImmKind::ConstI64:
            leb::write_signed<int64_t>(out_, ins.i64_value());
            break;
        case ImmKind::ConstF32: {
            uint32_t v = ins.f32_bits();
            for (int i = 0; i < 4; ++i, v >>= 8)
                byte(uint8_t(v));
            break;
        }
        case ImmKind::ConstF64: {
            uint64_t v = ins.f64_bits();
            for (int i = 0; i < 8; ++i, v >>= 8)
                byte(uint8_t(v));
            break;
        }
        case ImmKind::ConstV128:
            for (uint8_t b : ins.bytes)
                byte(b);
            break;
        case ImmKind::SelectT:
            u32(uint32_t(ins.list.size()));
            for (uint32_t t : ins.list)
                byte(uint8_t(t));
            break;
        case ImmKind::RefType:
            byte(uint8_t(ins.bits));
            break;
        }
    }
};

}  // namespace detail

/// Encodes the intermediate representation back into binary form.
/// decode_module(encode_module(m)) is structurally equal to m.
inline std::vector<uint8_t> encode_module(const WasmModule& m) {
    return detail::ModuleEncoder().encode(m);
}

}  // namespace wasmdiff
