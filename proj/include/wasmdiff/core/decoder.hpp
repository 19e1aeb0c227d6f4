// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include "wasmdiff/core/errors.hpp"
#include "wasmdiff/core/instr_table.hpp"
#include "wasmdiff/core/leb128.hpp"
#include "wasmdiff/core/module.hpp"

namespace wasmdiff {

namespace detail {

class ModuleDecoder {
public:
    explicit ModuleDecoder(std::span<const uint8_t> bytes) {
        cur_.data = bytes.data();
        cur_.size = bytes.size();
    }

    WasmModule decode() {
        expect_header();
        uint8_t lastKnown = 0;
        while (cur_.pos < cur_.size) {
            const size_t idAt = cur_.pos;
            const uint8_t id = cur_.byte();
            const uint32_t size = u32();
            const size_t start = cur_.pos;
            if (start + size > cur_.size)
                throw MalformedBinary(idAt, "section size past end of input");
            sectionEnd_ = start + size;

            if (id == 0) {
                decode_custom(lastKnown);
            } else {
                if (id > 12) {
                    if (id == 13)
                        throw UnsupportedProposal("exception-handling");
                    throw MalformedBinary(idAt, "unknown section id " + std::to_string(id));
                }
                if (section_rank(id) <= section_rank(lastKnown))
                    throw MalformedBinary(idAt, "section out of order");
                lastKnown = id;
                decode_known(id);
            }
            if (cur_.pos != sectionEnd_)
                throw MalformedBinary(cur_.pos, "section size mismatch");
        }
        if (!mod_.functions.empty() || !mod_.code.empty()) {
            if (mod_.functions.size() != mod_.code.size())
                throw MalformedBinary(cur_.pos, "function and code section counts differ");
        }
        if (mod_.dataCount && *mod_.dataCount != mod_.data.size())
            throw MalformedBinary(cur_.pos, "data count section disagrees with data section");
        return std::move(mod_);
    }

private:
    leb::Cursor cur_;
    size_t sectionEnd_ = 0;
    WasmModule mod_;

    // The data-count section (id 12) sits between element (9) and code (10).
    static int section_rank(uint8_t id) {
        switch (id) {
        case 0: return 0;
        case 12: return 19;
        case 10: return 20;
        case 11: return 21;
        default: return id * 2;
        }
    }

    uint32_t u32() { return leb::read_unsigned<uint32_t>(cur_); }
    uint64_t u64() { return leb::read_unsigned<uint64_t>(cur_); }

    void expect_header() {
        static const uint8_t magic[8] = {0x00, 0x61, 0x73, 0x6d, 0x01, 0x00, 0x00, 0x00};
        if (cur_.size < 8)
            throw MalformedBinary(0, "shorter than the 8-byte header");
        if (std::memcmp(cur_.data, magic, 4) != 0)
            throw MalformedBinary(0, "bad magic");
        if (std::memcmp(cur_.data + 4, magic + 4, 4) != 0)
            throw MalformedBinary(4, "unsupported version");
        cur_.pos = 8;
    }

    std::string name() {
        const uint32_t n = u32();
        if (cur_.pos + n > sectionEnd_)
            throw MalformedBinary(cur_.pos, "name runs past section end");
        std::string s(reinterpret_cast<const char*>(cur_.data + cur_.pos), n);
        cur_.pos += n;
        return s;
    }

    ValType val_type() {
        const size_t at = cur_.pos;
        const uint8_t b = cur_.byte();
        if (auto t = val_type_from_byte(b))
            return *t;
        if (b == 0x78 || b == 0x77)
            throw UnsupportedProposal("packed types");
        throw MalformedBinary(at, "invalid value type 0x" + std::to_string(b));
    }

    Limits limits(bool isMemory) {
        const size_t at = cur_.pos;
        const uint8_t flags = cur_.byte();
        switch (flags) {
        case 0x00: return Limits{u32(), std::nullopt};
        case 0x01: {
            Limits l;
            l.min = u32();
            l.max = u32();
            return l;
        }
        case 0x02:
        case 0x03:
            throw UnsupportedProposal("threads");
        case 0x04:
        case 0x05:
            throw UnsupportedProposal(isMemory ? "memory64" : "table64");
        default:
            throw MalformedBinary(at, "invalid limits flags");
        }
    }

    FuncType func_type() {
        const size_t at = cur_.pos;
        const uint8_t form = cur_.byte();
        if (form != 0x60) {
            if (form == 0x5f || form == 0x5e)
                throw UnsupportedProposal("gc");
            throw MalformedBinary(at, "expected function type form 0x60");
        }
        FuncType ft;
        const uint32_t np = u32();
        ft.params.reserve(np);
        for (uint32_t i = 0; i < np; ++i)
            ft.params.push_back(val_type());
        const uint32_t nr = u32();
        ft.results.reserve(nr);
        for (uint32_t i = 0; i < nr; ++i)
            ft.results.push_back(val_type());
        return ft;
    }

    GlobalType global_type() {
        GlobalType g;
        g.type = val_type();
        const size_t at = cur_.pos;
        const uint8_t mut = cur_.byte();
        if (mut > 1)
            throw MalformedBinary(at, "invalid mutability flag");
        g.mutable_ = mut == 1;
        return g;
    }

    TableType table_type() {
        TableType t;
        t.elem = val_type();
        if (!is_ref_type(t.elem))
            throw MalformedBinary(cur_.pos, "table element type must be a reference type");
        t.limits = limits(false);
        return t;
    }

    void decode_custom(uint8_t lastKnown) {
        CustomSection cs;
        cs.afterKnownSection = lastKnown;
        cs.name = name();
        cs.bytes.assign(cur_.data + cur_.pos, cur_.data + sectionEnd_);
        cur_.pos = sectionEnd_;
        mod_.customs.push_back(std::move(cs));
    }

    void decode_known(uint8_t id) {
        switch (id) {
        case 1: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.types.push_back(func_type());
            break;
        }
        case 2: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i) {
                Import im;
                im.module = name();
                im.name = name();
                const size_t at = cur_.pos;
                const uint8_t kind = cur_.byte();
                switch (kind) {
                case 0: im.kind = ExternalKind::Function; im.typeIndex = u32(); break;
                case 1: im.kind = ExternalKind::Table; im.table = table_type(); break;
                case 2: im.kind = ExternalKind::Memory; im.memory.limits = limits(true); break;
                case 3: im.kind = ExternalKind::Global; im.global = global_type(); break;
                case 4: throw UnsupportedProposal("exception-handling");
                default: throw MalformedBinary(at, "invalid import kind");
                }
                mod_.imports.push_back(std::move(im));
            }
            break;
        }
        case 3: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.functions.push_back(u32());
            break;
        }
        case 4: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.tables.push_back(table_type());
            break;
        }
        case 5: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.memories.push_back(MemoryType{limits(true)});
            break;
        }
        case 6: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i) {
                Global g;
                g.type = global_type();
                g.init = const_expr();
                mod_.globals.push_back(std::move(g));
            }
            break;
        }
        case 7: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i) {
                Export e;
                e.name = name();
                const size_t at = cur_.pos;
                const uint8_t kind = cur_.byte();
                if (kind > 3)
                    throw MalformedBinary(at, "invalid export kind");
                e.kind = ExternalKind(kind);
                e.index = u32();
                mod_.exports.push_back(std::move(e));
            }
            break;
        }
        case 8:
            mod_.start = u32();
            break;
        case 9: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.elements.push_back(element_segment());
            break;
        }
        case 10: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.code.push_back(function_body());
            break;
        }
        case 11: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                mod_.data.push_back(data_segment());
            break;
        }
        case 12:
            mod_.dataCount = u32();
            break;
        default:
            throw MalformedBinary(cur_.pos, "unhandled section");
        }
    }

    ElementSegment element_segment() {
        ElementSegment seg;
        const size_t at = cur_.pos;
        const uint32_t flags = u32();
        if (flags > 7)
            throw MalformedBinary(at, "invalid element segment flags");
        const bool passive = flags & 0x1;
        const bool explicitTable = !passive && (flags & 0x2);
        const bool declarative = passive && (flags & 0x2);
        seg.mode = declarative ? SegmentMode::Declarative
                 : passive    ? SegmentMode::Passive
                              : SegmentMode::Active;
        seg.usesExprs = flags & 0x4;
        if (explicitTable)
            seg.tableIndex = u32();
        if (seg.mode == SegmentMode::Active)
            seg.offset = const_expr();
        if (flags != 0 && flags != 4) {
            // elemkind byte or reftype, depending on form
            const size_t kAt = cur_.pos;
            const uint8_t k = cur_.byte();
            if (seg.usesExprs) {
                auto t = val_type_from_byte(k);
                if (!t || !is_ref_type(*t))
                    throw MalformedBinary(kAt, "invalid element reference type");
                seg.refType = *t;
            } else {
                if (k != 0x00)
                    throw MalformedBinary(kAt, "invalid element kind");
                seg.refType = ValType::FuncRef;
            }
        }
        const uint32_t n = u32();
        if (seg.usesExprs) {
            for (uint32_t i = 0; i < n; ++i)
                seg.exprs.push_back(const_expr());
        } else {
            for (uint32_t i = 0; i < n; ++i)
                seg.funcIndices.push_back(u32());
        }
        return seg;
    }

    DataSegment data_segment() {
        DataSegment seg;
        const size_t at = cur_.pos;
        const uint32_t flags = u32();
        switch (flags) {
        case 0:
            seg.mode = SegmentMode::Active;
            seg.offset = const_expr();
            break;
        case 1:
            seg.mode = SegmentMode::Passive;
            break;
        case 2:
            seg.mode = SegmentMode::Active;
            seg.memoryIndex = u32();
            seg.offset = const_expr();
            break;
        default:
            throw MalformedBinary(at, "invalid data segment flags");
        }
        const uint32_t n = u32();
        if (cur_.pos + n > sectionEnd_)
            throw MalformedBinary(cur_.pos, "data segment runs past section end");
        seg.bytes.assign(cur_.data + cur_.pos, cur_.data + cur_.pos + n);
        cur_.pos += n;
        return seg;
    }

    FunctionBody function_body() {
        const uint32_t size = u32();
        const size_t start = cur_.pos;
        if (start + size > sectionEnd_)
            throw MalformedBinary(start, "function body runs past section end");
        FunctionBody fb;
        const uint32_t runs = u32();
        uint64_t total = 0;
        for (uint32_t i = 0; i < runs; ++i) {
            const uint32_t count = u32();
            const ValType t = val_type();
            total += count;
            if (total > 1'000'000)
                throw MalformedBinary(cur_.pos, "too many locals");
            fb.localRuns.emplace_back(count, t);
        }
        const size_t bodyStart = cur_.pos;
        fb.body = expression(bodyStart);
        if (cur_.pos != start + size)
            throw MalformedBinary(cur_.pos, "function body size mismatch");
        return fb;
    }

    // Parses instructions up to and including the matching depth-0 end, which
    // is consumed but not emitted.
    std::vector<Instruction> expression(size_t offsetBase) {
        std::vector<Instruction> out;
        int depth = 0;
        while (true) {
            const size_t at = cur_.pos;
            Instruction ins = instruction();
            ins.byteOffset = uint32_t(at - offsetBase);
            if (ins.op == Opcode::End) {
                if (depth == 0)
                    return out;
                --depth;
            } else if (ins.op == Opcode::Block || ins.op == Opcode::Loop || ins.op == Opcode::If) {
                ++depth;
            }
            out.push_back(std::move(ins));
        }
    }

    ConstExpr const_expr() {
        ConstExpr e;
        e.instrs = expression(cur_.pos);
        return e;
    }

    Instruction instruction() {
        const size_t at = cur_.pos;
        const uint8_t b = cur_.byte();
        uint32_t raw = b;
        if (b == 0xfc) {
            raw = 0xfc00 | u32();
        } else if (b == 0xfd) {
            const uint32_t sub = u32();
            if (sub >= 0x100)
                throw UnsupportedProposal("relaxed-simd");
            raw = 0xfd00 | sub;
        } else if (b == 0xfb) {
            throw UnsupportedProposal("gc");
        } else if (b == 0xfe) {
            throw UnsupportedProposal("threads");
        }
        const InstructionMeta* meta = find_instruction_meta(raw);
        if (!meta) {
            switch (b) {
            case 0x06: case 0x07: case 0x08: case 0x09: case 0x18: case 0x19:
                throw UnsupportedProposal("exception-handling");
            case 0x12: case 0x13:
                throw UnsupportedProposal("tail-call");
            case 0x14: case 0x15:
                throw UnsupportedProposal("function-references");
            case 0xd3: case 0xd4: case 0xd5: case 0xd6:
                throw UnsupportedProposal("function-references");
            default:
                throw MalformedBinary(at, "invalid opcode 0x" + std::to_string(raw));
            }
        }

        Instruction ins;
        ins.op = meta->op;
        switch (meta->imm) {
        case ImmKind::None:
            break;
        case ImmKind::BlockType:
            ins.bits = uint64_t(leb::read_s33(cur_));
            break;
        case ImmKind::LabelIdx:
        case ImmKind::FuncIdx:
        case ImmKind::LocalIdx:
        case ImmKind::GlobalIdx:
        case ImmKind::TableIdx:
        case ImmKind::ElemIdx:
        case ImmKind::DataIdx:
            ins.bits = u32();
            break;
        case ImmKind::BrTable: {
            const uint32_t n = u32();
            if (uint64_t(n) + 1 > 1'000'000)
                throw MalformedBinary(at, "br_table too long");
            ins.list.reserve(n + 1);
            for (uint32_t i = 0; i <= n; ++i)
                ins.list.push_back(u32());
            break;
        }
        case ImmKind::CallIndirect:
            ins.bits = u32();
            ins.idx2 = u32();
            break;
        case ImmKind::TableCopy:
        case ImmKind::TableInit:
            ins.bits = u32();
            ins.idx2 = u32();
            break;
        case ImmKind::MemInit:
            ins.bits = u32();
            ins.idx2 = memory_index_byte();
            break;
        case ImmKind::MemCopy:
            ins.bits = memory_index_byte();
            ins.idx2 = memory_index_byte();
            break;
        case ImmKind::MemIdx:
            ins.bits = memory_index_byte();
            break;
        case ImmKind::MemArg:
        case ImmKind::MemArgLane: {
            const uint32_t align = u32();
            if (align & 0x40)
                throw UnsupportedProposal("multi-memory");
            ins.bits = align;
            ins.idx2 = u32();
            if (meta->imm == ImmKind::MemArgLane)
                ins.lane = cur_.byte();
            break;
        }
        case ImmKind::Lane:
            ins.lane = cur_.byte();
            break;
        case ImmKind::Shuffle:
            for (auto& lane : ins.bytes)
                lane = cur_.byte();
            break;
        case ImmKind::ConstI32:
            ins.bits = uint64_t(int64_t(leb::read_signed<int32_t>(cur_)));
            break;
        case ImmKind::ConstI64:
            ins.bits = uint64_t(leb::read_signed<int64_t>(cur_));
            break;
        case ImmKind::ConstF32: {
            uint32_t v = 0;
            for (int i = 0; i < 4; ++i)
                v |= uint32_t(cur_.byte()) << (i * 8);
            ins.bits = v;
            break;
        }
        case ImmKind::ConstF64: {
            uint64_t v = 0;
            for (int i = 0; i < 8; ++i)
                v |= uint64_t(cur_.byte()) << (i * 8);
            ins.bits = v;
            break;
        }
        case ImmKind::ConstV128:
            for (auto& byte : ins.bytes)
                byte = cur_.byte();
            break;
        case ImmKind::SelectT: {
            const uint32_t n = u32();
            for (uint32_t i = 0; i < n; ++i)
                ins.list.push_back(val_type_to_byte(val_type()));
            break;
        }
        case ImmKind::RefType: {
            const size_t tAt = cur_.pos;
            const uint8_t t = cur_.byte();
            auto vt = val_type_from_byte(t);
            if (!vt || !is_ref_type(*vt))
                throw MalformedBinary(tAt, "invalid heap type");
            ins.bits = t;
            break;
        }
        }
        return ins;
    }

    uint32_t memory_index_byte() {
        const size_t at = cur_.pos;
        const uint32_t idx = u32();
        if (idx != 0)
            throw UnsupportedProposal("multi-memory");
        (void)at;
        return idx;
    }
};

}  // namespace detail

/// Decodes a Wasm binary into the intermediate representation.
/// Throws MalformedBinary or UnsupportedProposal.
inline WasmModule decode_module(std::span<const uint8_t> bytes) {
    return detail::ModuleDecoder(bytes).decode();
}

inline WasmModule decode_module(const std::vector<uint8_t>& bytes) {
    return decode_module(std::span<const uint8_t>(bytes.data(), bytes.size()));
}

}  // namespace wasmdiff
