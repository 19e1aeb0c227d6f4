// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace wasmdiff {

// Canonical opcode identifiers. Single-byte opcodes keep their byte value;
// prefixed opcodes are (prefix << 8) | subopcode, e.g. i32x4.add = 0xfdae.
// Instruction groups, after the stack-effect/constraint taxonomy.
enum class InstrGroup : uint8_t {
    Numeric,
    Vector,
    Parametric,
    Variable,
    Memory,
    Table,
    Control,
};

inline const char* instr_group_name(InstrGroup g) {
    switch (g) {
    case InstrGroup::Numeric: return "numeric";
    case InstrGroup::Vector: return "vector";
    case InstrGroup::Parametric: return "parametric";
    case InstrGroup::Variable: return "variable";
    case InstrGroup::Memory: return "memory";
    case InstrGroup::Table: return "table";
    case InstrGroup::Control: return "control";
    }
    return "?";
}

// How an opcode's immediates are encoded in the binary format.
enum class ImmKind : uint8_t {
    None,
    BlockType,     // s33 block type
    LabelIdx,      // u32
    BrTable,       // vec(u32) + u32 default
    FuncIdx,       // u32
    CallIndirect,  // u32 type index + u32 table index
    LocalIdx,      // u32
    GlobalIdx,     // u32
    TableIdx,      // u32
    TableCopy,     // u32 dst table + u32 src table
    TableInit,     // u32 elem index + u32 table index
    ElemIdx,       // u32
    DataIdx,       // u32
    MemInit,       // u32 data index + memory index byte
    MemCopy,       // two memory index bytes
    MemIdx,        // single memory index byte
    MemArg,        // u32 align + u32 offset
    MemArgLane,    // memarg + lane byte
    Lane,          // lane byte
    Shuffle,       // sixteen lane bytes
    ConstI32,      // s32
    ConstI64,      // s64
    ConstF32,      // 4 bytes
    ConstF64,      // 8 bytes
    ConstV128,     // 16 bytes
    SelectT,       // vec(valtype)
    RefType,       // heap type byte
};

// X(enumerator, encoding, text name, group, stack template, constraint template,
//   immediate kind, memory access bytes)
//
// Stack templates use "t" for a wildcard type and "t*" for a variadic segment
// that is concretized from context (callee signature, block type, label arity).
#define WASMDIFF_FOREACH_OPCODE(X) \
    /* --- control --- */ \
    X(Unreachable, 0x00, "unreachable", Control, "t* -> t*", BlockSig, None, 0) \
    X(Nop, 0x01, "nop", Control, " -> ", BlockSig, None, 0) \
    X(Block, 0x02, "block", Control, "t* -> t*", BlockSig, BlockType, 0) \
    X(Loop, 0x03, "loop", Control, "t* -> t*", BlockSig, BlockType, 0) \
    X(If, 0x04, "if", Control, "t* i32 -> t*", BlockSig, BlockType, 0) \
    X(Else, 0x05, "else", Control, "t* -> t*", BlockSig, None, 0) \
    X(End, 0x0b, "end", Control, "t* -> t*", BlockSig, None, 0) \
    X(Br, 0x0c, "br", Control, "t* -> t*", BlockSig, LabelIdx, 0) \
    X(BrIf, 0x0d, "br_if", Control, "t* i32 -> t*", BlockSig, LabelIdx, 0) \
    X(BrTable, 0x0e, "br_table", Control, "t* i32 -> t*", BlockSig, BrTable, 0) \
    X(Return, 0x0f, "return", Control, "t* -> t*", BlockSig, None, 0) \
    X(Call, 0x10, "call", Control, "t* -> t*", DirectCall, FuncIdx, 0) \
    X(CallIndirect, 0x11, "call_indirect", Control, "t* i32 -> t*", IndirectCall, CallIndirect, 0) \
    /* --- parametric --- */ \
    X(Drop, 0x1a, "drop", Parametric, "t -> ", None, None, 0) \
    X(Select, 0x1b, "select", Parametric, "t t i32 -> t", None, None, 0) \
    X(SelectT, 0x1c, "select t", Parametric, "t t i32 -> t", None, SelectT, 0) \
    /* --- variable --- */ \
    X(LocalGet, 0x20, "local.get", Variable, " -> t", LocalRef, LocalIdx, 0) \
    X(LocalSet, 0x21, "local.set", Variable, "t -> ", LocalRef, LocalIdx, 0) \
    X(LocalTee, 0x22, "local.tee", Variable, "t -> t", LocalRef, LocalIdx, 0) \
    X(GlobalGet, 0x23, "global.get", Variable, " -> t", GlobalRef, GlobalIdx, 0) \
    X(GlobalSet, 0x24, "global.set", Variable, "t -> ", GlobalRef, GlobalIdx, 0) \
    /* --- table --- */ \
    X(TableGet, 0x25, "table.get", Table, "i32 -> t", TableRef, TableIdx, 0) \
    X(TableSet, 0x26, "table.set", Table, "i32 t -> ", TableRef, TableIdx, 0) \
    /* --- memory: loads/stores --- */ \
    X(I32Load, 0x28, "i32.load", Memory, "i32 -> i32", MemoryRange, MemArg, 4) \
    X(I64Load, 0x29, "i64.load", Memory, "i32 -> i64", MemoryRange, MemArg, 8) \
    X(F32Load, 0x2a, "f32.load", Memory, "i32 -> f32", MemoryRange, MemArg, 4) \
    X(F64Load, 0x2b, "f64.load", Memory, "i32 -> f64", MemoryRange, MemArg, 8) \
    X(I32Load8S, 0x2c, "i32.load8_s", Memory, "i32 -> i32", MemoryRange, MemArg, 1) \
    X(I32Load8U, 0x2d, "i32.load8_u", Memory, "i32 -> i32", MemoryRange, MemArg, 1) \
    X(I32Load16S, 0x2e, "i32.load16_s", Memory, "i32 -> i32", MemoryRange, MemArg, 2) \
    X(I32Load16U, 0x2f, "i32.load16_u", Memory, "i32 -> i32", MemoryRange, MemArg, 2) \
    X(I64Load8S, 0x30, "i64.load8_s", Memory, "i32 -> i64", MemoryRange, MemArg, 1) \
    X(I64Load8U, 0x31, "i64.load8_u", Memory, "i32 -> i64", MemoryRange, MemArg, 1) \
    X(I64Load16S, 0x32, "i64.load16_s", Memory, "i32 -> i64", MemoryRange, MemArg, 2) \
    X(I64Load16U, 0x33, "i64.load16_u", Memory, "i32 -> i64", MemoryRange, MemArg, 2) \
    X(I64Load32S, 0x34, "i64.load32_s", Memory, "i32 -> i64", MemoryRange, MemArg, 4) \
    X(I64Load32U, 0x35, "i64.load32_u", Memory, "i32 -> i64", MemoryRange, MemArg, 4) \
    X(I32Store, 0x36, "i32.store", Memory, "i32 i32 -> ", MemoryRange, MemArg, 4) \
    X(I64Store, 0x37, "i64.store", Memory, "i32 i64 -> ", MemoryRange, MemArg, 8) \
    X(F32Store, 0x38, "f32.store", Memory, "i32 f32 -> ", MemoryRange, MemArg, 4) \
    X(F64Store, 0x39, "f64.store", Memory, "i32 f64 -> ", MemoryRange, MemArg, 8) \
    X(I32Store8, 0x3a, "i32.store8", Memory, "i32 i32 -> ", MemoryRange, MemArg, 1) \
    X(I32Store16, 0x3b, "i32.store16", Memory, "i32 i32 -> ", MemoryRange, MemArg, 2) \
    X(I64Store8, 0x3c, "i64.store8", Memory, "i32 i64 -> ", MemoryRange, MemArg, 1) \
    X(I64Store16, 0x3d, "i64.store16", Memory, "i32 i64 -> ", MemoryRange, MemArg, 2) \
    X(I64Store32, 0x3e, "i64.store32", Memory, "i32 i64 -> ", MemoryRange, MemArg, 4) \
    X(MemorySize, 0x3f, "memory.size", Memory, " -> i32", MemoryRange, MemIdx, 0) \
    X(MemoryGrow, 0x40, "memory.grow", Memory, "i32 -> i32", MemoryRange, MemIdx, 0) \
    /* --- numeric: constants --- */ \
    X(I32Const, 0x41, "i32.const", Numeric, " -> i32", None, ConstI32, 0) \
    X(I64Const, 0x42, "i64.const", Numeric, " -> i64", None, ConstI64, 0) \
    X(F32Const, 0x43, "f32.const", Numeric, " -> f32", None, ConstF32, 0) \
    X(F64Const, 0x44, "f64.const", Numeric, " -> f64", None, ConstF64, 0) \
    /* --- numeric: i32 comparisons --- */ \
    X(I32Eqz, 0x45, "i32.eqz", Numeric, "i32 -> i32", None, None, 0) \
    X(I32Eq, 0x46, "i32.eq", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Ne, 0x47, "i32.ne", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32LtS, 0x48, "i32.lt_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32LtU, 0x49, "i32.lt_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32GtS, 0x4a, "i32.gt_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32GtU, 0x4b, "i32.gt_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32LeS, 0x4c, "i32.le_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32LeU, 0x4d, "i32.le_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32GeS, 0x4e, "i32.ge_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32GeU, 0x4f, "i32.ge_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    /* --- numeric: i64 comparisons --- */ \
    X(I64Eqz, 0x50, "i64.eqz", Numeric, "i64 -> i32", None, None, 0) \
    X(I64Eq, 0x51, "i64.eq", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64Ne, 0x52, "i64.ne", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64LtS, 0x53, "i64.lt_s", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64LtU, 0x54, "i64.lt_u", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64GtS, 0x55, "i64.gt_s", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64GtU, 0x56, "i64.gt_u", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64LeS, 0x57, "i64.le_s", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64LeU, 0x58, "i64.le_u", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64GeS, 0x59, "i64.ge_s", Numeric, "i64 i64 -> i32", None, None, 0) \
    X(I64GeU, 0x5a, "i64.ge_u", Numeric, "i64 i64 -> i32", None, None, 0) \
    /* --- numeric: float comparisons --- */ \
    X(F32Eq, 0x5b, "f32.eq", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F32Ne, 0x5c, "f32.ne", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F32Lt, 0x5d, "f32.lt", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F32Gt, 0x5e, "f32.gt", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F32Le, 0x5f, "f32.le", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F32Ge, 0x60, "f32.ge", Numeric, "f32 f32 -> i32", None, None, 0) \
    X(F64Eq, 0x61, "f64.eq", Numeric, "f64 f64 -> i32", None, None, 0) \
    X(F64Ne, 0x62, "f64.ne", Numeric, "f64 f64 -> i32", None, None, 0) \
    X(F64Lt, 0x63, "f64.lt", Numeric, "f64 f64 -> i32", None, None, 0) \
    X(F64Gt, 0x64, "f64.gt", Numeric, "f64 f64 -> i32", None, None, 0) \
    X(F64Le, 0x65, "f64.le", Numeric, "f64 f64 -> i32", None, None, 0) \
    X(F64Ge, 0x66, "f64.ge", Numeric, "f64 f64 -> i32", None, None, 0) \
    /* --- numeric: i32 arithmetic --- */ \
    X(I32Clz, 0x67, "i32.clz", Numeric, "i32 -> i32", None, None, 0) \
    X(I32Ctz, 0x68, "i32.ctz", Numeric, "i32 -> i32", None, None, 0) \
    X(I32Popcnt, 0x69, "i32.popcnt", Numeric, "i32 -> i32", None, None, 0) \
    X(I32Add, 0x6a, "i32.add", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Sub, 0x6b, "i32.sub", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Mul, 0x6c, "i32.mul", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32DivS, 0x6d, "i32.div_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32DivU, 0x6e, "i32.div_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32RemS, 0x6f, "i32.rem_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32RemU, 0x70, "i32.rem_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32And, 0x71, "i32.and", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Or, 0x72, "i32.or", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Xor, 0x73, "i32.xor", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Shl, 0x74, "i32.shl", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32ShrS, 0x75, "i32.shr_s", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32ShrU, 0x76, "i32.shr_u", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Rotl, 0x77, "i32.rotl", Numeric, "i32 i32 -> i32", None, None, 0) \
    X(I32Rotr, 0x78, "i32.rotr", Numeric, "i32 i32 -> i32", None, None, 0) \
    /* --- numeric: i64 arithmetic --- */ \
    X(I64Clz, 0x79, "i64.clz", Numeric, "i64 -> i64", None, None, 0) \
    X(I64Ctz, 0x7a, "i64.ctz", Numeric, "i64 -> i64", None, None, 0) \
    X(I64Popcnt, 0x7b, "i64.popcnt", Numeric, "i64 -> i64", None, None, 0) \
    X(I64Add, 0x7c, "i64.add", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Sub, 0x7d, "i64.sub", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Mul, 0x7e, "i64.mul", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64DivS, 0x7f, "i64.div_s", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64DivU, 0x80, "i64.div_u", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64RemS, 0x81, "i64.rem_s", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64RemU, 0x82, "i64.rem_u", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64And, 0x83, "i64.and", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Or, 0x84, "i64.or", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Xor, 0x85, "i64.xor", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Shl, 0x86, "i64.shl", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64ShrS, 0x87, "i64.shr_s", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64ShrU, 0x88, "i64.shr_u", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Rotl, 0x89, "i64.rotl", Numeric, "i64 i64 -> i64", None, None, 0) \
    X(I64Rotr, 0x8a, "i64.rotr", Numeric, "i64 i64 -> i64", None, None, 0) \
    /* --- numeric: f32 arithmetic --- */ \
    X(F32Abs, 0x8b, "f32.abs", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Neg, 0x8c, "f32.neg", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Ceil, 0x8d, "f32.ceil", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Floor, 0x8e, "f32.floor", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Trunc, 0x8f, "f32.trunc", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Nearest, 0x90, "f32.nearest", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Sqrt, 0x91, "f32.sqrt", Numeric, "f32 -> f32", None, None, 0) \
    X(F32Add, 0x92, "f32.add", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Sub, 0x93, "f32.sub", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Mul, 0x94, "f32.mul", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Div, 0x95, "f32.div", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Min, 0x96, "f32.min", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Max, 0x97, "f32.max", Numeric, "f32 f32 -> f32", None, None, 0) \
    X(F32Copysign, 0x98, "f32.copysign", Numeric, "f32 f32 -> f32", None, None, 0) \
    /* --- numeric: f64 arithmetic --- */ \
    X(F64Abs, 0x99, "f64.abs", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Neg, 0x9a, "f64.neg", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Ceil, 0x9b, "f64.ceil", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Floor, 0x9c, "f64.floor", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Trunc, 0x9d, "f64.trunc", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Nearest, 0x9e, "f64.nearest", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Sqrt, 0x9f, "f64.sqrt", Numeric, "f64 -> f64", None, None, 0) \
    X(F64Add, 0xa0, "f64.add", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Sub, 0xa1, "f64.sub", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Mul, 0xa2, "f64.mul", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Div, 0xa3, "f64.div", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Min, 0xa4, "f64.min", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Max, 0xa5, "f64.max", Numeric, "f64 f64 -> f64", None, None, 0) \
    X(F64Copysign, 0xa6, "f64.copysign", Numeric, "f64 f64 -> f64", None, None, 0) \
    /* --- numeric: conversions --- */ \
    X(I32WrapI64, 0xa7, "i32.wrap_i64", Numeric, "i64 -> i32", None, None, 0) \
    X(I32TruncF32S, 0xa8, "i32.trunc_f32_s", Numeric, "f32 -> i32", None, None, 0) \
    X(I32TruncF32U, 0xa9, "i32.trunc_f32_u", Numeric, "f32 -> i32", None, None, 0) \
    X(I32TruncF64S, 0xaa, "i32.trunc_f64_s", Numeric, "f64 -> i32", None, None, 0) \
    X(I32TruncF64U, 0xab, "i32.trunc_f64_u", Numeric, "f64 -> i32", None, None, 0) \
    X(I64ExtendI32S, 0xac, "i64.extend_i32_s", Numeric, "i32 -> i64", None, None, 0) \
    X(I64ExtendI32U, 0xad, "i64.extend_i32_u", Numeric, "i32 -> i64", None, None, 0) \
    X(I64TruncF32S, 0xae, "i64.trunc_f32_s", Numeric, "f32 -> i64", None, None, 0) \
    X(I64TruncF32U, 0xaf, "i64.trunc_f32_u", Numeric, "f32 -> i64", None, None, 0) \
    X(I64TruncF64S, 0xb0, "i64.trunc_f64_s", Numeric, "f64 -> i64", None, None, 0) \
    X(I64TruncF64U, 0xb1, "i64.trunc_f64_u", Numeric, "f64 -> i64", None, None, 0) \
    X(F32ConvertI32S, 0xb2, "f32.convert_i32_s", Numeric, "i32 -> f32", None, None, 0) \
    X(F32ConvertI32U, 0xb3, "f32.convert_i32_u", Numeric, "i32 -> f32", None, None, 0) \
    X(F32ConvertI64S, 0xb4, "f32.convert_i64_s", Numeric, "i64 -> f32", None, None, 0) \
    X(F32ConvertI64U, 0xb5, "f32.convert_i64_u", Numeric, "i64 -> f32", None, None, 0) \
    X(F32DemoteF64, 0xb6, "f32.demote_f64", Numeric, "f64 -> f32", None, None, 0) \
    X(F64ConvertI32S, 0xb7, "f64.convert_i32_s", Numeric, "i32 -> f64", None, None, 0) \
    X(F64ConvertI32U, 0xb8, "f64.convert_i32_u", Numeric, "i32 -> f64", None, None, 0) \
    X(F64ConvertI64S, 0xb9, "f64.convert_i64_s", Numeric, "i64 -> f64", None, None, 0) \
    X(F64ConvertI64U, 0xba, "f64.convert_i64_u", Numeric, "i64 -> f64", None, None, 0) \
    X(F64PromoteF32, 0xbb, "f64.promote_f32", Numeric, "f32 -> f64", None, None, 0) \
    X(I32ReinterpretF32, 0xbc, "i32.reinterpret_f32", Numeric, "f32 -> i32", None, None, 0) \
    X(I64ReinterpretF64, 0xbd, "i64.reinterpret_f64", Numeric, "f64 -> i64", None, None, 0) \
    X(F32ReinterpretI32, 0xbe, "f32.reinterpret_i32", Numeric, "i32 -> f32", None, None, 0) \
    X(F64ReinterpretI64, 0xbf, "f64.reinterpret_i64", Numeric, "i64 -> f64", None, None, 0) \
    X(I32Extend8S, 0xc0, "i32.extend8_s", Numeric, "i32 -> i32", None, None, 0) \
    X(I32Extend16S, 0xc1, "i32.extend16_s", Numeric, "i32 -> i32", None, None, 0) \
    X(I64Extend8S, 0xc2, "i64.extend8_s", Numeric, "i64 -> i64", None, None, 0) \
    X(I64Extend16S, 0xc3, "i64.extend16_s", Numeric, "i64 -> i64", None, None, 0) \
    X(I64Extend32S, 0xc4, "i64.extend32_s", Numeric, "i64 -> i64", None, None, 0) \
    /* --- reference --- */ \
    X(RefNull, 0xd0, "ref.null", Parametric, " -> t", None, RefType, 0) \
    X(RefIsNull, 0xd1, "ref.is_null", Parametric, "t -> i32", None, None, 0) \
    X(RefFunc, 0xd2, "ref.func", Table, " -> funcref", DirectCall, FuncIdx, 0) \
    /* --- 0xFC: saturating truncation --- */ \
    X(I32TruncSatF32S, 0xfc00, "i32.trunc_sat_f32_s", Numeric, "f32 -> i32", None, None, 0) \
    X(I32TruncSatF32U, 0xfc01, "i32.trunc_sat_f32_u", Numeric, "f32 -> i32", None, None, 0) \
    X(I32TruncSatF64S, 0xfc02, "i32.trunc_sat_f64_s", Numeric, "f64 -> i32", None, None, 0) \
    X(I32TruncSatF64U, 0xfc03, "i32.trunc_sat_f64_u", Numeric, "f64 -> i32", None, None, 0) \
    X(I64TruncSatF32S, 0xfc04, "i64.trunc_sat_f32_s", Numeric, "f32 -> i64", None, None, 0) \
    X(I64TruncSatF32U, 0xfc05, "i64.trunc_sat_f32_u", Numeric, "f32 -> i64", None, None, 0) \
    X(I64TruncSatF64S, 0xfc06, "i64.trunc_sat_f64_s", Numeric, "f64 -> i64", None, None, 0) \
    X(I64TruncSatF64U, 0xfc07, "i64.trunc_sat_f64_u", Numeric, "f64 -> i64", None, None, 0) \
    /* --- 0xFC: bulk memory --- */ \
    X(MemoryInit, 0xfc08, "memory.init", Memory, "i32 i32 i32 -> ", MemoryRange, MemInit, 0) \
    X(DataDrop, 0xfc09, "data.drop", Memory, " -> ", MemoryRange, DataIdx, 0) \
    X(MemoryCopy, 0xfc0a, "memory.copy", Memory, "i32 i32 i32 -> ", MemoryRange, MemCopy, 0) \
    X(MemoryFill, 0xfc0b, "memory.fill", Memory, "i32 i32 i32 -> ", MemoryRange, MemIdx, 0) \
    /* --- 0xFC: table ops --- */ \
    X(TableInit, 0xfc0c, "table.init", Table, "i32 i32 i32 -> ", TableRef, TableInit, 0) \
    X(ElemDrop, 0xfc0d, "elem.drop", Table, " -> ", TableRef, ElemIdx, 0) \
    X(TableCopy, 0xfc0e, "table.copy", Table, "i32 i32 i32 -> ", TableRef, TableCopy, 0) \
    X(TableGrow, 0xfc0f, "table.grow", Table, "t i32 -> i32", TableRef, TableIdx, 0) \
    X(TableSize, 0xfc10, "table.size", Table, " -> i32", TableRef, TableIdx, 0) \
    X(TableFill, 0xfc11, "table.fill", Table, "i32 t i32 -> ", TableRef, TableIdx, 0) \
    /* --- 0xFD: vector loads/stores --- */ \
    X(V128Load, 0xfd00, "v128.load", Vector, "i32 -> v128", MemoryRange, MemArg, 16) \
    X(V128Load8x8S, 0xfd01, "v128.load8x8_s", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load8x8U, 0xfd02, "v128.load8x8_u", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load16x4S, 0xfd03, "v128.load16x4_s", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load16x4U, 0xfd04, "v128.load16x4_u", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load32x2S, 0xfd05, "v128.load32x2_s", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load32x2U, 0xfd06, "v128.load32x2_u", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Load8Splat, 0xfd07, "v128.load8_splat", Vector, "i32 -> v128", MemoryRange, MemArg, 1) \
    X(V128Load16Splat, 0xfd08, "v128.load16_splat", Vector, "i32 -> v128", MemoryRange, MemArg, 2) \
    X(V128Load32Splat, 0xfd09, "v128.load32_splat", Vector, "i32 -> v128", MemoryRange, MemArg, 4) \
    X(V128Load64Splat, 0xfd0a, "v128.load64_splat", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(V128Store, 0xfd0b, "v128.store", Vector, "i32 v128 -> ", MemoryRange, MemArg, 16) \
    X(V128Const, 0xfd0c, "v128.const", Vector, " -> v128", None, ConstV128, 0) \
    X(I8x16Shuffle, 0xfd0d, "i8x16.shuffle", Vector, "v128 v128 -> v128", None, Shuffle, 0) \
    X(I8x16Swizzle, 0xfd0e, "i8x16.swizzle", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16Splat, 0xfd0f, "i8x16.splat", Vector, "i32 -> v128", None, None, 0) \
    X(I16x8Splat, 0xfd10, "i16x8.splat", Vector, "i32 -> v128", None, None, 0) \
    X(I32x4Splat, 0xfd11, "i32x4.splat", Vector, "i32 -> v128", None, None, 0) \
    X(I64x2Splat, 0xfd12, "i64x2.splat", Vector, "i64 -> v128", None, None, 0) \
    X(F32x4Splat, 0xfd13, "f32x4.splat", Vector, "f32 -> v128", None, None, 0) \
    X(F64x2Splat, 0xfd14, "f64x2.splat", Vector, "f64 -> v128", None, None, 0) \
    X(I8x16ExtractLaneS, 0xfd15, "i8x16.extract_lane_s", Vector, "v128 -> i32", None, Lane, 0) \
    X(I8x16ExtractLaneU, 0xfd16, "i8x16.extract_lane_u", Vector, "v128 -> i32", None, Lane, 0) \
    X(I8x16ReplaceLane, 0xfd17, "i8x16.replace_lane", Vector, "v128 i32 -> v128", None, Lane, 0) \
    X(I16x8ExtractLaneS, 0xfd18, "i16x8.extract_lane_s", Vector, "v128 -> i32", None, Lane, 0) \
    X(I16x8ExtractLaneU, 0xfd19, "i16x8.extract_lane_u", Vector, "v128 -> i32", None, Lane, 0) \
    X(I16x8ReplaceLane, 0xfd1a, "i16x8.replace_lane", Vector, "v128 i32 -> v128", None, Lane, 0) \
    X(I32x4ExtractLane, 0xfd1b, "i32x4.extract_lane", Vector, "v128 -> i32", None, Lane, 0) \
    X(I32x4ReplaceLane, 0xfd1c, "i32x4.replace_lane", Vector, "v128 i32 -> v128", None, Lane, 0) \
    X(I64x2ExtractLane, 0xfd1d, "i64x2.extract_lane", Vector, "v128 -> i64", None, Lane, 0) \
    X(I64x2ReplaceLane, 0xfd1e, "i64x2.replace_lane", Vector, "v128 i64 -> v128", None, Lane, 0) \
    X(F32x4ExtractLane, 0xfd1f, "f32x4.extract_lane", Vector, "v128 -> f32", None, Lane, 0) \
    X(F32x4ReplaceLane, 0xfd20, "f32x4.replace_lane", Vector, "v128 f32 -> v128", None, Lane, 0) \
    X(F64x2ExtractLane, 0xfd21, "f64x2.extract_lane", Vector, "v128 -> f64", None, Lane, 0) \
    X(F64x2ReplaceLane, 0xfd22, "f64x2.replace_lane", Vector, "v128 f64 -> v128", None, Lane, 0) \
    /* --- 0xFD: i8x16 comparisons --- */ \
    X(I8x16Eq, 0xfd23, "i8x16.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16Ne, 0xfd24, "i8x16.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16LtS, 0xfd25, "i8x16.lt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16LtU, 0xfd26, "i8x16.lt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16GtS, 0xfd27, "i8x16.gt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16GtU, 0xfd28, "i8x16.gt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16LeS, 0xfd29, "i8x16.le_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16LeU, 0xfd2a, "i8x16.le_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16GeS, 0xfd2b, "i8x16.ge_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16GeU, 0xfd2c, "i8x16.ge_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: i16x8 comparisons --- */ \
    X(I16x8Eq, 0xfd2d, "i16x8.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8Ne, 0xfd2e, "i16x8.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8LtS, 0xfd2f, "i16x8.lt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8LtU, 0xfd30, "i16x8.lt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8GtS, 0xfd31, "i16x8.gt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8GtU, 0xfd32, "i16x8.gt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8LeS, 0xfd33, "i16x8.le_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8LeU, 0xfd34, "i16x8.le_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8GeS, 0xfd35, "i16x8.ge_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8GeU, 0xfd36, "i16x8.ge_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: i32x4 comparisons --- */ \
    X(I32x4Eq, 0xfd37, "i32x4.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4Ne, 0xfd38, "i32x4.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4LtS, 0xfd39, "i32x4.lt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4LtU, 0xfd3a, "i32x4.lt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4GtS, 0xfd3b, "i32x4.gt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4GtU, 0xfd3c, "i32x4.gt_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4LeS, 0xfd3d, "i32x4.le_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4LeU, 0xfd3e, "i32x4.le_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4GeS, 0xfd3f, "i32x4.ge_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4GeU, 0xfd40, "i32x4.ge_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: float comparisons --- */ \
    X(F32x4Eq, 0xfd41, "f32x4.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Ne, 0xfd42, "f32x4.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Lt, 0xfd43, "f32x4.lt", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Gt, 0xfd44, "f32x4.gt", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Le, 0xfd45, "f32x4.le", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Ge, 0xfd46, "f32x4.ge", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Eq, 0xfd47, "f64x2.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Ne, 0xfd48, "f64x2.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Lt, 0xfd49, "f64x2.lt", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Gt, 0xfd4a, "f64x2.gt", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Le, 0xfd4b, "f64x2.le", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Ge, 0xfd4c, "f64x2.ge", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: bitwise --- */ \
    X(V128Not, 0xfd4d, "v128.not", Vector, "v128 -> v128", None, None, 0) \
    X(V128And, 0xfd4e, "v128.and", Vector, "v128 v128 -> v128", None, None, 0) \
    X(V128Andnot, 0xfd4f, "v128.andnot", Vector, "v128 v128 -> v128", None, None, 0) \
    X(V128Or, 0xfd50, "v128.or", Vector, "v128 v128 -> v128", None, None, 0) \
    X(V128Xor, 0xfd51, "v128.xor", Vector, "v128 v128 -> v128", None, None, 0) \
    X(V128Bitselect, 0xfd52, "v128.bitselect", Vector, "v128 v128 v128 -> v128", None, None, 0) \
    X(V128AnyTrue, 0xfd53, "v128.any_true", Vector, "v128 -> i32", None, None, 0) \
    /* --- 0xFD: lane loads/stores --- */ \
    X(V128Load8Lane, 0xfd54, "v128.load8_lane", Vector, "i32 v128 -> v128", MemoryRange, MemArgLane, 1) \
    X(V128Load16Lane, 0xfd55, "v128.load16_lane", Vector, "i32 v128 -> v128", MemoryRange, MemArgLane, 2) \
    X(V128Load32Lane, 0xfd56, "v128.load32_lane", Vector, "i32 v128 -> v128", MemoryRange, MemArgLane, 4) \
    X(V128Load64Lane, 0xfd57, "v128.load64_lane", Vector, "i32 v128 -> v128", MemoryRange, MemArgLane, 8) \
    X(V128Store8Lane, 0xfd58, "v128.store8_lane", Vector, "i32 v128 -> ", MemoryRange, MemArgLane, 1) \
    X(V128Store16Lane, 0xfd59, "v128.store16_lane", Vector, "i32 v128 -> ", MemoryRange, MemArgLane, 2) \
    X(V128Store32Lane, 0xfd5a, "v128.store32_lane", Vector, "i32 v128 -> ", MemoryRange, MemArgLane, 4) \
    X(V128Store64Lane, 0xfd5b, "v128.store64_lane", Vector, "i32 v128 -> ", MemoryRange, MemArgLane, 8) \
    X(V128Load32Zero, 0xfd5c, "v128.load32_zero", Vector, "i32 -> v128", MemoryRange, MemArg, 4) \
    X(V128Load64Zero, 0xfd5d, "v128.load64_zero", Vector, "i32 -> v128", MemoryRange, MemArg, 8) \
    X(F32x4DemoteF64x2Zero, 0xfd5e, "f32x4.demote_f64x2_zero", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2PromoteLowF32x4, 0xfd5f, "f64x2.promote_low_f32x4", Vector, "v128 -> v128", None, None, 0) \
    /* --- 0xFD: i8x16 --- */ \
    X(I8x16Abs, 0xfd60, "i8x16.abs", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16Neg, 0xfd61, "i8x16.neg", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16Popcnt, 0xfd62, "i8x16.popcnt", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16AllTrue, 0xfd63, "i8x16.all_true", Vector, "v128 -> i32", None, None, 0) \
    X(I8x16Bitmask, 0xfd64, "i8x16.bitmask", Vector, "v128 -> i32", None, None, 0) \
    X(I8x16NarrowI16x8S, 0xfd65, "i8x16.narrow_i16x8_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16NarrowI16x8U, 0xfd66, "i8x16.narrow_i16x8_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Ceil, 0xfd67, "f32x4.ceil", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Floor, 0xfd68, "f32x4.floor", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Trunc, 0xfd69, "f32x4.trunc", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Nearest, 0xfd6a, "f32x4.nearest", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16Shl, 0xfd6b, "i8x16.shl", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I8x16ShrS, 0xfd6c, "i8x16.shr_s", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I8x16ShrU, 0xfd6d, "i8x16.shr_u", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I8x16Add, 0xfd6e, "i8x16.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16AddSatS, 0xfd6f, "i8x16.add_sat_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16AddSatU, 0xfd70, "i8x16.add_sat_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16Sub, 0xfd71, "i8x16.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16SubSatS, 0xfd72, "i8x16.sub_sat_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16SubSatU, 0xfd73, "i8x16.sub_sat_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Ceil, 0xfd74, "f64x2.ceil", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2Floor, 0xfd75, "f64x2.floor", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16MinS, 0xfd76, "i8x16.min_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16MinU, 0xfd77, "i8x16.min_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16MaxS, 0xfd78, "i8x16.max_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I8x16MaxU, 0xfd79, "i8x16.max_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Trunc, 0xfd7a, "f64x2.trunc", Vector, "v128 -> v128", None, None, 0) \
    X(I8x16AvgrU, 0xfd7b, "i8x16.avgr_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtaddPairwiseI8x16S, 0xfd7c, "i16x8.extadd_pairwise_i8x16_s", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8ExtaddPairwiseI8x16U, 0xfd7d, "i16x8.extadd_pairwise_i8x16_u", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4ExtaddPairwiseI16x8S, 0xfd7e, "i32x4.extadd_pairwise_i16x8_s", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4ExtaddPairwiseI16x8U, 0xfd7f, "i32x4.extadd_pairwise_i16x8_u", Vector, "v128 -> v128", None, None, 0) \
    /* --- 0xFD: i16x8 --- */ \
    X(I16x8Abs, 0xfd80, "i16x8.abs", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8Neg, 0xfd81, "i16x8.neg", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8Q15mulrSatS, 0xfd82, "i16x8.q15mulr_sat_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8AllTrue, 0xfd83, "i16x8.all_true", Vector, "v128 -> i32", None, None, 0) \
    X(I16x8Bitmask, 0xfd84, "i16x8.bitmask", Vector, "v128 -> i32", None, None, 0) \
    X(I16x8NarrowI32x4S, 0xfd85, "i16x8.narrow_i32x4_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8NarrowI32x4U, 0xfd86, "i16x8.narrow_i32x4_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtendLowI8x16S, 0xfd87, "i16x8.extend_low_i8x16_s", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8ExtendHighI8x16S, 0xfd88, "i16x8.extend_high_i8x16_s", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8ExtendLowI8x16U, 0xfd89, "i16x8.extend_low_i8x16_u", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8ExtendHighI8x16U, 0xfd8a, "i16x8.extend_high_i8x16_u", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8Shl, 0xfd8b, "i16x8.shl", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I16x8ShrS, 0xfd8c, "i16x8.shr_s", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I16x8ShrU, 0xfd8d, "i16x8.shr_u", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I16x8Add, 0xfd8e, "i16x8.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8AddSatS, 0xfd8f, "i16x8.add_sat_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8AddSatU, 0xfd90, "i16x8.add_sat_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8Sub, 0xfd91, "i16x8.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8SubSatS, 0xfd92, "i16x8.sub_sat_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8SubSatU, 0xfd93, "i16x8.sub_sat_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Nearest, 0xfd94, "f64x2.nearest", Vector, "v128 -> v128", None, None, 0) \
    X(I16x8Mul, 0xfd95, "i16x8.mul", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8MinS, 0xfd96, "i16x8.min_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8MinU, 0xfd97, "i16x8.min_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8MaxS, 0xfd98, "i16x8.max_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8MaxU, 0xfd99, "i16x8.max_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8AvgrU, 0xfd9b, "i16x8.avgr_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtmulLowI8x16S, 0xfd9c, "i16x8.extmul_low_i8x16_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtmulHighI8x16S, 0xfd9d, "i16x8.extmul_high_i8x16_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtmulLowI8x16U, 0xfd9e, "i16x8.extmul_low_i8x16_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I16x8ExtmulHighI8x16U, 0xfd9f, "i16x8.extmul_high_i8x16_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: i32x4 --- */ \
    X(I32x4Abs, 0xfda0, "i32x4.abs", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4Neg, 0xfda1, "i32x4.neg", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4AllTrue, 0xfda3, "i32x4.all_true", Vector, "v128 -> i32", None, None, 0) \
    X(I32x4Bitmask, 0xfda4, "i32x4.bitmask", Vector, "v128 -> i32", None, None, 0) \
    X(I32x4ExtendLowI16x8S, 0xfda7, "i32x4.extend_low_i16x8_s", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4ExtendHighI16x8S, 0xfda8, "i32x4.extend_high_i16x8_s", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4ExtendLowI16x8U, 0xfda9, "i32x4.extend_low_i16x8_u", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4ExtendHighI16x8U, 0xfdaa, "i32x4.extend_high_i16x8_u", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4Shl, 0xfdab, "i32x4.shl", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I32x4ShrS, 0xfdac, "i32x4.shr_s", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I32x4ShrU, 0xfdad, "i32x4.shr_u", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I32x4Add, 0xfdae, "i32x4.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4Sub, 0xfdb1, "i32x4.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4Mul, 0xfdb5, "i32x4.mul", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4MinS, 0xfdb6, "i32x4.min_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4MinU, 0xfdb7, "i32x4.min_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4MaxS, 0xfdb8, "i32x4.max_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4MaxU, 0xfdb9, "i32x4.max_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4DotI16x8S, 0xfdba, "i32x4.dot_i16x8_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4ExtmulLowI16x8S, 0xfdbc, "i32x4.extmul_low_i16x8_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4ExtmulHighI16x8S, 0xfdbd, "i32x4.extmul_high_i16x8_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4ExtmulLowI16x8U, 0xfdbe, "i32x4.extmul_low_i16x8_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I32x4ExtmulHighI16x8U, 0xfdbf, "i32x4.extmul_high_i16x8_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: i64x2 --- */ \
    X(I64x2Abs, 0xfdc0, "i64x2.abs", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2Neg, 0xfdc1, "i64x2.neg", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2AllTrue, 0xfdc3, "i64x2.all_true", Vector, "v128 -> i32", None, None, 0) \
    X(I64x2Bitmask, 0xfdc4, "i64x2.bitmask", Vector, "v128 -> i32", None, None, 0) \
    X(I64x2ExtendLowI32x4S, 0xfdc7, "i64x2.extend_low_i32x4_s", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2ExtendHighI32x4S, 0xfdc8, "i64x2.extend_high_i32x4_s", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2ExtendLowI32x4U, 0xfdc9, "i64x2.extend_low_i32x4_u", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2ExtendHighI32x4U, 0xfdca, "i64x2.extend_high_i32x4_u", Vector, "v128 -> v128", None, None, 0) \
    X(I64x2Shl, 0xfdcb, "i64x2.shl", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I64x2ShrS, 0xfdcc, "i64x2.shr_s", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I64x2ShrU, 0xfdcd, "i64x2.shr_u", Vector, "v128 i32 -> v128", None, None, 0) \
    X(I64x2Add, 0xfdce, "i64x2.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2Sub, 0xfdd1, "i64x2.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2Mul, 0xfdd5, "i64x2.mul", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2Eq, 0xfdd6, "i64x2.eq", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2Ne, 0xfdd7, "i64x2.ne", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2LtS, 0xfdd8, "i64x2.lt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2GtS, 0xfdd9, "i64x2.gt_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2LeS, 0xfdda, "i64x2.le_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2GeS, 0xfddb, "i64x2.ge_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2ExtmulLowI32x4S, 0xfddc, "i64x2.extmul_low_i32x4_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2ExtmulHighI32x4S, 0xfddd, "i64x2.extmul_high_i32x4_s", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2ExtmulLowI32x4U, 0xfdde, "i64x2.extmul_low_i32x4_u", Vector, "v128 v128 -> v128", None, None, 0) \
    X(I64x2ExtmulHighI32x4U, 0xfddf, "i64x2.extmul_high_i32x4_u", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: f32x4 --- */ \
    X(F32x4Abs, 0xfde0, "f32x4.abs", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Neg, 0xfde1, "f32x4.neg", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Sqrt, 0xfde3, "f32x4.sqrt", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4Add, 0xfde4, "f32x4.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Sub, 0xfde5, "f32x4.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Mul, 0xfde6, "f32x4.mul", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Div, 0xfde7, "f32x4.div", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Min, 0xfde8, "f32x4.min", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Max, 0xfde9, "f32x4.max", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Pmin, 0xfdea, "f32x4.pmin", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F32x4Pmax, 0xfdeb, "f32x4.pmax", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: f64x2 --- */ \
    X(F64x2Abs, 0xfdec, "f64x2.abs", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2Neg, 0xfded, "f64x2.neg", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2Sqrt, 0xfdef, "f64x2.sqrt", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2Add, 0xfdf0, "f64x2.add", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Sub, 0xfdf1, "f64x2.sub", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Mul, 0xfdf2, "f64x2.mul", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Div, 0xfdf3, "f64x2.div", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Min, 0xfdf4, "f64x2.min", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Max, 0xfdf5, "f64x2.max", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Pmin, 0xfdf6, "f64x2.pmin", Vector, "v128 v128 -> v128", None, None, 0) \
    X(F64x2Pmax, 0xfdf7, "f64x2.pmax", Vector, "v128 v128 -> v128", None, None, 0) \
    /* --- 0xFD: conversions --- */ \
    X(I32x4TruncSatF32x4S, 0xfdf8, "i32x4.trunc_sat_f32x4_s", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4TruncSatF32x4U, 0xfdf9, "i32x4.trunc_sat_f32x4_u", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4ConvertI32x4S, 0xfdfa, "f32x4.convert_i32x4_s", Vector, "v128 -> v128", None, None, 0) \
    X(F32x4ConvertI32x4U, 0xfdfb, "f32x4.convert_i32x4_u", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4TruncSatF64x2SZero, 0xfdfc, "i32x4.trunc_sat_f64x2_s_zero", Vector, "v128 -> v128", None, None, 0) \
    X(I32x4TruncSatF64x2UZero, 0xfdfd, "i32x4.trunc_sat_f64x2_u_zero", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2ConvertLowI32x4S, 0xfdfe, "f64x2.convert_low_i32x4_s", Vector, "v128 -> v128", None, None, 0) \
    X(F64x2ConvertLowI32x4U, 0xfdff, "f64x2.convert_low_i32x4_u", Vector, "v128 -> v128", None, None, 0)

enum class Opcode : uint32_t {
#define WASMDIFF_OPCODE_ENUM(name, value, text, group, stack, constraint, imm, bytes) name = value,
    WASMDIFF_FOREACH_OPCODE(WASMDIFF_OPCODE_ENUM)
#undef WASMDIFF_OPCODE_ENUM
};

inline constexpr uint32_t opcode_value(Opcode op) { return static_cast<uint32_t>(op); }
inline constexpr bool is_prefixed(Opcode op) { return opcode_value(op) > 0xff; }

}  // namespace wasmdiff
