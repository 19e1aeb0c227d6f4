// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/core/decoder.hpp"
#include "wasmdiff/core/encoder.hpp"
#include "wasmdiff/core/leb128.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"

using namespace wasmdiff;
using wasmdiff::test::unhex;

TEST(leb128, unsigned_roundtrip) {
    for (uint64_t v : {0ull, 1ull, 127ull, 128ull, 624485ull, 0xffffffffull,
                       0xffffffffffffffffull}) {
        std::vector<uint8_t> buf;
        leb::write_unsigned<uint64_t>(buf, v);
        leb::Cursor c{buf.data(), buf.size(), 0};
        EXPECT_EQ(leb::read_unsigned<uint64_t>(c), v);
        EXPECT_EQ(c.pos, buf.size());
    }
}

TEST(leb128, signed_roundtrip) {
    const std::vector<int64_t> cases = {0,  1,  -1, 63, 64, -64, -65, -7235, -79158787,
                                        INT32_MIN,  INT32_MAX,  INT64_MIN,  INT64_MAX};
    for (int64_t v : cases) {
        std::vector<uint8_t> buf;
        leb::write_signed<int64_t>(buf, v);
        leb::Cursor c{buf.data(), buf.size(), 0};
        EXPECT_EQ(leb::read_signed<int64_t>(c), v) << v;
        EXPECT_EQ(c.pos, buf.size());
    }
}

TEST(leb128, rejects_overlong_u32) {
    const auto buf = unhex("8080808080807f");
    leb::Cursor c{buf.data(), buf.size(), 0};
    EXPECT_THROW(leb::read_unsigned<uint32_t>(c), MalformedBinary);
}

TEST(leb128, rejects_out_of_range_final_byte) {
    const auto buf = unhex("ffffffff1f");  // 2^32 + ... does not fit u32
    leb::Cursor c{buf.data(), buf.size(), 0};
    EXPECT_THROW(leb::read_unsigned<uint32_t>(c), MalformedBinary);
}

TEST(decode, empty_module) {
    const auto mod = decode_module(unhex("0061736d01000000"));
    EXPECT_TRUE(mod.types.empty());
    EXPECT_TRUE(mod.imports.empty());
    EXPECT_TRUE(mod.functions.empty());
    EXPECT_TRUE(mod.code.empty());
    EXPECT_TRUE(mod.exports.empty());
    EXPECT_FALSE(mod.start.has_value());
    EXPECT_TRUE(mod.customs.empty());
}

TEST(encode, empty_module_is_header_only) {
    EXPECT_EQ(encode_module(WasmModule{}), unhex("0061736d01000000"));
}

TEST(decode, rejects_bad_magic) {
    EXPECT_THROW(decode_module(unhex("0061736e01000000")), MalformedBinary);
}

TEST(decode, rejects_bad_version) {
    EXPECT_THROW(decode_module(unhex("0061736d02000000")), MalformedBinary);
}

TEST(decode, rejects_truncated_header) {
    EXPECT_THROW(decode_module(unhex("0061736d")), MalformedBinary);
}

TEST(decode, truncated_leb_in_type_section) {
    // type section declaring a count whose LEB runs off the end
    EXPECT_THROW(decode_module(unhex("0061736d010000000102ff")), MalformedBinary);
}

TEST(decode, factorial_fixture) {
    const auto mod = decode_module(wasmdiff::test::factorial_module_bytes());
    ASSERT_EQ(mod.types.size(), 1u);
    EXPECT_TRUE(mod.types[0].params.empty());
    EXPECT_EQ(mod.types[0].results, (std::vector<ValType>{ValType::I32}));
    ASSERT_EQ(mod.functions.size(), 1u);
    ASSERT_EQ(mod.code.size(), 1u);
    EXPECT_EQ(mod.code[0].flat_locals(), (std::vector<ValType>{ValType::I32, ValType::I32}));
    EXPECT_EQ(mod.code[0].body.size(), 16u);
    EXPECT_EQ(mod.code[0].body[0].op, Opcode::I32Const);
    EXPECT_EQ(mod.code[0].body[0].i32_value(), 5);
    EXPECT_EQ(mod.code[0].body[4].op, Opcode::Loop);
    EXPECT_EQ(mod.code[0].body[15].op, Opcode::LocalGet);
}

TEST(decode, section_out_of_order_rejected) {
    // function section (3) before type section (1)
    EXPECT_THROW(decode_module(unhex("0061736d01000000030201000105016000017f")),
                 MalformedBinary);
}

TEST(decode, unsupported_proposal_aborts) {
    // threads: shared memory limits flag 0x03
    EXPECT_THROW(decode_module(unhex("0061736d01000000050401030105")), UnsupportedProposal);
}

TEST(decode, unknown_opcode_aborts) {
    // function body containing byte 0x27 (unassigned)
    const auto bytes = unhex("0061736d01000000010401600000030201000a05010300270b");
    EXPECT_THROW(decode_module(bytes), MalformedBinary);
}

TEST(codec, roundtrip_factorial) {
    const auto original = wasmdiff::test::factorial_module_bytes();
    const auto mod = decode_module(original);
    const auto re = encode_module(mod);
    EXPECT_EQ(decode_module(re), mod);
    // This module was hand-encoded with canonical LEBs, so bytes match too.
    EXPECT_EQ(re, original);
}

TEST(codec, preserves_nul_export_names) {
    // (export "\00jCeH" (func 0)) — names are raw bytes, NULs included.
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    FunctionBody fb;
    mod.code.push_back(fb);
    Export e;
    e.name = std::string("\0jCeH", 5);
    e.kind = ExternalKind::Function;
    e.index = 0;
    mod.exports.push_back(e);

    const auto bytes = encode_module(mod);
    // 5-byte name with leading NUL on the wire
    const std::string needle = std::string("\x05", 1) + std::string("\0jCeH", 5);
    const std::string hay(bytes.begin(), bytes.end());
    EXPECT_NE(hay.find(needle), std::string::npos);

    const auto back = decode_module(bytes);
    ASSERT_EQ(back.exports.size(), 1u);
    EXPECT_EQ(back.exports[0].name, e.name);
    EXPECT_EQ(back.exports[0].name.size(), 5u);
}

TEST(codec, custom_sections_roundtrip_verbatim) {
    WasmModule mod;
    CustomSection cs;
    cs.name = "lineage";
    cs.bytes = {1, 2, 3, 250};
    cs.afterKnownSection = 0;
    mod.customs.push_back(cs);
    const auto bytes = encode_module(mod);
    const auto back = decode_module(bytes);
    ASSERT_EQ(back.customs.size(), 1u);
    EXPECT_EQ(back.customs[0].name, "lineage");
    EXPECT_EQ(back.customs[0].bytes, cs.bytes);
}

TEST(codec, v128_const_immediate_roundtrip) {
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::V128}});
    mod.functions.push_back(0);
    FunctionBody fb;
    Instruction v;
    v.op = Opcode::V128Const;
    for (int i = 0; i < 16; ++i)
        v.bytes[size_t(i)] = uint8_t(0x10 + i);
    fb.body.push_back(v);
    mod.code.push_back(fb);
    const auto back = decode_module(encode_module(mod));
    EXPECT_EQ(back.code[0].body[0].bytes, v.bytes);
}

TEST(codec, float_bits_preserved_exactly) {
    WasmModule mod;
    mod.types.push_back(FuncType{{}, {ValType::F64}});
    mod.functions.push_back(0);
    FunctionBody fb;
    Instruction f;
    f.op = Opcode::F64Const;
    f.bits = 0x7ff4000000000001ull;  // signaling NaN payload
    fb.body.push_back(f);
    mod.code.push_back(fb);
    const auto back = decode_module(encode_module(mod));
    EXPECT_EQ(back.code[0].body[0].f64_bits(), f.bits);
}

TEST(codec, element_segment_forms_roundtrip) {
    WasmModule mod;
    mod.types.push_back(FuncType{});
    mod.functions.push_back(0);
    mod.code.emplace_back();
    mod.tables.push_back(TableType{ValType::FuncRef, {2, 4}});

    ElementSegment active;
    active.mode = SegmentMode::Active;
    active.offset = const_expr_i32(0);
    active.funcIndices = {0};
    mod.elements.push_back(active);

    ElementSegment passive;
    passive.mode = SegmentMode::Passive;
    passive.funcIndices = {0, 0};
    mod.elements.push_back(passive);

    ElementSegment decl;
    decl.mode = SegmentMode::Declarative;
    decl.funcIndices = {0};
    mod.elements.push_back(decl);

    const auto back = decode_module(encode_module(mod));
    ASSERT_EQ(back.elements.size(), 3u);
    EXPECT_EQ(back, mod);
}
