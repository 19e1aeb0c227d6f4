// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wasmdiff/support/hex.hpp"

namespace wasmdiff::test {

inline std::vector<uint8_t> unhex(std::string_view s) {
    auto v = wasmdiff::from_hex(s);
    if (!v)
        throw std::invalid_argument("bad hex in test");
    return *v;
}

// Fig.-style factorial: two i32 locals, 16-instruction body
// (const/set pairs, a loop multiplying into local 1, trailing local.get).
inline std::vector<uint8_t> factorial_module_bytes() {
    return unhex(
        "0061736d010000000105016000017f030201000a23012101027f"
        "41052100410121010340200120006c2101200041016b22000d000b20010b");
}

inline std::filesystem::path env_path(const char* name) {
    const char* v = std::getenv(name);
    if (!v)
        throw std::runtime_error(std::string("environment variable not set: ") + name);
    return std::filesystem::path(v);
}

inline std::optional<std::filesystem::path> env_path_opt(const char* name) {
    const char* v = std::getenv(name);
    if (!v)
        return std::nullopt;
    return std::filesystem::path(v);
}

}  // namespace wasmdiff::test
