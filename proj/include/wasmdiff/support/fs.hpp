// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wasmdiff {

inline std::vector<uint8_t> read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + p.string());
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(f)),
                                std::istreambuf_iterator<char>());
}

inline std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + p.string());
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

inline void write_file(const std::filesystem::path& p, const void* data, size_t size) {
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    f.write(static_cast<const char*>(data), std::streamsize(size));
    if (!f)
        throw std::runtime_error("short write to " + p.string());
}

inline void write_file(const std::filesystem::path& p, const std::vector<uint8_t>& bytes) {
    write_file(p, bytes.data(), bytes.size());
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    write_file(p, text.data(), text.size());
}

// Write-then-rename so readers never observe a partial file.
inline void write_file_atomic(const std::filesystem::path& p, const std::string& text) {
    const std::filesystem::path tmp = p.string() + ".tmp";
    write_file(tmp, text);
    std::filesystem::rename(tmp, p);
}

}  // namespace wasmdiff
