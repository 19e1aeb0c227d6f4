// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wasmdiff/support/hex.hpp"

namespace wasmdiff {

/// Hex-encoded SHA-256, used for content-addressed binary filenames.
inline std::string sha256_hex(std::span<const uint8_t> data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    return hex_bytes(digest, len);
}

inline std::string sha256_hex(const std::vector<uint8_t>& data) {
    return sha256_hex(std::span<const uint8_t>(data.data(), data.size()));
}

}  // namespace wasmdiff
