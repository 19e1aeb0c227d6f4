// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wasmdiff {

/// Any deviation from the binary grammar while decoding.
class MalformedBinary : public std::runtime_error {
public:
    MalformedBinary(size_t offset, const std::string& reason)
        : std::runtime_error("malformed binary at offset " + std::to_string(offset) + ": " + reason),
          offset_(offset), reason_(reason)
    {}

    size_t offset() const noexcept { return offset_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    size_t offset_;
    std::string reason_;
};

/// Opcode or section byte that belongs to a proposal outside the supported set.
/// Decoding aborts rather than guessing at unknown semantics.
class UnsupportedProposal : public std::runtime_error {
public:
    explicit UnsupportedProposal(const std::string& name)
        : std::runtime_error("unsupported proposal: " + name), name_(name)
    {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// An index or size exceeds what the binary format can represent.
class EncodingOverflow : public std::runtime_error {
public:
    explicit EncodingOverflow(const std::string& what) : std::runtime_error(what) {}
};

class UnknownOpcode : public std::runtime_error {
public:
    explicit UnknownOpcode(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wasmdiff
