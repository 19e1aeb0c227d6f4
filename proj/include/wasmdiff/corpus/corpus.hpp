// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "wasmdiff/core/decoder.hpp"
#include "wasmdiff/core/validator.hpp"
#include "wasmdiff/corpus/ast.hpp"
#include "wasmdiff/corpus/fingerprint.hpp"
#include "wasmdiff/corpus/json_codec.hpp"
#include "wasmdiff/support/fs.hpp"
#include "wasmdiff/support/hex.hpp"

namespace wasmdiff {

struct CorpusLimits {
    size_t maxTreeDepth = 64;
    size_t maxTreeInstructions = 4096;
};

struct CorpusEntry {
    AstNode root;
    uint64_t fingerprint = 0;
    std::string provenance;  // identifier of the source binary
};

struct CorpusDiagnostics {
    size_t binariesSeen = 0;
    size_t binariesAdmitted = 0;
    size_t binariesUndecodable = 0;
    size_t binariesUnsupported = 0;
    size_t binariesInvalid = 0;
    size_t functionsParsed = 0;
    size_t functionsSkipped = 0;
    size_t rootsSeen = 0;
    size_t rootsDeduplicated = 0;
    size_t rootsOversize = 0;
    std::vector<std::string> notes;

    std::string summary() const {
        return std::to_string(binariesAdmitted) + "/" + std::to_string(binariesSeen) +
               " binaries (" + std::to_string(binariesUndecodable) + " undecodable, " +
               std::to_string(binariesUnsupported) + " unsupported, " +
               std::to_string(binariesInvalid) + " invalid), " +
               std::to_string(functionsParsed) + " functions parsed, " +
               std::to_string(functionsSkipped) + " skipped, " + std::to_string(rootsSeen) +
               " roots seen, " + std::to_string(rootsDeduplicated) + " duplicates collapsed, " +
               std::to_string(rootsOversize) + " oversize";
    }
};

// Deduplicated corpus of context-annotated sub-trees. Immutable after build.
class Corpus {
public:
    bool add(AstNode root, std::string provenance) {
        const uint64_t fp = wasmdiff::fingerprint(root);
        if (!fingerprints_.insert(fp).second)
            return false;
        entries_.push_back(CorpusEntry{std::move(root), fp, std::move(provenance)});
        return true;
    }

    const std::vector<CorpusEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool contains(uint64_t fp) const { return fingerprints_.contains(fp); }

private:
    std::vector<CorpusEntry> entries_;
    std::unordered_set<uint64_t> fingerprints_;
};

struct SeedBinary {
    std::string id;
    std::vector<uint8_t> bytes;
};

/// Algorithm end to end over a set of seed binaries: decode, validate, parse
/// each function body into roots, admit roots in encounter order, skipping
/// duplicates by structural fingerprint.
inline Corpus build_corpus(const std::vector<SeedBinary>& binaries, CorpusDiagnostics* diagOut = nullptr,
                           const CorpusLimits& limits = {}) {
    Corpus corpus;
    CorpusDiagnostics diag;
    for (const auto& seed : binaries) {
        ++diag.binariesSeen;
        WasmModule mod;
        try {
            mod = decode_module(seed.bytes);
        } catch (const UnsupportedProposal& e) {
            ++diag.binariesUnsupported;
            diag.notes.push_back(seed.id + ": " + e.what());
            continue;
        } catch (const MalformedBinary& e) {
            ++diag.binariesUndecodable;
            diag.notes.push_back(seed.id + ": " + e.what());
            continue;
        }
        const auto verdict = validate_module(mod);
        if (!verdict.ok()) {
            ++diag.binariesInvalid;
            diag.notes.push_back(seed.id + ": " + verdict.violations.front().message);
            continue;
        }
        ++diag.binariesAdmitted;
        const uint32_t imported = mod.num_imported_funcs();
        for (uint32_t i = 0; i < mod.code.size(); ++i) {
            const uint32_t funcIdx = imported + i;
            std::vector<AstNode> roots;
            try {
                roots = parse_function_asts(mod, funcIdx);
            } catch (const UnresolvableContext&) {
                ++diag.functionsSkipped;
                continue;
            } catch (const StackUnderflow&) {
                ++diag.functionsSkipped;
                continue;
            }
            ++diag.functionsParsed;
            for (auto& root : roots) {
                ++diag.rootsSeen;
                if (root.depth() > limits.maxTreeDepth ||
                    root.instruction_count() > limits.maxTreeInstructions) {
                    ++diag.rootsOversize;
                    continue;
                }
                if (!corpus.add(std::move(root), seed.id))
                    ++diag.rootsDeduplicated;
            }
        }
    }
    if (diagOut)
        *diagOut = std::move(diag);
    return corpus;
}

// --- persistence: one record file per entry plus an index mapping
// fingerprint -> entry path and provenance ---

inline void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir / "entries");
    nlohmann::json index;
    index["version"] = 1;
    index["format"] = "wasmdiff-corpus";
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : corpus.entries()) {
        const std::string fp = hex_u64(e.fingerprint);
        const std::string rel = "entries/fp-" + fp + ".json";
        nlohmann::json rec;
        rec["version"] = 1;
        rec["fingerprint"] = fp;
        rec["source"] = e.provenance;
        rec["root"] = ast_node_to_json(e.root);
        write_file(dir / rel, rec.dump(1));
        entries.push_back({{"fingerprint", fp}, {"path", rel}, {"source", e.provenance}});
    }
    index["entries"] = entries;
    write_file_atomic(dir / "index.json", index.dump(1));
}

inline Corpus load_corpus(const std::filesystem::path& dir) {
    const auto index = nlohmann::json::parse(read_text_file(dir / "index.json"));
    if (index.value("format", "") != "wasmdiff-corpus")
        throw std::runtime_error("not a corpus directory: " + dir.string());
    Corpus corpus;
    for (const auto& e : index.at("entries")) {
        const auto rec = nlohmann::json::parse(read_text_file(dir / e.at("path").get<std::string>()));
        corpus.add(ast_node_from_json(rec.at("root")), rec.value("source", ""));
    }
    return corpus;
}

}  // namespace wasmdiff
