// wasmdiff: differential testing toolkit for WebAssembly runtimes
// Copyright 2026 The wasmdiff Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wasmdiff/corpus/corpus.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "testutil.hpp"

using namespace wasmdiff;

namespace {

std::vector<SeedBinary> load_seed_dir(const std::filesystem::path& dir) {
    std::vector<SeedBinary> seeds;
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".wasm")
            paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths)
        seeds.push_back({p.filename().string(), read_file(p)});
    return seeds;
}

}  // namespace

TEST(build_corpus, factorial_module_yields_three_entries) {
    // Four roots, the duplicate local.set(i32.const) pair collapses to one.
    const std::vector<SeedBinary> seeds = {{"fact", wasmdiff::test::factorial_module_bytes()}};
    CorpusDiagnostics diag;
    const Corpus corpus = build_corpus(seeds, &diag);
    EXPECT_EQ(corpus.size(), 3u);
    EXPECT_EQ(diag.rootsSeen, 4u);
    EXPECT_EQ(diag.rootsDeduplicated, 1u);
}

TEST(build_corpus, duplicate_binaries_change_nothing) {
    const SeedBinary fact{"fact", wasmdiff::test::factorial_module_bytes()};
    const Corpus once = build_corpus({fact});
    const Corpus twice = build_corpus({fact, {"fact-copy", fact.bytes}});
    EXPECT_EQ(once.size(), twice.size());
}

TEST(build_corpus, undecodable_binary_is_counted_not_fatal) {
    CorpusDiagnostics diag;
    const Corpus corpus = build_corpus(
        {{"junk", {0, 1, 2, 3}}, {"fact", wasmdiff::test::factorial_module_bytes()}}, &diag);
    EXPECT_EQ(corpus.size(), 3u);
    EXPECT_EQ(diag.binariesUndecodable, 1u);
    EXPECT_EQ(diag.binariesAdmitted, 1u);
}

TEST(build_corpus, no_two_entries_share_a_fingerprint) {
    const auto seedDir = wasmdiff::test::env_path_opt("WASMDIFF_SEEDS");
    if (!seedDir || !std::filesystem::exists(*seedDir))
        GTEST_SKIP() << "seed corpus not built";
    const Corpus corpus = build_corpus(load_seed_dir(*seedDir));
    std::set<uint64_t> fps;
    for (const auto& e : corpus.entries())
        EXPECT_TRUE(fps.insert(e.fingerprint).second);
}

// Independent census: recompute every root fingerprint in a second pass and
// compare the unique count with the corpus entry count.
TEST(build_corpus, entry_count_matches_two_pass_fingerprint_census) {
    const auto seedDir = wasmdiff::test::env_path_opt("WASMDIFF_SEEDS");
    if (!seedDir || !std::filesystem::exists(*seedDir))
        GTEST_SKIP() << "seed corpus not built";
    const auto seeds = load_seed_dir(*seedDir);
    ASSERT_GE(seeds.size(), 50u);
    const Corpus corpus = build_corpus(seeds);

    CorpusLimits limits;
    std::set<uint64_t> census;
    for (const auto& seed : seeds) {
        WasmModule mod;
        try {
            mod = decode_module(seed.bytes);
        } catch (...) {
            continue;
        }
        if (!validate_module(mod).ok())
            continue;
        for (uint32_t i = 0; i < mod.code.size(); ++i) {
            try {
                for (const auto& root : parse_function_asts(mod, mod.num_imported_funcs() + i)) {
                    if (root.depth() > limits.maxTreeDepth ||
                        root.instruction_count() > limits.maxTreeInstructions)
                        continue;
                    census.insert(fingerprint(root));
                }
            } catch (...) {
                continue;
            }
        }
    }
    EXPECT_EQ(corpus.size(), census.size());
    EXPECT_GT(corpus.size(), 100u);  // real seeds carry plenty of distinct shapes
}

TEST(corpus_store, save_load_roundtrip) {
    const auto seedDir = wasmdiff::test::env_path_opt("WASMDIFF_SEEDS");
    std::vector<SeedBinary> seeds = {{"fact", wasmdiff::test::factorial_module_bytes()}};
    if (seedDir && std::filesystem::exists(*seedDir)) {
        auto more = load_seed_dir(*seedDir);
        seeds.insert(seeds.end(), std::make_move_iterator(more.begin()),
                     std::make_move_iterator(more.begin() + std::min<size_t>(8, more.size())));
    }
    const Corpus corpus = build_corpus(seeds);

    const auto dir = std::filesystem::temp_directory_path() / "wasmdiff-corpus-test";
    std::filesystem::remove_all(dir);
    save_corpus(corpus, dir);
    const Corpus loaded = load_corpus(dir);

    ASSERT_EQ(loaded.size(), corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
        EXPECT_EQ(loaded.entries()[i].root, corpus.entries()[i].root) << i;
        EXPECT_EQ(loaded.entries()[i].fingerprint, corpus.entries()[i].fingerprint);
        EXPECT_EQ(loaded.entries()[i].provenance, corpus.entries()[i].provenance);
    }
    std::filesystem::remove_all(dir);
}
