/*
 * Copyright 2026 The ctxspell Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Deterministic English-like corpus generator. Expands a seed lexicon into a
// large vocabulary and emits sentences built from a seeded phrase pool, so
// that n-gram contexts repeat the way they do in natural text. Used to build
// desk-scale models for the test and benchmark suites and by the corpusgen
// tool.

#ifndef CTXSPELL_TEXTGEN_HPP
#define CTXSPELL_TEXTGEN_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ctxspell/corpus_ingest.hpp"

namespace ctxspell::textgen {

/// Reads a seed word list (one lowercase word per line, '#' comments),
/// expands it with regular suffix/prefix morphology, and pads with
/// pronounceable synthetic words until `target_size` distinct words exist.
/// Deterministic in the seed.
std::vector<std::string> build_lexicon(const std::filesystem::path& seed_list,
                                       std::size_t target_size, std::uint64_t seed);

struct CorpusOptions {
    std::size_t sentences = 120'000;
    std::uint64_t seed = 42;
    // Every lexicon word is cycled through extra "coverage" sentences this
    // many times so the whole vocabulary clears a frequency threshold.
    unsigned coverage_repeats = 8;
    double noise_rate = 0.08; // fraction of tokens drawn i.i.d. instead of from phrases
};

struct GeneratedCorpus {
    SentenceStream natural;   // phrase-structured sentences
    SentenceStream coverage;  // vocabulary-coverage filler sentences

    SentenceStream combined() const;
};

GeneratedCorpus generate_corpus(const std::vector<std::string>& lexicon,
                                const CorpusOptions& options);

/// Writes sentences as plain-text article files (one sentence per line,
/// `files` roughly equal chunks) ingestible by the build pipeline.
void write_article_files(const SentenceStream& sentences,
                         const std::filesystem::path& directory, std::size_t files);

/// Random letters-only string of exactly `length` codepoints over a-z.
std::string random_token(std::size_t length, std::uint64_t seed);

} // namespace ctxspell::textgen

#endif // CTXSPELL_TEXTGEN_HPP
