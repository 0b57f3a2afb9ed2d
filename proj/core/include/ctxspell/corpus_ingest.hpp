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

#ifndef CTXSPELL_CORPUS_INGEST_HPP
#define CTXSPELL_CORPUS_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "ctxspell/language_profile.hpp"

namespace ctxspell {

enum class SourceKind {
    article,  // plain text; one document per file, or per blank-line block
    subtitle, // blank-line separated blocks; index and timing lines skipped
};

struct CorpusSpec {
    // Paths may be files or directories; directories expand to their files in
    // lexicographic order so that ingestion stays deterministic.
    std::vector<std::pair<std::filesystem::path, SourceKind>> sources;
    std::uint64_t max_articles = 1'000'000;
    std::uint64_t max_subtitle_files = 10'000;
};

/// One sentence as the token texts of its word/number tokens, in order.
using Sentence = std::vector<std::string>;
using SentenceStream = std::vector<Sentence>;

/// Splits a document into sentence chunks on newlines and terminal
/// punctuation ('.', '!', '?' plus the profile's extra terminators).
std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const LanguageProfile& profile);

/// Reads every source, splits sentences, tokenizes, and keeps word/number
/// tokens. Foreign and punctuation tokens never reach the model stream.
/// Caps are enforced per source kind. Throws IoError for unreadable files and
/// EncodingError (with byte offset) for non-UTF-8 content.
SentenceStream ingest(const CorpusSpec& spec, const LanguageProfile& profile);

/// Tokenizes pre-split sentence text into the stream representation.
/// Returns an empty sentence when no word/number token survives.
Sentence sentence_tokens(std::u32string_view sentence, const LanguageProfile& profile);

} // namespace ctxspell

#endif // CTXSPELL_CORPUS_INGEST_HPP
