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

#ifndef CTXSPELL_NGRAM_MODEL_HPP
#define CTXSPELL_NGRAM_MODEL_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctxspell/corpus_ingest.hpp"

namespace ctxspell {

using WordId = std::uint32_t;

namespace detail {
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};
} // namespace detail

struct ModelLimits {
    std::uint32_t min_word_len = 2;  // codepoints; words shorter are dropped
    std::uint64_t min_word_freq = 5; // strictly-greater-than threshold
};

/// Frozen n-gram count store built from a sentence stream.
///
/// Words surviving the length/frequency thresholds get dense integer ids,
/// assigned by descending corpus frequency with lexicographic tie-break so
/// identical corpora always produce identical models. Bigram and trigram
/// counts live in a two-level id trie laid out as CSR arrays: the children of
/// head word a sit in one sorted span, and each (a,b) bigram owns a sorted
/// span of trigram successors. Only n-grams whose member words all survived
/// are stored. Raw counts are kept and Eq-style conditional probabilities
/// are evaluated on demand, so all stored arithmetic stays integral.
///
/// Immutable after build/load; concurrent readers need no locking.
class NgramModel {
  public:
    /// Counts the stream and freezes the model. Throws BuildError when the
    /// stream is empty or no word survives the thresholds.
    static NgramModel build(const SentenceStream& stream, ModelLimits limits,
                            std::string language_code);

    // --- vocabulary ---
    std::size_t vocab_size() const noexcept { return words_.size(); }
    const std::string& word(WordId id) const { return words_[id]; }
    std::optional<WordId> find(std::string_view word) const;

    /// Dictionary membership with the case fallback: exact match first, then
    /// when the first letter is uppercase, the first-letter-lowercased form.
    bool contains(std::string_view word) const;
    std::optional<WordId> find_with_case_fallback(std::string_view word) const;

    // --- counts (0 for anything unknown or unstored) ---
    std::uint64_t total_unigrams() const noexcept { return total_unigrams_; }
    std::uint64_t unigram_count(WordId id) const { return unigram_counts_[id]; }
    std::uint64_t unigram_count(std::string_view word) const;
    std::uint64_t bigram_count(WordId a, WordId b) const;
    std::uint64_t trigram_count(WordId a, WordId b, WordId c) const;
    std::uint64_t bigram_count(std::string_view a, std::string_view b) const;
    std::uint64_t trigram_count(std::string_view a, std::string_view b,
                                std::string_view c) const;

    std::size_t bigram_entries() const noexcept { return bi_child_.size(); }
    std::size_t trigram_entries() const noexcept { return tri_child_.size(); }

    /// Conditional probability of `word` after `context` (0, 1 or 2 words):
    /// count of the full n-gram over the count of the context prefix. Any
    /// unknown word or zero denominator yields 0.
    double cond_prob(std::span<const std::string> context, std::string_view word) const;

    void for_each_bigram(
        const std::function<void(WordId, WordId, std::uint64_t)>& fn) const;
    void for_each_trigram(
        const std::function<void(WordId, WordId, WordId, std::uint64_t)>& fn) const;

    // --- metadata ---
    const std::string& language_code() const noexcept { return language_code_; }
    const ModelLimits& limits() const noexcept { return limits_; }

    // --- persistence ---
    /// Binary model file, little-endian. Layout: magic "CSPK", u16 version,
    /// varint-length language code, u32 min_word_len, u64 min_word_freq,
    /// u64 total unigrams, u32 word count, per word (varint byte length,
    /// bytes, u64 count), bigram section (per head id: varint child count,
    /// then (varint child-id delta, varint count) pairs sorted by child id),
    /// trigram section (same, keyed by (a,b) in bigram order), u32 CRC32 of
    /// everything before it.
    void save(const std::filesystem::path& path) const;
    std::string serialize() const;
    static NgramModel load(const std::filesystem::path& path);
    static NgramModel deserialize(std::string_view bytes);

    /// Plain-text dump of the same content, one n-gram per line
    /// ("word count", "word word count", "word word word count"); the
    /// uncompressed reference the binary format is measured against.
    void dump_text(std::ostream& out) const;

  private:
    NgramModel() = default;
    const std::uint64_t* find_bigram_slot(WordId a, WordId b) const;

    std::string language_code_;
    ModelLimits limits_;

    std::vector<std::string> words_; // id -> word
    std::unordered_map<std::string, WordId, detail::StringHash, std::equal_to<>> ids_;
    std::vector<std::uint64_t> unigram_counts_;
    std::uint64_t total_unigrams_ = 0;

    // id trie, CSR layout
    std::vector<std::uint64_t> bi_off_;   // per head id, size vocab+1
    std::vector<WordId> bi_child_;
    std::vector<std::uint64_t> bi_count_;
    std::vector<std::uint64_t> tri_off_;  // per bigram, size bigrams+1
    std::vector<WordId> tri_child_;
    std::vector<std::uint64_t> tri_count_;
};

} // namespace ctxspell

#endif // CTXSPELL_NGRAM_MODEL_HPP
