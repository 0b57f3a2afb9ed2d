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

#ifndef CTXSPELL_SUGGESTER_HPP
#define CTXSPELL_SUGGESTER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ctxspell/ngram_model.hpp"

namespace ctxspell {

struct Candidate {
    std::string word;
    WordId id = 0;
    std::uint8_t edit_distance = 0; // exact Levenshtein distance to the query

    bool operator==(const Candidate&) const = default;
};

/// Symmetric-delete candidate index.
///
/// Precomputes, for every dictionary word, all strings reachable by deleting
/// up to max_distance codepoints, and maps each variant back to the words
/// that produced it. A query generates its own delete variants, unions the
/// matching buckets, and verifies every hit with a real Levenshtein
/// computation — the delete intersection is a superset filter, not a distance
/// proof. Variants are stored as 64-bit hashes; a colliding bucket only adds
/// verification work, never a wrong result.
///
/// Immutable after build; queries are pure and thread-safe.
class DeleteIndex {
  public:
    static DeleteIndex build(const NgramModel& model, unsigned max_distance = 2);

    /// All dictionary words within max_distance of token, each with its exact
    /// distance (a distance-0 entry appears when the token itself is a
    /// dictionary word). Ordered by word id, i.e. by descending frequency.
    std::vector<Candidate> candidates(const NgramModel& model,
                                      std::string_view token) const;

    unsigned max_distance() const noexcept { return max_distance_; }
    std::size_t entry_count() const noexcept { return ids_.size(); }

  private:
    unsigned max_distance_ = 2;
    std::vector<std::u32string> vocab32_; // by word id, for verification
    // sorted unique variant hashes with CSR word-id buckets
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint64_t> offsets_;
    std::vector<WordId> ids_;
};

enum class SuggestMethod { naive, trie, dawg, bktree, sda };

const char* to_string(SuggestMethod method);
SuggestMethod suggest_method_from_string(std::string_view name);

/// Full-dictionary Levenshtein scan; the correctness oracle the faster
/// structures are checked against.
std::vector<Candidate> naive_candidates(const NgramModel& model,
                                        std::string_view token, unsigned max_distance);

/// Character trie walked with one DP row per node and early abandon once a
/// row's minimum exceeds the cutoff.
class TrieSuggester {
  public:
    explicit TrieSuggester(const NgramModel& model);
    ~TrieSuggester();
    TrieSuggester(TrieSuggester&&) noexcept;
    TrieSuggester& operator=(TrieSuggester&&) noexcept;

    std::vector<Candidate> candidates(const NgramModel& model, std::string_view token,
                                      unsigned max_distance) const;

  private:
    struct Node;
    std::unique_ptr<Node> root_;
};

/// Same traversal over a suffix-sharing word graph built with incremental
/// minimization from the sorted word list.
class DawgSuggester {
  public:
    explicit DawgSuggester(const NgramModel& model);

    std::vector<Candidate> candidates(const NgramModel& model, std::string_view token,
                                      unsigned max_distance) const;

    std::size_t node_count() const noexcept { return nodes_.size(); }

  private:
    struct Node {
        std::map<char32_t, std::uint32_t> edges;
        bool final_ = false;
    };
    std::vector<Node> nodes_;
    std::uint32_t root_ = 0;
};

/// Burkhard-Keller metric tree with triangle-inequality pruning.
class BkTreeSuggester {
  public:
    explicit BkTreeSuggester(const NgramModel& model);

    std::vector<Candidate> candidates(const NgramModel& model, std::string_view token,
                                      unsigned max_distance) const;

  private:
    struct Node {
        WordId word = 0;
        std::map<std::uint32_t, std::uint32_t> children; // distance -> node index
    };
    std::vector<std::u32string> vocab32_;
    std::vector<Node> nodes_;
};

/// Answers one query through any method, building the structure on the fly.
/// Exists for correctness cross-checks; repeated queries should build the
/// structures once instead.
std::vector<Candidate> candidates_baseline(SuggestMethod method, const NgramModel& model,
                                           std::string_view token,
                                           unsigned max_distance);

} // namespace ctxspell

#endif // CTXSPELL_SUGGESTER_HPP
