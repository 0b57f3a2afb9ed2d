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

#ifndef CTXSPELL_RANKER_HPP
#define CTXSPELL_RANKER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxspell/ngram_model.hpp"
#include "ctxspell/suggester.hpp"

namespace ctxspell {

/// Per-order weights of the context score. Must not all be zero.
struct Weights {
    double w1 = 1.0;
    double w2 = 1.0;
    double w3 = 1.0;
};

/// A candidate with its context-score decomposition. Each component already
/// includes its weight factor, so total == s1 + s2 + s3 exactly.
struct ScoredSuggestion {
    std::string word;
    std::uint8_t edit_distance = 0;
    double s1 = 0, s2 = 0, s3 = 0;
    double total = 0;
    std::uint32_t rank = 0; // 1-based position after sorting
};

struct ScoreBreakdown {
    double s1 = 0, s2 = 0, s3 = 0;
    double total = 0;
};

/// Evaluates the weighted n-gram context score of `candidate` substituted at
/// position i of the sentence:
///   s1 = w1 * P(candidate)
///   s2 = w2 * sum of both bigram windows covering position i
///   s3 = w3 * sum of all three trigram windows covering position i
/// Windows that extend past the sentence edges contribute 0, as does any
/// window containing an unknown word or a zero-count prefix. Throws
/// std::out_of_range when i is not a valid position.
ScoreBreakdown context_score(const NgramModel& model,
                             std::span<const std::string> sentence_tokens,
                             std::size_t i, std::string_view candidate,
                             const Weights& weights);

/// Scores and orders an explicit candidate list (identity candidates with
/// edit distance 0 are dropped). Sort order: total descending, then lower
/// edit distance, higher unigram count, lexicographically smaller word.
std::vector<ScoredSuggestion> rank_candidates(const NgramModel& model,
                                              std::vector<Candidate> candidates,
                                              std::span<const std::string> sentence_tokens,
                                              std::size_t i, const Weights& weights,
                                              std::size_t k);

/// Generates candidates for the token at position i and ranks them, returning
/// at most k suggestions.
std::vector<ScoredSuggestion> rank(const NgramModel& model, const DeleteIndex& index,
                                   std::span<const std::string> sentence_tokens,
                                   std::size_t i, const Weights& weights, std::size_t k);

} // namespace ctxspell

#endif // CTXSPELL_RANKER_HPP
