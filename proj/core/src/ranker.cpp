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

#include "ctxspell/ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctxspell {

namespace {

// c(words..., last) / c(words...) with the unknown-word and empty-denominator
// cases collapsing to 0.
double window_prob(const NgramModel& model, std::span<const std::string> sentence,
                   std::ptrdiff_t begin, std::ptrdiff_t end, // [begin, end) window
                   std::ptrdiff_t i, std::string_view candidate) {
    const auto n = static_cast<std::ptrdiff_t>(sentence.size());
    if (begin < 0 || end > n) return 0.0;

    const auto token_at = [&](std::ptrdiff_t pos) -> std::string_view {
        return pos == i ? candidate : std::string_view(sentence[static_cast<std::size_t>(pos)]);
    };

    std::uint64_t num = 0, den = 0;
    switch (end - begin) {
        case 2:
            num = model.bigram_count(token_at(begin), token_at(begin + 1));
            den = model.unigram_count(token_at(begin));
            break;
        case 3:
            num = model.trigram_count(token_at(begin), token_at(begin + 1),
                                      token_at(begin + 2));
            den = model.bigram_count(token_at(begin), token_at(begin + 1));
            break;
        default:
            return 0.0;
    }
    if (den == 0) return 0.0;
    return static_cast<double>(num) / static_cast<double>(den);
}

} // namespace

ScoreBreakdown context_score(const NgramModel& model,
                             std::span<const std::string> sentence_tokens,
                             std::size_t i, std::string_view candidate,
                             const Weights& weights) {
    if (i >= sentence_tokens.size())
        throw std::out_of_range("context_score: position " + std::to_string(i) +
                                " outside sentence of " +
                                std::to_string(sentence_tokens.size()) + " tokens");

    const auto pos = static_cast<std::ptrdiff_t>(i);
    ScoreBreakdown score;

    const std::uint64_t uni = model.unigram_count(candidate);
    score.s1 = weights.w1 * (model.total_unigrams() == 0
                                 ? 0.0
                                 : static_cast<double>(uni) /
                                       static_cast<double>(model.total_unigrams()));

    // both bigram windows containing position i
    double s2 = 0;
    for (std::ptrdiff_t j = 0; j <= 1; ++j)
        s2 += window_prob(model, sentence_tokens, pos + j - 1, pos + j + 1, pos, candidate);
    score.s2 = weights.w2 * s2;

    // all three trigram windows containing position i
    double s3 = 0;
    for (std::ptrdiff_t j = 0; j <= 2; ++j)
        s3 += window_prob(model, sentence_tokens, pos + j - 2, pos + j + 1, pos, candidate);
    score.s3 = weights.w3 * s3;

    score.total = score.s1 + score.s2 + score.s3;
    return score;
}

std::vector<ScoredSuggestion> rank_candidates(const NgramModel& model,
                                              std::vector<Candidate> candidates,
                                              std::span<const std::string> sentence_tokens,
                                              std::size_t i, const Weights& weights,
                                              std::size_t k) {
    std::vector<ScoredSuggestion> scored;
    scored.reserve(candidates.size());
    for (auto& candidate : candidates) {
        if (candidate.edit_distance == 0) continue; // the token itself
        const ScoreBreakdown s =
            context_score(model, sentence_tokens, i, candidate.word, weights);
        scored.push_back(ScoredSuggestion{std::move(candidate.word),
                                          candidate.edit_distance, s.s1, s.s2, s.s3,
                                          s.total, 0});
    }

    std::sort(scored.begin(), scored.end(),
              [&](const ScoredSuggestion& a, const ScoredSuggestion& b) {
                  if (a.total != b.total) return a.total > b.total;
                  if (a.edit_distance != b.edit_distance)
                      return a.edit_distance < b.edit_distance;
                  const auto ca = model.unigram_count(a.word);
                  const auto cb = model.unigram_count(b.word);
                  if (ca != cb) return ca > cb;
                  return a.word < b.word;
              });

    if (scored.size() > k) scored.resize(k);
    for (std::size_t r = 0; r < scored.size(); ++r)
        scored[r].rank = static_cast<std::uint32_t>(r + 1);
    return scored;
}

std::vector<ScoredSuggestion> rank(const NgramModel& model, const DeleteIndex& index,
                                   std::span<const std::string> sentence_tokens,
                                   std::size_t i, const Weights& weights,
                                   std::size_t k) {
    if (i >= sentence_tokens.size())
        throw std::out_of_range("rank: position outside sentence");
    return rank_candidates(model, index.candidates(model, sentence_tokens[i]),
                           sentence_tokens, i, weights, k);
}

} // namespace ctxspell
