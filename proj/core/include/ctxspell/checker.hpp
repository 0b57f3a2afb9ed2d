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

#ifndef CTXSPELL_CHECKER_HPP
#define CTXSPELL_CHECKER_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ctxspell/language_profile.hpp"
#include "ctxspell/ngram_model.hpp"
#include "ctxspell/ranker.hpp"
#include "ctxspell/suggester.hpp"
#include "ctxspell/tokenizer.hpp"

namespace ctxspell {

struct SpellError {
    std::size_t token_index = 0; // index into SpellReport::tokens
    std::string token;
    std::vector<ScoredSuggestion> suggestions;
};

/// Monotonic-clock stage timings, normalized the way the latency tables
/// report them: detection per token, suggestion and ranking per error.
struct StageTimings {
    double detect_us_per_token = 0;
    double suggest_ms_per_error = 0;
    double rank_ms_per_error = 0;
    std::uint64_t tokens = 0;
    std::uint64_t errors = 0;
};

/// Token-weighted (detection) and error-weighted (suggest/rank) mean of
/// per-sentence timings.
StageTimings aggregate_timings(std::span<const StageTimings> parts);

struct SpellReport {
    std::string text;
    std::vector<Token> tokens;
    std::vector<SpellError> errors;
    StageTimings timings;
};

/// Tokenizes the sentence, flags unknown words (word kind, letters only,
/// length >= 3), and attaches ranked corrections for each. Numbers, foreign
/// characters, short words and letter-digit mixes are never flagged.
SpellReport check_sentence(const NgramModel& model, const DeleteIndex& index,
                           const LanguageProfile& profile, std::string_view text,
                           const Weights& weights, std::size_t k);

/// Per-line application of check_sentence over a stream; reports are emitted
/// in input order and memory stays bounded by the longest line.
void check_document(const NgramModel& model, const DeleteIndex& index,
                    const LanguageProfile& profile, std::istream& lines,
                    const Weights& weights, std::size_t k,
                    const std::function<void(SpellReport&&)>& sink);

/// One JSON object per sentence, shaped
/// {"text":…, "errors":[{"index":…, "token":…, "suggestions":[…]}], "timing":{…}}.
std::string report_to_json(const SpellReport& report);

} // namespace ctxspell

#endif // CTXSPELL_CHECKER_HPP
