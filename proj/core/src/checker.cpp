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

#include "ctxspell/checker.hpp"

#include <chrono>
#include <istream>

#include <json.hpp>

#include "ctxspell/errors.hpp"

namespace ctxspell {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point from, Clock::time_point to) {
    return std::chrono::duration<double, std::micro>(to - from).count();
}

} // namespace

StageTimings aggregate_timings(std::span<const StageTimings> parts) {
    StageTimings total;
    double detect_us = 0, suggest_ms = 0, rank_ms = 0;
    for (const auto& p : parts) {
        total.tokens += p.tokens;
        total.errors += p.errors;
        detect_us += p.detect_us_per_token * static_cast<double>(p.tokens);
        suggest_ms += p.suggest_ms_per_error * static_cast<double>(p.errors);
        rank_ms += p.rank_ms_per_error * static_cast<double>(p.errors);
    }
    if (total.tokens > 0) total.detect_us_per_token = detect_us / static_cast<double>(total.tokens);
    if (total.errors > 0) {
        total.suggest_ms_per_error = suggest_ms / static_cast<double>(total.errors);
        total.rank_ms_per_error = rank_ms / static_cast<double>(total.errors);
    }
    return total;
}

SpellReport check_sentence(const NgramModel& model, const DeleteIndex& index,
                           const LanguageProfile& profile, std::string_view text,
                           const Weights& weights, std::size_t k) {
    SpellReport report;
    report.text = std::string(text);
    report.tokens = tokenize(text, profile);

    // The ranking context is the word/number token sequence, the same view of
    // the sentence the model was built from.
    std::vector<std::string> context;
    std::vector<std::size_t> token_index_of_context;
    context.reserve(report.tokens.size());
    for (std::size_t t = 0; t < report.tokens.size(); ++t) {
        const Token& token = report.tokens[t];
        if (token.kind == TokenKind::word || token.kind == TokenKind::number) {
            context.push_back(token.text);
            token_index_of_context.push_back(t);
        }
    }

    // detection pass: pure dictionary membership over checkable words
    std::vector<std::size_t> flagged; // positions within `context`
    const auto detect_start = Clock::now();
    for (std::size_t c = 0; c < context.size(); ++c) {
        const Token& token = report.tokens[token_index_of_context[c]];
        if (is_checkable_word(token, profile) && !model.contains(token.text))
            flagged.push_back(c);
    }
    const auto detect_end = Clock::now();

    report.timings.tokens = report.tokens.size();
    report.timings.errors = flagged.size();
    if (!report.tokens.empty())
        report.timings.detect_us_per_token =
            elapsed_us(detect_start, detect_end) / static_cast<double>(report.tokens.size());

    double suggest_us = 0, rank_us = 0;
    for (const std::size_t c : flagged) {
        const auto suggest_start = Clock::now();
        auto cands = index.candidates(model, context[c]);
        const auto suggest_end = Clock::now();
        auto suggestions =
            rank_candidates(model, std::move(cands), context, c, weights, k);
        const auto rank_end = Clock::now();
        suggest_us += elapsed_us(suggest_start, suggest_end);
        rank_us += elapsed_us(suggest_end, rank_end);
        report.errors.push_back(SpellError{token_index_of_context[c], context[c],
                                           std::move(suggestions)});
    }
    if (!flagged.empty()) {
        report.timings.suggest_ms_per_error =
            suggest_us / 1000.0 / static_cast<double>(flagged.size());
        report.timings.rank_ms_per_error =
            rank_us / 1000.0 / static_cast<double>(flagged.size());
    }
    return report;
}

void check_document(const NgramModel& model, const DeleteIndex& index,
                    const LanguageProfile& profile, std::istream& lines,
                    const Weights& weights, std::size_t k,
                    const std::function<void(SpellReport&&)>& sink) {
    std::string line;
    while (std::getline(lines, line)) {
        sink(check_sentence(model, index, profile, line, weights, k));
    }
    if (lines.bad()) throw IoError("read failure while checking document");
}

std::string report_to_json(const SpellReport& report) {
    nlohmann::json errors = nlohmann::json::array();
    for (const auto& error : report.errors) {
        nlohmann::json suggestions = nlohmann::json::array();
        for (const auto& s : error.suggestions) {
            suggestions.push_back({{"word", s.word},
                                   {"distance", s.edit_distance},
                                   {"score", s.total}});
        }
        errors.push_back({{"index", error.token_index},
                          {"token", error.token},
                          {"suggestions", std::move(suggestions)}});
    }
    const nlohmann::json j = {
        {"text", report.text},
        {"errors", std::move(errors)},
        {"timing",
         {{"detect_us_per_token", report.timings.detect_us_per_token},
          {"suggest_ms_per_error", report.timings.suggest_ms_per_error},
          {"rank_ms_per_error", report.timings.rank_ms_per_error}}},
    };
    return j.dump();
}

} // namespace ctxspell
