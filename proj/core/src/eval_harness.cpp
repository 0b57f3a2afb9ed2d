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

#include "ctxspell/eval_harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "ctxspell/errors.hpp"
#include "ctxspell/tokenizer.hpp"

namespace ctxspell {

namespace {

constexpr int kCutoffs[] = {1, 3, 5, 10};

/// Rank tallies that finalize into a MetricRow.
struct MetricAccum {
    std::uint64_t n = 0;
    std::uint64_t hits[4] = {0, 0, 0, 0};
    double rr_sum = 0;
    std::uint64_t undetected = 0;

    // rank 0 means "not found within the cutoff"
    void add(std::uint64_t rank, bool detected) {
        ++n;
        if (!detected) ++undetected;
        if (rank > 0) {
            for (int c = 0; c < 4; ++c)
                if (rank <= static_cast<std::uint64_t>(kCutoffs[c])) ++hits[c];
            rr_sum += 1.0 / static_cast<double>(rank);
        }
    }

    MetricRow finalize() const {
        MetricRow row;
        row.n = n;
        row.undetected = undetected;
        if (n > 0) {
            for (int c = 0; c < 4; ++c)
                row.p_at[kCutoffs[c]] =
                    100.0 * static_cast<double>(hits[c]) / static_cast<double>(n);
            row.mrr = 100.0 * rr_sum / static_cast<double>(n);
        } else {
            for (int c : kCutoffs) row.p_at[c] = 0;
        }
        return row;
    }
};

std::string join_tokens(const Sentence& tokens) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) text += ' ';
        text += tokens[i];
    }
    return text;
}

std::uint64_t rank_of(std::span<const ScoredSuggestion> suggestions,
                      std::string_view expected) {
    for (const auto& s : suggestions)
        if (s.word == expected) return s.rank;
    return 0;
}

nlohmann::json metric_row_json(const MetricRow& row) {
    nlohmann::json p_at;
    for (const auto& [k, v] : row.p_at) p_at["p@" + std::to_string(k)] = v;
    return {{"n", row.n}, {"p_at", p_at}, {"mrr", row.mrr}, {"undetected", row.undetected}};
}

} // namespace

EvalResult evaluate_synthetic(const NgramModel& model, const DeleteIndex& index,
                              const LanguageProfile& profile,
                              std::span<const SynthRecord> dataset,
                              const Weights& weights, std::size_t k_max) {
    if (dataset.empty()) throw Error("cannot evaluate an empty dataset");

    MetricAccum overall;
    std::map<std::string, MetricAccum> by_generator;
    std::map<int, MetricAccum> by_distance;
    std::vector<StageTimings> timings;
    timings.reserve(dataset.size());

    for (const auto& record : dataset) {
        SpellReport report = check_sentence(model, index, profile,
                                            join_tokens(record.sentence_tokens),
                                            weights, k_max);
        timings.push_back(report.timings);

        // The sentence is pure word/number tokens, so report token indices
        // coincide with sentence_tokens positions.
        const SpellError* hit = nullptr;
        for (const auto& error : report.errors)
            if (error.token_index == record.target_index) {
                hit = &error;
                break;
            }

        const bool detected = hit != nullptr;
        const std::uint64_t rank = detected ? rank_of(hit->suggestions, record.original) : 0;
        overall.add(rank, detected);
        by_generator[to_string(record.generator)].add(rank, detected);
        by_distance[record.edit_distance].add(rank, detected);
    }

    EvalResult result;
    result.overall = overall.finalize();
    for (const auto& [key, accum] : by_generator)
        result.by_generator[key] = accum.finalize();
    for (const auto& [key, accum] : by_distance)
        result.by_distance[key] = accum.finalize();
    result.latency = aggregate_timings(timings);
    return result;
}

std::vector<MisspellingPair> load_pairs(const std::filesystem::path& path,
                                        const LanguageProfile& profile) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open pairs file: " + path.string());
    std::vector<MisspellingPair> pairs;
    std::string line;
    const auto single_token = [&](const std::string& text) {
        const auto tokens = tokenize(text, profile);
        return tokens.size() == 1 && tokens[0].kind == TokenKind::word &&
               tokens[0].text == text;
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        MisspellingPair pair{line.substr(0, tab), line.substr(tab + 1)};
        // multi-token entries are dropped
        if (single_token(pair.misspelling) && single_token(pair.correction))
            pairs.push_back(std::move(pair));
    }
    return pairs;
}

PairsResult evaluate_pairs(const NgramModel& model, const DeleteIndex& index,
                           std::span<const MisspellingPair> pairs, PairsMode mode,
                           const Weights& weights, std::size_t k_max) {
    if (pairs.empty()) throw Error("cannot evaluate an empty pairs list");

    const Weights effective = mode == PairsMode::unigram_only
                                  ? Weights{weights.w1, 0.0, 0.0}
                                  : weights;

    PairsResult result;
    result.n_pairs = pairs.size();
    std::uint64_t corrections_known = 0;
    std::uint64_t misspellings_unknown = 0;
    MetricAccum accum;

    for (const auto& pair : pairs) {
        if (model.contains(pair.correction)) ++corrections_known;
        const bool detected = !model.contains(pair.misspelling);
        if (detected) ++misspellings_unknown;

        std::uint64_t found_rank = 0;
        if (detected) {
            const std::vector<std::string> sentence{pair.misspelling};
            const auto suggestions = rank(model, index, sentence, 0, effective, k_max);
            found_rank = rank_of(suggestions, pair.correction);
        }
        accum.add(found_rank, detected);
    }

    result.pct_corrections_known =
        100.0 * static_cast<double>(corrections_known) / static_cast<double>(pairs.size());
    result.pct_misspellings_unknown =
        100.0 * static_cast<double>(misspellings_unknown) /
        static_cast<double>(pairs.size());
    result.ranking = accum.finalize();
    return result;
}

FalsePositiveResult evaluate_false_positives(const NgramModel& model,
                                             const LanguageProfile& profile,
                                             const SentenceStream& clean_corpus,
                                             std::size_t top_n) {
    if (clean_corpus.empty()) throw Error("cannot evaluate an empty corpus");

    FalsePositiveResult result;
    std::unordered_map<std::string, std::uint64_t> unknown;
    for (const auto& sentence : clean_corpus) {
        for (const auto& token : sentence) {
            if (!is_checkable_word(token, profile)) continue;
            ++result.total_words;
            if (model.contains(token))
                ++result.detected_known;
            else
                ++unknown[token];
        }
    }
    if (result.total_words > 0)
        result.percent = 100.0 * static_cast<double>(result.detected_known) /
                         static_cast<double>(result.total_words);

    std::vector<std::pair<std::string, std::uint64_t>> ranked(unknown.begin(),
                                                              unknown.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > top_n) ranked.resize(top_n);
    result.top_unknown = std::move(ranked);
    return result;
}

WeightGrid powers_of_ten_grid(int max_exponent) {
    WeightGrid grid;
    grid.w1.clear();
    grid.w2.clear();
    grid.w3.clear();
    for (int e = 0; e <= max_exponent; ++e) {
        const double v = std::pow(10.0, e);
        grid.w1.push_back(v);
        grid.w2.push_back(v);
        grid.w3.push_back(v);
    }
    return grid;
}

SweepResult sweep_weights(const NgramModel& model, const DeleteIndex& index,
                          const LanguageProfile& profile,
                          std::span<const SynthRecord> dataset, const WeightGrid& grid) {
    if (dataset.empty()) throw Error("cannot sweep over an empty dataset");

    // Axis sweep around the (1,1,1) base, deduplicated.
    std::vector<Weights> configs;
    const auto push_config = [&](Weights w) {
        for (const auto& existing : configs)
            if (existing.w1 == w.w1 && existing.w2 == w.w2 && existing.w3 == w.w3)
                return;
        configs.push_back(w);
    };
    for (double v : grid.w1) push_config(Weights{v, 1, 1});
    for (double v : grid.w2) push_config(Weights{1, v, 1});
    for (double v : grid.w3) push_config(Weights{1, 1, v});

    // Candidate generation does not depend on the weights; do it once.
    struct Prepared {
        Sentence sentence;
        std::size_t target = 0;
        std::string original;
        std::vector<Candidate> candidates;
        bool detected = false;
    };
    std::vector<Prepared> prepared;
    prepared.reserve(dataset.size());
    for (const auto& record : dataset) {
        Prepared p;
        p.sentence = record.sentence_tokens;
        p.target = record.target_index;
        p.original = record.original;
        p.detected = is_checkable_word(record.corrupted, profile) &&
                     !model.contains(record.corrupted);
        if (p.detected) p.candidates = index.candidates(model, record.corrupted);
        prepared.push_back(std::move(p));
    }

    SweepResult result;
    for (const auto& weights : configs) {
        MetricAccum accum;
        for (const auto& p : prepared) {
            std::uint64_t rank = 0;
            if (p.detected) {
                const auto suggestions =
                    rank_candidates(model, p.candidates, p.sentence, p.target, weights, 10);
                rank = rank_of(suggestions, p.original);
            }
            accum.add(rank, p.detected);
        }
        result.rows.push_back(SweepRow{weights, accum.finalize().p_at.at(1)});
    }

    result.best = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i)
        if (result.rows[i].p1 > result.rows[result.best].p1) result.best = i;
    return result;
}

std::vector<BenchRow> bench_suggesters(
    const NgramModel& model, const DeleteIndex& index,
    const std::map<std::size_t, std::vector<std::string>>& tokens_by_length,
    std::span<const SuggestMethod> methods) {
    using Clock = std::chrono::steady_clock;

    const unsigned max_distance = index.max_distance();
    const auto wants = [&](SuggestMethod m) {
        return std::find(methods.begin(), methods.end(), m) != methods.end();
    };
    std::optional<TrieSuggester> trie;
    std::optional<DawgSuggester> dawg;
    std::optional<BkTreeSuggester> bktree;
    if (wants(SuggestMethod::trie)) trie.emplace(model);
    if (wants(SuggestMethod::dawg)) dawg.emplace(model);
    if (wants(SuggestMethod::bktree)) bktree.emplace(model);

    const auto run = [&](SuggestMethod method,
                         const std::string& token) -> std::vector<Candidate> {
        switch (method) {
            case SuggestMethod::naive:
                return naive_candidates(model, token, max_distance);
            case SuggestMethod::trie:
                return trie->candidates(model, token, max_distance);
            case SuggestMethod::dawg:
                return dawg->candidates(model, token, max_distance);
            case SuggestMethod::bktree:
                return bktree->candidates(model, token, max_distance);
            case SuggestMethod::sda:
                return index.candidates(model, token);
        }
        throw Error("unreachable suggest method");
    };

    const auto as_set = [](std::vector<Candidate> cands) {
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
        return cands;
    };

    std::vector<BenchRow> rows;
    for (const auto& [length, tokens] : tokens_by_length) {
        std::map<SuggestMethod, std::vector<double>> samples;
        for (const auto& token : tokens) {
            std::optional<std::vector<Candidate>> reference;
            for (const auto method : methods) {
                const auto start = Clock::now();
                auto cands = run(method, token);
                const auto stop = Clock::now();
                samples[method].push_back(
                    std::chrono::duration<double, std::milli>(stop - start).count());
                auto set = as_set(std::move(cands));
                if (!reference) {
                    reference = std::move(set);
                } else if (*reference != set) {
                    throw Error("suggestion methods disagree on token '" + token +
                                "': correctness failure");
                }
            }
        }
        for (const auto method : methods) {
            auto& times = samples[method];
            std::sort(times.begin(), times.end());
            const double mean =
                std::accumulate(times.begin(), times.end(), 0.0) /
                static_cast<double>(times.size());
            const std::size_t p99_idx =
                times.empty() ? 0
                              : std::min(times.size() - 1,
                                         static_cast<std::size_t>(
                                             std::ceil(0.99 * static_cast<double>(times.size()))) -
                                             1);
            rows.push_back(BenchRow{length, method, mean, times.empty() ? 0 : times[p99_idx]});
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

std::string eval_to_json(const EvalResult& result) {
    nlohmann::json by_generator;
    for (const auto& [key, row] : result.by_generator)
        by_generator[key] = metric_row_json(row);
    nlohmann::json by_distance;
    for (const auto& [key, row] : result.by_distance)
        by_distance["ed" + std::to_string(key)] = metric_row_json(row);
    const nlohmann::json j = {
        {"overall", metric_row_json(result.overall)},
        {"by_generator", std::move(by_generator)},
        {"by_distance", std::move(by_distance)},
        {"latency",
         {{"detect_us_per_token", result.latency.detect_us_per_token},
          {"suggest_ms_per_error", result.latency.suggest_ms_per_error},
          {"rank_ms_per_error", result.latency.rank_ms_per_error},
          {"tokens", result.latency.tokens},
          {"errors", result.latency.errors}}},
    };
    return j.dump(2);
}

namespace {

void print_metric_row(std::ostream& out, const std::string& label,
                      const MetricRow& row) {
    out << std::left << std::setw(14) << label << std::right;
    out << std::setw(9) << row.n;
    out << std::fixed << std::setprecision(2);
    for (const int k : kCutoffs)
        out << std::setw(9) << row.p_at.at(k);
    out << std::setw(9) << row.mrr << '\n';
}

} // namespace

void print_eval_table(std::ostream& out, const EvalResult& result) {
    out << std::left << std::setw(14) << "slice" << std::right << std::setw(9)
        << "samples" << std::setw(9) << "P@1" << std::setw(9) << "P@3" << std::setw(9)
        << "P@5" << std::setw(9) << "P@10" << std::setw(9) << "MRR" << '\n';
    print_metric_row(out, "overall", result.overall);
    for (const auto& [key, row] : result.by_generator) print_metric_row(out, key, row);
    for (const auto& [key, row] : result.by_distance)
        print_metric_row(out, "ed" + std::to_string(key), row);
    out << std::fixed << std::setprecision(3);
    out << "latency: detect " << result.latency.detect_us_per_token
        << " us/token, suggest " << result.latency.suggest_ms_per_error
        << " ms/error, rank " << result.latency.rank_ms_per_error << " ms/error ("
        << result.latency.tokens << " tokens, " << result.latency.errors
        << " errors)\n";
}

std::string pairs_to_json(const PairsResult& result) {
    const nlohmann::json j = {
        {"n_pairs", result.n_pairs},
        {"pct_corrections_known", result.pct_corrections_known},
        {"pct_misspellings_unknown", result.pct_misspellings_unknown},
        {"ranking", metric_row_json(result.ranking)},
    };
    return j.dump(2);
}

std::string fp_to_json(const FalsePositiveResult& result) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [token, count] : result.top_unknown)
        top.push_back({{"token", token}, {"count", count}});
    const nlohmann::json j = {
        {"total_words", result.total_words},
        {"detected_known", result.detected_known},
        {"percent", result.percent},
        {"top_unknown", std::move(top)},
    };
    return j.dump(2);
}

std::string bench_to_tsv(std::span<const BenchRow> rows) {
    std::ostringstream out;
    out << "token_length\tmethod\tmean_ms\tp99_ms\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& row : rows)
        out << row.token_length << '\t' << to_string(row.method) << '\t' << row.mean_ms
            << '\t' << row.p99_ms << '\n';
    return out.str();
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "w1,w2,w3,p_at_1\n";
    char buf[160];
    for (const auto& row : result.rows) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.4f\n", row.weights.w1,
                      row.weights.w2, row.weights.w3, row.p1);
        out += buf;
    }
    return out;
}

} // namespace ctxspell
