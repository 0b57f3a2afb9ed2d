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

#ifndef CTXSPELL_EVAL_HARNESS_HPP
#define CTXSPELL_EVAL_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ctxspell/checker.hpp"
#include "ctxspell/error_synthesis.hpp"

namespace ctxspell {

/// Precision@k and MRR for one slice of records, all as percentages.
/// Records whose planted word never ranks within k_max (or whose error goes
/// undetected) contribute reciprocal rank 0.
struct MetricRow {
    std::uint64_t n = 0;
    std::map<int, double> p_at; // k in {1, 3, 5, 10}
    double mrr = 0;
    std::uint64_t undetected = 0;
};

struct EvalResult {
    MetricRow overall;
    std::map<std::string, MetricRow> by_generator;
    std::map<int, MetricRow> by_distance;
    StageTimings latency;
};

/// Runs the full checker over every corrupted sentence and scores where the
/// planted original lands in the suggestions at the target position.
/// Matching is exact and case-sensitive.
EvalResult evaluate_synthetic(const NgramModel& model, const DeleteIndex& index,
                              const LanguageProfile& profile,
                              std::span<const SynthRecord> dataset,
                              const Weights& weights, std::size_t k_max = 10);

struct MisspellingPair {
    std::string misspelling;
    std::string correction;
};

/// TSV loader (misspelling<TAB>correction, one per line). Entries where
/// either side is not a single token are dropped.
std::vector<MisspellingPair> load_pairs(const std::filesystem::path& path,
                                        const LanguageProfile& profile);

enum class PairsMode { unigram_only, full_context };

struct PairsResult {
    std::uint64_t n_pairs = 0;
    double pct_corrections_known = 0;   // corrections found in the dictionary
    double pct_misspellings_unknown = 0; // misspellings correctly absent
    MetricRow ranking;
};

/// Word-in-isolation evaluation of misspelling/correction lists. In
/// unigram_only mode candidates are scored by weighted unigram probability
/// alone, matching tools that rank without sentence context.
PairsResult evaluate_pairs(const NgramModel& model, const DeleteIndex& index,
                           std::span<const MisspellingPair> pairs, PairsMode mode,
                           const Weights& weights, std::size_t k_max = 10);

struct FalsePositiveResult {
    std::uint64_t total_words = 0;   // checkable tokens seen
    std::uint64_t detected_known = 0;
    double percent = 0;              // 100 * detected_known / total_words
    std::vector<std::pair<std::string, std::uint64_t>> top_unknown;
};

/// Runs detection over a corpus assumed clean; every checkable token should
/// be known, so the unknown remainder estimates the false-positive rate.
FalsePositiveResult evaluate_false_positives(const NgramModel& model,
                                             const LanguageProfile& profile,
                                             const SentenceStream& clean_corpus,
                                             std::size_t top_n = 10);

struct WeightGrid {
    std::vector<double> w1{1.0};
    std::vector<double> w2{1.0};
    std::vector<double> w3{1.0};
};

/// The axis grid used by the weight-importance sweep: one weight varied over
/// powers of ten, the other two pinned at 1.
WeightGrid powers_of_ten_grid(int max_exponent = 8);

struct SweepRow {
    Weights weights;
    double p1 = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t best = 0; // index of the best row
};

/// Evaluates P@1 along each axis of the grid (two weights pinned at 1, one
/// varied), deduplicating repeated configurations. Candidate generation is
/// shared across configurations, so the sweep costs one candidate pass plus
/// one scoring pass per row.
SweepResult sweep_weights(const NgramModel& model, const DeleteIndex& index,
                          const LanguageProfile& profile,
                          std::span<const SynthRecord> dataset, const WeightGrid& grid);

struct BenchRow {
    std::size_t token_length = 0;
    SuggestMethod method = SuggestMethod::sda;
    double mean_ms = 0;
    double p99_ms = 0;
};

/// Times every method on the same non-word tokens, grouped by token length.
/// All methods must return identical candidate sets; a mismatch aborts the
/// benchmark with an Error, because timings of disagreeing implementations
/// mean nothing.
std::vector<BenchRow> bench_suggesters(
    const NgramModel& model, const DeleteIndex& index,
    const std::map<std::size_t, std::vector<std::string>>& tokens_by_length,
    std::span<const SuggestMethod> methods);

// --- reporting ---
std::string eval_to_json(const EvalResult& result);
void print_eval_table(std::ostream& out, const EvalResult& result);
std::string pairs_to_json(const PairsResult& result);
std::string fp_to_json(const FalsePositiveResult& result);
std::string bench_to_tsv(std::span<const BenchRow> rows);
std::string sweep_to_csv(const SweepResult& result);

} // namespace ctxspell

#endif // CTXSPELL_EVAL_HARNESS_HPP
