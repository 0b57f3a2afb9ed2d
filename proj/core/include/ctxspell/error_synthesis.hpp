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

#ifndef CTXSPELL_ERROR_SYNTHESIS_HPP
#define CTXSPELL_ERROR_SYNTHESIS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctxspell/corpus_ingest.hpp"
#include "ctxspell/language_profile.hpp"
#include "ctxspell/ngram_model.hpp"
#include "ctxspell/rng.hpp"

namespace ctxspell {

/// Successor-character distribution estimated from the dictionary: for each
/// letter, the probability of each following letter over all consecutive
/// letter pairs in dictionary words. Type-weighted by default (each word
/// counted once).
class CharBigramTable {
  public:
    static CharBigramTable build(const NgramModel& model, const LanguageProfile& profile,
                                 bool token_weighted = false);

    /// Sorted (successor, probability) pairs for `first`; empty when unseen.
    std::span<const std::pair<char32_t, double>> successors(char32_t first) const;

    /// Number of successors of `first` distinct from `exclude`.
    std::size_t alternative_count(char32_t first, char32_t exclude) const;

    /// Samples a successor of `first` other than `exclude`, proportionally to
    /// the renormalized probabilities. Returns 0 when no alternative exists.
    char32_t sample(char32_t first, char32_t exclude, Rng& rng) const;

  private:
    std::vector<char32_t> firsts_; // sorted
    std::vector<std::size_t> offsets_;
    std::vector<std::pair<char32_t, double>> pairs_;
};

enum class Generator { random, swap, bigram };

const char* to_string(Generator generator);
Generator generator_from_string(std::string_view name);

/// One corrupted sentence: exactly one word replaced by a synthetic non-word.
struct SynthRecord {
    Sentence sentence_tokens; // corrupted sentence (target already replaced)
    std::size_t target_index = 0;
    std::string original;
    std::string corrupted;
    Generator generator = Generator::random;
    std::uint8_t edit_distance = 1;
    std::uint64_t seed = 0; // per-record seed; replaying it regenerates the record
};

/// Uniform random edits: each of `distance` edits picks insert/delete/
/// substitute uniformly, a uniform position, and a uniform profile letter.
/// Returns nullopt (skip) when the sentence has no eligible word or the
/// rejection budget is exhausted.
std::optional<SynthRecord> synth_random(const NgramModel& model,
                                        const LanguageProfile& profile,
                                        const Sentence& sentence, unsigned distance,
                                        Rng& rng);

/// Swaps one uniformly chosen pair of adjacent unequal characters; always
/// records edit distance 2.
std::optional<SynthRecord> synth_swap(const NgramModel& model,
                                      const LanguageProfile& profile,
                                      const Sentence& sentence, Rng& rng);

/// Replaces the second character of a uniformly chosen character bigram with
/// a substitute sampled from the table (never the incumbent), `distance`
/// times.
std::optional<SynthRecord> synth_bigram(const NgramModel& model,
                                        const LanguageProfile& profile,
                                        const CharBigramTable& table,
                                        const Sentence& sentence, unsigned distance,
                                        Rng& rng);

struct PlanEntry {
    Generator generator = Generator::random;
    std::uint8_t distance = 1;
    std::uint64_t count = 0;
};

/// The paper-shaped plan: random ED1/ED2 and swap at `unit` records each,
/// bigram ED1/ED2 at 2*unit each (a 1:1:1:2:2 mix, 7*unit records total).
std::vector<PlanEntry> paper_mix_plan(std::uint64_t unit);

/// Runs every plan entry over the clean sentences, deterministically from the
/// seed. Sentences with detected errors are excluded up front. Throws
/// DatasetError naming the achieved counts when a plan entry cannot be
/// filled.
std::vector<SynthRecord> build_dataset(const NgramModel& model,
                                       const LanguageProfile& profile,
                                       const SentenceStream& sentences,
                                       std::span<const PlanEntry> plan,
                                       std::uint64_t seed);

/// JSON Lines dataset plus a sidecar manifest recording the seed and plan.
void save_dataset(std::span<const SynthRecord> records,
                  const std::filesystem::path& dataset_path,
                  const std::filesystem::path& manifest_path,
                  std::span<const PlanEntry> plan, std::uint64_t seed);
std::vector<SynthRecord> load_dataset(const std::filesystem::path& dataset_path);

} // namespace ctxspell

#endif // CTXSPELL_ERROR_SYNTHESIS_HPP
