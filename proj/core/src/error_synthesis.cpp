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

#include "ctxspell/error_synthesis.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "ctxspell/errors.hpp"
#include "ctxspell/levenshtein.hpp"
#include "ctxspell/tokenizer.hpp"
#include "ctxspell/unicode.hpp"

namespace ctxspell {

namespace {

constexpr unsigned kRetryBudget = 100;

// A word may carry a planted error when the correction is recoverable at all:
// letters only, length >= 3, and present in the dictionary.
bool is_eligible_target(const NgramModel& model, const LanguageProfile& profile,
                        const std::string& token) {
    return is_checkable_word(token, profile) && model.contains(token);
}

std::vector<std::size_t> eligible_positions(const NgramModel& model,
                                            const LanguageProfile& profile,
                                            const Sentence& sentence) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sentence.size(); ++i)
        if (is_eligible_target(model, profile, sentence[i])) out.push_back(i);
    return out;
}

// The final corrupted form must be a real, detectable non-word at the target
// distance.
bool acceptable_corruption(const NgramModel& model, const std::u32string& original,
                           const std::u32string& corrupted, unsigned distance) {
    if (corrupted.size() < 3) return false;
    if (corrupted == original) return false;
    if (levenshtein(original, corrupted) != distance) return false;
    return !model.contains(encode_utf8(corrupted));
}

SynthRecord make_record(const Sentence& sentence, std::size_t target,
                        const std::u32string& corrupted, Generator generator,
                        unsigned distance, std::uint64_t seed) {
    SynthRecord record;
    record.sentence_tokens = sentence;
    record.target_index = target;
    record.original = sentence[target];
    record.corrupted = encode_utf8(corrupted);
    record.sentence_tokens[target] = record.corrupted;
    record.generator = generator;
    record.edit_distance = static_cast<std::uint8_t>(distance);
    record.seed = seed;
    return record;
}

// One uniform random edit in place.
void apply_random_edit(std::u32string& word, const LanguageProfile& profile, Rng& rng) {
    const auto& letters = profile.letters();
    const auto random_letter = [&] { return letters[rng.index(letters.size())]; };
    switch (rng.below(3)) {
        case 0: { // insert
            const std::size_t pos = rng.index(word.size() + 1);
            word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), random_letter());
            break;
        }
        case 1: { // delete
            if (word.empty()) break;
            word.erase(rng.index(word.size()), 1);
            break;
        }
        default: { // substitute
            if (word.empty()) break;
            word[rng.index(word.size())] = random_letter();
            break;
        }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// CharBigramTable
// ---------------------------------------------------------------------------

CharBigramTable CharBigramTable::build(const NgramModel& model,
                                       const LanguageProfile& profile,
                                       bool token_weighted) {
    if (model.vocab_size() == 0)
        throw BuildError("cannot build a character bigram table from an empty dictionary");

    std::map<char32_t, std::map<char32_t, std::uint64_t>> counts;
    bool any = false;
    for (WordId id = 0; id < model.vocab_size(); ++id) {
        const std::u32string word = decode_utf8(model.word(id));
        const std::uint64_t weight = token_weighted ? model.unigram_count(id) : 1;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (!profile.is_letter(word[i]) || !profile.is_letter(word[i + 1])) continue;
            counts[word[i]][word[i + 1]] += weight;
            any = true;
        }
    }
    if (!any)
        throw BuildError("dictionary contains no consecutive letter pairs");

    CharBigramTable table;
    table.offsets_.push_back(0);
    for (const auto& [first, successors] : counts) {
        std::uint64_t total = 0;
        for (const auto& [_, n] : successors) total += n;
        table.firsts_.push_back(first);
        for (const auto& [second, n] : successors)
            table.pairs_.emplace_back(second,
                                      static_cast<double>(n) / static_cast<double>(total));
        table.offsets_.push_back(table.pairs_.size());
    }
    return table;
}

std::span<const std::pair<char32_t, double>> CharBigramTable::successors(
    char32_t first) const {
    const auto it = std::lower_bound(firsts_.begin(), firsts_.end(), first);
    if (it == firsts_.end() || *it != first) return {};
    const std::size_t k = static_cast<std::size_t>(it - firsts_.begin());
    return {pairs_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

std::size_t CharBigramTable::alternative_count(char32_t first, char32_t exclude) const {
    std::size_t n = 0;
    for (const auto& [second, _] : successors(first))
        if (second != exclude) ++n;
    return n;
}

char32_t CharBigramTable::sample(char32_t first, char32_t exclude, Rng& rng) const {
    const auto span = successors(first);
    double total = 0;
    for (const auto& [second, p] : span)
        if (second != exclude) total += p;
    if (total <= 0) return 0;
    double r = rng.unit() * total;
    char32_t last = 0;
    for (const auto& [second, p] : span) {
        if (second == exclude) continue;
        last = second;
        r -= p;
        if (r < 0) return second;
    }
    return last; // floating-point slack lands on the final alternative
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

const char* to_string(Generator generator) {
    switch (generator) {
        case Generator::random: return "random";
        case Generator::swap: return "swap";
        case Generator::bigram: return "bigram";
    }
    return "?";
}

Generator generator_from_string(std::string_view name) {
    if (name == "random") return Generator::random;
    if (name == "swap") return Generator::swap;
    if (name == "bigram") return Generator::bigram;
    throw Error("unknown generator: " + std::string(name));
}

std::optional<SynthRecord> synth_random(const NgramModel& model,
                                        const LanguageProfile& profile,
                                        const Sentence& sentence, unsigned distance,
                                        Rng& rng) {
    const auto targets = eligible_positions(model, profile, sentence);
    if (targets.empty()) return std::nullopt;

    for (unsigned attempt = 0; attempt < kRetryBudget; ++attempt) {
        const std::size_t target = targets[rng.index(targets.size())];
        const std::u32string original = decode_utf8(sentence[target]);
        std::u32string corrupted = original;
        for (unsigned e = 0; e < distance; ++e) apply_random_edit(corrupted, profile, rng);
        if (acceptable_corruption(model, original, corrupted, distance))
            return make_record(sentence, target, corrupted, Generator::random, distance,
                               rng.seed());
    }
    return std::nullopt;
}

std::optional<SynthRecord> synth_swap(const NgramModel& model,
                                      const LanguageProfile& profile,
                                      const Sentence& sentence, Rng& rng) {
    const auto targets = eligible_positions(model, profile, sentence);
    if (targets.empty()) return std::nullopt;

    for (unsigned attempt = 0; attempt < kRetryBudget; ++attempt) {
        const std::size_t target = targets[rng.index(targets.size())];
        const std::u32string original = decode_utf8(sentence[target]);
        std::vector<std::size_t> swappable;
        for (std::size_t i = 0; i + 1 < original.size(); ++i)
            if (original[i] != original[i + 1]) swappable.push_back(i);
        if (swappable.empty()) continue; // e.g. "aaa": a swap is the identity
        const std::size_t pos = swappable[rng.index(swappable.size())];
        std::u32string corrupted = original;
        std::swap(corrupted[pos], corrupted[pos + 1]);
        // an unequal adjacent swap is always plain-Levenshtein distance 2
        if (acceptable_corruption(model, original, corrupted, 2))
            return make_record(sentence, target, corrupted, Generator::swap, 2,
                               rng.seed());
    }
    return std::nullopt;
}

std::optional<SynthRecord> synth_bigram(const NgramModel& model,
                                        const LanguageProfile& profile,
                                        const CharBigramTable& table,
                                        const Sentence& sentence, unsigned distance,
                                        Rng& rng) {
    const auto targets = eligible_positions(model, profile, sentence);
    if (targets.empty()) return std::nullopt;

    for (unsigned attempt = 0; attempt < kRetryBudget; ++attempt) {
        const std::size_t target = targets[rng.index(targets.size())];
        const std::u32string original = decode_utf8(sentence[target]);
        std::u32string corrupted = original;
        bool ok = true;
        for (unsigned e = 0; e < distance && ok; ++e) {
            // positions whose first character offers a real substitute
            std::vector<std::size_t> positions;
            for (std::size_t i = 0; i + 1 < corrupted.size(); ++i)
                if (table.alternative_count(corrupted[i], corrupted[i + 1]) > 0)
                    positions.push_back(i);
            if (positions.empty()) {
                ok = false;
                break;
            }
            const std::size_t pos = positions[rng.index(positions.size())];
            corrupted[pos + 1] = table.sample(corrupted[pos], corrupted[pos + 1], rng);
        }
        if (ok && acceptable_corruption(model, original, corrupted, distance))
            return make_record(sentence, target, corrupted, Generator::bigram, distance,
                               rng.seed());
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dataset assembly
// ---------------------------------------------------------------------------

std::vector<PlanEntry> paper_mix_plan(std::uint64_t unit) {
    return {
        PlanEntry{Generator::random, 1, unit},
        PlanEntry{Generator::random, 2, unit},
        PlanEntry{Generator::swap, 2, unit},
        PlanEntry{Generator::bigram, 1, 2 * unit},
        PlanEntry{Generator::bigram, 2, 2 * unit},
    };
}

std::vector<SynthRecord> build_dataset(const NgramModel& model,
                                       const LanguageProfile& profile,
                                       const SentenceStream& sentences,
                                       std::span<const PlanEntry> plan,
                                       std::uint64_t seed) {
    // Keep only sentences the checker finds clean and that contain a target.
    std::vector<const Sentence*> clean;
    for (const auto& sentence : sentences) {
        bool dirty = false;
        bool has_target = false;
        for (const auto& token : sentence) {
            if (!is_checkable_word(token, profile)) continue;
            if (model.contains(token))
                has_target = true;
            else
                dirty = true;
        }
        if (!dirty && has_target) clean.push_back(&sentence);
    }

    std::optional<CharBigramTable> table;
    for (const auto& entry : plan) {
        if (entry.generator == Generator::bigram && !table) {
            table = CharBigramTable::build(model, profile);
            break;
        }
    }

    std::vector<SynthRecord> records;
    std::string failure;
    for (std::size_t e = 0; e < plan.size(); ++e) {
        const PlanEntry& entry = plan[e];
        std::uint64_t made = 0;
        if (!clean.empty()) {
            // cycle the clean pool, starting at an entry-specific offset
            const std::uint64_t entry_seed = Rng::derive(seed, e);
            std::size_t cursor = static_cast<std::size_t>(entry_seed % clean.size());
            const std::uint64_t attempt_budget =
                std::max<std::uint64_t>(entry.count * 50, 1000);
            for (std::uint64_t attempt = 0;
                 attempt < attempt_budget && made < entry.count; ++attempt) {
                const Sentence& sentence = *clean[cursor];
                cursor = (cursor + 1) % clean.size();
                Rng rng(Rng::derive(entry_seed, attempt));
                std::optional<SynthRecord> record;
                switch (entry.generator) {
                    case Generator::random:
                        record = synth_random(model, profile, sentence, entry.distance, rng);
                        break;
                    case Generator::swap:
                        record = synth_swap(model, profile, sentence, rng);
                        break;
                    case Generator::bigram:
                        record = synth_bigram(model, profile, *table, sentence,
                                              entry.distance, rng);
                        break;
                }
                if (record) {
                    records.push_back(std::move(*record));
                    ++made;
                }
            }
        }
        if (made < entry.count) {
            failure += std::string(failure.empty() ? "" : "; ") + to_string(entry.generator) +
                       " ed" + std::to_string(entry.distance) + ": " +
                       std::to_string(made) + "/" + std::to_string(entry.count);
        }
    }
    if (!failure.empty())
        throw DatasetError("insufficient clean sentences; achieved " + failure);
    return records;
}

// ---------------------------------------------------------------------------
// JSONL persistence
// ---------------------------------------------------------------------------

void save_dataset(std::span<const SynthRecord> records,
                  const std::filesystem::path& dataset_path,
                  const std::filesystem::path& manifest_path,
                  std::span<const PlanEntry> plan, std::uint64_t seed) {
    std::ofstream out(dataset_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write dataset file: " + dataset_path.string());
    for (const auto& record : records) {
        const nlohmann::json j = {
            {"sentence_tokens", record.sentence_tokens},
            {"target_index", record.target_index},
            {"original", record.original},
            {"corrupted", record.corrupted},
            {"generator", to_string(record.generator)},
            {"edit_distance", record.edit_distance},
            {"seed", record.seed},
        };
        out << j.dump() << '\n';
    }
    if (!out) throw IoError("failed writing dataset file: " + dataset_path.string());

    nlohmann::json plan_json = nlohmann::json::array();
    for (const auto& entry : plan)
        plan_json.push_back({{"generator", to_string(entry.generator)},
                             {"distance", entry.distance},
                             {"count", entry.count}});
    const nlohmann::json manifest = {
        {"seed", seed},
        {"plan", std::move(plan_json)},
        {"records", records.size()},
    };
    std::ofstream mout(manifest_path, std::ios::binary | std::ios::trunc);
    if (!mout) throw IoError("cannot write manifest file: " + manifest_path.string());
    mout << manifest.dump(2) << '\n';
}

std::vector<SynthRecord> load_dataset(const std::filesystem::path& dataset_path) {
    std::ifstream in(dataset_path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset file: " + dataset_path.string());
    std::vector<SynthRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw DatasetError("dataset line " + std::to_string(line_no) +
                               " is not valid JSON: " + e.what());
        }
        SynthRecord record;
        record.sentence_tokens = j.at("sentence_tokens").get<Sentence>();
        record.target_index = j.at("target_index").get<std::size_t>();
        record.original = j.at("original").get<std::string>();
        record.corrupted = j.at("corrupted").get<std::string>();
        record.generator = generator_from_string(j.at("generator").get<std::string>());
        record.edit_distance = j.at("edit_distance").get<std::uint8_t>();
        record.seed = j.at("seed").get<std::uint64_t>();
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace ctxspell
