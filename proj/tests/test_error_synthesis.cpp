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

#include <doctest.h>

#include <cmath>
#include <map>

#include "ctxspell/error_synthesis.hpp"
#include "ctxspell/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ctxspell;

namespace {

NgramModel word_model(const std::vector<std::string>& words) {
    return ctxspell::testing::dictionary_model(words);
}

void check_record_invariants(const NgramModel& model, const SynthRecord& record,
                             unsigned expected_distance) {
    CHECK(record.edit_distance == expected_distance);
    CHECK(oracle::levenshtein(record.original, record.corrupted) == expected_distance);
    CHECK(decode_utf8(record.corrupted).size() >= 3);
    CHECK_FALSE(model.contains(record.corrupted));
    CHECK(record.corrupted != record.original);
    CHECK(record.sentence_tokens.at(record.target_index) == record.corrupted);
}

} // namespace

TEST_CASE("synthesis: bigram table probabilities by hand") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = word_model({"cat", "car"});
    const CharBigramTable table = CharBigramTable::build(model, en);
    // pairs: c->a twice; a->t once, a->r once
    const auto after_a = table.successors(U'a');
    REQUIRE(after_a.size() == 2);
    CHECK(after_a[0].first == U'r');
    CHECK(after_a[0].second == doctest::Approx(0.5));
    CHECK(after_a[1].first == U't');
    CHECK(after_a[1].second == doctest::Approx(0.5));
    const auto after_c = table.successors(U'c');
    REQUIRE(after_c.size() == 1);
    CHECK(after_c[0].first == U'a');
    CHECK(after_c[0].second == doctest::Approx(1.0));
}

TEST_CASE("synthesis: single-successor table") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = word_model({"aa"});
    const CharBigramTable table = CharBigramTable::build(model, en);
    const auto after_a = table.successors(U'a');
    REQUIRE(after_a.size() == 1);
    CHECK(after_a[0].second == doctest::Approx(1.0));
    // no alternative to 'a' after 'a'
    CHECK(table.alternative_count(U'a', U'a') == 0);
}

TEST_CASE("synthesis: bigram-table sampling matches probabilities (property)") {
    const LanguageProfile en = testing::english_profile();
    // after 'a': b appears 3 times, c once -> P(b)=0.75, P(c)=0.25
    const NgramModel model = word_model({"ab", "abb", "bab", "ac"});
    const CharBigramTable table = CharBigramTable::build(model, en);
    Rng rng(99);
    const int draws = 100000;
    std::map<char32_t, int> counts;
    for (int i = 0; i < draws; ++i) ++counts[table.sample(U'a', 0, rng)];
    const double p_b = table.successors(U'a')[0].first == U'b'
                           ? table.successors(U'a')[0].second
                           : table.successors(U'a')[1].second;
    const double expected = draws * p_b;
    const double sigma = std::sqrt(draws * p_b * (1 - p_b));
    CHECK(std::abs(counts[U'b'] - expected) <= 3 * sigma);
}

TEST_CASE("synthesis: random generator produces verified non-words") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    const Sentence sentence{"the", "cat", "sat"};
    for (const unsigned distance : {1u, 2u}) {
        Rng rng(7 + distance);
        for (int i = 0; i < 50; ++i) {
            const auto record = synth_random(model, en, sentence, distance, rng);
            REQUIRE(record.has_value());
            check_record_invariants(model, *record, distance);
            CHECK(record->generator == Generator::random);
            // the target is one of the eligible (letters-only, len>=3) words
            CHECK((record->original == "the" || record->original == "cat" ||
                   record->original == "sat"));
        }
    }
}

TEST_CASE("synthesis: sentence with no eligible word is skipped") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    Rng rng(1);
    // all words too short / digits / unknown
    CHECK_FALSE(synth_random(model, en, {"go", "42", "xy"}, 1, rng).has_value());
    CHECK_FALSE(synth_swap(model, en, {"go", "42"}, rng).has_value());
}

TEST_CASE("synthesis: swap outputs are always distance 2") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    const Sentence sentence{"the", "cat", "sat"};
    Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        const auto record = synth_swap(model, en, sentence, rng);
        REQUIRE(record.has_value());
        check_record_invariants(model, *record, 2);
        CHECK(record->generator == Generator::swap);
        // the corrupted word is an adjacent transposition of the original
        const std::u32string a = decode_utf8(record->original);
        const std::u32string b = decode_utf8(record->corrupted);
        REQUIRE(a.size() == b.size());
        bool found = false;
        for (std::size_t p = 0; p + 1 < a.size(); ++p) {
            std::u32string swapped = a;
            std::swap(swapped[p], swapped[p + 1]);
            if (swapped == b) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("synthesis: word with no unequal adjacent pair is ineligible for swap") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = word_model({"aaa"});
    Rng rng(5);
    CHECK_FALSE(synth_swap(model, en, {"aaa"}, rng).has_value());
}

TEST_CASE("synthesis: bigram generator replaces bigram successors") {
    const LanguageProfile en = testing::english_profile();
    // enough shared bigrams that every position has alternatives
    const NgramModel model =
        word_model({"heels", "heads", "heaps", "hands", "herds", "stand", "stray"});
    const CharBigramTable table = CharBigramTable::build(model, en);
    const Sentence sentence{"heels", "stand"};
    for (const unsigned distance : {1u, 2u}) {
        Rng rng(11 + distance);
        for (int i = 0; i < 40; ++i) {
            const auto record = synth_bigram(model, en, table, sentence, distance, rng);
            REQUIRE(record.has_value());
            check_record_invariants(model, *record, distance);
            CHECK(record->generator == Generator::bigram);
        }
    }
}

TEST_CASE("synthesis: length-2 words are ineligible targets") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = word_model({"ba"});
    const CharBigramTable table = CharBigramTable::build(model, en);
    Rng rng(13);
    CHECK_FALSE(synth_bigram(model, en, table, {"ba"}, 1, rng).has_value());
}

TEST_CASE("synthesis: empty dictionary cannot build a table") {
    const LanguageProfile en = testing::english_profile();
    // single-letter vocabulary has no letter pairs at all
    SentenceStream stream{{"a", "a"}, {"a"}};
    const NgramModel model = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    CHECK_THROWS_AS(CharBigramTable::build(model, en), BuildError);
}

TEST_CASE("synthesis: dataset plan counts and determinism") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    SentenceStream clean;
    for (int i = 0; i < 200; ++i) clean.push_back({"the", "cat", "sat"});

    const std::vector<PlanEntry> plan{
        PlanEntry{Generator::random, 1, 40},
        PlanEntry{Generator::swap, 2, 25},
        PlanEntry{Generator::bigram, 1, 30},
    };
    const auto first = build_dataset(model, en, clean, plan, 777);
    REQUIRE(first.size() == 95);
    std::size_t n_random = 0, n_swap = 0, n_bigram = 0;
    for (const auto& record : first) {
        switch (record.generator) {
            case Generator::random: ++n_random; break;
            case Generator::swap: ++n_swap; break;
            case Generator::bigram: ++n_bigram; break;
        }
        check_record_invariants(model, record, record.edit_distance);
    }
    CHECK(n_random == 40);
    CHECK(n_swap == 25);
    CHECK(n_bigram == 30);

    const auto second = build_dataset(model, en, clean, plan, 777);
    REQUIRE(second.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].corrupted == second[i].corrupted);
        CHECK(first[i].target_index == second[i].target_index);
        CHECK(first[i].seed == second[i].seed);
    }
}

TEST_CASE("synthesis: sentences with detected errors are excluded") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    // "zzz" is a detectable error, so this sentence is not clean
    SentenceStream tainted{{"the", "cat", "zzz"}};
    const std::vector<PlanEntry> plan{PlanEntry{Generator::random, 1, 1}};
    CHECK_THROWS_AS(build_dataset(model, en, tainted, plan, 1), DatasetError);
}

TEST_CASE("synthesis: partial dataset error names achieved counts") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    const SentenceStream clean; // nothing to draw from
    const std::vector<PlanEntry> plan{PlanEntry{Generator::random, 1, 5}};
    try {
        build_dataset(model, en, clean, plan, 1);
        FAIL("expected DatasetError");
    } catch (const DatasetError& e) {
        CHECK(std::string(e.what()).find("0/5") != std::string::npos);
    }
}

TEST_CASE("synthesis: paper mix plan is a 1:1:1:2:2 split") {
    const auto plan = paper_mix_plan(200);
    REQUIRE(plan.size() == 5);
    CHECK(plan[0].count == 200); // random ed1
    CHECK(plan[1].count == 200); // random ed2
    CHECK(plan[2].count == 200); // swap
    CHECK(plan[3].count == 400); // bigram ed1
    CHECK(plan[4].count == 400); // bigram ed2
    std::uint64_t total = 0;
    for (const auto& entry : plan) total += entry.count;
    CHECK(total == 1400);
}

TEST_CASE("synthesis: dataset JSONL round trip with manifest") {
    const LanguageProfile en = testing::english_profile();
    const NgramModel model = testing::toy_model();
    SentenceStream clean;
    for (int i = 0; i < 50; ++i) clean.push_back({"the", "cat", "sat"});
    const std::vector<PlanEntry> plan{PlanEntry{Generator::random, 1, 10},
                                      PlanEntry{Generator::swap, 2, 10}};
    const auto records = build_dataset(model, en, clean, plan, 42);

    testing::TempDir tmp("synth");
    save_dataset(records, tmp.file("d.jsonl"), tmp.file("d.manifest.json"), plan, 42);
    const auto reloaded = load_dataset(tmp.file("d.jsonl"));
    REQUIRE(reloaded.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(reloaded[i].sentence_tokens == records[i].sentence_tokens);
        CHECK(reloaded[i].target_index == records[i].target_index);
        CHECK(reloaded[i].original == records[i].original);
        CHECK(reloaded[i].corrupted == records[i].corrupted);
        CHECK(reloaded[i].generator == records[i].generator);
        CHECK(reloaded[i].edit_distance == records[i].edit_distance);
        CHECK(reloaded[i].seed == records[i].seed);
    }
    const std::string manifest = testing::read_file(tmp.file("d.manifest.json"));
    CHECK(manifest.find("\"seed\": 42") != std::string::npos);
    CHECK(manifest.find("random") != std::string::npos);
}
