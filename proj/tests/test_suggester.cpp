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

#include <algorithm>
#include <set>

#include "ctxspell/rng.hpp"
#include "ctxspell/suggester.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ctxspell;

namespace {

std::vector<std::pair<std::string, std::size_t>> as_sorted_pairs(
    const std::vector<Candidate>& candidates) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& c : candidates) out.emplace_back(c.word, c.edit_distance);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> model_words(const NgramModel& model) {
    std::vector<std::string> words;
    for (WordId id = 0; id < model.vocab_size(); ++id) words.push_back(model.word(id));
    return words;
}

std::string random_word(Rng& rng, std::size_t min_len, std::size_t max_len,
                        unsigned alphabet) {
    const std::size_t len = min_len + rng.index(max_len - min_len + 1);
    std::string word;
    for (std::size_t i = 0; i < len; ++i)
        word.push_back(static_cast<char>('a' + rng.index(alphabet)));
    return word;
}

} // namespace

TEST_CASE("suggester: delete variants of cat all map back to cat") {
    const NgramModel model = testing::dictionary_model({"cat"});
    const DeleteIndex index = DeleteIndex::build(model, 1);
    // variants by hand: cat, at, ct, ca
    for (const char* variant : {"cat", "at", "ct", "ca"}) {
        const auto candidates = index.candidates(model, variant);
        REQUIRE(candidates.size() >= 1);
        CHECK(std::any_of(candidates.begin(), candidates.end(),
                          [](const Candidate& c) { return c.word == "cat"; }));
    }
}

TEST_CASE("suggester: shared variant maps to both sources") {
    const NgramModel model = testing::dictionary_model({"cat", "cart"});
    const DeleteIndex index = DeleteIndex::build(model, 1);
    // "cat" is cart minus r, so the query hits both words
    const auto candidates = index.candidates(model, "cat");
    const auto pairs = as_sorted_pairs(candidates);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<std::string, std::size_t>{"cart", 1});
    CHECK(pairs[1] == std::pair<std::string, std::size_t>{"cat", 0});
}

TEST_CASE("suggester: cqt fixture against brute force") {
    const std::vector<std::string> dict{"cat", "cart", "car", "bat"};
    const NgramModel model = testing::dictionary_model(dict);
    const DeleteIndex index = DeleteIndex::build(model, 2);
    const auto pairs = as_sorted_pairs(index.candidates(model, "cqt"));
    const auto expected = oracle::scan_candidates(dict, "cqt", 2);
    CHECK(pairs == expected);
    // spot values: cat at distance 1, the rest at 2
    REQUIRE(pairs.size() == 4);
    CHECK(pairs == decltype(pairs){{"bat", 2}, {"car", 2}, {"cart", 2}, {"cat", 1}});
}

TEST_CASE("suggester: exact dictionary token reports distance 0") {
    const NgramModel model = testing::dictionary_model({"cat", "cart", "car", "bat"});
    const DeleteIndex index = DeleteIndex::build(model, 2);
    const auto candidates = index.candidates(model, "cat");
    const auto self = std::find_if(candidates.begin(), candidates.end(),
                                   [](const Candidate& c) { return c.word == "cat"; });
    REQUIRE(self != candidates.end());
    CHECK(self->edit_distance == 0);
}

TEST_CASE("suggester: no candidates within distance") {
    const NgramModel model = testing::dictionary_model({"cat", "cart", "car", "bat"});
    const DeleteIndex index = DeleteIndex::build(model, 2);
    CHECK(index.candidates(model, "zzzzzz").empty());
}

TEST_CASE("suggester: adjacent transposition is distance 2") {
    const NgramModel model = testing::dictionary_model({"grow"});
    const DeleteIndex index = DeleteIndex::build(model, 2);
    const auto candidates = index.candidates(model, "gorw");
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].edit_distance == 2);
}

TEST_CASE("suggester: oracle equivalence on random dictionaries (property)") {
    for (const std::uint64_t seed : {101u, 202u, 303u}) {
        Rng rng(seed);
        std::set<std::string> dict_set;
        while (dict_set.size() < 400) dict_set.insert(random_word(rng, 3, 9, 6));
        const std::vector<std::string> dict(dict_set.begin(), dict_set.end());
        const NgramModel model = testing::dictionary_model(dict);
        const DeleteIndex index = DeleteIndex::build(model, 2);

        for (int q = 0; q < 60; ++q) {
            const std::string token = random_word(rng, 3, 12, 6);
            const auto got = as_sorted_pairs(index.candidates(model, token));
            const auto expected = oracle::scan_candidates(model_words(model), token, 2);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("suggester: every returned distance is exact (property)") {
    Rng rng(404);
    std::set<std::string> dict_set;
    while (dict_set.size() < 300) dict_set.insert(random_word(rng, 3, 8, 5));
    const NgramModel model =
        testing::dictionary_model({dict_set.begin(), dict_set.end()});
    const DeleteIndex index = DeleteIndex::build(model, 2);
    for (int q = 0; q < 80; ++q) {
        const std::string token = random_word(rng, 3, 10, 5);
        for (const auto& candidate : index.candidates(model, token))
            CHECK(candidate.edit_distance == oracle::levenshtein(token, candidate.word));
    }
}

TEST_CASE("suggester: all baselines agree with SDA") {
    const std::vector<std::string> dict{"cat", "cart", "car", "bat", "cast", "coat",
                                        "chat", "rat",  "act", "tact", "scat"};
    const NgramModel model = testing::dictionary_model(dict);
    const DeleteIndex index = DeleteIndex::build(model, 2);

    const TrieSuggester trie(model);
    const DawgSuggester dawg(model);
    const BkTreeSuggester bktree(model);

    for (const char* token : {"cqt", "caat", "xyz", "cat", "tac", "zzzzzz"}) {
        const auto expected = as_sorted_pairs(index.candidates(model, token));
        CHECK(as_sorted_pairs(naive_candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(trie.candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(dawg.candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(bktree.candidates(model, token, 2)) == expected);
    }
}

TEST_CASE("suggester: baselines agree on random dictionaries (property)") {
    Rng rng(505);
    std::set<std::string> dict_set;
    while (dict_set.size() < 250) dict_set.insert(random_word(rng, 3, 8, 6));
    const NgramModel model =
        testing::dictionary_model({dict_set.begin(), dict_set.end()});
    const DeleteIndex index = DeleteIndex::build(model, 2);
    const TrieSuggester trie(model);
    const DawgSuggester dawg(model);
    const BkTreeSuggester bktree(model);

    for (int q = 0; q < 40; ++q) {
        const std::string token = random_word(rng, 3, 10, 6);
        const auto expected = as_sorted_pairs(index.candidates(model, token));
        CHECK(as_sorted_pairs(naive_candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(trie.candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(dawg.candidates(model, token, 2)) == expected);
        CHECK(as_sorted_pairs(bktree.candidates(model, token, 2)) == expected);
    }
}

TEST_CASE("suggester: bk-tree with a single-word dictionary") {
    const NgramModel model = testing::dictionary_model({"cat"});
    const BkTreeSuggester bktree(model);
    CHECK(bktree.candidates(model, "cqt", 2).size() == 1);
    CHECK(bktree.candidates(model, "zzzzzz", 2).empty());
}

TEST_CASE("suggester: candidates_baseline dispatch matches") {
    const NgramModel model = testing::dictionary_model({"cat", "bat", "hat"});
    const auto expected =
        as_sorted_pairs(candidates_baseline(SuggestMethod::naive, model, "cqt", 2));
    for (const auto method : {SuggestMethod::trie, SuggestMethod::dawg,
                              SuggestMethod::bktree, SuggestMethod::sda})
        CHECK(as_sorted_pairs(candidates_baseline(method, model, "cqt", 2)) == expected);
}

TEST_CASE("suggester: max_distance 1 index") {
    const std::vector<std::string> dict{"cat", "cart", "car", "bat"};
    const NgramModel model = testing::dictionary_model(dict);
    const DeleteIndex index = DeleteIndex::build(model, 1);
    const auto pairs = as_sorted_pairs(index.candidates(model, "cqt"));
    CHECK(pairs == oracle::scan_candidates(dict, "cqt", 1));
    CHECK(pairs == decltype(pairs){{"cat", 1}});
}

TEST_CASE("suggester: rejects unsupported distances") {
    const NgramModel model = testing::dictionary_model({"cat"});
    CHECK_THROWS(DeleteIndex::build(model, 0));
    CHECK_THROWS(DeleteIndex::build(model, 3));
}
