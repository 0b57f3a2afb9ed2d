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
#include <stdexcept>

#include "ctxspell/ranker.hpp"
#include "support/fixtures.hpp"

using namespace ctxspell;

namespace {

const std::vector<std::string> kTheQSat{"the", "cqt", "sat"};

} // namespace

TEST_CASE("ranker: hand-derived score for cat in [the ? sat]") {
    const NgramModel m = testing::toy_model();
    const auto s = context_score(m, kTheQSat, 1, "cat", Weights{1, 1, 1});
    // s1 = P(cat) = 2/6; s2 = P(cat|the) + P(sat|cat) = 1 + 1/2;
    // s3 = P(sat|the,cat) = 1/2, the other two windows run off the edges
    CHECK(s.s1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(s.s2 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(s.s3 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.total == doctest::Approx(7.0 / 3.0).epsilon(1e-9));
    CHECK(s.total == s.s1 + s.s2 + s.s3);
}

TEST_CASE("ranker: candidate with no stored context scores unigram only") {
    const NgramModel m = testing::toy_model();
    const auto s = context_score(m, kTheQSat, 1, "ran", Weights{1, 1, 1});
    CHECK(s.s2 == 0.0);
    CHECK(s.s3 == 0.0);
    CHECK(s.total == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("ranker: trigram-only weights on a one-word sentence give zero") {
    const NgramModel m = testing::toy_model();
    const std::vector<std::string> sentence{"cqt"};
    const auto s = context_score(m, sentence, 0, "cat", Weights{0, 0, 1});
    CHECK(s.total == 0.0);
}

TEST_CASE("ranker: weights scale their components") {
    const NgramModel m = testing::toy_model();
    const auto s = context_score(m, kTheQSat, 1, "cat", Weights{2, 10, 100});
    CHECK(s.s1 == doctest::Approx(2.0 / 3.0));
    CHECK(s.s2 == doctest::Approx(15.0));
    CHECK(s.s3 == doctest::Approx(50.0));
}

TEST_CASE("ranker: out-of-range position is a contract violation") {
    const NgramModel m = testing::toy_model();
    CHECK_THROWS_AS(context_score(m, kTheQSat, 3, "cat", Weights{}), std::out_of_range);
}

TEST_CASE("ranker: cqt in context ranks cat first") {
    const NgramModel m = testing::toy_model();
    const DeleteIndex index = DeleteIndex::build(m, 2);
    const auto suggestions = rank(m, index, kTheQSat, 1, Weights{1, 1, 1}, 10);
    REQUIRE(!suggestions.empty());
    CHECK(suggestions[0].word == "cat");
    CHECK(suggestions[0].rank == 1);
    CHECK(suggestions[0].total == doctest::Approx(7.0 / 3.0));
    // candidates are dictionary words within distance 2 of cqt: cat, sat
    REQUIRE(suggestions.size() == 2);
    CHECK(suggestions[1].word == "sat");
    // no suggestion equals the misspelled token
    for (const auto& s : suggestions) CHECK(s.word != "cqt");
}

TEST_CASE("ranker: ties break by distance, count, then lexicographic") {
    // all-zero context: equal totals everywhere
    const NgramModel m = testing::dictionary_model({"bat", "cat", "hat", "chat"});
    const DeleteIndex index = DeleteIndex::build(m, 2);
    const std::vector<std::string> sentence{"qat"};
    const auto suggestions = rank(m, index, sentence, 0, Weights{0, 1, 1}, 10);
    REQUIRE(suggestions.size() == 4);
    // bat/cat/hat at distance 1 (equal counts -> lexicographic), chat at 2
    CHECK(suggestions[0].word == "bat");
    CHECK(suggestions[1].word == "cat");
    CHECK(suggestions[2].word == "hat");
    CHECK(suggestions[3].word == "chat");
    for (std::size_t i = 0; i < suggestions.size(); ++i)
        CHECK(suggestions[i].rank == i + 1);
}

TEST_CASE("ranker: higher unigram count wins an exact tie at equal distance") {
    SentenceStream stream;
    for (int i = 0; i < 9; ++i) stream.push_back({"bat"});
    for (int i = 0; i < 5; ++i) stream.push_back({"hat"});
    const NgramModel m = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    const DeleteIndex index = DeleteIndex::build(m, 2);
    const std::vector<std::string> sentence{"qat"};
    // zero weights on the unigram term keep totals tied at 0
    const auto suggestions = rank(m, index, sentence, 0, Weights{0, 1, 1}, 10);
    REQUIRE(suggestions.size() == 2);
    CHECK(suggestions[0].word == "bat");
    CHECK(suggestions[1].word == "hat");
}

TEST_CASE("ranker: k prefix property") {
    const NgramModel m = testing::dictionary_model({"bat", "cat", "hat", "chat", "rat"});
    const DeleteIndex index = DeleteIndex::build(m, 2);
    const std::vector<std::string> sentence{"qat"};
    const auto full = rank(m, index, sentence, 0, Weights{1, 1, 1}, 10);
    for (std::size_t k = 1; k <= full.size(); ++k) {
        const auto head = rank(m, index, sentence, 0, Weights{1, 1, 1}, k);
        REQUIRE(head.size() == k);
        for (std::size_t i = 0; i < k; ++i) CHECK(head[i].word == full[i].word);
    }
}

TEST_CASE("ranker: argmax is invariant under weight scaling (property)") {
    const NgramModel m = testing::toy_model();
    const DeleteIndex index = DeleteIndex::build(m, 2);
    const auto base = rank(m, index, kTheQSat, 1, Weights{1, 1, 1}, 10);
    for (const double lambda : {0.25, 2.0, 1000.0, 1e6}) {
        const auto scaled =
            rank(m, index, kTheQSat, 1, Weights{lambda, lambda, lambda}, 10);
        REQUIRE(scaled.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(scaled[i].word == base[i].word);
            CHECK(scaled[i].total == doctest::Approx(base[i].total * lambda));
        }
    }
}

TEST_CASE("ranker: scores are finite and non-negative") {
    const NgramModel m = testing::toy_model();
    const DeleteIndex index = DeleteIndex::build(m, 2);
    for (const auto& sentence :
         {std::vector<std::string>{"cqt"}, std::vector<std::string>{"zzz", "cqt"},
          std::vector<std::string>{"cqt", "zzz", "zzz"}}) {
        for (const auto& s :
             rank(m, index, sentence, 0, Weights{1, 1, 1}, 10)) {
            CHECK(std::isfinite(s.total));
            CHECK(s.s1 >= 0);
            CHECK(s.s2 >= 0);
            CHECK(s.s3 >= 0);
            CHECK(s.total == s.s1 + s.s2 + s.s3);
        }
    }
}
