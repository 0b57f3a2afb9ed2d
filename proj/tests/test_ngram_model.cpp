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

#include <sstream>

#include <zlib.h>

#include "ctxspell/errors.hpp"
#include "ctxspell/ngram_model.hpp"
#include "ctxspell/rng.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ctxspell;

TEST_CASE("model: toy stream counts by hand") {
    const NgramModel m = testing::toy_model();
    CHECK(m.vocab_size() == 4);
    CHECK(m.unigram_count("the") == 2);
    CHECK(m.unigram_count("cat") == 2);
    CHECK(m.unigram_count("sat") == 1);
    CHECK(m.unigram_count("ran") == 1);
    CHECK(m.total_unigrams() == 6);
    CHECK(m.bigram_count("the", "cat") == 2);
    CHECK(m.bigram_count("cat", "sat") == 1);
    CHECK(m.bigram_count("cat", "ran") == 1);
    CHECK(m.bigram_count("the", "ran") == 0);
    CHECK(m.trigram_count("the", "cat", "sat") == 1);
    CHECK(m.trigram_count("the", "cat", "ran") == 1);
    CHECK(m.trigram_count("cat", "sat", "ran") == 0);
}

TEST_CASE("model: frequency threshold filters words and their n-grams") {
    // freq > 1 keeps only the,cat; the only stored bigram is (the,cat)
    const NgramModel m = NgramModel::build(testing::toy_stream(), ModelLimits{1, 1}, "en");
    CHECK(m.vocab_size() == 2);
    CHECK(m.contains("the"));
    CHECK(m.contains("cat"));
    CHECK_FALSE(m.contains("sat"));
    CHECK(m.bigram_count("the", "cat") == 2);
    CHECK(m.bigram_entries() == 1);
    CHECK(m.trigram_entries() == 0);
    CHECK(m.total_unigrams() == 4); // 2 + 2 over surviving words
}

TEST_CASE("model: length threshold is in codepoints") {
    const SentenceStream stream{{"ab", "abc", "x", "\xd0\xbc\xd0\xb8"}, // ми = 2 cps
                                {"ab", "abc", "x", "\xd0\xbc\xd0\xb8"}};
    const NgramModel m = NgramModel::build(stream, ModelLimits{2, 0}, "xx");
    CHECK(m.contains("ab"));
    CHECK(m.contains("abc"));
    CHECK(m.contains("\xd0\xbc\xd0\xb8"));
    CHECK_FALSE(m.contains("x"));
}

TEST_CASE("model: empty stream is a build error") {
    CHECK_THROWS_AS(NgramModel::build({}, ModelLimits{1, 0}, "en"), BuildError);
}

TEST_CASE("model: cond_prob fixtures") {
    const NgramModel m = testing::toy_model();
    const std::vector<std::string> the{"the"};
    const std::vector<std::string> the_cat{"the", "cat"};
    const std::vector<std::string> zzz{"zzz"};
    CHECK(m.cond_prob(the, "cat") == doctest::Approx(1.0));
    CHECK(m.cond_prob(the_cat, "sat") == doctest::Approx(0.5));
    CHECK(m.cond_prob(zzz, "cat") == 0.0);
    CHECK(m.cond_prob({}, "cat") == doctest::Approx(2.0 / 6.0));
    CHECK(m.cond_prob({}, "zzz") == 0.0);
}

TEST_CASE("model: contains uses the first-letter-lowercase fallback") {
    const NgramModel m = testing::toy_model(); // stores lowercase "cat"
    CHECK(m.contains("cat"));
    CHECK(m.contains("Cat"));       // fallback hit
    CHECK_FALSE(m.contains("CAT")); // only the first letter is lowered
    CHECK_FALSE(m.contains("zzz"));
    CHECK_FALSE(m.contains("cAt"));
    // fallback never applies to a lowercase first letter
    const SentenceStream stream{{"Wednesday", "Wednesday"}};
    const NgramModel cap = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    CHECK(cap.contains("Wednesday"));
    CHECK_FALSE(cap.contains("wednesday"));
}

TEST_CASE("model: ids ordered by frequency then lexicographically") {
    const NgramModel m = testing::toy_model();
    // counts: cat=2, the=2, ran=1, sat=1 -> ties break lexicographically
    CHECK(m.word(0) == "cat");
    CHECK(m.word(1) == "the");
    CHECK(m.word(2) == "ran");
    CHECK(m.word(3) == "sat");
}

TEST_CASE("model: save/load round trip preserves everything") {
    const NgramModel m = testing::toy_model();
    testing::TempDir tmp("model");
    m.save(tmp.file("toy.cspk"));
    const NgramModel r = NgramModel::load(tmp.file("toy.cspk"));
    CHECK(r.language_code() == "en");
    CHECK(r.limits().min_word_len == 1);
    CHECK(r.limits().min_word_freq == 0);
    CHECK(r.vocab_size() == m.vocab_size());
    CHECK(r.total_unigrams() == m.total_unigrams());
    for (WordId id = 0; id < m.vocab_size(); ++id) {
        CHECK(r.word(id) == m.word(id));
        CHECK(r.unigram_count(id) == m.unigram_count(id));
    }
    m.for_each_bigram([&](WordId a, WordId b, std::uint64_t c) {
        CHECK(r.bigram_count(a, b) == c);
    });
    m.for_each_trigram([&](WordId a, WordId b, WordId c, std::uint64_t n) {
        CHECK(r.trigram_count(a, b, c) == n);
    });
    const std::vector<std::string> the{"the"};
    CHECK(r.cond_prob(the, "cat") == m.cond_prob(the, "cat"));
}

namespace {

// Recomputes and appends the trailing CRC so a doctored payload gets past the
// checksum gate and exercises the parser itself.
std::string with_valid_crc(std::string payload) {
    const auto crc = static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(payload.data()),
                static_cast<uInt>(payload.size())));
    for (int i = 0; i < 4; ++i)
        payload.push_back(static_cast<char>((crc >> (8 * i)) & 0xFF));
    return payload;
}

} // namespace

TEST_CASE("model: load failures are distinct error types") {
    const NgramModel m = testing::toy_model();
    testing::TempDir tmp("model");
    m.save(tmp.file("toy.cspk"));
    const std::string bytes = testing::read_file(tmp.file("toy.cspk"));
    const std::string payload = bytes.substr(0, bytes.size() - 4);

    SUBCASE("wrong magic") {
        std::string bad = bytes;
        bad[0] = 'X';
        CHECK_THROWS_AS(NgramModel::deserialize(bad), ModelFormatError);
    }
    SUBCASE("version mismatch behind a valid checksum") {
        std::string doctored = payload;
        doctored[4] = 99;
        CHECK_THROWS_AS(NgramModel::deserialize(with_valid_crc(doctored)),
                        ModelVersionError);
    }
    SUBCASE("corrupted payload fails the checksum") {
        std::string bad = bytes;
        bad[bytes.size() / 2] = static_cast<char>(bad[bytes.size() / 2] ^ 0x5A);
        CHECK_THROWS_AS(NgramModel::deserialize(bad), ModelChecksumError);
    }
    SUBCASE("plain tail truncation fails the checksum") {
        CHECK_THROWS_AS(NgramModel::deserialize(bytes.substr(0, bytes.size() - 7)),
                        ModelChecksumError);
    }
    SUBCASE("truncation inside the payload") {
        // cut in the middle of the header's fixed-width fields
        CHECK_THROWS_AS(NgramModel::deserialize(with_valid_crc(payload.substr(0, 17))),
                        ModelTruncationError);
    }
    SUBCASE("short file") {
        CHECK_THROWS_AS(NgramModel::deserialize("CSP"), ModelFormatError);
    }
}

TEST_CASE("model: deterministic bytes for identical input") {
    const NgramModel a = testing::toy_model();
    const NgramModel b = testing::toy_model();
    CHECK(a.serialize() == b.serialize());
}

namespace {

SentenceStream random_stream(std::uint64_t seed, std::size_t sentences) {
    static const std::vector<std::string> pool = {
        "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta",
        "theta", "iota", "kappa", "lam", "mu", "nu", "xi", "pi"};
    Rng rng(seed);
    SentenceStream stream;
    for (std::size_t s = 0; s < sentences; ++s) {
        Sentence sentence;
        const std::size_t len = 1 + rng.index(9);
        for (std::size_t i = 0; i < len; ++i)
            sentence.push_back(pool[rng.index(pool.size())]);
        stream.push_back(std::move(sentence));
    }
    return stream;
}

} // namespace

TEST_CASE("model: brute-force equivalence on random streams (property)") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const SentenceStream stream = random_stream(seed, 400);
        const ModelLimits limits{2, 3};
        const NgramModel m = NgramModel::build(stream, limits, "en");

        const auto raw = oracle::raw_frequencies(stream);
        const auto survives = [&](const std::string& w) {
            const auto it = raw.find(w);
            return it != raw.end() && it->second > limits.min_word_freq &&
                   w.size() >= limits.min_word_len;
        };
        const auto expected = oracle::count_ngrams(stream, survives);

        // every oracle count is stored exactly
        std::uint64_t expected_total = 0;
        for (const auto& [word, count] : expected.unigrams) {
            CHECK(m.unigram_count(word) == count);
            expected_total += count;
        }
        CHECK(m.total_unigrams() == expected_total);
        for (const auto& [key, count] : expected.bigrams)
            CHECK(m.bigram_count(key[0], key[1]) == count);
        for (const auto& [key, count] : expected.trigrams)
            CHECK(m.trigram_count(key[0], key[1], key[2]) == count);

        // and nothing extra is stored
        std::size_t bigrams = 0, trigrams = 0;
        m.for_each_bigram([&](WordId a, WordId b, std::uint64_t c) {
            ++bigrams;
            const std::vector<std::string> key{m.word(a), m.word(b)};
            REQUIRE(expected.bigrams.count(key) == 1);
            CHECK(expected.bigrams.at(key) == c);
        });
        m.for_each_trigram([&](WordId a, WordId b, WordId c, std::uint64_t n) {
            ++trigrams;
            const std::vector<std::string> key{m.word(a), m.word(b), m.word(c)};
            REQUIRE(expected.trigrams.count(key) == 1);
            CHECK(expected.trigrams.at(key) == n);
        });
        CHECK(bigrams == expected.bigrams.size());
        CHECK(trigrams == expected.trigrams.size());
    }
}

TEST_CASE("model: monotone containment and count ordering") {
    const SentenceStream stream = random_stream(17, 600);
    const NgramModel m = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    m.for_each_bigram([&](WordId a, WordId b, std::uint64_t c) {
        CHECK(c <= m.unigram_count(a));
        CHECK(m.unigram_count(b) > 0);
    });
    m.for_each_trigram([&](WordId a, WordId b, WordId c, std::uint64_t n) {
        const std::uint64_t prefix = m.bigram_count(a, b);
        CHECK(prefix > 0); // prefix bigram is stored
        CHECK(n <= prefix);
        CHECK(m.bigram_count(b, c) > 0);
    });
}

TEST_CASE("model: successor probabilities sum to at most 1") {
    const SentenceStream stream = random_stream(23, 500);
    const NgramModel m = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    for (WordId a = 0; a < m.vocab_size(); ++a) {
        double sum = 0;
        m.for_each_bigram([&](WordId head, WordId b, std::uint64_t) {
            if (head == a) {
                const std::vector<std::string> ctx{m.word(a)};
                sum += m.cond_prob(ctx, m.word(b));
            }
        });
        CHECK(sum <= 1.0 + 1e-9);
    }
}

TEST_CASE("model: binary file is smaller than the text dump") {
    const SentenceStream stream = random_stream(31, 2000);
    const NgramModel m = NgramModel::build(stream, ModelLimits{1, 0}, "en");
    std::ostringstream text;
    m.dump_text(text);
    CHECK(m.serialize().size() < text.str().size());
}
