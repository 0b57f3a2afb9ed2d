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

#include "textgen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "ctxspell/errors.hpp"
#include "ctxspell/rng.hpp"

namespace ctxspell::textgen {

namespace {

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Regular suffix morphology with the usual orthographic tweaks. The goal is
// plausible word shapes and dense edit-distance neighborhoods, not perfect
// grammar.
std::vector<std::string> inflect(const std::string& w) {
    std::vector<std::string> forms;
    if (w.size() < 3) return forms;
    const char last = w.back();
    const std::string stem_e = ends_with(w, "e") ? w.substr(0, w.size() - 1) : w;
    const bool cons_y = last == 'y' && w.size() >= 2 && !is_vowel(w[w.size() - 2]);
    const std::string y_to_i = cons_y ? w.substr(0, w.size() - 1) + 'i' : w;

    if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
        ends_with(w, "ch") || ends_with(w, "sh"))
        forms.push_back(w + "es");
    else if (cons_y)
        forms.push_back(y_to_i + "es");
    else
        forms.push_back(w + "s");

    forms.push_back(ends_with(w, "e") ? w + "d" : (cons_y ? y_to_i + "ed" : w + "ed"));
    forms.push_back(stem_e + "ing");
    forms.push_back(ends_with(w, "e") ? w + "r" : (cons_y ? y_to_i + "er" : w + "er"));
    if (w.size() <= 6)
        forms.push_back(ends_with(w, "e") ? w + "st" : (cons_y ? y_to_i + "est" : w + "est"));
    forms.push_back(cons_y ? y_to_i + "ly" : w + "ly");
    if (w.size() <= 8) forms.push_back((cons_y ? y_to_i : w) + "ness");
    return forms;
}

const char* kOnsets[] = {"b", "c", "d", "f", "g", "h", "j", "k", "l", "m",
                         "n", "p", "r", "s", "t", "v", "w", "br", "cl", "cr",
                         "dr", "fl", "gr", "pl", "pr", "sh", "sl", "sp", "st",
                         "str", "th", "tr", "ch", "wh", "bl", "sn"};
const char* kNuclei[] = {"a", "e", "i", "o", "u", "ai", "ea", "ee", "oa",
                         "oo", "ou", "ie", "ay", "ow"};
const char* kCodas[] = {"", "n", "r", "s", "t", "l", "m", "d", "k", "p",
                        "nd", "nt", "st", "ck", "rn", "sh", "ng", "rd"};

std::string synthetic_word(Rng& rng) {
    const std::size_t syllables = 2 + rng.index(3);
    std::string word;
    for (std::size_t s = 0; s < syllables; ++s) {
        word += kOnsets[rng.index(std::size(kOnsets))];
        word += kNuclei[rng.index(std::size(kNuclei))];
        if (s + 1 == syllables || rng.below(3) == 0)
            word += kCodas[rng.index(std::size(kCodas))];
    }
    return word;
}

// Zipf-shaped sampler over [0, n) by cumulative weights and binary search.
class ZipfSampler {
  public:
    ZipfSampler(std::size_t n, double exponent, double shift) {
        cumulative_.reserve(n);
        double total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            total += 1.0 / std::pow(static_cast<double>(i) + shift, exponent);
            cumulative_.push_back(total);
        }
    }

    std::size_t draw(Rng& rng) const {
        const double r = rng.unit() * cumulative_.back();
        const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), r);
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

  private:
    std::vector<double> cumulative_;
};

} // namespace

std::vector<std::string> build_lexicon(const std::filesystem::path& seed_list,
                                       std::size_t target_size, std::uint64_t seed) {
    std::ifstream in(seed_list);
    if (!in) throw IoError("cannot open seed word list: " + seed_list.string());

    std::vector<std::string> lexicon;
    std::unordered_set<std::string> seen;
    const auto add = [&](const std::string& w) {
        if (w.size() < 2) return;
        if (!std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
            return;
        if (seen.insert(w).second) lexicon.push_back(w);
    };

    std::vector<std::string> seeds;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        seeds.push_back(line);
    }
    for (const auto& w : seeds) add(w);

    // Morphological forms go after the seeds so the most frequent ranks stay
    // with genuine common words.
    for (const auto& w : seeds)
        for (const auto& form : inflect(w)) add(form);
    for (const auto& w : seeds) {
        if (w.size() >= 4 && w.size() <= 9) {
            add("un" + w);
            add("re" + w);
        }
    }

    Rng rng(Rng::derive(seed, 0xF1));
    std::size_t failures = 0;
    while (lexicon.size() < target_size && failures < 1'000'000) {
        const std::string w = synthetic_word(rng);
        const std::size_t before = lexicon.size();
        add(w);
        if (lexicon.size() == before) ++failures;
    }
    if (lexicon.size() < target_size)
        throw Error("lexicon generation exhausted the synthetic word space");
    lexicon.resize(target_size);
    return lexicon;
}

SentenceStream GeneratedCorpus::combined() const {
    SentenceStream all;
    all.reserve(natural.size() + coverage.size());
    all.insert(all.end(), natural.begin(), natural.end());
    all.insert(all.end(), coverage.begin(), coverage.end());
    return all;
}

GeneratedCorpus generate_corpus(const std::vector<std::string>& lexicon,
                                const CorpusOptions& options) {
    if (lexicon.empty()) throw Error("cannot generate a corpus from an empty lexicon");

    GeneratedCorpus corpus;
    Rng rng(options.seed);

    const ZipfSampler word_sampler(lexicon.size(), 0.92, 3.0);

    // Fixed pool of short phrases; sentence text reuses them, which is what
    // makes bigram and trigram contexts recur.
    const std::size_t pool_size = std::max<std::size_t>(lexicon.size() * 3, 50'000);
    std::vector<std::array<std::uint32_t, 4>> phrases(pool_size);
    std::vector<std::uint8_t> phrase_len(pool_size);
    for (std::size_t p = 0; p < pool_size; ++p) {
        const std::size_t len = 2 + rng.index(3);
        phrase_len[p] = static_cast<std::uint8_t>(len);
        for (std::size_t i = 0; i < len; ++i)
            phrases[p][i] = static_cast<std::uint32_t>(word_sampler.draw(rng));
    }
    const ZipfSampler phrase_sampler(pool_size, 0.85, 2.0);

    corpus.natural.reserve(options.sentences);
    for (std::size_t s = 0; s < options.sentences; ++s) {
        Sentence sentence;
        const std::size_t n_phrases = 2 + rng.index(3);
        for (std::size_t p = 0; p < n_phrases; ++p) {
            const std::size_t pick = phrase_sampler.draw(rng);
            for (std::size_t i = 0; i < phrase_len[pick]; ++i) {
                if (options.noise_rate > 0 && rng.unit() < options.noise_rate)
                    sentence.push_back(lexicon[word_sampler.draw(rng)]);
                else
                    sentence.push_back(lexicon[phrases[pick][i]]);
            }
        }
        corpus.natural.push_back(std::move(sentence));
    }

    // Coverage pass: every lexicon word appears at least coverage_repeats
    // times so the whole vocabulary clears the build-frequency threshold.
    std::vector<std::uint32_t> order(lexicon.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
    for (unsigned repeat = 0; repeat < options.coverage_repeats; ++repeat) {
        // Fisher-Yates with the shared rng; a fresh order each round keeps
        // any single adjacency from repeating.
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.index(i)]);
        Sentence sentence;
        sentence.reserve(8);
        for (const std::uint32_t idx : order) {
            sentence.push_back(lexicon[idx]);
            if (sentence.size() == 8) {
                corpus.coverage.push_back(std::move(sentence));
                sentence = Sentence{};
                sentence.reserve(8);
            }
        }
        if (!sentence.empty()) corpus.coverage.push_back(std::move(sentence));
    }
    return corpus;
}

void write_article_files(const SentenceStream& sentences,
                         const std::filesystem::path& directory, std::size_t files) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    if (files == 0) files = 1;
    const std::size_t per_file = (sentences.size() + files - 1) / std::max<std::size_t>(files, 1);

    std::size_t written = 0;
    for (std::size_t f = 0; f < files && written < sentences.size(); ++f) {
        char name[32];
        std::snprintf(name, sizeof name, "corpus_%04zu.txt", f);
        std::ofstream out(directory / name, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write corpus file in " + directory.string());
        for (std::size_t i = 0; i < per_file && written < sentences.size(); ++i, ++written) {
            const Sentence& sentence = sentences[written];
            for (std::size_t t = 0; t < sentence.size(); ++t) {
                if (t) out << ' ';
                out << sentence[t];
            }
            out << ".\n";
        }
    }
}

std::string random_token(std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::string token;
    token.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        token.push_back(static_cast<char>('a' + rng.index(26)));
    return token;
}

} // namespace ctxspell::textgen
