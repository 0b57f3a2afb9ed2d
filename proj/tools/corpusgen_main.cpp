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

// corpusgen: deterministic English-like corpus for desk-scale experiments.
// The test and benchmark suites generate the same corpora in process; this
// tool writes them to disk so the ctxspell pipeline can be driven end to end.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ctxspell/errors.hpp"
#include "textgen.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate a deterministic plain-text corpus from a seed word list"};

    std::string wordlist, out_dir, lexicon_out;
    std::size_t sentences = 120'000;
    std::size_t lexicon_size = 56'000;
    std::size_t files = 64;
    std::uint64_t seed = 42;
    unsigned coverage = 8;
    double noise = 0.08;

    app.add_option("--wordlist", wordlist, "seed word list (one word per line)")
        ->required();
    app.add_option("--out", out_dir, "output directory for article files")->required();
    app.add_option("--sentences", sentences, "natural sentences to generate");
    app.add_option("--lexicon-size", lexicon_size, "vocabulary size after expansion");
    app.add_option("--files", files, "number of output files");
    app.add_option("--seed", seed);
    app.add_option("--coverage", coverage,
                   "vocabulary coverage repeats (0 disables the coverage block)");
    app.add_option("--noise", noise, "per-token probability of an off-phrase word");
    app.add_option("--emit-lexicon", lexicon_out, "also write the expanded lexicon");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const auto lexicon = ctxspell::textgen::build_lexicon(wordlist, lexicon_size, seed);
        ctxspell::textgen::CorpusOptions options;
        options.sentences = sentences;
        options.seed = seed;
        options.coverage_repeats = coverage;
        options.noise_rate = noise;
        const auto corpus = ctxspell::textgen::generate_corpus(lexicon, options);
        ctxspell::textgen::write_article_files(corpus.combined(), out_dir, files);
        if (!lexicon_out.empty()) {
            std::ofstream out(lexicon_out, std::ios::binary | std::ios::trunc);
            if (!out) throw ctxspell::IoError("cannot write " + lexicon_out);
            for (const auto& word : lexicon) out << word << '\n';
        }
        std::cerr << "lexicon " << lexicon.size() << " words, "
                  << corpus.natural.size() << " natural + " << corpus.coverage.size()
                  << " coverage sentences -> " << out_dir << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
