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

// Model query-path and end-to-end checking benchmarks.

#include <benchmark/benchmark.h>

#include "ctxspell/checker.hpp"
#include "ctxspell/ngram_model.hpp"
#include "ctxspell/ranker.hpp"
#include "ctxspell/rng.hpp"
#include "ctxspell/suggester.hpp"
#include "textgen.hpp"

namespace {

using namespace ctxspell;

#ifndef CTXSPELL_DATA_DIR
#define CTXSPELL_DATA_DIR "data"
#endif

struct QueryWorld {
    LanguageProfile profile;
    SentenceStream corpus;
    NgramModel model;
    DeleteIndex index;

    static const QueryWorld& get() {
        static QueryWorld world;
        return world;
    }

  private:
    QueryWorld()
        : profile(load_profile(std::filesystem::path(CTXSPELL_DATA_DIR) / "profiles" /
                               "en.profile")),
          corpus([] {
              const auto lexicon = textgen::build_lexicon(
                  std::filesystem::path(CTXSPELL_DATA_DIR) / "wordlists" /
                      "english_seed.txt",
                  40'000, 7);
              textgen::CorpusOptions options;
              options.sentences = 30'000;
              options.seed = 7;
              return textgen::generate_corpus(lexicon, options).combined();
          }()),
          model(NgramModel::build(corpus, ModelLimits{2, 5}, "en")),
          index(DeleteIndex::build(model, 2)) {}
};

void BM_ModelBuild(benchmark::State& state) {
    const auto& world = QueryWorld::get();
    for (auto _ : state) {
        auto model = NgramModel::build(world.corpus, ModelLimits{2, 5}, "en");
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_ModelBuild)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Contains(benchmark::State& state) {
    const auto& world = QueryWorld::get();
    Rng rng(5);
    std::vector<std::string> probes;
    for (int i = 0; i < 512; ++i) {
        if (i % 2 == 0)
            probes.push_back(world.model.word(
                static_cast<WordId>(rng.index(world.model.vocab_size()))));
        else
            probes.push_back(textgen::random_token(3 + rng.index(10), rng.next_u64()));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(world.model.contains(probes[i++ % probes.size()]));
    }
}
BENCHMARK(BM_Contains);

void BM_CondProbTrigram(benchmark::State& state) {
    const auto& world = QueryWorld::get();
    // probe real trigram windows from the corpus
    std::vector<std::vector<std::string>> windows;
    for (const auto& sentence : world.corpus) {
        for (std::size_t i = 0; i + 2 < sentence.size() && windows.size() < 1024; ++i)
            windows.push_back({sentence[i], sentence[i + 1], sentence[i + 2]});
        if (windows.size() >= 1024) break;
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& w = windows[i++ % windows.size()];
        const std::vector<std::string> ctx{w[0], w[1]};
        benchmark::DoNotOptimize(world.model.cond_prob(ctx, w[2]));
    }
}
BENCHMARK(BM_CondProbTrigram);

void BM_CheckSentence(benchmark::State& state) {
    const auto& world = QueryWorld::get();
    const std::string text = "the fiirst day of the weok was long";
    for (auto _ : state) {
        auto report = check_sentence(world.model, world.index, world.profile, text,
                                     Weights{1, 1, 1}, 10);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_CheckSentence)->Unit(benchmark::kMicrosecond);

void BM_SerializeModel(benchmark::State& state) {
    const auto& world = QueryWorld::get();
    for (auto _ : state) {
        auto bytes = world.model.serialize();
        benchmark::DoNotOptimize(bytes);
    }
}
BENCHMARK(BM_SerializeModel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
