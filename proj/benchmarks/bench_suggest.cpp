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

// Candidate-generation microbenchmarks over a generated desk-scale
// dictionary. The token length is the benchmark argument, mirroring the
// by-length latency table the `ctxspell bench` subcommand reproduces.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "ctxspell/ngram_model.hpp"
#include "ctxspell/rng.hpp"
#include "ctxspell/suggester.hpp"
#include "textgen.hpp"

namespace {

using namespace ctxspell;

#ifndef CTXSPELL_DATA_DIR
#define CTXSPELL_DATA_DIR "data"
#endif

struct BenchWorld {
    NgramModel model;
    DeleteIndex index;
    std::unique_ptr<TrieSuggester> trie;
    std::unique_ptr<DawgSuggester> dawg;
    std::unique_ptr<BkTreeSuggester> bktree;

    static const BenchWorld& get() {
        static BenchWorld world;
        return world;
    }

    std::vector<std::string> tokens(std::size_t length, std::size_t count) const {
        std::vector<std::string> out;
        std::uint64_t counter = 0;
        while (out.size() < count) {
            const std::string token =
                textgen::random_token(length, Rng::derive(99, ++counter));
            if (!model.contains(token)) out.push_back(token);
        }
        return out;
    }

  private:
    BenchWorld()
        : model([] {
              const auto lexicon = textgen::build_lexicon(
                  std::filesystem::path(CTXSPELL_DATA_DIR) / "wordlists" /
                      "english_seed.txt",
                  40'000, 7);
              textgen::CorpusOptions options;
              options.sentences = 30'000;
              options.seed = 7;
              return NgramModel::build(textgen::generate_corpus(lexicon, options).combined(),
                                       ModelLimits{2, 5}, "en");
          }()),
          index(DeleteIndex::build(model, 2)),
          trie(std::make_unique<TrieSuggester>(model)),
          dawg(std::make_unique<DawgSuggester>(model)),
          bktree(std::make_unique<BkTreeSuggester>(model)) {}
};

void BM_SdaCandidates(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    const auto tokens = world.tokens(static_cast<std::size_t>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) {
        auto candidates =
            world.index.candidates(world.model, tokens[i++ % tokens.size()]);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_SdaCandidates)->Arg(3)->Arg(5)->Arg(8)->Arg(12)->Arg(16);

void BM_TrieCandidates(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    const auto tokens = world.tokens(static_cast<std::size_t>(state.range(0)), 8);
    std::size_t i = 0;
    for (auto _ : state) {
        auto candidates =
            world.trie->candidates(world.model, tokens[i++ % tokens.size()], 2);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_TrieCandidates)->Arg(3)->Arg(8)->Arg(16);

void BM_DawgCandidates(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    const auto tokens = world.tokens(static_cast<std::size_t>(state.range(0)), 8);
    std::size_t i = 0;
    for (auto _ : state) {
        auto candidates =
            world.dawg->candidates(world.model, tokens[i++ % tokens.size()], 2);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_DawgCandidates)->Arg(3)->Arg(8)->Arg(16);

void BM_BkTreeCandidates(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    const auto tokens = world.tokens(static_cast<std::size_t>(state.range(0)), 4);
    std::size_t i = 0;
    for (auto _ : state) {
        auto candidates =
            world.bktree->candidates(world.model, tokens[i++ % tokens.size()], 2);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_BkTreeCandidates)->Arg(3)->Arg(8)->Arg(16);

void BM_NaiveCandidates(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    const auto tokens = world.tokens(static_cast<std::size_t>(state.range(0)), 4);
    std::size_t i = 0;
    for (auto _ : state) {
        auto candidates =
            naive_candidates(world.model, tokens[i++ % tokens.size()], 2);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_NaiveCandidates)->Arg(3)->Arg(8)->Arg(16);

void BM_DeleteIndexBuild(benchmark::State& state) {
    const auto& world = BenchWorld::get();
    for (auto _ : state) {
        auto index = DeleteIndex::build(world.model, 2);
        benchmark::DoNotOptimize(index);
    }
}
BENCHMARK(BM_DeleteIndexBuild)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
