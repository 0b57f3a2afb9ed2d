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

// ctxspell: one binary for the whole pipeline — build a model from raw text,
// check sentences, synthesize labeled error datasets, and run the
// evaluation/benchmark protocols.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctxspell/checker.hpp"
#include "ctxspell/corpus_ingest.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/eval_harness.hpp"
#include "ctxspell/error_synthesis.hpp"
#include "ctxspell/language_profile.hpp"
#include "ctxspell/ngram_model.hpp"
#include "ctxspell/ranker.hpp"
#include "ctxspell/suggester.hpp"
#include "textgen.hpp"

namespace {

using namespace ctxspell;

struct CommonFlags {
    std::string profile_path;
    std::string model_path;
    double w1 = 1.0, w2 = 1.0, w3 = 1.0;
    std::size_t k = 10;
    unsigned max_edit_distance = 2;
    std::uint64_t seed = 42;
    std::string format = "tsv";
};

struct CorpusFlags {
    std::vector<std::string> articles;
    std::vector<std::string> subtitles;
    std::uint64_t max_articles = 1'000'000;
    std::uint64_t max_subtitle_files = 10'000;
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& flags) {
    cmd->add_option("--articles", flags.articles,
                    "article text files or directories (one document per file or "
                    "blank-line block)");
    cmd->add_option("--subtitles", flags.subtitles,
                    "subtitle files or directories (blank-line blocks; index and "
                    "--> lines skipped)");
    cmd->add_option("--max-articles", flags.max_articles, "article cap");
    cmd->add_option("--max-subtitle-files", flags.max_subtitle_files,
                    "subtitle file cap");
}

CorpusSpec to_spec(const CorpusFlags& flags) {
    CorpusSpec spec;
    for (const auto& path : flags.articles)
        spec.sources.emplace_back(path, SourceKind::article);
    for (const auto& path : flags.subtitles)
        spec.sources.emplace_back(path, SourceKind::subtitle);
    spec.max_articles = flags.max_articles;
    spec.max_subtitle_files = flags.max_subtitle_files;
    if (spec.sources.empty())
        throw Error("no corpus sources; pass --articles and/or --subtitles");
    return spec;
}

Weights to_weights(const CommonFlags& flags) {
    if (flags.w1 == 0 && flags.w2 == 0 && flags.w3 == 0)
        throw Error("weights must not all be zero");
    return Weights{flags.w1, flags.w2, flags.w3};
}

std::vector<PlanEntry> parse_plan(const std::vector<std::string>& plan_specs) {
    std::vector<PlanEntry> plan;
    for (const auto& item : plan_specs) {
        const auto c1 = item.find(':');
        const auto c2 = item.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw Error("plan entry must be generator:distance:count, got '" + item + "'");
        PlanEntry entry;
        entry.generator = generator_from_string(item.substr(0, c1));
        entry.distance = static_cast<std::uint8_t>(std::stoul(item.substr(c1 + 1, c2 - c1 - 1)));
        entry.count = std::stoull(item.substr(c2 + 1));
        if (entry.distance < 1 || entry.distance > 2)
            throw Error("plan distance must be 1 or 2");
        if (entry.generator == Generator::swap && entry.distance != 2)
            throw Error("swap errors are always distance 2");
        plan.push_back(entry);
    }
    return plan;
}

int run(int argc, char** argv) {
    CLI::App app{"context-sensitive real-time spell checker and evaluation workbench"};
    app.require_subcommand(1);

    CommonFlags common;
    CorpusFlags corpus;

    // ---- build ----
    auto* build = app.add_subcommand("build", "count a corpus into a binary n-gram model");
    std::string build_out;
    std::uint32_t min_word_len = 2;
    std::uint64_t min_word_freq = 5;
    build->add_option("--profile", common.profile_path, "language profile file")->required();
    add_corpus_flags(build, corpus);
    build->add_option("--min-word-len", min_word_len, "minimum word length (codepoints)");
    build->add_option("--min-word-freq", min_word_freq,
                      "words must occur strictly more often than this");
    build->add_option("--out", build_out, "output model path")->required();

    // ---- check ----
    auto* check = app.add_subcommand("check", "spell-check lines, emitting JSONL reports");
    std::string check_input, check_output;
    check->add_option("--profile", common.profile_path)->required();
    check->add_option("--model", common.model_path)->required();
    check->add_option("--input", check_input, "input file (default: stdin)");
    check->add_option("--output", check_output, "output file (default: stdout)");
    check->add_option("--w1", common.w1);
    check->add_option("--w2", common.w2);
    check->add_option("--w3", common.w3);
    check->add_option("--k", common.k, "suggestions per error");
    check->add_option("--max-edit-distance", common.max_edit_distance);

    // ---- suggest ----
    auto* suggest = app.add_subcommand("suggest", "rank corrections for one token");
    std::string suggest_token;
    suggest->add_option("--profile", common.profile_path)->required();
    suggest->add_option("--model", common.model_path)->required();
    suggest->add_option("--token", suggest_token)->required();
    suggest->add_option("--k", common.k);
    suggest->add_option("--w1", common.w1);
    suggest->add_option("--w2", common.w2);
    suggest->add_option("--w3", common.w3);
    suggest->add_option("--max-edit-distance", common.max_edit_distance);
    suggest->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "json"}));

    // ---- synth ----
    auto* synth = app.add_subcommand("synth", "plant one typographic error per clean sentence");
    std::vector<std::string> plan_specs;
    std::uint64_t paper_scale = 0;
    std::string synth_out, synth_manifest;
    synth->add_option("--profile", common.profile_path)->required();
    synth->add_option("--model", common.model_path)->required();
    add_corpus_flags(synth, corpus);
    synth->add_option("--plan", plan_specs,
                      "generator:distance:count (repeatable; generators: random, swap, bigram)");
    synth->add_option("--paper-scale", paper_scale,
                      "emit the reference 1:1:1:2:2 mix of 140000/N records");
    synth->add_option("--seed", common.seed);
    synth->add_option("--out", synth_out, "dataset JSONL path")->required();
    synth->add_option("--manifest", synth_manifest,
                      "manifest path (default: <out>.manifest.json)");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "score a synthetic dataset or a misspelling-pair list");
    std::string eval_dataset, eval_pairs, pairs_mode = "unigram";
    eval->add_option("--profile", common.profile_path)->required();
    eval->add_option("--model", common.model_path)->required();
    eval->add_option("--dataset", eval_dataset, "synthetic dataset JSONL");
    eval->add_option("--pairs", eval_pairs, "misspelling<TAB>correction TSV");
    eval->add_option("--mode", pairs_mode, "pairs ranking mode")
        ->check(CLI::IsMember({"unigram", "context"}));
    eval->add_option("--w1", common.w1);
    eval->add_option("--w2", common.w2);
    eval->add_option("--w3", common.w3);
    eval->add_option("--k", common.k);
    eval->add_option("--max-edit-distance", common.max_edit_distance);
    eval->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "json"}));

    // ---- fp ----
    auto* fp = app.add_subcommand("fp", "false-positive rate over a clean corpus");
    fp->add_option("--profile", common.profile_path)->required();
    fp->add_option("--model", common.model_path)->required();
    add_corpus_flags(fp, corpus);
    fp->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "json"}));

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "time candidate generation methods by token length");
    std::string bench_lengths = "3-16";
    std::size_t per_length = 25;
    std::vector<std::string> bench_methods{"sda", "trie", "dawg"};
    bench->add_option("--profile", common.profile_path)->required();
    bench->add_option("--model", common.model_path)->required();
    bench->add_option("--lengths", bench_lengths, "inclusive range, e.g. 3-16");
    bench->add_option("--per-length", per_length, "random non-word tokens per length");
    bench->add_option("--methods", bench_methods,
                      "subset of naive, trie, dawg, bktree, sda");
    bench->add_option("--seed", common.seed);
    bench->add_option("--max-edit-distance", common.max_edit_distance);

    // ---- tune ----
    auto* tune = app.add_subcommand("tune", "sweep n-gram weights and report P@1 per configuration");
    std::string tune_dataset, tune_out;
    std::vector<double> w1_grid, w2_grid, w3_grid;
    int fig_powers = -1;
    tune->add_option("--profile", common.profile_path)->required();
    tune->add_option("--model", common.model_path)->required();
    tune->add_option("--dataset", tune_dataset)->required();
    tune->add_option("--w1-grid", w1_grid, "values for w1 (w2=w3=1)");
    tune->add_option("--w2-grid", w2_grid, "values for w2");
    tune->add_option("--w3-grid", w3_grid, "values for w3");
    tune->add_option("--powers", fig_powers,
                     "shorthand: sweep each weight over 10^0..10^N");
    tune->add_option("--out", tune_out, "write the full table as CSV");
    tune->add_option("--max-edit-distance", common.max_edit_distance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (build->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const SentenceStream stream = ingest(to_spec(corpus), profile);
            const NgramModel model = NgramModel::build(
                stream, ModelLimits{min_word_len, min_word_freq}, profile.language_code());
            model.save(build_out);
            std::cerr << "model: " << model.vocab_size() << " words, "
                      << model.bigram_entries() << " bigrams, " << model.trigram_entries()
                      << " trigrams -> " << build_out << '\n';
        } else if (check->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const DeleteIndex index = DeleteIndex::build(model, common.max_edit_distance);
            const Weights weights = to_weights(common);

            std::ifstream file_in;
            std::istream* in = &std::cin;
            if (!check_input.empty()) {
                file_in.open(check_input, std::ios::binary);
                if (!file_in) throw IoError("cannot open input file: " + check_input);
                in = &file_in;
            }
            std::ofstream file_out;
            std::ostream* out = &std::cout;
            if (!check_output.empty()) {
                file_out.open(check_output, std::ios::binary | std::ios::trunc);
                if (!file_out) throw IoError("cannot open output file: " + check_output);
                out = &file_out;
            }
            check_document(model, index, profile, *in, weights, common.k,
                           [&](SpellReport&& report) {
                               *out << report_to_json(report) << '\n';
                           });
        } else if (suggest->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const DeleteIndex index = DeleteIndex::build(model, common.max_edit_distance);
            const std::vector<std::string> sentence{suggest_token};
            const auto suggestions =
                rank(model, index, sentence, 0, to_weights(common), common.k);
            if (common.format == "json") {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& s : suggestions)
                    out.push_back({{"word", s.word},
                                   {"distance", s.edit_distance},
                                   {"score", s.total}});
                std::cout << out.dump() << '\n';
            } else {
                for (const auto& s : suggestions)
                    std::cout << s.word << '\t' << static_cast<int>(s.edit_distance)
                              << '\t' << s.total << '\n';
            }
        } else if (synth->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const SentenceStream stream = ingest(to_spec(corpus), profile);
            std::vector<PlanEntry> plan = parse_plan(plan_specs);
            if (paper_scale > 0) {
                if (paper_scale > 20'000)
                    throw Error("--paper-scale must be at most 20000");
                const auto scaled = paper_mix_plan(20'000 / paper_scale);
                plan.insert(plan.end(), scaled.begin(), scaled.end());
            }
            if (plan.empty()) throw Error("empty plan; pass --plan or --paper-scale");
            const auto records = build_dataset(model, profile, stream, plan, common.seed);
            const std::string manifest = synth_manifest.empty()
                                             ? synth_out + ".manifest.json"
                                             : synth_manifest;
            save_dataset(records, synth_out, manifest, plan, common.seed);
            std::cerr << records.size() << " records -> " << synth_out << '\n';
        } else if (eval->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const DeleteIndex index = DeleteIndex::build(model, common.max_edit_distance);
            const Weights weights = to_weights(common);
            if (eval_dataset.empty() == eval_pairs.empty())
                throw Error("pass exactly one of --dataset or --pairs");
            if (!eval_dataset.empty()) {
                const auto dataset = load_dataset(eval_dataset);
                if (dataset.empty()) throw Error("dataset is empty: " + eval_dataset);
                const EvalResult result =
                    evaluate_synthetic(model, index, profile, dataset, weights, common.k);
                if (common.format == "json")
                    std::cout << eval_to_json(result) << '\n';
                else
                    print_eval_table(std::cout, result);
            } else {
                const auto pairs = load_pairs(eval_pairs, profile);
                if (pairs.empty()) throw Error("no usable pairs in " + eval_pairs);
                const PairsResult result = evaluate_pairs(
                    model, index, pairs,
                    pairs_mode == "unigram" ? PairsMode::unigram_only
                                            : PairsMode::full_context,
                    weights, common.k);
                if (common.format == "json") {
                    std::cout << pairs_to_json(result) << '\n';
                } else {
                    std::cout << "pairs: " << result.n_pairs << '\n'
                              << "corrections known: " << result.pct_corrections_known
                              << "%\nmisspellings unknown: "
                              << result.pct_misspellings_unknown << "%\n";
                    for (const auto& [k_, v] : result.ranking.p_at)
                        std::cout << "P@" << k_ << ": " << v << '\n';
                    std::cout << "MRR: " << result.ranking.mrr << '\n';
                }
            }
        } else if (fp->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const SentenceStream stream = ingest(to_spec(corpus), profile);
            const FalsePositiveResult result =
                evaluate_false_positives(model, profile, stream);
            if (common.format == "json") {
                std::cout << fp_to_json(result) << '\n';
            } else {
                std::cout << "total words: " << result.total_words
                          << "\ndetected known: " << result.detected_known << " ("
                          << result.percent << "%)\n";
                for (const auto& [token, count] : result.top_unknown)
                    std::cout << token << '\t' << count << '\n';
            }
        } else if (bench->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const DeleteIndex index = DeleteIndex::build(model, common.max_edit_distance);

            const auto dash = bench_lengths.find('-');
            const std::size_t lo = std::stoul(bench_lengths.substr(0, dash));
            const std::size_t hi = dash == std::string::npos
                                       ? lo
                                       : std::stoul(bench_lengths.substr(dash + 1));
            if (lo < 1 || hi < lo) throw Error("bad --lengths range");

            std::map<std::size_t, std::vector<std::string>> tokens_by_length;
            std::uint64_t counter = 0;
            for (std::size_t len = lo; len <= hi; ++len) {
                auto& bucket = tokens_by_length[len];
                while (bucket.size() < per_length) {
                    const std::string token = textgen::random_token(
                        len, Rng::derive(common.seed, ++counter));
                    if (!model.contains(token)) bucket.push_back(token);
                }
            }
            std::vector<SuggestMethod> methods;
            for (const auto& name : bench_methods)
                methods.push_back(suggest_method_from_string(name));
            const auto rows = bench_suggesters(model, index, tokens_by_length, methods);
            std::cout << bench_to_tsv(rows);
        } else if (tune->parsed()) {
            const LanguageProfile profile = load_profile(common.profile_path);
            const NgramModel model = NgramModel::load(common.model_path);
            const DeleteIndex index = DeleteIndex::build(model, common.max_edit_distance);
            const auto dataset = load_dataset(tune_dataset);
            if (dataset.empty()) throw Error("dataset is empty: " + tune_dataset);

            WeightGrid grid;
            if (fig_powers >= 0) grid = powers_of_ten_grid(fig_powers);
            if (!w1_grid.empty()) grid.w1 = w1_grid;
            if (!w2_grid.empty()) grid.w2 = w2_grid;
            if (!w3_grid.empty()) grid.w3 = w3_grid;

            const SweepResult result = sweep_weights(model, index, profile, dataset, grid);
            const std::string csv = sweep_to_csv(result);
            if (!tune_out.empty()) {
                std::ofstream out(tune_out, std::ios::binary | std::ios::trunc);
                if (!out) throw IoError("cannot write " + tune_out);
                out << csv;
            } else {
                std::cout << csv;
            }
            const auto& best = result.rows[result.best];
            std::cerr << "best: w1=" << best.weights.w1 << " w2=" << best.weights.w2
                      << " w3=" << best.weights.w3 << " P@1=" << best.p1 << '\n';
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
