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

#ifndef CTXSPELL_TESTS_FIXTURES_HPP
#define CTXSPELL_TESTS_FIXTURES_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ctxspell/corpus_ingest.hpp"
#include "ctxspell/language_profile.hpp"
#include "ctxspell/ngram_model.hpp"

#ifndef CTXSPELL_DATA_DIR
#define CTXSPELL_DATA_DIR "data"
#endif

namespace ctxspell::testing {

inline std::filesystem::path data_dir() { return CTXSPELL_DATA_DIR; }

inline LanguageProfile english_profile() {
    return load_profile(data_dir() / "profiles" / "en.profile");
}

/// The worked two-sentence stream most count fixtures are derived from.
inline SentenceStream toy_stream() {
    return {{"the", "cat", "sat"}, {"the", "cat", "ran"}};
}

/// Toy stream counted with thresholds that keep everything.
inline NgramModel toy_model() {
    return NgramModel::build(toy_stream(), ModelLimits{1, 0}, "en");
}

/// Builds a model over an explicit word list (each word repeated enough to
/// clear the default thresholds), for suggester-only tests.
inline NgramModel dictionary_model(const std::vector<std::string>& words,
                                   std::uint64_t repeats = 6) {
    SentenceStream stream;
    for (std::uint64_t r = 0; r < repeats; ++r)
        for (const auto& word : words) stream.push_back({word});
    return NgramModel::build(stream, ModelLimits{1, repeats - 1}, "en");
}

/// Unique scratch directory under the system temp dir; removed on scope exit.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("ctxspell_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out << content;
        return p;
    }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    return content;
}

} // namespace ctxspell::testing

#endif // CTXSPELL_TESTS_FIXTURES_HPP
