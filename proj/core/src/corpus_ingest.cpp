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

#include "ctxspell/corpus_ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ctxspell/errors.hpp"
#include "ctxspell/tokenizer.hpp"
#include "ctxspell/unicode.hpp"

namespace ctxspell {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on corpus file: " + path.string());
    return std::move(buf).str();
}

std::vector<std::filesystem::path> expand_source(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        return files;
    }
    if (!fs::exists(path)) throw IoError("corpus source does not exist: " + path.string());
    return {path};
}

bool is_blank(std::u32string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char32_t cp) { return is_whitespace(cp); });
}

// Splits a document body into blank-line separated blocks; lines inside a
// block stay newline-joined.
std::vector<std::u32string> split_blocks(std::u32string_view text) {
    std::vector<std::u32string> blocks;
    std::u32string current;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find(U'\n', pos);
        auto line = text.substr(
            pos, nl == std::u32string_view::npos ? text.size() - pos : nl - pos);
        while (!line.empty() && line.back() == U'\r') line.remove_suffix(1);
        if (is_blank(line)) {
            if (!current.empty()) {
                blocks.push_back(std::move(current));
                current.clear();
            }
        } else {
            if (!current.empty()) current.push_back(U'\n');
            current += line;
        }
        if (nl == std::u32string_view::npos) break;
        pos = nl + 1;
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return blocks;
}

// Subtitle metadata: a pure counter line or a timing line with "-->".
bool is_subtitle_metadata(std::u32string_view line) {
    if (line.find(U"-->") != std::u32string_view::npos) return true;
    bool has_digit = false;
    for (char32_t cp : line) {
        if (cp >= U'0' && cp <= U'9') {
            has_digit = true;
        } else if (!is_whitespace(cp)) {
            return false;
        }
    }
    return has_digit;
}

void emit_sentences(std::u32string_view text, const LanguageProfile& profile,
                    SentenceStream& out) {
    for (const auto& sentence : split_sentences(text, profile)) {
        Sentence tokens = sentence_tokens(sentence, profile);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
}

} // namespace

std::vector<std::u32string> split_sentences(std::u32string_view text,
                                            const LanguageProfile& profile) {
    std::vector<std::u32string> sentences;
    std::u32string current;
    const auto flush = [&] {
        if (!is_blank(current)) sentences.push_back(current);
        current.clear();
    };
    for (char32_t cp : text) {
        if (cp == U'\n' || profile.is_terminator(cp)) {
            flush();
        } else {
            current.push_back(cp);
        }
    }
    flush();
    return sentences;
}

Sentence sentence_tokens(std::u32string_view sentence, const LanguageProfile& profile) {
    Sentence out;
    for (auto& token : tokenize(sentence, profile)) {
        if (token.kind == TokenKind::word || token.kind == TokenKind::number)
            out.push_back(std::move(token.text));
    }
    return out;
}

SentenceStream ingest(const CorpusSpec& spec, const LanguageProfile& profile) {
    SentenceStream stream;
    std::uint64_t articles_used = 0;
    std::uint64_t subtitle_files_used = 0;

    for (const auto& [path, kind] : spec.sources) {
        for (const auto& file : expand_source(path)) {
            if (kind == SourceKind::article) {
                if (articles_used >= spec.max_articles) break;
                const std::u32string text = decode_utf8(read_file(file));
                for (const auto& block : split_blocks(text)) {
                    if (articles_used >= spec.max_articles) break;
                    ++articles_used;
                    emit_sentences(block, profile, stream);
                }
            } else {
                if (subtitle_files_used >= spec.max_subtitle_files) break;
                ++subtitle_files_used;
                const std::u32string text = decode_utf8(read_file(file));
                for (const auto& block : split_blocks(text)) {
                    // keep payload lines only
                    std::size_t pos = 0;
                    const std::u32string_view view = block;
                    while (pos <= view.size()) {
                        const auto nl = view.find(U'\n', pos);
                        const auto line = view.substr(
                            pos, nl == std::u32string_view::npos ? view.size() - pos
                                                                 : nl - pos);
                        if (!is_blank(line) && !is_subtitle_metadata(line))
                            emit_sentences(line, profile, stream);
                        if (nl == std::u32string_view::npos) break;
                        pos = nl + 1;
                    }
                }
            }
        }
    }
    return stream;
}

} // namespace ctxspell
