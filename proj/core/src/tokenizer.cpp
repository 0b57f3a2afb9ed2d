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

#include "ctxspell/tokenizer.hpp"

#include "ctxspell/unicode.hpp"

namespace ctxspell {

const char* to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::word: return "word";
        case TokenKind::number: return "number";
        case TokenKind::foreign: return "foreign";
        case TokenKind::other: return "other";
    }
    return "?";
}

std::vector<Token> tokenize(std::u32string_view text, const LanguageProfile& profile) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char32_t cp = text[i];
        if (is_whitespace(cp)) {
            ++i;
            continue;
        }
        if (profile.is_supported(cp)) {
            const std::size_t start = i;
            bool has_letter = false;
            while (i < n && profile.is_supported(text[i])) {
                has_letter |= profile.is_letter(text[i]);
                ++i;
            }
            tokens.push_back(Token{encode_utf8(text.substr(start, i - start)),
                                   has_letter ? TokenKind::word : TokenKind::number,
                                   start, i - start});
        } else {
            tokens.push_back(Token{encode_utf8(cp),
                                   is_punctuation(cp) ? TokenKind::other
                                                      : TokenKind::foreign,
                                   i, 1});
            ++i;
        }
    }
    return tokens;
}

std::vector<Token> tokenize(std::string_view text, const LanguageProfile& profile) {
    return tokenize(decode_utf8(text), profile);
}

bool is_checkable_word(std::string_view text, const LanguageProfile& profile) {
    const std::u32string cps = decode_utf8(text);
    if (cps.size() < 3) return false;
    for (char32_t cp : cps)
        if (!profile.is_letter(cp)) return false;
    return true;
}

bool is_checkable_word(const Token& token, const LanguageProfile& profile) {
    if (token.kind != TokenKind::word) return false;
    return is_checkable_word(token.text, profile);
}

} // namespace ctxspell
