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

#ifndef CTXSPELL_TOKENIZER_HPP
#define CTXSPELL_TOKENIZER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ctxspell/language_profile.hpp"

namespace ctxspell {

enum class TokenKind {
    word,    // maximal run of supported characters containing >= 1 letter
    number,  // maximal run of supported characters, digits only
    foreign, // single unsupported, non-whitespace, non-punctuation codepoint
    other,   // single punctuation codepoint
};

struct Token {
    std::string text;
    TokenKind kind;
    std::size_t char_start = 0; // codepoint offset into the input
    std::size_t char_len = 0;   // codepoint count

    bool operator==(const Token&) const = default;
};

const char* to_string(TokenKind kind);

/// Splits text into maximal runs of profile-supported characters; every
/// unsupported non-whitespace codepoint becomes its own single-character
/// token. Whitespace separates and is dropped. Total function: any input,
/// including empty, is fine.
std::vector<Token> tokenize(std::u32string_view text, const LanguageProfile& profile);

/// UTF-8 convenience wrapper; throws EncodingError on malformed input.
std::vector<Token> tokenize(std::string_view text, const LanguageProfile& profile);

/// True for tokens the checker may flag: word kind, letters only (no digits
/// mixed in), length >= 3 codepoints.
bool is_checkable_word(const Token& token, const LanguageProfile& profile);
bool is_checkable_word(std::string_view text, const LanguageProfile& profile);

} // namespace ctxspell

#endif // CTXSPELL_TOKENIZER_HPP
