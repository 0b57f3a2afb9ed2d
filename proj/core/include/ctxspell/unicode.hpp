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

#ifndef CTXSPELL_UNICODE_HPP
#define CTXSPELL_UNICODE_HPP

#include <string>
#include <string_view>

namespace ctxspell {

/// Decodes a full UTF-8 string. Throws EncodingError with the byte offset of
/// the first malformed sequence. Overlong encodings and surrogates are
/// rejected.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);
std::string encode_utf8(char32_t cp);

/// Number of codepoints in a valid UTF-8 string.
std::size_t codepoint_length(std::string_view text);

/// Unicode White_Space property (the codepoints a tokenizer treats as pure
/// separators).
bool is_whitespace(char32_t cp);

/// Covers ASCII punctuation plus the common punctuation blocks of the scripts
/// we ship profiles for (general punctuation, Devanagari danda, CJK and
/// fullwidth forms). Not a full category-P test.
bool is_punctuation(char32_t cp);

/// Simple one-to-one lowercase mapping for the bicameral scripts the starter
/// profiles use: Latin (ASCII, Latin-1, Extended-A), Greek and Cyrillic.
/// Returns cp unchanged when no mapping is known.
char32_t simple_lowercase(char32_t cp);

/// Inverse direction of simple_lowercase for the same ranges.
char32_t simple_uppercase(char32_t cp);

/// True when cp has a lowercase mapping different from itself.
bool is_uppercase_letter(char32_t cp);

} // namespace ctxspell

#endif // CTXSPELL_UNICODE_HPP
