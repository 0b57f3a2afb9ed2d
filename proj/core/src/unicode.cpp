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

#include "ctxspell/unicode.hpp"

#include "ctxspell/errors.hpp"

namespace ctxspell {

namespace {

// Decodes one codepoint starting at `pos`; advances `pos` past it.
char32_t decode_one(std::string_view text, std::size_t& pos) {
    const auto fail = [&](const char* what) -> char32_t {
        throw EncodingError(what, pos);
    };
    const unsigned char b0 = static_cast<unsigned char>(text[pos]);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return fail("invalid UTF-8 lead byte");
    }
    if (pos + len > text.size()) return fail("truncated UTF-8 sequence");
    for (int i = 1; i < len; ++i) {
        const unsigned char b = static_cast<unsigned char>(text[pos + i]);
        if ((b & 0xC0) != 0x80) return fail("invalid UTF-8 continuation byte");
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_for_len[len]) return fail("overlong UTF-8 encoding");
    if (cp >= 0xD800 && cp <= 0xDFFF) return fail("UTF-8 encoded surrogate");
    if (cp > 0x10FFFF) return fail("codepoint out of range");
    pos += len;
    return cp;
}

} // namespace

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) out.push_back(decode_one(text, pos));
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size());
    for (char32_t cp : codepoints) out += encode_utf8(cp);
    return out;
}

std::size_t codepoint_length(std::string_view text) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        decode_one(text, pos);
        ++n;
    }
    return n;
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
        case 0x0009:
        case 0x000A:
        case 0x000B:
        case 0x000C:
        case 0x000D:
        case 0x0020:
        case 0x0085:
        case 0x00A0:
        case 0x1680:
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punctuation(char32_t cp) {
    // ASCII
    if ((cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
        (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E))
        return true;
    // Latin-1 punctuation and symbols
    if ((cp >= 0xA1 && cp <= 0xBF && cp != 0xAA && cp != 0xB5 && cp != 0xBA) ||
        cp == 0xD7 || cp == 0xF7)
        return true;
    // General punctuation (dashes, quotes, ellipsis); spaces excluded above.
    if (cp >= 0x2010 && cp <= 0x2027) return true;
    if (cp >= 0x2030 && cp <= 0x205E) return true;
    // Devanagari danda / double danda and abbreviation sign
    if (cp == 0x0964 || cp == 0x0965 || cp == 0x0970) return true;
    // CJK symbols and punctuation, fullwidth forms
    if (cp >= 0x3001 && cp <= 0x303F) return true;
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    // Arabic and Greek question marks, Armenian stops
    if (cp == 0x061F || cp == 0x037E || cp == 0x0589) return true;
    return false;
}

char32_t simple_lowercase(char32_t cp) {
    // ASCII
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 supplement (except the multiplication sign)
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    // Latin Extended-A: alternating pairs, three sub-ranges
    if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp == 0x0178) return 0x00FF; // Ÿ
    if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
    // Greek
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;
    // Cyrillic
    if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
    if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
    return cp;
}

char32_t simple_uppercase(char32_t cp) {
    if (cp >= U'a' && cp <= U'z') return cp - 0x20;
    if (cp >= 0x00E0 && cp <= 0x00FE && cp != 0x00F7) return cp - 0x20;
    if (cp == 0x00FF) return 0x0178;
    if (cp >= 0x0101 && cp <= 0x0138) return (cp % 2 == 1) ? cp - 1 : cp;
    if (cp >= 0x013A && cp <= 0x0149) return (cp % 2 == 0) ? cp - 1 : cp;
    if (cp >= 0x014B && cp <= 0x0178) return (cp % 2 == 1) ? cp - 1 : cp;
    if (cp >= 0x017A && cp <= 0x017F) return (cp % 2 == 0) ? cp - 1 : cp;
    if (cp >= 0x03B1 && cp <= 0x03C9 && cp != 0x03C2) return cp - 0x20;
    if (cp >= 0x0430 && cp <= 0x044F) return cp - 0x20;
    if (cp >= 0x0450 && cp <= 0x045F) return cp - 0x50;
    return cp;
}

bool is_uppercase_letter(char32_t cp) {
    return simple_lowercase(cp) != cp;
}

} // namespace ctxspell
