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

#include "ctxspell/language_profile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ctxspell/errors.hpp"
#include "ctxspell/unicode.hpp"

namespace ctxspell {

namespace {

std::vector<char32_t> sorted_unique(std::vector<char32_t> cps) {
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    return cps;
}

bool is_hex_range(std::string_view item, char32_t& lo, char32_t& hi) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 >= item.size())
        return false;
    const auto parse_hex = [](std::string_view s, char32_t& out) {
        if (s.empty() || s.size() > 6) return false;
        char32_t v = 0;
        for (char c : s) {
            if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
            v = v * 16 + static_cast<char32_t>(
                             c <= '9' ? c - '0' : (c | 0x20) - 'a' + 10);
        }
        out = v;
        return true;
    };
    return parse_hex(item.substr(0, dash), lo) && parse_hex(item.substr(dash + 1), hi);
}

// Value syntax: comma-separated items, each either a hex codepoint range
// (0061-007A) or a run of literal characters (äöüß).
std::vector<char32_t> parse_charset(std::string_view value, int line) {
    std::vector<char32_t> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const std::string_view item =
            value.substr(start, comma == std::string_view::npos ? value.size() - start
                                                                : comma - start);
        if (!item.empty()) {
            char32_t lo, hi;
            if (is_hex_range(item, lo, hi)) {
                if (hi < lo)
                    throw ProfileParseError("descending codepoint range", line);
                if (hi - lo > 0x20000)
                    throw ProfileParseError("codepoint range too wide", line);
                for (char32_t cp = lo; cp <= hi; ++cp) out.push_back(cp);
            } else {
                std::u32string cps;
                try {
                    cps = decode_utf8(item);
                } catch (const EncodingError&) {
                    throw ProfileParseError("invalid UTF-8 in character list", line);
                }
                out.insert(out.end(), cps.begin(), cps.end());
            }
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Collapses a sorted codepoint set back into range items.
std::string format_charset(const std::vector<char32_t>& cps) {
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    char buf[16];
    while (i < cps.size()) {
        std::size_t j = i;
        while (j + 1 < cps.size() && cps[j + 1] == cps[j] + 1) ++j;
        if (!first) out << ',';
        first = false;
        std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cps[i]));
        out << buf;
        if (j > i) {
            std::snprintf(buf, sizeof buf, "-%04X", static_cast<unsigned>(cps[j]));
            out << buf;
        } else {
            // single codepoint: emit a degenerate range so reload is unambiguous
            std::snprintf(buf, sizeof buf, "-%04X", static_cast<unsigned>(cps[i]));
            out << buf;
        }
        i = j + 1;
    }
    return out.str();
}

} // namespace

LanguageProfile::LanguageProfile(std::string language_code, bool case_sensitive,
                                 std::vector<char32_t> letters,
                                 std::vector<char32_t> digits,
                                 std::vector<char32_t> terminators)
    : language_code_(std::move(language_code)),
      case_sensitive_(case_sensitive),
      letters_(sorted_unique(std::move(letters))),
      digits_(sorted_unique(std::move(digits))),
      terminators_(sorted_unique(std::move(terminators))) {
    rebuild_ascii_cache();
}

void LanguageProfile::rebuild_ascii_cache() {
    std::fill(std::begin(ascii_letter_), std::end(ascii_letter_), false);
    std::fill(std::begin(ascii_digit_), std::end(ascii_digit_), false);
    for (char32_t cp : letters_)
        if (cp < 128) ascii_letter_[cp] = true;
    for (char32_t cp : digits_)
        if (cp < 128) ascii_digit_[cp] = true;
}

bool LanguageProfile::is_letter(char32_t cp) const {
    if (cp < 128) return ascii_letter_[cp];
    return std::binary_search(letters_.begin(), letters_.end(), cp);
}

bool LanguageProfile::is_digit(char32_t cp) const {
    if (cp < 128) return ascii_digit_[cp];
    return std::binary_search(digits_.begin(), digits_.end(), cp);
}

bool LanguageProfile::is_terminator(char32_t cp) const {
    if (cp == U'.' || cp == U'!' || cp == U'?') return true;
    return std::binary_search(terminators_.begin(), terminators_.end(), cp);
}

void LanguageProfile::validate() const {
    if (language_code_.empty())
        throw ProfileValidationError("profile has no language code");
    if (letters_.empty())
        throw ProfileValidationError("letters set must not be empty");
    std::vector<char32_t> overlap;
    std::set_intersection(letters_.begin(), letters_.end(), digits_.begin(),
                          digits_.end(), std::back_inserter(overlap));
    if (!overlap.empty())
        throw ProfileValidationError(
            "letters and digits must be disjoint; '" + encode_utf8(overlap.front()) +
            "' appears in both");
    for (char32_t cp : letters_) {
        if (is_whitespace(cp) || is_punctuation(cp))
            throw ProfileValidationError("whitespace or punctuation codepoint '" +
                                         encode_utf8(cp) + "' listed as letter");
    }
    for (char32_t cp : digits_) {
        if (is_whitespace(cp) || is_punctuation(cp))
            throw ProfileValidationError("whitespace or punctuation codepoint '" +
                                         encode_utf8(cp) + "' listed as digit");
    }
    if (case_sensitive_) {
        for (char32_t cp : letters_) {
            const char32_t lower = simple_lowercase(cp);
            if (lower != cp && !is_letter(lower))
                throw ProfileValidationError(
                    "uppercase letter '" + encode_utf8(cp) +
                    "' has no lowercase counterpart in letters");
        }
    }
}

LanguageProfile parse_profile(std::string_view text) {
    std::string language;
    bool case_sensitive = false;
    bool saw_case = false;
    std::vector<char32_t> letters, digits, terminators;
    bool saw_letters = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        line = trim(line);
        if (!line.empty() && line.front() != '#') {
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ProfileParseError("expected key=value", line_no);
            const std::string_view key = trim(line.substr(0, eq));
            const std::string_view value = trim(line.substr(eq + 1));
            if (key == "language") {
                language = std::string(value);
            } else if (key == "case_sensitive") {
                if (value == "true")
                    case_sensitive = true;
                else if (value == "false")
                    case_sensitive = false;
                else
                    throw ProfileParseError("case_sensitive must be true or false",
                                            line_no);
                saw_case = true;
            } else if (key == "letters") {
                letters = parse_charset(value, line_no);
                saw_letters = true;
            } else if (key == "digits") {
                digits = parse_charset(value, line_no);
            } else if (key == "terminators") {
                terminators = parse_charset(value, line_no);
            } else {
                throw ProfileParseError("unknown key '" + std::string(key) + "'",
                                        line_no);
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    if (language.empty()) throw ProfileParseError("missing language key", line_no);
    if (!saw_case) throw ProfileParseError("missing case_sensitive key", line_no);
    if (!saw_letters) throw ProfileParseError("missing letters key", line_no);

    LanguageProfile profile(std::move(language), case_sensitive, std::move(letters),
                            std::move(digits), std::move(terminators));
    profile.validate();
    return profile;
}

LanguageProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open profile file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

std::string format_profile(const LanguageProfile& profile) {
    std::ostringstream out;
    out << "language=" << profile.language_code() << '\n';
    out << "case_sensitive=" << (profile.case_sensitive() ? "true" : "false") << '\n';
    out << "letters=" << format_charset(profile.letters()) << '\n';
    if (!profile.digits().empty())
        out << "digits=" << format_charset(profile.digits()) << '\n';
    if (!profile.terminators().empty())
        out << "terminators=" << format_charset(profile.terminators()) << '\n';
    return out.str();
}

void save_profile(const LanguageProfile& profile, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write profile file: " + path.string());
    out << format_profile(profile);
    if (!out) throw IoError("failed writing profile file: " + path.string());
}

} // namespace ctxspell
