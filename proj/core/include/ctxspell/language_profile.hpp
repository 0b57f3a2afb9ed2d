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

#ifndef CTXSPELL_LANGUAGE_PROFILE_HPP
#define CTXSPELL_LANGUAGE_PROFILE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ctxspell {

/// Per-language supported-character inventory. Everything the engine knows
/// about a language lives here: which codepoints count as letters and digits
/// (anything else is foreign), whether the script is cased, and which extra
/// codepoints terminate sentences. Profiles are plain data files, so adding a
/// language needs no code change.
///
/// Immutable after load; safe to share across threads.
class LanguageProfile {
  public:
    LanguageProfile() = default;
    LanguageProfile(std::string language_code, bool case_sensitive,
                    std::vector<char32_t> letters, std::vector<char32_t> digits,
                    std::vector<char32_t> terminators = {});

    const std::string& language_code() const noexcept { return language_code_; }
    bool case_sensitive() const noexcept { return case_sensitive_; }

    /// Sorted, duplicate-free codepoint inventories.
    const std::vector<char32_t>& letters() const noexcept { return letters_; }
    const std::vector<char32_t>& digits() const noexcept { return digits_; }

    /// Extra sentence terminators beyond '.', '!', '?'.
    const std::vector<char32_t>& terminators() const noexcept { return terminators_; }

    bool is_letter(char32_t cp) const;
    bool is_digit(char32_t cp) const;
    bool is_supported(char32_t cp) const { return is_letter(cp) || is_digit(cp); }
    bool is_terminator(char32_t cp) const;

    /// Checks all profile invariants; throws ProfileValidationError naming the
    /// violated rule.
    void validate() const;

  private:
    std::string language_code_;
    bool case_sensitive_ = false;
    std::vector<char32_t> letters_;
    std::vector<char32_t> digits_;
    std::vector<char32_t> terminators_;
    bool ascii_letter_[128] = {};
    bool ascii_digit_[128] = {};

    void rebuild_ascii_cache();
};

/// Parses the key=value profile format (see data/profiles/*.profile).
/// Throws ProfileParseError with a line number on malformed input and
/// ProfileValidationError when the parsed profile violates an invariant.
LanguageProfile parse_profile(std::string_view text);

LanguageProfile load_profile(const std::filesystem::path& path);

/// Canonical serialization; load(save(p)) preserves the character inventory.
std::string format_profile(const LanguageProfile& profile);
void save_profile(const LanguageProfile& profile, const std::filesystem::path& path);

} // namespace ctxspell

#endif // CTXSPELL_LANGUAGE_PROFILE_HPP
