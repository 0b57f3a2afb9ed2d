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

#ifndef CTXSPELL_LEVENSHTEIN_HPP
#define CTXSPELL_LEVENSHTEIN_HPP

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

namespace ctxspell {

/// Plain Levenshtein distance over codepoints: unit-cost insert, delete and
/// substitute. No transposition; an adjacent swap costs 2.
inline std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<std::size_t> row(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t diag = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            diag = row[i];
            row[i] = std::min({row[i] + 1, row[i - 1] + 1, sub});
        }
    }
    return row[a.size()];
}

/// Levenshtein with a cutoff: returns the exact distance when it is
/// <= max_dist, otherwise any value > max_dist. Rows whose minimum already
/// exceeds the cutoff abandon early, which is what makes candidate
/// verification cheap.
inline std::size_t levenshtein_bounded(std::u32string_view a, std::u32string_view b,
                                       std::size_t max_dist) {
    if (a.size() > b.size()) std::swap(a, b);
    if (b.size() - a.size() > max_dist) return max_dist + 1;
    std::vector<std::size_t> row(a.size() + 1);
    for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t diag = row[0];
        row[0] = j;
        std::size_t best = row[0];
        for (std::size_t i = 1; i <= a.size(); ++i) {
            const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            diag = row[i];
            row[i] = std::min({row[i] + 1, row[i - 1] + 1, sub});
            best = std::min(best, row[i]);
        }
        if (best > max_dist) return max_dist + 1;
    }
    return row[a.size()];
}

} // namespace ctxspell

#endif // CTXSPELL_LEVENSHTEIN_HPP
