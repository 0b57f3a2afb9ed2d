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

#include "ctxspell/ngram_model.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

#include <zlib.h>

#include "byte_io.hpp"
#include "ctxspell/errors.hpp"
#include "ctxspell/unicode.hpp"

namespace ctxspell {

namespace {

constexpr char kMagic[4] = {'C', 'S', 'P', 'K'};
constexpr std::uint16_t kFormatVersion = 1;

std::uint32_t crc_of(std::string_view bytes) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
                static_cast<uInt>(bytes.size())));
}

std::uint64_t pack2(WordId a, WordId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Key3 {
    WordId a, b, c;
    bool operator==(const Key3&) const = default;
};

struct Key3Hash {
    std::size_t operator()(const Key3& k) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t v : {k.a, k.b, k.c}) {
            h ^= v;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

NgramModel NgramModel::build(const SentenceStream& stream, ModelLimits limits,
                             std::string language_code) {
    if (stream.empty()) throw BuildError("cannot build a model from an empty stream");

    // Raw unigram counts over the whole stream.
    std::unordered_map<std::string, std::uint64_t> raw;
    for (const auto& sentence : stream)
        for (const auto& token : sentence) ++raw[token];

    // Threshold filter, then deterministic id assignment: by descending
    // frequency, ties lexicographic.
    std::vector<std::pair<std::string, std::uint64_t>> survivors;
    survivors.reserve(raw.size());
    for (auto& [word, count] : raw) {
        if (count <= limits.min_word_freq) continue;
        if (codepoint_length(word) < limits.min_word_len) continue;
        survivors.emplace_back(word, count);
    }
    if (survivors.empty())
        throw BuildError("no word survived the length/frequency thresholds");
    std::sort(survivors.begin(), survivors.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first < y.first;
    });

    NgramModel model;
    model.language_code_ = std::move(language_code);
    model.limits_ = limits;
    model.words_.reserve(survivors.size());
    model.unigram_counts_.reserve(survivors.size());
    for (auto& [word, count] : survivors) {
        model.ids_.emplace(word, static_cast<WordId>(model.words_.size()));
        model.words_.push_back(word);
        model.unigram_counts_.push_back(count);
        model.total_unigrams_ += count;
    }

    // Bigram/trigram windows over the original sentences; an n-gram is kept
    // only when every member word is known.
    std::unordered_map<std::uint64_t, std::uint64_t> bi;
    std::unordered_map<Key3, std::uint64_t, Key3Hash> tri;
    std::vector<std::optional<WordId>> ids;
    for (const auto& sentence : stream) {
        ids.clear();
        ids.reserve(sentence.size());
        for (const auto& token : sentence) ids.push_back(model.find(token));
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
            if (ids[i] && ids[i + 1]) {
                ++bi[pack2(*ids[i], *ids[i + 1])];
                if (i + 2 < ids.size() && ids[i + 2])
                    ++tri[Key3{*ids[i], *ids[i + 1], *ids[i + 2]}];
            }
        }
    }

    // Freeze into CSR arrays. Bigrams sort by (head, child); the trigram
    // section reuses that order for its (a,b) keys.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bi_sorted(bi.begin(), bi.end());
    std::sort(bi_sorted.begin(), bi_sorted.end());
    std::vector<std::pair<Key3, std::uint64_t>> tri_sorted(tri.begin(), tri.end());
    std::sort(tri_sorted.begin(), tri_sorted.end(), [](const auto& x, const auto& y) {
        return std::array{x.first.a, x.first.b, x.first.c} <
               std::array{y.first.a, y.first.b, y.first.c};
    });

    const std::size_t vocab = model.words_.size();
    model.bi_off_.assign(vocab + 1, 0);
    model.bi_child_.reserve(bi_sorted.size());
    model.bi_count_.reserve(bi_sorted.size());
    for (const auto& [key, count] : bi_sorted) {
        const WordId head = static_cast<WordId>(key >> 32);
        model.bi_child_.push_back(static_cast<WordId>(key & 0xFFFFFFFFu));
        model.bi_count_.push_back(count);
        model.bi_off_[head + 1] = model.bi_child_.size();
    }
    // heads without successors inherit the previous offset
    for (std::size_t i = 1; i <= vocab; ++i)
        model.bi_off_[i] = std::max(model.bi_off_[i], model.bi_off_[i - 1]);

    model.tri_off_.assign(bi_sorted.size() + 1, 0);
    model.tri_child_.reserve(tri_sorted.size());
    model.tri_count_.reserve(tri_sorted.size());
    std::size_t tri_pos = 0;
    for (std::size_t b_idx = 0; b_idx < bi_sorted.size(); ++b_idx) {
        const std::uint64_t key = bi_sorted[b_idx].first;
        while (tri_pos < tri_sorted.size() &&
               pack2(tri_sorted[tri_pos].first.a, tri_sorted[tri_pos].first.b) == key) {
            model.tri_child_.push_back(tri_sorted[tri_pos].first.c);
            model.tri_count_.push_back(tri_sorted[tri_pos].second);
            ++tri_pos;
        }
        model.tri_off_[b_idx + 1] = model.tri_child_.size();
    }
    // Every stored trigram's prefix bigram is stored, so the walk must have
    // consumed everything.
    if (tri_pos != tri_sorted.size())
        throw BuildError("internal: trigram without stored prefix bigram");

    return model;
}

std::optional<WordId> NgramModel::find(std::string_view word) const {
    const auto it = ids_.find(word);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<WordId> NgramModel::find_with_case_fallback(std::string_view word) const {
    if (const auto id = find(word)) return id;
    if (word.empty()) return std::nullopt;
    const std::u32string cps = decode_utf8(word);
    if (!is_uppercase_letter(cps[0])) return std::nullopt;
    std::u32string lowered(cps);
    lowered[0] = simple_lowercase(lowered[0]);
    return find(encode_utf8(lowered));
}

bool NgramModel::contains(std::string_view word) const {
    return find_with_case_fallback(word).has_value();
}

std::uint64_t NgramModel::unigram_count(std::string_view word) const {
    const auto id = find(word);
    return id ? unigram_counts_[*id] : 0;
}

const std::uint64_t* NgramModel::find_bigram_slot(WordId a, WordId b) const {
    const auto begin = bi_child_.begin() + static_cast<std::ptrdiff_t>(bi_off_[a]);
    const auto end = bi_child_.begin() + static_cast<std::ptrdiff_t>(bi_off_[a + 1]);
    const auto it = std::lower_bound(begin, end, b);
    if (it == end || *it != b) return nullptr;
    return &bi_count_[static_cast<std::size_t>(it - bi_child_.begin())];
}

std::uint64_t NgramModel::bigram_count(WordId a, WordId b) const {
    const auto* slot = find_bigram_slot(a, b);
    return slot ? *slot : 0;
}

std::uint64_t NgramModel::trigram_count(WordId a, WordId b, WordId c) const {
    const auto* slot = find_bigram_slot(a, b);
    if (!slot) return 0;
    const std::size_t b_idx = static_cast<std::size_t>(slot - bi_count_.data());
    const auto begin = tri_child_.begin() + static_cast<std::ptrdiff_t>(tri_off_[b_idx]);
    const auto end = tri_child_.begin() + static_cast<std::ptrdiff_t>(tri_off_[b_idx + 1]);
    const auto it = std::lower_bound(begin, end, c);
    if (it == end || *it != c) return 0;
    return tri_count_[static_cast<std::size_t>(it - tri_child_.begin())];
}

std::uint64_t NgramModel::bigram_count(std::string_view a, std::string_view b) const {
    const auto ia = find(a);
    const auto ib = find(b);
    if (!ia || !ib) return 0;
    return bigram_count(*ia, *ib);
}

std::uint64_t NgramModel::trigram_count(std::string_view a, std::string_view b,
                                        std::string_view c) const {
    const auto ia = find(a);
    const auto ib = find(b);
    const auto ic = find(c);
    if (!ia || !ib || !ic) return 0;
    return trigram_count(*ia, *ib, *ic);
}

double NgramModel::cond_prob(std::span<const std::string> context,
                             std::string_view word) const {
    std::uint64_t num = 0, den = 0;
    switch (context.size()) {
        case 0:
            num = unigram_count(word);
            den = total_unigrams_;
            break;
        case 1:
            num = bigram_count(context[0], word);
            den = unigram_count(context[0]);
            break;
        case 2:
            num = trigram_count(context[0], context[1], word);
            den = bigram_count(context[0], context[1]);
            break;
        default:
            throw std::invalid_argument("cond_prob context is limited to 2 words");
    }
    if (den == 0) return 0.0;
    return static_cast<double>(num) / static_cast<double>(den);
}

void NgramModel::for_each_bigram(
    const std::function<void(WordId, WordId, std::uint64_t)>& fn) const {
    for (WordId a = 0; a < words_.size(); ++a)
        for (std::uint64_t i = bi_off_[a]; i < bi_off_[a + 1]; ++i)
            fn(a, bi_child_[i], bi_count_[i]);
}

void NgramModel::for_each_trigram(
    const std::function<void(WordId, WordId, WordId, std::uint64_t)>& fn) const {
    std::size_t b_idx = 0;
    for (WordId a = 0; a < words_.size(); ++a) {
        for (std::uint64_t i = bi_off_[a]; i < bi_off_[a + 1]; ++i, ++b_idx)
            for (std::uint64_t t = tri_off_[b_idx]; t < tri_off_[b_idx + 1]; ++t)
                fn(a, bi_child_[i], tri_child_[t], tri_count_[t]);
    }
}

std::string NgramModel::serialize() const {
    detail::ByteWriter w;
    w.bytes(std::string_view(kMagic, 4));
    w.u16(kFormatVersion);
    w.varint(language_code_.size());
    w.bytes(language_code_);
    w.u32(limits_.min_word_len);
    w.u64(limits_.min_word_freq);
    w.u64(total_unigrams_);
    w.u32(static_cast<std::uint32_t>(words_.size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        w.varint(words_[i].size());
        w.bytes(words_[i]);
        w.u64(unigram_counts_[i]);
    }
    // bigram section: per head, delta-coded sorted children
    for (WordId a = 0; a < words_.size(); ++a) {
        const std::uint64_t begin = bi_off_[a], end = bi_off_[a + 1];
        w.varint(end - begin);
        WordId prev = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            w.varint(i == begin ? bi_child_[i] : bi_child_[i] - prev);
            prev = bi_child_[i];
            w.varint(bi_count_[i]);
        }
    }
    // trigram section, keyed by bigram order
    for (std::size_t b_idx = 0; b_idx < bi_child_.size(); ++b_idx) {
        const std::uint64_t begin = tri_off_[b_idx], end = tri_off_[b_idx + 1];
        w.varint(end - begin);
        WordId prev = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            w.varint(i == begin ? tri_child_[i] : tri_child_[i] - prev);
            prev = tri_child_[i];
            w.varint(tri_count_[i]);
        }
    }
    const std::uint32_t crc = crc_of(w.buffer());
    w.u32(crc);
    return w.take();
}

void NgramModel::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write model file: " + path.string());
    const std::string bytes = serialize();
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing model file: " + path.string());
}

NgramModel NgramModel::deserialize(std::string_view bytes) {
    if (bytes.size() < 4 || std::string_view(bytes.data(), 4) != std::string_view(kMagic, 4))
        throw ModelFormatError("not a model file (bad magic)");
    if (bytes.size() < 10) throw ModelTruncationError("model file shorter than its header");
    const std::string_view payload = bytes.substr(0, bytes.size() - 4);
    detail::ByteReader tail(bytes.substr(bytes.size() - 4));
    const std::uint32_t stored_crc = tail.u32();
    if (crc_of(payload) != stored_crc)
        throw ModelChecksumError("model file checksum mismatch");

    detail::ByteReader r(payload);
    r.bytes(4); // magic
    const std::uint16_t version = r.u16();
    if (version != kFormatVersion)
        throw ModelVersionError("unsupported model format version " +
                                std::to_string(version));

    NgramModel model;
    const std::uint64_t lang_len = r.varint();
    model.language_code_ = std::string(r.bytes(lang_len));
    model.limits_.min_word_len = r.u32();
    model.limits_.min_word_freq = r.u64();
    model.total_unigrams_ = r.u64();

    const std::uint32_t word_count = r.u32();
    model.words_.reserve(word_count);
    model.unigram_counts_.reserve(word_count);
    for (std::uint32_t i = 0; i < word_count; ++i) {
        const std::uint64_t len = r.varint();
        model.words_.emplace_back(r.bytes(len));
        model.unigram_counts_.push_back(r.u64());
        model.ids_.emplace(model.words_.back(), i);
    }

    model.bi_off_.assign(word_count + 1, 0);
    for (std::uint32_t a = 0; a < word_count; ++a) {
        const std::uint64_t children = r.varint();
        WordId prev = 0;
        for (std::uint64_t i = 0; i < children; ++i) {
            const std::uint64_t delta = r.varint();
            const WordId child = (i == 0) ? static_cast<WordId>(delta)
                                          : prev + static_cast<WordId>(delta);
            if (child >= word_count)
                throw ModelFormatError("bigram child id out of range");
            prev = child;
            model.bi_child_.push_back(child);
            model.bi_count_.push_back(r.varint());
        }
        model.bi_off_[a + 1] = model.bi_child_.size();
    }

    model.tri_off_.assign(model.bi_child_.size() + 1, 0);
    for (std::size_t b_idx = 0; b_idx < model.bi_child_.size(); ++b_idx) {
        const std::uint64_t children = r.varint();
        WordId prev = 0;
        for (std::uint64_t i = 0; i < children; ++i) {
            const std::uint64_t delta = r.varint();
            const WordId child = (i == 0) ? static_cast<WordId>(delta)
                                          : prev + static_cast<WordId>(delta);
            if (child >= word_count)
                throw ModelFormatError("trigram child id out of range");
            prev = child;
            model.tri_child_.push_back(child);
            model.tri_count_.push_back(r.varint());
        }
        model.tri_off_[b_idx + 1] = model.tri_child_.size();
    }

    if (r.remaining() != 0)
        throw ModelFormatError("trailing bytes after trigram section");
    return model;
}

NgramModel NgramModel::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open model file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on model file: " + path.string());
    return deserialize(buf.str());
}

void NgramModel::dump_text(std::ostream& out) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        out << words_[i] << ' ' << unigram_counts_[i] << '\n';
    for_each_bigram([&](WordId a, WordId b, std::uint64_t c) {
        out << words_[a] << ' ' << words_[b] << ' ' << c << '\n';
    });
    for_each_trigram([&](WordId a, WordId b, WordId c, std::uint64_t n) {
        out << words_[a] << ' ' << words_[b] << ' ' << words_[c] << ' ' << n << '\n';
    });
}

} // namespace ctxspell
