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

#include "ctxspell/suggester.hpp"

#include <algorithm>

#include "ctxspell/errors.hpp"
#include "ctxspell/levenshtein.hpp"
#include "ctxspell/unicode.hpp"

namespace ctxspell {

namespace {

std::uint64_t hash_variant(std::u32string_view variant) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char32_t cp : variant) {
        h ^= static_cast<std::uint64_t>(cp);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Applies fn to the hash of every string obtainable from `word` by deleting
// up to max_deletes codepoints (including zero deletions).
template <typename Fn>
void for_each_delete_variant(std::u32string_view word, unsigned max_deletes, Fn&& fn) {
    fn(hash_variant(word));
    if (max_deletes == 0 || word.empty()) return;
    std::u32string buf;
    buf.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        buf.assign(word);
        buf.erase(i, 1);
        fn(hash_variant(buf));
        if (max_deletes >= 2 && !buf.empty()) {
            std::u32string buf2;
            for (std::size_t j = 0; j < buf.size(); ++j) {
                buf2.assign(buf);
                buf2.erase(j, 1);
                fn(hash_variant(buf2));
            }
        }
    }
}

std::vector<std::u32string> decode_vocab(const NgramModel& model) {
    std::vector<std::u32string> vocab32;
    vocab32.reserve(model.vocab_size());
    for (WordId id = 0; id < model.vocab_size(); ++id)
        vocab32.push_back(decode_utf8(model.word(id)));
    return vocab32;
}

} // namespace

DeleteIndex DeleteIndex::build(const NgramModel& model, unsigned max_distance) {
    if (max_distance < 1 || max_distance > 2)
        throw Error("delete index supports max_distance 1 or 2");

    DeleteIndex index;
    index.max_distance_ = max_distance;
    index.vocab32_ = decode_vocab(model);

    std::vector<std::pair<std::uint64_t, WordId>> entries;
    for (WordId id = 0; id < index.vocab32_.size(); ++id) {
        for_each_delete_variant(index.vocab32_[id], max_distance,
                                [&](std::uint64_t h) { entries.emplace_back(h, id); });
    }
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

    index.keys_.reserve(entries.size());
    index.offsets_.reserve(entries.size() + 1);
    index.ids_.reserve(entries.size());
    index.offsets_.push_back(0);
    for (std::size_t i = 0; i < entries.size();) {
        const std::uint64_t h = entries[i].first;
        index.keys_.push_back(h);
        while (i < entries.size() && entries[i].first == h) {
            index.ids_.push_back(entries[i].second);
            ++i;
        }
        index.offsets_.push_back(index.ids_.size());
    }
    return index;
}

std::vector<Candidate> DeleteIndex::candidates(const NgramModel& model,
                                               std::string_view token) const {
    const std::u32string query = decode_utf8(token);

    std::vector<WordId> hits;
    for_each_delete_variant(query, max_distance_, [&](std::uint64_t h) {
        const auto it = std::lower_bound(keys_.begin(), keys_.end(), h);
        if (it == keys_.end() || *it != h) return;
        const std::size_t k = static_cast<std::size_t>(it - keys_.begin());
        hits.insert(hits.end(), ids_.begin() + static_cast<std::ptrdiff_t>(offsets_[k]),
                    ids_.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]));
    });
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    std::vector<Candidate> out;
    for (WordId id : hits) {
        const std::size_t d = levenshtein_bounded(query, vocab32_[id], max_distance_);
        if (d <= max_distance_)
            out.push_back(Candidate{model.word(id), id, static_cast<std::uint8_t>(d)});
    }
    return out;
}

const char* to_string(SuggestMethod method) {
    switch (method) {
        case SuggestMethod::naive: return "naive";
        case SuggestMethod::trie: return "trie";
        case SuggestMethod::dawg: return "dawg";
        case SuggestMethod::bktree: return "bktree";
        case SuggestMethod::sda: return "sda";
    }
    return "?";
}

SuggestMethod suggest_method_from_string(std::string_view name) {
    if (name == "naive") return SuggestMethod::naive;
    if (name == "trie") return SuggestMethod::trie;
    if (name == "dawg") return SuggestMethod::dawg;
    if (name == "bktree") return SuggestMethod::bktree;
    if (name == "sda") return SuggestMethod::sda;
    throw Error("unknown suggestion method: " + std::string(name));
}

std::vector<Candidate> naive_candidates(const NgramModel& model, std::string_view token,
                                        unsigned max_distance) {
    const std::u32string query = decode_utf8(token);
    std::vector<Candidate> out;
    for (WordId id = 0; id < model.vocab_size(); ++id) {
        const std::u32string word = decode_utf8(model.word(id));
        const std::size_t d = levenshtein_bounded(query, word, max_distance);
        if (d <= max_distance)
            out.push_back(Candidate{model.word(id), id, static_cast<std::uint8_t>(d)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trie baseline
// ---------------------------------------------------------------------------

struct TrieSuggester::Node {
    std::map<char32_t, std::unique_ptr<Node>> children;
    std::int64_t word = -1; // word id when a word ends here
};

TrieSuggester::TrieSuggester(const NgramModel& model) : root_(std::make_unique<Node>()) {
    for (WordId id = 0; id < model.vocab_size(); ++id) {
        Node* node = root_.get();
        for (char32_t cp : decode_utf8(model.word(id))) {
            auto& child = node->children[cp];
            if (!child) child = std::make_unique<Node>();
            node = child.get();
        }
        node->word = id;
    }
}

TrieSuggester::~TrieSuggester() = default;
TrieSuggester::TrieSuggester(TrieSuggester&&) noexcept = default;
TrieSuggester& TrieSuggester::operator=(TrieSuggester&&) noexcept = default;

std::vector<Candidate> TrieSuggester::candidates(const NgramModel& model,
                                                 std::string_view token,
                                                 unsigned max_distance) const {
    const std::u32string query = decode_utf8(token);
    std::vector<Candidate> out;

    std::vector<std::size_t> row0(query.size() + 1);
    for (std::size_t i = 0; i <= query.size(); ++i) row0[i] = i;

    struct Walker {
        std::u32string_view query;
        unsigned maxd;
        std::vector<Candidate>* out;
        const NgramModel* model;

        void step(const Node* node, const std::vector<std::size_t>& prev) {
            if (node->word >= 0 && prev.back() <= maxd)
                out->push_back(Candidate{model->word(static_cast<WordId>(node->word)),
                                         static_cast<WordId>(node->word),
                                         static_cast<std::uint8_t>(prev.back())});
            std::vector<std::size_t> row(query.size() + 1);
            for (const auto& [cp, child] : node->children) {
                row[0] = prev[0] + 1;
                std::size_t best = row[0];
                for (std::size_t i = 1; i <= query.size(); ++i) {
                    const std::size_t sub = prev[i - 1] + (query[i - 1] == cp ? 0 : 1);
                    row[i] = std::min({prev[i] + 1, row[i - 1] + 1, sub});
                    best = std::min(best, row[i]);
                }
                if (best <= maxd) step(child.get(), row);
            }
        }
    } walker{query, max_distance, &out, &model};
    walker.step(root_.get(), row0);

    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
    return out;
}

// ---------------------------------------------------------------------------
// DAWG baseline
// ---------------------------------------------------------------------------

DawgSuggester::DawgSuggester(const NgramModel& model) {
    // Incremental construction from the lexicographically sorted word list,
    // merging equivalent suffixes through a signature registry.
    std::vector<std::u32string> words = decode_vocab(model);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    struct BuildNode {
        std::map<char32_t, std::uint32_t> edges;
        bool final_ = false;
    };
    std::vector<BuildNode> nodes(1);
    std::unordered_map<std::string, std::uint32_t> registry;

    // unchecked path: (parent, edge char, child)
    std::vector<std::tuple<std::uint32_t, char32_t, std::uint32_t>> path;

    const auto signature = [&](std::uint32_t n) {
        std::string sig = nodes[n].final_ ? "1" : "0";
        for (const auto& [cp, child] : nodes[n].edges) {
            sig += std::to_string(static_cast<std::uint32_t>(cp));
            sig += ':';
            sig += std::to_string(child);
            sig += ';';
        }
        return sig;
    };

    const auto minimize_down_to = [&](std::size_t keep) {
        while (path.size() > keep) {
            auto [parent, cp, child] = path.back();
            path.pop_back();
            const std::string sig = signature(child);
            const auto it = registry.find(sig);
            if (it != registry.end()) {
                nodes[parent].edges[cp] = it->second;
            } else {
                registry.emplace(sig, child);
            }
        }
    };

    for (const auto& word : words) {
        // longest common prefix with the pending path
        std::size_t common = 0;
        while (common < path.size() && common < word.size() &&
               std::get<1>(path[common]) == word[common])
            ++common;
        minimize_down_to(common);
        std::uint32_t node = common == 0 ? 0 : std::get<2>(path[common - 1]);
        for (std::size_t i = common; i < word.size(); ++i) {
            const std::uint32_t child = static_cast<std::uint32_t>(nodes.size());
            nodes.emplace_back();
            nodes[node].edges[word[i]] = child;
            path.emplace_back(node, word[i], child);
            node = child;
        }
        nodes[node].final_ = true;
    }
    minimize_down_to(0);

    nodes_.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        nodes_[i].edges = std::move(nodes[i].edges);
        nodes_[i].final_ = nodes[i].final_;
    }
    root_ = 0;
}

std::vector<Candidate> DawgSuggester::candidates(const NgramModel& model,
                                                 std::string_view token,
                                                 unsigned max_distance) const {
    const std::u32string query = decode_utf8(token);
    std::vector<Candidate> out;
    std::u32string path;

    std::vector<std::size_t> row0(query.size() + 1);
    for (std::size_t i = 0; i <= query.size(); ++i) row0[i] = i;

    const auto walk = [&](auto&& self, std::uint32_t n,
                          const std::vector<std::size_t>& prev) -> void {
        if (nodes_[n].final_ && prev.back() <= max_distance) {
            const auto id = model.find(encode_utf8(path));
            if (id)
                out.push_back(Candidate{model.word(*id), *id,
                                        static_cast<std::uint8_t>(prev.back())});
        }
        std::vector<std::size_t> row(query.size() + 1);
        for (const auto& [cp, child] : nodes_[n].edges) {
            row[0] = prev[0] + 1;
            std::size_t best = row[0];
            for (std::size_t i = 1; i <= query.size(); ++i) {
                const std::size_t sub = prev[i - 1] + (query[i - 1] == cp ? 0 : 1);
                row[i] = std::min({prev[i] + 1, row[i - 1] + 1, sub});
                best = std::min(best, row[i]);
            }
            if (best <= max_distance) {
                path.push_back(cp);
                self(self, child, row);
                path.pop_back();
            }
        }
    };
    walk(walk, root_, row0);

    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// BK-tree baseline
// ---------------------------------------------------------------------------

BkTreeSuggester::BkTreeSuggester(const NgramModel& model)
    : vocab32_(decode_vocab(model)) {
    if (vocab32_.empty()) return;
    nodes_.push_back(Node{0, {}});
    for (WordId id = 1; id < vocab32_.size(); ++id) {
        std::uint32_t at = 0;
        while (true) {
            const auto d = static_cast<std::uint32_t>(
                levenshtein(vocab32_[id], vocab32_[nodes_[at].word]));
            if (d == 0) break; // duplicate word, cannot happen with a vocab
            const auto it = nodes_[at].children.find(d);
            if (it == nodes_[at].children.end()) {
                nodes_.push_back(Node{id, {}});
                nodes_[at].children.emplace(d, static_cast<std::uint32_t>(nodes_.size() - 1));
                break;
            }
            at = it->second;
        }
    }
}

std::vector<Candidate> BkTreeSuggester::candidates(const NgramModel& model,
                                                   std::string_view token,
                                                   unsigned max_distance) const {
    std::vector<Candidate> out;
    if (nodes_.empty()) return out;
    const std::u32string query = decode_utf8(token);

    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        const std::uint32_t at = stack.back();
        stack.pop_back();
        const Node& node = nodes_[at];
        const std::size_t d = levenshtein(query, vocab32_[node.word]);
        if (d <= max_distance)
            out.push_back(Candidate{model.word(node.word), node.word,
                                    static_cast<std::uint8_t>(d)});
        // triangle inequality: children with |edge - d| > max can't match
        const std::size_t lo = d > max_distance ? d - max_distance : 0;
        const std::size_t hi = d + max_distance;
        for (const auto& [edge, child] : node.children)
            if (edge >= lo && edge <= hi) stack.push_back(child);
    }

    std::sort(out.begin(), out.end(),
              [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Candidate> candidates_baseline(SuggestMethod method, const NgramModel& model,
                                           std::string_view token,
                                           unsigned max_distance) {
    switch (method) {
        case SuggestMethod::naive:
            return naive_candidates(model, token, max_distance);
        case SuggestMethod::trie:
            return TrieSuggester(model).candidates(model, token, max_distance);
        case SuggestMethod::dawg:
            return DawgSuggester(model).candidates(model, token, max_distance);
        case SuggestMethod::bktree:
            return BkTreeSuggester(model).candidates(model, token, max_distance);
        case SuggestMethod::sda:
            return DeleteIndex::build(model, max_distance).candidates(model, token);
    }
    throw Error("unreachable suggest method");
}

} // namespace ctxspell
