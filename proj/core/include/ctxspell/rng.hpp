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

#ifndef CTXSPELL_RNG_HPP
#define CTXSPELL_RNG_HPP

#include <cstdint>
#include <random>
#include <span>

namespace ctxspell {

/// Seeded random source. All sampling goes through this wrapper instead of
/// the std distributions, whose outputs are implementation-defined; results
/// must be reproducible from a seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    const T& pick(std::span<const T> items) {
        return items[index(items.size())];
    }

    /// Derives an independent child seed; used to shard deterministic work.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace ctxspell

#endif // CTXSPELL_RNG_HPP
