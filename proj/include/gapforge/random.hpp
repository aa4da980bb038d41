#pragma once

#include "gapforge/numeric.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gapforge {

/// SplitMix64 finaliser; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator whose output is identical on every platform: the engine
/// is std::mt19937_64 and all derived draws are computed here rather than by
/// the implementation-defined standard distributions.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), by rejection.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability p ∈ [0, 1]: a 64-bit draw u is accepted iff
    /// u·den < num·2⁶⁴.
    bool bernoulli(const Rational& p);

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gapforge
