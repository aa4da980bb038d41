#include "gapforge/random.hpp"

#include "gapforge/error.hpp"

#include <limits>

namespace gapforge {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t SeededStream::below(std::uint64_t bound)
{
    if (bound == 0)
        fail(ErrorCode::BadParameters, "empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do
        draw = next();
    while (draw >= limit);
    return draw % bound;
}

bool SeededStream::bernoulli(const Rational& p)
{
    if (p < 0 || p > 1)
        fail(ErrorCode::BadParameters, "probability " + format_rational(p) + " outside [0, 1]");
    const Integer u = next();
    const Integer two64 = Integer(1) << 64;
    return u * denominator(p) < numerator(p) * two64;
}

}  // namespace gapforge
