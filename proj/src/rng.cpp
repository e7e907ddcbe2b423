#include "roundsleek/rng.hpp"

#include <stdexcept>

namespace roundsleek {

Rng::Rng(std::uint64_t seed, const std::string& tag) : gen_(seed ^ fnv1a(tag)) {}

std::uint64_t Rng::next_u64() { return gen_(); }

long Rng::next_in(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::next_in: empty range");
    std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<long>(next_u64());  // full 64-bit span
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return lo + static_cast<long>(v % range);
}

bool Rng::next_bool() { return (next_u64() & 1) != 0; }

Rat Rng::next_dyadic(int bits) {
    if (bits < 1 || bits > 62) throw std::invalid_argument("Rng::next_dyadic: bits out of range");
    std::uint64_t k = next_u64() >> (64 - bits);
    return Rat(static_cast<long>(k)) * rat_pow2(-bits);
}

Rat Rng::next_rat_in(const Rat& lo, const Rat& hi, int bits) {
    return lo + (hi - lo) * next_dyadic(bits);
}

}  // namespace roundsleek
