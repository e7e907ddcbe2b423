#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "roundsleek/rational.hpp"

namespace roundsleek {

// Deterministic sampler: the stream is a pure function of (seed, tag), and all
// draws go through next_u64 so replays are byte-stable. Samples are rational.
class Rng {
public:
    Rng(std::uint64_t seed, const std::string& tag);

    std::uint64_t next_u64();
    // Uniform integer in [lo, hi], inclusive; rejection keeps it unbiased.
    long next_in(long lo, long hi);
    bool next_bool();
    // Uniform dyadic k/2^bits in [0, 1), bits in [1, 62].
    Rat next_dyadic(int bits);
    Rat next_rat_in(const Rat& lo, const Rat& hi, int bits);

private:
    std::mt19937_64 gen_;
};

}  // namespace roundsleek
