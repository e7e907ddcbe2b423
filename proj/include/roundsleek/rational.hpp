#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace roundsleek {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which the deterministic serialization relies on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p/q" or "p/q". Whitespace is not accepted.
std::optional<Rat> rat_parse(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rat_str(const Rat& q);

// Exact decimal expansion truncated toward zero at `digits` fractional digits.
// Used for SVG coordinates so output never depends on binary float formatting.
std::string rat_decimal(const Rat& q, int digits);

Rat rat_abs(const Rat& q);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

// 2^e for e possibly negative.
Rat rat_pow2(int e);

// floor(q) as a Rat.
Rat rat_floor(const Rat& q);

// Smallest k with 2^-k <= q for q in (0,1]; 0 for q >= 1. Drives witness
// ladder lengths: ceil(log2(1/q)).
int ceil_log2_inverse(const Rat& q);

// If q is the square of a rational, returns the nonnegative root.
std::optional<Rat> rat_sqrt_exact(const Rat& q);

// Rounds q to the nearest multiple of 2^-bits in the given direction; used to
// keep Newton iterates at bounded size without losing soundness.
Rat rat_round_down_dyadic(const Rat& q, int bits);
Rat rat_round_up_dyadic(const Rat& q, int bits);

// FNV-1a, for deterministic seed derivation from tags (std::hash is
// implementation-defined and would break replay stability).
std::uint64_t fnv1a(const std::string& text);

} // namespace roundsleek
