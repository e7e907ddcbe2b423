#pragma once

#include <optional>
#include <utility>

#include "roundsleek/interval_union.hpp"

namespace roundsleek::testing {

// Brute-force reference verdicts for a subset of the line under |x - y|,
// computed straight from the definitions: for every ordered candidate pair
// (x, y) with r = |x - y| it tests, by exact closure membership on the union,
//   round:  y in B[x,r] but y not in cl(B(x,r))
//   sleek:  y in int(B[x,r]) but y not in B(x,r)
// Candidates are the grid multiples of `step` inside the set together with
// all component endpoints and midpoints that belong to the set, which is
// enough for every violating configuration a finite union can realize.
struct OracleOutcome {
    bool round = true;
    bool sleek = true;
    std::optional<std::pair<Rat, Rat>> round_witness;  // (center x, stranded y)
    std::optional<std::pair<Rat, Rat>> sleek_witness;  // (center x, interior sphere y)
};

OracleOutcome grid_oracle(const IntervalUnion& carrier, const Rat& step = rat(1, 20));

}  // namespace roundsleek::testing
