#pragma once

#include "roundsleek/rational.hpp"
#include "roundsleek/region.hpp"

namespace roundsleek {

// Exact-arithmetic emptiness certificates over plane regions, by quadtree
// subdivision of the eps-box around y. All pruning tests are rational, so a
// true result is a proof; false only means "not certified at this depth".

// region ∩ B(y, eps) ∩ {z : d(z, x)^2 > r2} = ∅ — no escape points near y.
bool bnb_escape_set_empty(const Region& region, const Pt2& x, const Rat& r2, const Pt2& y,
                          const Rat& eps, int max_depth);

// region ∩ B(y, eps) ∩ {z : d(z, x)^2 < r2} = ∅ — the open ball stays away
// from y.
bool bnb_open_ball_reach_empty(const Region& region, const Pt2& x, const Rat& r2, const Pt2& y,
                               const Rat& eps, int max_depth);

}  // namespace roundsleek
