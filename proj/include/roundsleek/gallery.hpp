#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roundsleek/bounded_real.hpp"
#include "roundsleek/point.hpp"
#include "roundsleek/space.hpp"

namespace roundsleek {

// Expected verdicts carry only what is established analytically for the exact
// space in question; everything else stays Unverified and the checkers report
// whatever they can certify.
enum class Expected { True, False, Unverified };
std::string expected_name(Expected e);

struct GalleryEntry {
    std::string name;
    MetricSpace space;
    Expected expected_round = Expected::Unverified;
    Expected expected_sleek = Expected::Unverified;
    std::string provenance;
};

const std::vector<GalleryEntry>& gallery_entries();
std::vector<std::string> gallery_names();
GalleryEntry gallery_space(const std::string& name);  // throws UnknownName

// Closed ball of the two-lines space about the center (a, b), resolved into
// horizontal strips. The strip on the center's own line always has half-width
// r; the other line is empty for r < 1, the single lifted point for r = 1, and
// a strip of half-width sqrt(r^2 - 1) for r > 1.
struct XPrimeBall {
    Rat a;
    int b = 0;
    BoundedReal r;
    BoundedReal own_half_width;
    bool other_is_point = false;
    std::optional<BoundedReal> other_half_width;

    // Exact membership for points of the two-lines space; requires an exact
    // rational radius.
    bool member(const Point& p) const;
};
XPrimeBall xprime_ball_oracle(const Rat& a, int b, const BoundedReal& r);

// Closed ball of the weighted {0,1} x line-sequence product about `center`,
// resolved into sheets. On the center's own head sheet the tail sum is allowed
// up to r; the flipped sheet is empty for r < 1/2, the single head-flipped
// copy of the center for r = 1/2, and a tail budget of r - 1/2 beyond that.
// Membership is evaluated with its own finite exact tail sums, independent of
// the space's distance code.
struct ProductDBall {
    Point center;
    Rat r;
    Rat own_tail_budget;
    bool flip_is_point = false;
    std::optional<Rat> flip_tail_budget;

    bool member(const Point& p) const;
};
ProductDBall productD_ball_oracle(const Point& center, const Rat& r);

}  // namespace roundsleek
