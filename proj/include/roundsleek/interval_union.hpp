#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roundsleek/rational.hpp"
#include "roundsleek/rng.hpp"

namespace roundsleek {

// One interval with rational endpoints. lo == hi is allowed only as a closed
// point; every other combination with lo >= hi is rejected.
struct Interval {
    Rat lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const;
    std::string str() const;
};

// Intersection of two intervals; nullopt when empty.
std::optional<Interval> intersect_intervals(const Interval& a, const Interval& b);

// A finite union of intervals in normal form: components sorted, pairwise
// disjoint, and non-touching except across a puncture (shared endpoint open on
// both sides), so the component list is canonical for the underlying set.
class IntervalUnion {
public:
    IntervalUnion() = default;
    explicit IntervalUnion(std::vector<Interval> parts);

    static IntervalUnion closed(const Rat& a, const Rat& b);
    static IntervalUnion open(const Rat& a, const Rat& b);
    static IntervalUnion point(const Rat& a);
    static Interval make(const Rat& a, const Rat& b, bool lo_open, bool hi_open);

    const std::vector<Interval>& components() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rat& x) const;

    // Infimum / supremum of the set (empty throws EmptyRegion); the attained
    // flags tell whether they are members.
    Rat inf() const;
    Rat sup() const;
    bool inf_attained() const;
    bool sup_attained() const;

    IntervalUnion clip(const Interval& window) const;
    bool meets(const Interval& window) const { return !clip(window).empty(); }

    std::vector<Rat> endpoints() const;
    std::string str() const;

    bool operator==(const IntervalUnion& o) const;

private:
    std::vector<Interval> parts_;
};

IntervalUnion intersect_unions(const IntervalUnion& a, const IntervalUnion& b);

// Random normalized union with rational endpoints of denominator at most
// max_denominator inside [-3, 3]. Adjacent components are sometimes snapped
// together to produce touching and punctured configurations.
IntervalUnion random_union(Rng& rng, int max_components, long max_denominator);

}  // namespace roundsleek
