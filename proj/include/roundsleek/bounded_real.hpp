#pragma once

#include "roundsleek/rational.hpp"

#include <string>

namespace roundsleek {

// Closed rational interval [lo, hi] enclosing one real value. Exact when
// lo == hi. Refinement elsewhere only ever intersects enclosures, so a
// refined BoundedReal never moves lo down or hi up.
class BoundedReal {
public:
    BoundedReal() : lo_(0), hi_(0) {}
    explicit BoundedReal(const Rat& exact) : lo_(exact), hi_(exact) {}
    BoundedReal(const Rat& lo, const Rat& hi);

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    bool exact() const { return lo_ == hi_; }
    Rat width() const { return hi_ - lo_; }

    bool contains(const Rat& q) const { return lo_ <= q && q <= hi_; }
    bool overlaps(const BoundedReal& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    // Intersection of two enclosures of the same value.
    BoundedReal meet(const BoundedReal& o) const;

    std::string str() const;

private:
    Rat lo_, hi_;
};

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
BoundedReal br_min(const BoundedReal& a, const BoundedReal& b);
BoundedReal br_max(const BoundedReal& a, const BoundedReal& b);
BoundedReal br_abs(const BoundedReal& a);
BoundedReal br_square(const BoundedReal& a);

// Enclosure of sqrt(q), q >= 0 rational, of width at most 2^-prec. Newton
// iterates from above with the lower bound q/hi; successive calls with larger
// prec extend the same iterate sequence, so enclosures are nested.
BoundedReal sqrt_enclosure(const Rat& q, int prec);

// Enclosure of sqrt over an interval of nonnegative values.
BoundedReal sqrt_enclosure(const BoundedReal& v, int prec);

// Enclosure of log(1+t) for rational t >= 0, width at most 2^-prec, nested in
// prec. Reduction 1+t = 2^k * m with m in [1,2), then atanh series.
BoundedReal log1p_enclosure(const Rat& t, int prec);
BoundedReal log1p_enclosure(const BoundedReal& v, int prec);

} // namespace roundsleek
