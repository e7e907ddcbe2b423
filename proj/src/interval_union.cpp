#include "roundsleek/interval_union.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "roundsleek/errors.hpp"

namespace roundsleek {

bool Interval::contains(const Rat& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && lo_open) return false;
    if (x == hi && hi_open) return false;
    return true;
}

std::string Interval::str() const {
    if (is_point()) return "{" + rat_str(lo) + "}";
    std::ostringstream out;
    out << (lo_open ? "(" : "[") << rat_str(lo) << ", " << rat_str(hi)
        << (hi_open ? ")" : "]");
    return out.str();
}

std::optional<Interval> intersect_intervals(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo > b.lo) {
        r.lo = a.lo;
        r.lo_open = a.lo_open;
    } else if (a.lo < b.lo) {
        r.lo = b.lo;
        r.lo_open = b.lo_open;
    } else {
        r.lo = a.lo;
        r.lo_open = a.lo_open || b.lo_open;
    }
    if (a.hi < b.hi) {
        r.hi = a.hi;
        r.hi_open = a.hi_open;
    } else if (a.hi > b.hi) {
        r.hi = b.hi;
        r.hi_open = b.hi_open;
    } else {
        r.hi = a.hi;
        r.hi_open = a.hi_open || b.hi_open;
    }
    if (r.lo > r.hi) return std::nullopt;
    if (r.lo == r.hi && (r.lo_open || r.hi_open)) return std::nullopt;
    return r;
}

namespace {

void validate(const Interval& iv) {
    if (iv.lo > iv.hi) throw InvalidParameter("interval with lo > hi");
    if (iv.lo == iv.hi && (iv.lo_open || iv.hi_open))
        throw InvalidParameter("degenerate interval must be a closed point");
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> parts) {
    for (const auto& iv : parts) validate(iv);
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return !a.lo_open && b.lo_open;
    });
    for (const auto& next : parts) {
        if (!parts_.empty()) {
            Interval& cur = parts_.back();
            bool overlap = next.lo < cur.hi;
            bool touch = next.lo == cur.hi && !(cur.hi_open && next.lo_open);
            if (overlap || touch) {
                if (next.hi > cur.hi) {
                    cur.hi = next.hi;
                    cur.hi_open = next.hi_open;
                } else if (next.hi == cur.hi) {
                    cur.hi_open = cur.hi_open && next.hi_open;
                }
                continue;
            }
        }
        parts_.push_back(next);
    }
}

IntervalUnion IntervalUnion::closed(const Rat& a, const Rat& b) {
    return IntervalUnion({Interval{a, b, false, false}});
}

IntervalUnion IntervalUnion::open(const Rat& a, const Rat& b) {
    return IntervalUnion({Interval{a, b, true, true}});
}

IntervalUnion IntervalUnion::point(const Rat& a) {
    return IntervalUnion({Interval{a, a, false, false}});
}

Interval IntervalUnion::make(const Rat& a, const Rat& b, bool lo_open, bool hi_open) {
    Interval iv{a, b, lo_open, hi_open};
    validate(iv);
    return iv;
}

bool IntervalUnion::contains(const Rat& x) const {
    for (const auto& iv : parts_) {
        if (x < iv.lo) return false;
        if (iv.contains(x)) return true;
    }
    return false;
}

Rat IntervalUnion::inf() const {
    if (parts_.empty()) throw EmptyRegion("interval union is empty");
    return parts_.front().lo;
}

Rat IntervalUnion::sup() const {
    if (parts_.empty()) throw EmptyRegion("interval union is empty");
    return parts_.back().hi;
}

bool IntervalUnion::inf_attained() const {
    if (parts_.empty()) throw EmptyRegion("interval union is empty");
    return !parts_.front().lo_open;
}

bool IntervalUnion::sup_attained() const {
    if (parts_.empty()) throw EmptyRegion("interval union is empty");
    return !parts_.back().hi_open;
}

IntervalUnion IntervalUnion::clip(const Interval& window) const {
    std::vector<Interval> kept;
    for (const auto& iv : parts_) {
        if (auto piece = intersect_intervals(iv, window)) kept.push_back(*piece);
    }
    IntervalUnion out;
    out.parts_ = std::move(kept);  // clipping a normal form stays normal
    return out;
}

std::vector<Rat> IntervalUnion::endpoints() const {
    std::vector<Rat> out;
    for (const auto& iv : parts_) {
        out.push_back(iv.lo);
        if (iv.hi != iv.lo) out.push_back(iv.hi);
    }
    return out;
}

std::string IntervalUnion::str() const {
    if (parts_.empty()) return "{}";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << " u ";
        out << parts_[i].str();
    }
    return out.str();
}

bool IntervalUnion::operator==(const IntervalUnion& o) const {
    if (parts_.size() != o.parts_.size()) return false;
    for (size_t i = 0; i < parts_.size(); ++i) {
        const Interval &a = parts_[i], &b = o.parts_[i];
        if (a.lo != b.lo || a.hi != b.hi || a.lo_open != b.lo_open || a.hi_open != b.hi_open)
            return false;
    }
    return true;
}

IntervalUnion intersect_unions(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval> parts;
    for (const auto& p : a.components())
        for (const auto& q : b.components())
            if (auto hit = intersect_intervals(p, q)) parts.push_back(*hit);
    return IntervalUnion(std::move(parts));
}

IntervalUnion random_union(Rng& rng, int max_components, long max_denominator) {
    int k = static_cast<int>(rng.next_in(1, max_components));
    std::set<Rat> values;
    while (static_cast<int>(values.size()) < 2 * k) {
        long q = rng.next_in(1, max_denominator);
        long p = rng.next_in(-3 * q, 3 * q);
        values.insert(rat(p, q));
    }
    std::vector<Rat> sorted(values.begin(), values.end());
    std::vector<Interval> parts;
    for (int i = 0; i < k; ++i) {
        Interval iv{sorted[2 * i], sorted[2 * i + 1], false, false};
        if (rng.next_in(0, 5) == 0) {
            iv.hi = iv.lo;
        } else {
            iv.lo_open = rng.next_bool();
            iv.hi_open = rng.next_bool();
        }
        parts.push_back(iv);
    }
    // Snap some neighbours together so touching and punctured unions occur.
    for (size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i - 1].is_point() && !parts[i].is_point() && rng.next_in(0, 2) == 0) {
            parts[i].lo = parts[i - 1].hi;
            parts[i].lo_open = rng.next_bool();
            if (parts[i].lo >= parts[i].hi) {
                parts[i].hi = parts[i].lo;
                parts[i].lo_open = false;
                parts[i].hi_open = false;
            }
        }
    }
    return IntervalUnion(parts);
}

}  // namespace roundsleek
