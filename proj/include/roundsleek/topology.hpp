#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "roundsleek/space.hpp"

namespace roundsleek {

enum class Tri { Yes, No, Unknown };

struct BallQuery {
    Point center;
    BoundedReal radius;  // radius.lo > 0
    bool closed = false;
};

// Answer to a topological query. Yes for closure / limit-point queries
// carries a witness sequence of points with certified, strictly decreasing
// distance enclosures to the target; No carries a certified separation
// radius. A No is only ever produced from a certificate (exact domain
// arithmetic, isolation, diameter saturation, or a space emptiness hook) —
// sampling alone can refute a No but never produce one.
struct TopoAnswer {
    Tri verdict = Tri::Unknown;
    std::vector<std::pair<Point, BoundedReal>> witness_seq;
    std::optional<Rat> separation;
    long refinements = 0;
};

// Membership of y in the ball described by q, by three-valued comparison.
TopoAnswer ball_member(const MetricSpace& space, const BallQuery& q, const Point& y,
                       const ToleranceConfig& cfg);

// Is y in the closure of the open ball B(q.center, q.radius)? When y lies on
// the sphere within sep_eps, the query runs against the exact radius
// d(center, y); a wider-than-sep_eps undecided sphere condition is rejected
// as Unknown.
TopoAnswer closure_contains(const MetricSpace& space, const BallQuery& q, const Point& y,
                            const ToleranceConfig& cfg, Effort* effort = nullptr);

// Is y (on the sphere of radius r := d(x,y) around x) a limit point of
// X \ B[x, r]?
TopoAnswer exterior_limit_point(const MetricSpace& space, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, Effort* effort = nullptr);

}  // namespace roundsleek
