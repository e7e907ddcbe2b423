#include "doctest.h"

#include "roundsleek/constructions.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/topology.hpp"

using namespace roundsleek;

namespace {

Point sc(long v) { return Point::scalar(rat(v)); }
Point xy(long a, long b) { return Point::vec({rat(a), rat(b)}); }

ToleranceConfig cfg_default() {
    ToleranceConfig cfg;
    cfg.budget = 200;
    return cfg;
}

}  // namespace

TEST_CASE("ball membership is decided exactly on line subsets") {
    MetricSpace s = LineSubsetSpace::make(IntervalUnion::closed(rat(0), rat(2)));
    ToleranceConfig cfg = cfg_default();

    BallQuery closed{sc(0), BoundedReal(rat(1)), true};
    CHECK(ball_member(s, closed, sc(1), cfg).verdict == Tri::Yes);
    CHECK(ball_member(s, closed, Point::scalar(rat(1, 2)), cfg).verdict == Tri::Yes);
    CHECK(ball_member(s, closed, sc(2), cfg).verdict == Tri::No);

    BallQuery open{sc(0), BoundedReal(rat(1)), false};
    CHECK(ball_member(s, open, sc(1), cfg).verdict == Tri::No);
    CHECK(ball_member(s, open, Point::scalar(rat(99, 100)), cfg).verdict == Tri::Yes);
}

TEST_CASE("closure membership holds at the closed end of an interval") {
    MetricSpace s = LineSubsetSpace::make(IntervalUnion::closed(rat(0), rat(1)));
    ToleranceConfig cfg = cfg_default();

    BallQuery q{sc(0), BoundedReal(rat(1)), false};
    TopoAnswer ans = closure_contains(s, q, sc(1), cfg);
    CHECK(ans.verdict == Tri::Yes);
    REQUIRE_FALSE(ans.witness_seq.empty());
    // Rungs carry certifiably decreasing distance enclosures to the target.
    for (size_t i = 0; i + 1 < ans.witness_seq.size(); ++i)
        CHECK(ans.witness_seq[i].second.lo() > ans.witness_seq[i + 1].second.hi());
}

TEST_CASE("closure misses across a gap, with a certified separation") {
    GalleryEntry entry = gallery_space("gap-union");
    ToleranceConfig cfg = cfg_default();

    BallQuery q{sc(1), BoundedReal(rat(1)), false};
    TopoAnswer ans = closure_contains(entry.space, q, sc(2), cfg);
    CHECK(ans.verdict == Tri::No);
    REQUIRE(ans.separation.has_value());
    CHECK(*ans.separation > 0);
}

TEST_CASE("closure misses the lifted point of the two-lines space") {
    GalleryEntry entry = gallery_space("two-lines");
    ToleranceConfig cfg = cfg_default();

    Point center = xy(0, 0);
    Point lifted = xy(0, 1);
    BallQuery q{center, BoundedReal(rat(1)), false};
    TopoAnswer ans = closure_contains(entry.space, q, lifted, cfg);
    CHECK(ans.verdict == Tri::No);
    REQUIRE(ans.separation.has_value());
    CHECK(*ans.separation > 0);
}

TEST_CASE("the quadrant corner is not a limit of the ball exterior") {
    GalleryEntry entry = gallery_space("quadrant");
    ToleranceConfig cfg = cfg_default();

    // Around x = (1, -1) the corner (0, 0) sits on the sphere, and a whole
    // neighborhood of it stays inside the closed ball.
    TopoAnswer ans = exterior_limit_point(entry.space, xy(1, -1), xy(0, 0), cfg);
    CHECK(ans.verdict == Tri::No);
    REQUIRE(ans.separation.has_value());
    CHECK(*ans.separation > 0);
}

TEST_CASE("a sphere point of the weighted product is a limit of the exterior") {
    GalleryEntry entry = gallery_space("product-D");
    const auto* impl = entry.space.as<ProductDSpace>();
    REQUIRE(impl != nullptr);
    ToleranceConfig cfg = cfg_default();

    Point x = impl->make_point({});
    Point y = impl->make_point({sc(1)});
    TopoAnswer ans = exterior_limit_point(entry.space, x, y, cfg);
    CHECK(ans.verdict == Tri::Yes);
    REQUIRE(ans.witness_seq.size() >= 2);
    for (size_t i = 0; i + 1 < ans.witness_seq.size(); ++i)
        CHECK(ans.witness_seq[i].second.lo() > ans.witness_seq[i + 1].second.hi());
}
