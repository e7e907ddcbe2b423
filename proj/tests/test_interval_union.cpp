#include "doctest.h"

#include "roundsleek/interval_union.hpp"

#include <stdexcept>

using namespace roundsleek;

TEST_CASE("interval validation and membership") {
    Interval pt = IntervalUnion::make(rat(2), rat(2), false, false);
    CHECK(pt.is_point());
    CHECK(pt.contains(rat(2)));
    CHECK_FALSE(pt.contains(rat(3)));

    CHECK_THROWS_AS(IntervalUnion::make(rat(2), rat(2), true, false), std::invalid_argument);
    CHECK_THROWS_AS(IntervalUnion::make(rat(3), rat(2), false, false), std::invalid_argument);

    Interval half = IntervalUnion::make(rat(0), rat(1), true, false);
    CHECK_FALSE(half.contains(rat(0)));
    CHECK(half.contains(rat(1)));
    CHECK(half.contains(rat(1, 2)));
}

TEST_CASE("normalization merges overlaps and touching closures") {
    IntervalUnion u({IntervalUnion::make(rat(0), rat(2), false, false),
                     IntervalUnion::make(rat(1), rat(3), false, false)});
    REQUIRE(u.components().size() == 1);
    CHECK(u.components()[0].lo == rat(0));
    CHECK(u.components()[0].hi == rat(3));

    // Touching with at least one closed side joins into one component.
    IntervalUnion v({IntervalUnion::make(rat(0), rat(1), false, false),
                     IntervalUnion::make(rat(1), rat(2), true, false)});
    REQUIRE(v.components().size() == 1);
    CHECK(v.contains(rat(1)));

    IntervalUnion w({IntervalUnion::make(rat(0), rat(1), false, true),
                     IntervalUnion::make(rat(1), rat(2), false, false)});
    REQUIRE(w.components().size() == 1);

    // A closed point fills an open endpoint.
    IntervalUnion x({IntervalUnion::make(rat(0), rat(1), true, true),
                     IntervalUnion::make(rat(1), rat(1), false, false)});
    REQUIRE(x.components().size() == 1);
    CHECK(x.components()[0].hi_open == false);
    CHECK_FALSE(x.contains(rat(0)));
}

TEST_CASE("punctures stay split") {
    IntervalUnion u({IntervalUnion::make(rat(0), rat(1), true, true),
                     IntervalUnion::make(rat(1), rat(2), true, true)});
    REQUIRE(u.components().size() == 2);
    CHECK_FALSE(u.contains(rat(1)));
    CHECK(u.contains(rat(1, 2)));
    CHECK(u.contains(rat(3, 2)));
}

TEST_CASE("component order is canonical regardless of input order") {
    IntervalUnion a({IntervalUnion::make(rat(4), rat(5), false, false),
                     IntervalUnion::make(rat(0), rat(1), true, false)});
    IntervalUnion b({IntervalUnion::make(rat(0), rat(1), true, false),
                     IntervalUnion::make(rat(4), rat(5), false, false)});
    CHECK(a == b);
    REQUIRE(a.components().size() == 2);
    CHECK(a.components()[0].lo == rat(0));
    CHECK(a.components()[1].lo == rat(4));
}

TEST_CASE("inf and sup with attainment flags") {
    IntervalUnion u({IntervalUnion::make(rat(0), rat(1), true, false),
                     IntervalUnion::make(rat(2), rat(3), false, true)});
    CHECK(u.inf() == rat(0));
    CHECK_FALSE(u.inf_attained());
    CHECK(u.sup() == rat(3));
    CHECK_FALSE(u.sup_attained());

    IntervalUnion v = IntervalUnion::closed(rat(-1), rat(4));
    CHECK(v.inf_attained());
    CHECK(v.sup_attained());

    IntervalUnion e;
    CHECK(e.empty());
    CHECK_THROWS(e.inf());
    CHECK_THROWS(e.sup());
}

TEST_CASE("clip against a window") {
    IntervalUnion u({IntervalUnion::make(rat(0), rat(2), false, false),
                     IntervalUnion::make(rat(3), rat(5), true, true)});

    IntervalUnion inside = u.clip(IntervalUnion::make(rat(1), rat(4), false, false));
    REQUIRE(inside.components().size() == 2);
    CHECK(inside.components()[0].lo == rat(1));
    CHECK(inside.components()[0].hi == rat(2));
    CHECK(inside.components()[1].lo == rat(3));
    CHECK(inside.components()[1].lo_open);
    CHECK(inside.components()[1].hi == rat(4));
    CHECK_FALSE(inside.components()[1].hi_open);

    CHECK(u.clip(IntervalUnion::make(rat(10), rat(11), false, false)).empty());
    CHECK(u.meets(IntervalUnion::make(rat(2), rat(3), false, false)));
    // Window touching only an open edge misses the set.
    CHECK_FALSE(u.meets(IntervalUnion::make(rat(5), rat(6), false, false)));
}

TEST_CASE("intersect_unions distributes over components") {
    IntervalUnion a({IntervalUnion::make(rat(0), rat(3), false, false),
                     IntervalUnion::make(rat(5), rat(7), false, false)});
    IntervalUnion b({IntervalUnion::make(rat(2), rat(6), true, true)});
    IntervalUnion c = intersect_unions(a, b);
    REQUIRE(c.components().size() == 2);
    CHECK(c.components()[0].lo == rat(2));
    CHECK(c.components()[0].lo_open);
    CHECK(c.components()[0].hi == rat(3));
    CHECK_FALSE(c.components()[0].hi_open);
    CHECK(c.components()[1].lo == rat(5));
    CHECK_FALSE(c.components()[1].lo_open);
    CHECK(c.components()[1].hi == rat(6));
    CHECK(c.components()[1].hi_open);

    CHECK(intersect_unions(a, IntervalUnion()).empty());
}

TEST_CASE("endpoints lists every boundary value once") {
    IntervalUnion u({IntervalUnion::make(rat(0), rat(1), false, true),
                     IntervalUnion::make(rat(1), rat(1), false, false),
                     IntervalUnion::make(rat(4), rat(4), false, false)});
    // First two merge into [0,1]; the point 4 stays.
    auto eps = u.endpoints();
    REQUIRE(eps.size() >= 3);
    CHECK(u.contains(rat(1)));
    CHECK(u.contains(rat(4)));
    CHECK_FALSE(u.contains(rat(2)));
}

TEST_CASE("random_union produces valid normal forms") {
    Rng rng(99, "iu-fuzz");
    for (int i = 0; i < 200; ++i) {
        IntervalUnion u = random_union(rng, 4, 12);
        const auto& parts = u.components();
        for (size_t k = 0; k < parts.size(); ++k) {
            CHECK(parts[k].lo <= parts[k].hi);
            if (parts[k].lo == parts[k].hi) {
                CHECK_FALSE(parts[k].lo_open);
                CHECK_FALSE(parts[k].hi_open);
            }
            if (k > 0) {
                const Interval& prev = parts[k - 1];
                CHECK(prev.hi <= parts[k].lo);
                if (prev.hi == parts[k].lo) {
                    // Touching survives normalization only as a puncture.
                    CHECK(prev.hi_open);
                    CHECK(parts[k].lo_open);
                }
            }
        }
        // Re-normalizing the component list is a fixed point.
        CHECK(IntervalUnion(parts) == u);
    }
}
