#include "doctest.h"

#include "roundsleek/checkers.hpp"
#include "roundsleek/constructions.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/gallery.hpp"

using namespace roundsleek;

namespace {

Point sc(const Rat& v) { return Point::scalar(v); }

ToleranceConfig cfg_budget(long budget, std::uint64_t seed = 1) {
    ToleranceConfig cfg;
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

bool holds(Verdict v) { return v == Verdict::HoldsExact || v == Verdict::HoldsAtBudget; }

}  // namespace

TEST_CASE("every catalog entry reproduces its stated verdicts") {
    ToleranceConfig cfg = cfg_budget(300);
    for (const GalleryEntry& entry : gallery_entries()) {
        INFO("entry: ", entry.name);
        if (entry.expected_round != Expected::Unverified) {
            CheckVerdict v = check_round(entry.space, cfg);
            if (entry.expected_round == Expected::True) {
                CHECK(holds(v.verdict));
            } else {
                CHECK(v.verdict == Verdict::Violated);
                REQUIRE(v.witness.has_value());
                CHECK(replay_witness(entry.space, *v.witness, cfg));
            }
        }
        if (entry.expected_sleek != Expected::Unverified) {
            CheckVerdict v = check_sleek(entry.space, cfg);
            if (entry.expected_sleek == Expected::True) {
                CHECK(holds(v.verdict));
            } else {
                CHECK(v.verdict == Verdict::Violated);
                REQUIRE(v.witness.has_value());
                CHECK(replay_witness(entry.space, *v.witness, cfg));
            }
        }
    }
}

TEST_CASE("catalog lookup") {
    CHECK(gallery_names().size() == gallery_entries().size());
    CHECK_THROWS_AS(gallery_space("no-such-entry"), UnknownName);
    GalleryEntry e = gallery_space("quadrant");
    CHECK(e.name == "quadrant");
    CHECK_FALSE(e.provenance.empty());
}

TEST_CASE("two-lines roundness witness strands the lifted twin") {
    GalleryEntry entry = gallery_space("two-lines");
    CheckVerdict v = check_round(entry.space, cfg_budget(300));
    CHECK(v.verdict == Verdict::Violated);
    REQUIRE(v.witness.has_value());
    const Point& x = v.witness->x;
    const Point& y = v.witness->y;
    REQUIRE(x.kind() == Point::Kind::Vector);
    REQUIRE(y.kind() == Point::Kind::Vector);
    // The stranded sphere point is the same abscissa on the other line.
    CHECK(y.as_vector()[0] == x.as_vector()[0]);
    CHECK(y.as_vector()[1] == rat(1) - x.as_vector()[1]);
    CHECK(v.witness->value.exact());
    CHECK(v.witness->value.lo() == rat(1));
}

TEST_CASE("quadrant sleekness fails exactly at the corner") {
    GalleryEntry entry = gallery_space("quadrant");
    CheckVerdict v = check_sleek(entry.space, cfg_budget(300));
    CHECK(v.verdict == Verdict::Violated);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == WitnessKind::MaxOnOpenSet);
    CHECK(v.witness->x == Point::vec({rat(1), rat(-1)}));
    CHECK(v.witness->y == Point::vec({rat(0), rat(0)}));
}

TEST_CASE("two-lines ball oracle matches the metric") {
    MetricSpace space = gallery_space("two-lines").space;
    Rat a = rat(1, 3);
    int b = 0;
    Point center = Point::vec({a, rat(b)});

    for (const Rat& r : {rat(3, 2), rat(1, 2), rat(2)}) {
        XPrimeBall ball = xprime_ball_oracle(a, b, BoundedReal(r));
        Rng rng(7, "xprime-ball");
        for (int i = 0; i < 250; ++i) {
            Rat t = rng.next_rat_in(rat(-4), rat(4), 24);
            int line = rng.next_bool() ? 1 : 0;
            Point p = Point::vec({t, rat(line)});
            Ordering ord = compare(space.distance(center, p), r);
            REQUIRE(ord != Ordering::Unknown);
            bool inside = ord != Ordering::Greater;
            INFO("r = ", r.get_str(), ", t = ", t.get_str(), ", line = ", line);
            CHECK(ball.member(p) == inside);
        }
    }
}

TEST_CASE("two-lines ball at radius one pinches to a single lifted point") {
    XPrimeBall ball = xprime_ball_oracle(rat(1, 3), 0, BoundedReal(rat(1)));
    CHECK(ball.other_is_point);
    CHECK(ball.member(Point::vec({rat(1, 3), rat(1)})));
    CHECK_FALSE(ball.member(Point::vec({rat(1, 3) + rat(1, 100), rat(1)})));
    CHECK(ball.member(Point::vec({rat(4, 3), rat(0)})));
}

TEST_CASE("two-lines ball oracle rejects a radius enclosure straddling one") {
    CHECK_THROWS_AS(xprime_ball_oracle(rat(0), 0, BoundedReal(rat(99, 100), rat(101, 100))),
                    InvalidParameter);
}

TEST_CASE("weighted product ball oracle matches the metric") {
    MetricSpace space = gallery_space("product-D").space;
    const auto* impl = space.as<ProductDSpace>();
    REQUIRE(impl != nullptr);
    Point center = impl->make_point({sc(rat(0)), sc(rat(1, 2))});

    for (const Rat& r : {rat(1, 4), rat(1, 2), rat(9, 16), rat(5, 4)}) {
        ProductDBall ball = productD_ball_oracle(center, r);
        Rng rng(11, "productD-ball");
        for (int i = 0; i < 250; ++i) {
            long len = rng.next_in(0, 3);
            std::vector<Point> prefix;
            for (long k = 1; k <= len; ++k) {
                if (k == 1)
                    prefix.push_back(sc(rat(rng.next_bool() ? 1 : 0)));
                else
                    prefix.push_back(sc(rng.next_rat_in(rat(-2), rat(2), 12)));
            }
            Point p = impl->make_point(std::move(prefix));
            Ordering ord = compare(space.distance(center, p), r);
            REQUIRE(ord != Ordering::Unknown);
            bool inside = ord != Ordering::Greater;
            INFO("r = ", r.get_str(), ", p = ", p.str());
            CHECK(ball.member(p) == inside);
        }
    }
}

TEST_CASE("weighted product ball pinches to the head flip at one half") {
    MetricSpace space = gallery_space("product-D").space;
    const auto* impl = space.as<ProductDSpace>();
    REQUIRE(impl != nullptr);
    Point center = impl->make_point({});
    ProductDBall ball = productD_ball_oracle(center, rat(1, 2));
    CHECK(ball.flip_is_point);
    CHECK(ball.member(impl->make_point({sc(rat(1))})));
    CHECK_FALSE(ball.member(impl->make_point({sc(rat(1)), sc(rat(1, 10))})));
    CHECK(ball.member(impl->make_point({sc(rat(0)), sc(rat(100))})));
}
