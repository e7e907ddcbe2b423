#include "doctest.h"

#include "roundsleek/axioms.hpp"
#include "roundsleek/constructions.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/space.hpp"

#include <memory>

using namespace roundsleek;

namespace {

Point sc(long v) { return Point::scalar(rat(v)); }
Point sc(const Rat& v) { return Point::scalar(v); }
Point v2(long x, long y) { return Point::vec({rat(x), rat(y)}); }

Rat dist_exact(const MetricSpace& s, const Point& a, const Point& b) {
    auto q = s.distance(a, b).exact_rat();
    REQUIRE(q.has_value());
    return *q;
}

}  // namespace

TEST_CASE("line subset membership and distance") {
    IntervalUnion carrier({IntervalUnion::make(rat(0), rat(1), false, true),
                           IntervalUnion::make(rat(2), rat(3), false, false)});
    MetricSpace s = LineSubsetSpace::make(carrier);

    CHECK(s.contains(sc(0)));
    CHECK_FALSE(s.contains(sc(1)));
    CHECK(s.contains(sc(rat(5, 2))));
    CHECK_FALSE(s.contains(v2(0, 0)));

    CHECK(dist_exact(s, sc(0), sc(3)) == rat(3));
    CHECK(dist_exact(s, sc(rat(1, 2)), sc(rat(1, 3))) == rat(1, 6));
    CHECK(dist_exact(s, sc(2), sc(2)) == rat(0));

    const auto* line = s.as<LineSubsetSpace>();
    REQUIRE(line != nullptr);
    CHECK_FALSE(line->whole());
    CHECK(line->carrier() == carrier);
}

TEST_CASE("rationals-only carrier keeps rational points only") {
    MetricSpace s = LineSubsetSpace::make(IntervalUnion::closed(rat(0), rat(1)), true);
    const auto* line = s.as<LineSubsetSpace>();
    REQUIRE(line != nullptr);
    CHECK(line->rationals_only());
    CHECK(s.contains(sc(rat(1, 3))));
    // Scalars are rational by construction; the flag matters to the deciders.
    CHECK(dist_exact(s, sc(rat(1, 7)), sc(rat(2, 7))) == rat(1, 7));
}

TEST_CASE("whole line has no diameter and contains everything scalar") {
    MetricSpace s = LineSubsetSpace::whole_line();
    CHECK(s.contains(sc(rat(-1000000))));
    CHECK_FALSE(s.impl().diameter().has_value());
}

TEST_CASE("euclidean plane distances carry exact sqrt forms") {
    MetricSpace s = MetricSpace(std::make_shared<RnSpace>(2));
    CHECK(dist_exact(s, v2(0, 0), v2(3, 4)) == rat(5));

    LazyReal d = s.distance(v2(0, 0), v2(1, 1));
    CHECK_FALSE(d.exact_rat().has_value());
    CHECK(compare(d, rat(7, 5)) == Ordering::Greater);
    CHECK(compare(d, rat(3, 2)) == Ordering::Less);
    // Structural equality with sqrt(2) resolves without refinement.
    CHECK(compare(d, LazyReal::sqrt_of(rat(2)), 8) == Ordering::Equal);

    BoundedReal enc = d.enclosure(40);
    CHECK(enc.hi() - enc.lo() <= rat_pow2(-40));
}

TEST_CASE("R^1 and R^3 distances") {
    MetricSpace r1 = MetricSpace(std::make_shared<RnSpace>(1));
    CHECK(dist_exact(r1, Point::vec({rat(-2)}), Point::vec({rat(5)})) == rat(7));

    MetricSpace r3 = MetricSpace(std::make_shared<RnSpace>(3));
    Point a = Point::vec({rat(1), rat(2), rat(2)});
    Point o = Point::vec({rat(0), rat(0), rat(0)});
    CHECK(dist_exact(r3, o, a) == rat(3));
    CHECK_FALSE(r3.contains(v2(0, 0)));
}

TEST_CASE("plane region membership is exact") {
    Region quadrant = Region::intersect({Region::halfplane(rat(-1), rat(0), rat(0), true),
                                         Region::halfplane(rat(0), rat(1), rat(0), false)});
    MetricSpace s = MetricSpace(std::make_shared<PlaneRegionSpace>(quadrant));
    CHECK(s.contains(v2(1, -1)));
    CHECK(s.contains(v2(0, -3)));
    CHECK_FALSE(s.contains(v2(0, 0)));   // y < 0 is strict
    CHECK_FALSE(s.contains(v2(-1, -1)));
    CHECK(dist_exact(s, v2(0, -3), v2(4, -6)) == rat(5));
}

TEST_CASE("circle region constrains points to the curve") {
    Region circ = Region::circle({rat(0), rat(0)}, rat(1));
    MetricSpace s = MetricSpace(std::make_shared<PlaneRegionSpace>(circ));
    CHECK(s.contains(v2(1, 0)));
    CHECK(s.contains(Point::vec({rat(3, 5), rat(4, 5)})));
    CHECK_FALSE(s.contains(v2(0, 0)));
    CHECK(dist_exact(s, v2(1, 0), v2(-1, 0)) == rat(2));
}

TEST_CASE("segment endpoints honor inclusion flags") {
    Region seg = Region::segment({rat(0), rat(0)}, {rat(1), rat(0)}, false, true);
    MetricSpace s = MetricSpace(std::make_shared<PlaneRegionSpace>(seg));
    CHECK_FALSE(s.contains(v2(0, 0)));
    CHECK(s.contains(v2(1, 0)));
    CHECK(s.contains(Point::vec({rat(1, 2), rat(0)})));
    CHECK_FALSE(s.contains(Point::vec({rat(1, 2), rat(1, 100)})));
}

TEST_CASE("two parallel lines: same-line and cross-line distances") {
    MetricSpace s = MetricSpace(std::make_shared<XPrimeSpace>());
    Point a = v2(0, 0);
    Point b = v2(3, 0);
    Point c = v2(0, 1);
    CHECK(s.contains(a));
    CHECK_FALSE(s.contains(v2(0, 2)));

    CHECK(dist_exact(s, a, b) == rat(3));
    CHECK(dist_exact(s, a, c) == rat(1));

    // Cross-line with horizontal offset 1: sqrt(1 + 1).
    LazyReal d = s.distance(b, v2(2, 1));
    CHECK(compare(d, LazyReal::sqrt_of(rat(2)), 8) == Ordering::Equal);
}

TEST_CASE("discrete space is the 0/1 metric") {
    MetricSpace s = MetricSpace(std::make_shared<DiscreteSpace>(
        std::vector<std::string>{"a", "b", "c"}));
    CHECK(s.contains(Point::label("b")));
    CHECK_FALSE(s.contains(Point::label("z")));
    CHECK(dist_exact(s, Point::label("a"), Point::label("a")) == rat(0));
    CHECK(dist_exact(s, Point::label("a"), Point::label("c")) == rat(1));
    auto iso = s.impl().isolation_radius();
    REQUIRE(iso.has_value());
    CHECK(*iso > 0);
    auto diam = s.impl().diameter();
    REQUIRE(diam.has_value());
    CHECK(diam->hi() == rat(1));
}

TEST_CASE("metric axioms hold across the built-in zoo") {
    ToleranceConfig cfg;
    cfg.budget = 120;
    cfg.seed = 7;
    for (const char* name : {"closed-interval", "gap-union", "rationals-sample", "two-point",
                             "quadrant", "circle", "closed-disk", "two-lines", "product-D",
                             "euclid-2", "segment", "dictionary-plane"}) {
        GalleryEntry entry = gallery_space(name);
        AxiomReport rep = verify_metric_axioms(entry.space, cfg);
        INFO("space: ", name);
        CHECK(rep.ok());
        CHECK(rep.pairs_checked > 0);
        CHECK(rep.triples_checked > 0);
    }
}

namespace {

// Squared absolute value on the integer grid: symmetric, zero on the
// diagonal, but d(0,2) = 4 > d(0,1) + d(1,2) = 2.
class SquaredLineSpace : public SpaceImpl {
public:
    std::string describe() const override { return "squared line (broken)"; }
    bool contains(const Point& p) const override { return p.kind() == Point::Kind::Scalar; }
    LazyReal distance(const Point& a, const Point& b) const override {
        Rat d = a.as_scalar() - b.as_scalar();
        return LazyReal(d * d);
    }
    std::vector<Point> sample_global(Rng& rng, int count) const override {
        std::vector<Point> out;
        for (int i = 0; i < count; ++i)
            out.push_back(Point::scalar(rat(static_cast<long>(rng.next_u64() % 7) - 3)));
        return out;
    }
};

}  // namespace

TEST_CASE("axiom checker certifies a broken triangle inequality") {
    MetricSpace s = MetricSpace(std::make_shared<SquaredLineSpace>());
    ToleranceConfig cfg;
    cfg.budget = 200;
    AxiomReport rep = verify_metric_axioms(s, cfg);
    CHECK(rep.violations > 0);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.notes.empty());
}
