#include "doctest.h"

#include "roundsleek/constructions.hpp"

#include <memory>

using namespace roundsleek;

namespace {

Point sc(long v) { return Point::scalar(rat(v)); }
Point sc(const Rat& v) { return Point::scalar(v); }

MetricSpace two_point() {
    return LineSubsetSpace::make(
        IntervalUnion({IntervalUnion::make(rat(0), rat(0), false, false),
                       IntervalUnion::make(rat(1), rat(1), false, false)}));
}

}  // namespace

TEST_CASE("weighted product distance is exact on finite prefixes") {
    MetricSpace pd = product_metric_D({two_point()}, bounded_transform(LineSubsetSpace::whole_line()), 32);
    const auto* impl = pd.as<ProductDSpace>();
    REQUIRE(impl != nullptr);
    CHECK(impl->truncation_index() == 32);
    CHECK(impl->scale(1) == rat(1, 2));
    CHECK(impl->scale(2) == rat(1, 4));

    Point a = impl->make_point({sc(0), sc(0)});
    Point b = impl->make_point({sc(1), sc(rat(1, 3))});
    CHECK(pd.contains(a));
    CHECK(pd.contains(b));

    // The coarse first answer carries the geometric tail allowance; asking
    // before any refinement, since enclosures only ever narrow.
    LazyReal d = pd.distance(a, b);
    BoundedReal coarse = d.enclosure(0);
    CHECK(coarse.hi() - coarse.lo() == rat_pow2(-32));
    CHECK(coarse.lo() <= rat(9, 16));
    CHECK(rat(9, 16) <= coarse.hi());

    // Head flip contributes 1/2; the second coordinate contributes
    // (1/3)/(1 + 1/3) * 1/4 = 1/16.
    BoundedReal fine = d.enclosure(4);
    CHECK(fine.exact());
    CHECK(fine.lo() == rat(9, 16));

    auto diam = impl->diameter();
    REQUIRE(diam.has_value());
    CHECK(diam->hi() <= rat(1));

    auto base = impl->base_point();
    REQUIRE(base.has_value());
    LazyReal d0 = pd.distance(*base, impl->make_point({sc(1)}));
    BoundedReal e0 = d0.enclosure(4);
    CHECK(e0.exact());
    CHECK(e0.lo() == rat(1, 2));
}

TEST_CASE("euclidean product combines factor metrics by root-sum-square") {
    MetricSpace prod = product_euclid(
        {MetricSpace(std::make_shared<DiscreteSpace>(std::vector<std::string>{"a", "b"})),
         LineSubsetSpace::whole_line()});

    Point p = Point::tuple({Point::label("a"), sc(0)});
    Point q = Point::tuple({Point::label("a"), sc(5)});
    Point r = Point::tuple({Point::label("b"), sc(3)});
    CHECK(prod.contains(p));
    CHECK_FALSE(prod.contains(Point::tuple({Point::label("z"), sc(0)})));

    auto same = prod.distance(p, q).exact_rat();
    REQUIRE(same.has_value());
    CHECK(*same == rat(5));

    // Cross-label at offset 3: sqrt(1 + 9).
    LazyReal d = prod.distance(p, r);
    CHECK(compare(d, rat(3)) == Ordering::Greater);
    CHECK(compare(d, rat(19, 6)) == Ordering::Less);
}

TEST_CASE("truncation caps the metric and remembers a plateau pair") {
    MetricSpace base = LineSubsetSpace::whole_line();
    MetricSpace t = truncate_metric(base, rat(2), std::make_pair(sc(0), sc(10)));
    const auto* impl = t.as<TruncateSpace>();
    REQUIRE(impl != nullptr);
    CHECK(impl->radius() == rat(2));
    REQUIRE(impl->plateau_pair().has_value());

    auto far = t.distance(sc(0), sc(5)).exact_rat();
    REQUIRE(far.has_value());
    CHECK(*far == rat(2));

    auto near = t.distance(sc(0), sc(1)).exact_rat();
    REQUIRE(near.has_value());
    CHECK(*near == rat(1));

    auto atr = t.distance(sc(0), sc(2)).exact_rat();
    REQUIRE(atr.has_value());
    CHECK(*atr == rat(2));

    auto diam = impl->diameter();
    REQUIRE(diam.has_value());
    CHECK(diam->hi() == rat(2));
}

TEST_CASE("bounded remetrization stays below one") {
    MetricSpace b = bounded_transform(LineSubsetSpace::whole_line());
    const auto* impl = b.as<MonotoneSpace>();
    REQUIRE(impl != nullptr);
    CHECK(impl->transform_name() == "t_over_1pt");

    auto diam = impl->diameter();
    REQUIRE(diam.has_value());
    CHECK(diam->hi() == rat(1));

    auto d = b.distance(sc(0), sc(3)).exact_rat();
    REQUIRE(d.has_value());
    CHECK(*d == rat(3, 4));

    auto z = b.distance(sc(7), sc(7)).exact_rat();
    REQUIRE(z.has_value());
    CHECK(*z == rat(0));
}

TEST_CASE("log1p transform orders distances like the base") {
    MetricSpace b = monotone_image(LineSubsetSpace::whole_line(), "log1p");
    LazyReal d = b.distance(sc(0), sc(1));  // log 2
    CHECK(compare(d, rat(2, 3)) == Ordering::Greater);
    CHECK(compare(d, rat(7, 10)) == Ordering::Less);

    LazyReal d2 = b.distance(sc(0), sc(2));  // log 3
    CHECK(compare(d2, rat(1)) == Ordering::Greater);
    CHECK(compare(d2, rat(11, 10)) == Ordering::Less);
}

TEST_CASE("carrier restriction picks the matching space type") {
    MetricSpace line = restrict_to(LineSubsetSpace::whole_line(),
                                   IntervalUnion::open(rat(0), rat(1)));
    const auto* ls = line.as<LineSubsetSpace>();
    REQUIRE(ls != nullptr);
    CHECK(ls->carrier() == IntervalUnion::open(rat(0), rat(1)));
    CHECK_FALSE(line.contains(sc(0)));
    CHECK(line.contains(sc(rat(1, 2))));

    MetricSpace plane = restrict_to(MetricSpace(std::make_shared<RnSpace>(2)),
                                    Region::disk({rat(0), rat(0)}, rat(1), true));
    const auto* pr = plane.as<PlaneRegionSpace>();
    REQUIRE(pr != nullptr);
    CHECK(plane.contains(Point::vec({rat(1), rat(0)})));
    CHECK_FALSE(plane.contains(Point::vec({rat(2), rat(0)})));
}
