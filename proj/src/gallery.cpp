#include "roundsleek/gallery.hpp"

#include <memory>
#include <utility>

#include "roundsleek/constructions.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/region.hpp"

namespace roundsleek {

std::string expected_name(Expected e) {
    switch (e) {
        case Expected::True: return "true";
        case Expected::False: return "false";
        case Expected::Unverified: return "unverified";
    }
    return "unverified";
}

namespace {

MetricSpace plane(Region region, std::string name,
                  std::optional<BoundedReal> exact_diameter = std::nullopt,
                  std::vector<Pt2> extra_anchors = {}) {
    return MetricSpace(std::make_shared<PlaneRegionSpace>(
        std::move(region), std::move(name), std::move(exact_diameter),
        std::move(extra_anchors)));
}

Region arc_right() {
    // Unit-circle points with |y| < x: the open quarter arc about (1, 0).
    return Region::intersect({Region::circle({Rat(0), Rat(0)}, Rat(1)),
                              Region::halfplane(Rat(-1), Rat(1), Rat(0), false),
                              Region::halfplane(Rat(-1), Rat(-1), Rat(0), false)});
}

Region arc_left() {
    // Unit-circle points with |y| < -x: the open quarter arc about (-1, 0).
    return Region::intersect({Region::circle({Rat(0), Rat(0)}, Rat(1)),
                              Region::halfplane(Rat(1), Rat(1), Rat(0), false),
                              Region::halfplane(Rat(1), Rat(-1), Rat(0), false)});
}

MetricSpace two_point_line_subset() {
    return LineSubsetSpace::make(
        IntervalUnion({Interval{Rat(0), Rat(0)}, Interval{Rat(1), Rat(1)}}));
}

std::vector<GalleryEntry> build_registry() {
    std::vector<GalleryEntry> entries;

    entries.push_back({"open-interval", LineSubsetSpace::make(IntervalUnion::open(0, 1)),
                       Expected::True, Expected::True,
                       "bounded open interval of the real line; closure of every open ball is "
                       "the closed ball and interior of every closed ball is the open ball"});

    entries.push_back({"closed-interval", LineSubsetSpace::make(IntervalUnion::closed(0, 1)),
                       Expected::True, Expected::False,
                       "compact interval; round, but the distance from an interior point "
                       "attains a maximum at an attained endpoint, defeating sleekness"});

    entries.push_back(
        {"half-open-interval",
         LineSubsetSpace::make(IntervalUnion({IntervalUnion::make(0, 1, true, false)})),
         Expected::Unverified, Expected::False,
         "half-open interval; the attained right endpoint defeats sleekness"});

    entries.push_back(
        {"gap-union",
         LineSubsetSpace::make(IntervalUnion(
             {IntervalUnion::make(0, 1, false, false), IntervalUnion::make(2, 3, false, false)})),
         Expected::False, Expected::False,
         "two separated closed intervals; a disjoint closed-plus-compact split rules out "
         "roundness for any equivalent metric, and attained endpoints defeat sleekness"});

    entries.push_back(
        {"rationals-sample", LineSubsetSpace::make(IntervalUnion::closed(0, 1), true),
         Expected::Unverified, Expected::Unverified,
         "dense countable set of rationals in the unit interval, represented by a "
         "bounded-denominator sampler; expected verdicts left unverified at desk scale"});

    entries.push_back({"real-line", LineSubsetSpace::whole_line(), Expected::True, Expected::True,
                       "the real line; every normed linear space has both ball identities"});

    entries.push_back({"circle",
                       plane(Region::circle({Rat(0), Rat(0)}, Rat(1)), "unit circle",
                             BoundedReal(Rat(2))),
                       Expected::True, Expected::False,
                       "unit circle; round, but compactness yields a farthest pair, so the "
                       "distance from one end attains a maximum over the whole set"});

    entries.push_back({"segment",
                       plane(Region::segment({Rat(-1), Rat(0)}, {Rat(1), Rat(0)}, true, true),
                             "closed horizontal segment", BoundedReal(Rat(2))),
                       Expected::True, Expected::False,
                       "closed segment from (-1,0) to (1,0); round, but compact and therefore "
                       "not sleek"});

    entries.push_back(
        {"two-point",
         plane(Region::unite({Region::point({Rat(-1), Rat(0)}), Region::point({Rat(1), Rat(0)})}),
               "two-point intersection of circle and segment", BoundedReal(Rat(2))),
         Expected::False, Expected::False,
         "the two points where the unit circle meets the horizontal segment; isolated "
         "points defeat both roundness and sleekness"});

    entries.push_back({"arc-right",
                       plane(arc_right(), "open quarter arc about (1,0)", std::nullopt),
                       Expected::Unverified, Expected::True,
                       "open quarter arc of the unit circle about (1,0); every sphere point "
                       "is a limit of points outside the closed ball, so the arc is sleek"});

    entries.push_back({"arc-left",
                       plane(arc_left(), "open quarter arc about (-1,0)", std::nullopt),
                       Expected::Unverified, Expected::True,
                       "open quarter arc of the unit circle about (-1,0); sleek like its "
                       "mirror image"});

    entries.push_back(
        {"arcs-union",
         plane(Region::unite({arc_right(), arc_left()}), "union of two opposite open arcs",
               BoundedReal(Rat(2))),
         Expected::Unverified, Expected::False,
         "union of the two opposite open quarter arcs; the closed ball of radius two about "
         "(1,0) is the whole set, so its interior is the whole set, while the open ball "
         "misses (-1,0) - sleekness fails; a commonly transcribed form of this identity "
         "repeats the closed ball on both sides, but the encoded claim compares the "
         "interior of the closed ball with the open ball"});

    entries.push_back({"halfplane-lower",
                       plane(Region::halfplane(Rat(0), Rat(1), Rat(0), true),
                             "closed lower halfplane"),
                       Expected::True, Expected::True,
                       "closed lower halfplane; straight segments stay inside, giving "
                       "roundness, and sliding along the boundary escapes every closed ball, "
                       "giving sleekness"});

    entries.push_back({"halfplane-right",
                       plane(Region::halfplane(Rat(-1), Rat(0), Rat(0), true),
                             "closed right halfplane"),
                       Expected::True, Expected::True,
                       "closed right halfplane; round and sleek for the same reasons as the "
                       "lower halfplane"});

    entries.push_back(
        {"quadrant",
         plane(Region::intersect({Region::halfplane(Rat(0), Rat(1), Rat(0), true),
                                  Region::halfplane(Rat(-1), Rat(0), Rat(0), true)}),
               "closed quarter plane", std::nullopt, {{Rat(1), Rat(-1)}, {Rat(0), Rat(0)}}),
         Expected::True, Expected::False,
         "intersection of the lower and right halfplanes; round by convexity, but the "
         "corner is a farthest point of one of its own neighborhoods: the origin lies in "
         "the interior of the closed ball about (1,-1) of radius sqrt(2) without lying in "
         "the open ball"});

    entries.push_back({"two-lines", MetricSpace(std::make_shared<XPrimeSpace>()),
                       Expected::False, Expected::True,
                       "two parallel horizontal lines at heights 0 and 1; the point lifted "
                       "straight across sits at distance exactly one from the center, outside "
                       "the closure of the unit open ball, so roundness fails, while every "
                       "closed ball has no surplus interior and the space is sleek"});

    entries.push_back(
        {"product-D",
         product_metric_D({two_point_line_subset()},
                          bounded_transform(LineSubsetSpace::whole_line()), 32),
         Expected::False, Expected::True,
         "geometrically weighted product of the two-point factor {0,1} with repeated "
         "bounded copies of the line; the weighted product metric is sleek although the "
         "first factor is not, and roundness fails exactly because a factor fails"});

    entries.push_back(
        {"dictionary-plane",
         product_euclid({MetricSpace(std::make_shared<DiscreteSpace>(
                             std::vector<std::string>{"a", "b"})),
                         LineSubsetSpace::whole_line()}),
         Expected::Unverified, Expected::True,
         "product of a two-letter discrete factor with the real line; a desk-scale slice "
         "of the dictionary-order plane, sleek because pairwise unions of vertical lines "
         "are sleek"});

    entries.push_back({"closed-disk",
                       plane(Region::disk({Rat(0), Rat(0)}, Rat(1), true), "closed unit disk",
                             BoundedReal(Rat(2))),
                       Expected::True, Expected::False,
                       "closed unit disk; round by convexity, while compactness defeats "
                       "sleekness"});

    entries.push_back({"euclid-2", MetricSpace(std::make_shared<RnSpace>(2)), Expected::True,
                       Expected::True,
                       "the Euclidean plane; both ball identities hold in every normed "
                       "linear space"});

    entries.push_back({"euclid-3", MetricSpace(std::make_shared<RnSpace>(3)), Expected::True,
                       Expected::True,
                       "Euclidean three-space; both ball identities hold in every normed "
                       "linear space"});

    entries.push_back(
        {"strip-closed",
         product_euclid({LineSubsetSpace::whole_line(),
                         LineSubsetSpace::make(IntervalUnion::closed(0, 1))}),
         Expected::Unverified, Expected::True,
         "product of the real line with the compact unit interval; sleek even though the "
         "interval factor alone is not"});

    entries.push_back(
        {"strip-half-open",
         product_euclid({LineSubsetSpace::whole_line(),
                         LineSubsetSpace::make(
                             IntervalUnion({IntervalUnion::make(0, 1, true, false)}))}),
         Expected::Unverified, Expected::True,
         "product of the real line with a half-open interval; sleek even though the "
         "half-open factor alone is not"});

    return entries;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
    static const std::vector<GalleryEntry> registry = build_registry();
    return registry;
}

std::vector<std::string> gallery_names() {
    std::vector<std::string> names;
    for (const auto& e : gallery_entries()) names.push_back(e.name);
    return names;
}

GalleryEntry gallery_space(const std::string& name) {
    for (const auto& e : gallery_entries())
        if (e.name == name) return e;
    throw UnknownName("no gallery space named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Two-lines ball oracle

XPrimeBall xprime_ball_oracle(const Rat& a, int b, const BoundedReal& r) {
    if (b != 0 && b != 1) throw InvalidParameter("line index must be 0 or 1");
    if (!(r.lo() > 0)) throw InvalidParameter("ball radius must be positive");
    XPrimeBall ball;
    ball.a = a;
    ball.b = b;
    ball.r = r;
    ball.own_half_width = r;
    if (r.exact()) {
        const Rat& q = r.lo();
        if (q == 1) {
            ball.other_is_point = true;
        } else if (q > 1) {
            ball.other_half_width = sqrt_enclosure(q * q - 1, 128);
        }
        return ball;
    }
    if (r.hi() < 1) return ball;
    if (r.lo() > 1) {
        BoundedReal lo = sqrt_enclosure(r.lo() * r.lo() - 1, 128);
        BoundedReal hi = sqrt_enclosure(r.hi() * r.hi() - 1, 128);
        ball.other_half_width = BoundedReal(lo.lo(), hi.hi());
        return ball;
    }
    throw InvalidParameter("radius enclosure straddles the critical height 1");
}

bool XPrimeBall::member(const Point& p) const {
    if (!r.exact()) throw InvalidParameter("oracle membership needs an exact radius");
    if (p.kind() != Point::Kind::Vector || p.as_vector().size() != 2) return false;
    const Rat& x = p.as_vector()[0];
    const Rat& line = p.as_vector()[1];
    if (line != 0 && line != 1) return false;
    Rat dx2 = (x - a) * (x - a);
    Rat r2 = r.lo() * r.lo();
    if (line == b) return dx2 <= r2;
    return dx2 + 1 <= r2;
}

// ---------------------------------------------------------------------------
// Weighted-product ball oracle

namespace {

bool valid_productd_point(const Point& p) {
    if (p.kind() != Point::Kind::Seq) return false;
    const auto& kids = p.children();
    for (const auto& kid : kids)
        if (kid.kind() != Point::Kind::Scalar) return false;
    if (!kids.empty()) {
        const Rat& h = kids[0].as_scalar();
        if (h != 0 && h != 1) return false;
    }
    return true;
}

Rat head_of(const Point& p) {
    return p.children().empty() ? Rat(0) : p.children()[0].as_scalar();
}

Rat coord_of(const Point& p, std::size_t k) {
    const auto& kids = p.children();
    return k < kids.size() ? kids[k].as_scalar() : Rat(0);
}

// Exact weighted tail distance: sum over k >= 2 of (|u-v|/(1+|u-v|)) / 2^k,
// computed directly from the finite prefixes.
Rat tail_sum(const Point& a, const Point& b) {
    std::size_t n = std::max(a.children().size(), b.children().size());
    Rat sum(0);
    Rat weight = rat(1, 4);
    for (std::size_t k = 1; k < n; ++k) {
        Rat t = rat_abs(coord_of(a, k) - coord_of(b, k));
        sum += weight * t / (1 + t);
        weight /= 2;
    }
    return sum;
}

}  // namespace

ProductDBall productD_ball_oracle(const Point& center, const Rat& r) {
    if (!valid_productd_point(center))
        throw DomainMismatch("center is not a point of the weighted product space");
    if (!(r > 0)) throw InvalidParameter("ball radius must be positive");
    ProductDBall ball;
    ball.center = center;
    ball.r = r;
    ball.own_tail_budget = r;
    Rat half = rat(1, 2);
    if (r == half)
        ball.flip_is_point = true;
    else if (r > half)
        ball.flip_tail_budget = r - half;
    return ball;
}

bool ProductDBall::member(const Point& p) const {
    if (!valid_productd_point(p)) return false;
    Rat t = tail_sum(center, p);
    if (head_of(p) == head_of(center)) return t <= own_tail_budget;
    if (flip_is_point) return t == 0;
    if (flip_tail_budget) return t <= *flip_tail_budget;
    return false;
}

}  // namespace roundsleek
