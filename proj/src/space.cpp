#include "roundsleek/space.hpp"

#include <algorithm>
#include <sstream>

#include "roundsleek/certify.hpp"
#include "roundsleek/errors.hpp"

namespace roundsleek {

namespace {

// A member of a normalized component, biased toward closed endpoints so the
// result is always exactly representable.
Rat pick_point(const Interval& iv) {
    if (!iv.lo_open) return iv.lo;
    if (!iv.hi_open) return iv.hi;
    return (iv.lo + iv.hi) / 2;
}

std::optional<Rat> nearest_in_union(const IntervalUnion& u, const Rat& target) {
    std::optional<Rat> best;
    Rat best_gap;
    for (const auto& comp : u.components()) {
        Rat cand = comp.contains(target) ? target : pick_point(comp);
        Rat gap = rat_abs(cand - target);
        if (!best || gap < best_gap) {
            best = cand;
            best_gap = gap;
        }
    }
    return best;
}

Rat dist_to_hull(const Interval& comp, const Rat& y) {
    if (y < comp.lo) return comp.lo - y;
    if (y > comp.hi) return y - comp.hi;
    return Rat(0);
}

std::vector<Rat> vsub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Rat norm2(const std::vector<Rat>& v) {
    Rat s(0);
    for (const auto& c : v) s += c * c;
    return s;
}

Pt2 pt2_of(const Point& p) {
    const auto& v = p.as_vector();
    if (v.size() != 2) throw DomainMismatch("expected a point of the plane");
    return {v[0], v[1]};
}

// sqrt(A2) + sqrt(B2) <= sqrt(C2), decided in rationals by squaring twice.
bool sqrt_sum_le(const Rat& A2, const Rat& B2, const Rat& C2) {
    Rat m = C2 - A2 - B2;
    if (m < 0) return false;
    return 4 * A2 * B2 <= m * m;
}

// Certified region inside B[x, sqrt(r2)], via convexity of euclidean balls on the
// primitive pieces.
bool region_within_ball(const Region& rg, const Pt2& x, const Rat& r2) {
    switch (rg.kind()) {
        case Region::Kind::Full:
        case Region::Kind::HalfPlane:
            return false;
        case Region::Kind::Disk:
        case Region::Kind::Circle:
            return sqrt_sum_le(dist2(rg.center_pt(), x), rg.radius() * rg.radius(), r2);
        case Region::Kind::Segment:
            return dist2(rg.seg_p(), x) <= r2 && dist2(rg.seg_q(), x) <= r2;
        case Region::Kind::Box2: {
            const Box& b = rg.box_data();
            for (const Rat& px : {b.x1, b.x2})
                for (const Rat& py : {b.y1, b.y2})
                    if (dist2({px, py}, x) > r2) return false;
            return true;
        }
        case Region::Kind::Union: {
            for (const auto& part : rg.parts())
                if (!region_within_ball(part, x, r2)) return false;
            return true;
        }
        case Region::Kind::Intersection: {
            for (const auto& part : rg.parts())
                if (region_within_ball(part, x, r2)) return true;
            return false;
        }
    }
    return false;
}

Point point_of(const Pt2& p) { return Point::vec({p.first, p.second}); }

void push_unique(std::vector<Point>& out, const Point& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

}  // namespace

std::vector<Point> SpaceImpl::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                          int count) const {
    std::vector<Point> out;
    int attempts = count * 8 + 8;
    while (attempts-- > 0 && static_cast<int>(out.size()) < count) {
        auto batch = sample_global(rng, 1);
        if (batch.empty()) continue;
        if (compare(distance(center, batch[0]), radius, 64) != Ordering::Greater)
            out.push_back(batch[0]);
    }
    return out;
}

std::optional<Point> SpaceImpl::base_point() const {
    auto a = anchors();
    if (a.empty()) return std::nullopt;
    return a[0];
}

// ---------------------------------------------------------------------------
// LineSubsetSpace

LineSubsetSpace::LineSubsetSpace(IntervalUnion carrier, bool rationals_only)
    : whole_(false), rationals_only_(rationals_only), carrier_(std::move(carrier)) {
    if (carrier_.empty()) throw EmptyRegion("line subset needs a nonempty carrier");
}

MetricSpace LineSubsetSpace::whole_line() {
    auto s = std::shared_ptr<LineSubsetSpace>(new LineSubsetSpace());
    s->whole_ = true;
    return MetricSpace(s);
}

MetricSpace LineSubsetSpace::make(IntervalUnion carrier, bool rationals_only) {
    return MetricSpace(std::make_shared<LineSubsetSpace>(std::move(carrier), rationals_only));
}

const IntervalUnion& LineSubsetSpace::carrier() const {
    if (whole_) throw DomainMismatch("the whole line has no finite carrier");
    return carrier_;
}

std::string LineSubsetSpace::describe() const {
    if (whole_) return "the real line";
    std::string s = (rationals_only_ ? "rational points of " : "line subset ") + carrier_.str();
    return s;
}

bool LineSubsetSpace::contains(const Point& p) const {
    if (p.kind() != Point::Kind::Scalar) return false;
    return whole_ || carrier_.contains(p.as_scalar());
}

LazyReal LineSubsetSpace::distance(const Point& a, const Point& b) const {
    return LazyReal(rat_abs(a.as_scalar() - b.as_scalar()));
}

std::vector<Point> LineSubsetSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        if (whole_) {
            out.push_back(Point::scalar(rng.next_rat_in(rat(-3), rat(3), 24)));
            continue;
        }
        const auto& parts = carrier_.components();
        const Interval& comp = parts[rng.next_in(0, static_cast<long>(parts.size()) - 1)];
        if (comp.is_point()) {
            out.push_back(Point::scalar(comp.lo));
            continue;
        }
        Rat cand = (comp.lo + comp.hi) / 2;
        for (int t = 0; t < 8; ++t) {
            Rat c = rng.next_rat_in(comp.lo, comp.hi, 24);
            if (comp.contains(c)) {
                cand = c;
                break;
            }
        }
        out.push_back(Point::scalar(cand));
    }
    return out;
}

std::vector<Point> LineSubsetSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                                int count) const {
    Rat c = center.as_scalar();
    Interval window{c - radius, c + radius, false, false};
    IntervalUnion hits = whole_ ? IntervalUnion({window}) : carrier_.clip(window);
    std::vector<Point> out;
    if (hits.empty()) return out;
    const auto& parts = hits.components();
    for (int i = 0; i < count; ++i) {
        const Interval& comp = parts[rng.next_in(0, static_cast<long>(parts.size()) - 1)];
        if (comp.is_point()) {
            out.push_back(Point::scalar(comp.lo));
            continue;
        }
        Rat cand = (comp.lo + comp.hi) / 2;
        for (int t = 0; t < 8; ++t) {
            Rat v = rng.next_rat_in(comp.lo, comp.hi, 24);
            if (comp.contains(v)) {
                cand = v;
                break;
            }
        }
        out.push_back(Point::scalar(cand));
    }
    return out;
}

std::optional<BoundedReal> LineSubsetSpace::diameter() const {
    if (whole_) return std::nullopt;
    Rat span = carrier_.sup() - carrier_.inf();
    return BoundedReal(span);
}

std::vector<Point> LineSubsetSpace::anchors() const {
    std::vector<Point> out;
    if (whole_) {
        for (long v : {-2L, 0L, 1L}) push_unique(out, Point::scalar(rat(v)));
        push_unique(out, Point::scalar(rat(-1, 2)));
        push_unique(out, Point::scalar(rat(5, 2)));
        return out;
    }
    for (const auto& comp : carrier_.components()) {
        if (!comp.lo_open) push_unique(out, Point::scalar(comp.lo));
        if (!comp.hi_open) push_unique(out, Point::scalar(comp.hi));
        if (!comp.is_point()) push_unique(out, Point::scalar((comp.lo + comp.hi) / 2));
        if (out.size() >= 14) break;
    }
    return out;
}

std::optional<Point> LineSubsetSpace::base_point() const {
    if (whole_) return Point::scalar(rat(0));
    return Point::scalar(pick_point(carrier_.components().front()));
}

std::optional<Point> LineSubsetSpace::approach_within(const Point& x, const Point& y,
                                                      int k) const {
    Rat a = x.as_scalar(), c = y.as_scalar();
    Rat r = rat_abs(a - c);
    if (r == 0) return std::nullopt;
    Rat w = rat_pow2(-k);
    auto piece = intersect_intervals(Interval{c - w, c + w, true, true},
                                     Interval{a - r, a + r, true, true});
    if (!piece) return std::nullopt;
    IntervalUnion hits = whole_ ? IntervalUnion({*piece}) : carrier_.clip(*piece);
    if (hits.empty()) return std::nullopt;
    auto z = nearest_in_union(hits, c);
    return z ? std::optional<Point>(Point::scalar(*z)) : std::nullopt;
}

std::optional<Point> LineSubsetSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    Rat a = x.as_scalar(), c = y.as_scalar();
    Rat r = rat_abs(a - c);
    Rat w = rat_pow2(-k);
    std::optional<Rat> best;
    Rat best_gap;
    auto consider = [&](const Interval& window) {
        IntervalUnion hits = whole_ ? IntervalUnion({window}) : carrier_.clip(window);
        if (auto z = nearest_in_union(hits, c)) {
            Rat gap = rat_abs(*z - c);
            if (!best || gap < best_gap) {
                best = z;
                best_gap = gap;
            }
        }
    };
    if (c - w < a - r) consider(Interval{c - w, a - r, true, true});
    if (a + r < c + w) consider(Interval{a + r, c + w, true, true});
    return best ? std::optional<Point>(Point::scalar(*best)) : std::nullopt;
}

std::optional<Rat> LineSubsetSpace::separation_from_open_ball(const Point& x,
                                                              const Point& y) const {
    Rat a = x.as_scalar(), c = y.as_scalar();
    Rat r = rat_abs(a - c);
    if (r == 0) return std::nullopt;
    Interval ball{a - r, a + r, true, true};
    IntervalUnion hit = whole_ ? IntervalUnion({ball}) : carrier_.clip(ball);
    if (hit.empty()) return rat(1);
    std::optional<Rat> best;
    for (const auto& comp : hit.components()) {
        Rat d = dist_to_hull(comp, c);
        if (d == 0) return std::nullopt;
        if (!best || d < *best) best = d;
    }
    return best;
}

std::optional<Rat> LineSubsetSpace::neighborhood_in_closed_ball(const Point& x,
                                                                const Point& y) const {
    if (whole_) return std::nullopt;
    Rat a = x.as_scalar(), c = y.as_scalar();
    Rat r = rat_abs(a - c);
    Rat lo0 = carrier_.inf() - 1, hi0 = carrier_.sup() + 1;
    IntervalUnion outside;
    std::optional<Rat> best;
    auto scan = [&](const Interval& window) -> bool {
        if (window.lo > window.hi) return true;
        IntervalUnion hit = carrier_.clip(window);
        for (const auto& comp : hit.components()) {
            Rat d = dist_to_hull(comp, c);
            if (d == 0) return false;
            if (!best || d < *best) best = d;
        }
        return true;
    };
    if (lo0 < a - r && !scan(Interval{lo0, a - r, false, true})) return std::nullopt;
    if (a + r < hi0 && !scan(Interval{a + r, hi0, true, false})) return std::nullopt;
    if (!best) return rat(1);  // nothing outside the closed ball at all
    return best;
}

std::optional<Rat> LineSubsetSpace::isolation_radius() const {
    if (whole_) return std::nullopt;
    const auto& parts = carrier_.components();
    for (const auto& comp : parts)
        if (!comp.is_point()) return std::nullopt;
    if (parts.size() == 1) return rat(1);
    std::optional<Rat> gap;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        Rat g = parts[i + 1].lo - parts[i].hi;
        if (!gap || g < *gap) gap = g;
    }
    return gap;
}

// ---------------------------------------------------------------------------
// RnSpace

RnSpace::RnSpace(int n) : n_(n) {
    if (n < 1 || n > 3) throw UnsupportedDimension("euclidean space dimension must be 1..3");
}

std::string RnSpace::describe() const {
    std::ostringstream os;
    os << "euclidean space of dimension " << n_;
    return os.str();
}

bool RnSpace::contains(const Point& p) const {
    return p.kind() == Point::Kind::Vector && static_cast<int>(p.as_vector().size()) == n_;
}

LazyReal RnSpace::distance(const Point& a, const Point& b) const {
    return LazyReal::sqrt_of(norm2(vsub(a.as_vector(), b.as_vector())));
}

std::vector<Point> RnSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> v(n_);
        for (int j = 0; j < n_; ++j) v[j] = rng.next_rat_in(rat(-3), rat(3), 24);
        out.push_back(Point::vec(std::move(v)));
    }
    return out;
}

std::vector<Point> RnSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                        int count) const {
    const auto& c = center.as_vector();
    std::vector<Point> out;
    int attempts = count * 6 + 6;
    while (attempts-- > 0 && static_cast<int>(out.size()) < count) {
        std::vector<Rat> v(n_);
        for (int j = 0; j < n_; ++j) v[j] = rng.next_rat_in(c[j] - radius, c[j] + radius, 24);
        if (norm2(vsub(v, c)) <= radius * radius) out.push_back(Point::vec(std::move(v)));
    }
    return out;
}

std::vector<Point> RnSpace::anchors() const {
    std::vector<Point> out;
    std::vector<Rat> zero(n_, Rat(0));
    out.push_back(Point::vec(zero));
    for (int j = 0; j < n_; ++j) {
        auto e = zero;
        e[j] = 1;
        out.push_back(Point::vec(e));
        e[j] = -2;
        out.push_back(Point::vec(e));
    }
    std::vector<Rat> half(n_, rat(1, 2));
    out.push_back(Point::vec(half));
    return out;
}

std::optional<Point> RnSpace::base_point() const { return Point::vec(std::vector<Rat>(n_, Rat(0))); }

std::optional<Point> RnSpace::approach_within(const Point& x, const Point& y, int k) const {
    const auto& xv = x.as_vector();
    const auto& yv = y.as_vector();
    Rat r2 = norm2(vsub(xv, yv));
    if (r2 == 0) return std::nullopt;
    Rat t = rat_min(rat(1, 2), 2 * rat_pow2(-k) / (1 + r2));
    Rat target2 = rat_pow2(-2 * k);
    for (int h = 0; h < 8; ++h) {
        if (t * t * r2 <= target2) {
            std::vector<Rat> z(xv.size());
            for (size_t j = 0; j < z.size(); ++j) z[j] = yv[j] + t * (xv[j] - yv[j]);
            return Point::vec(std::move(z));
        }
        t /= 2;
    }
    return std::nullopt;
}

std::optional<Point> RnSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    const auto& xv = x.as_vector();
    const auto& yv = y.as_vector();
    Rat r2 = norm2(vsub(xv, yv));
    Rat target2 = rat_pow2(-2 * k);
    if (r2 == 0) {
        auto z = yv;
        z[0] += rat_pow2(-k);
        return Point::vec(std::move(z));
    }
    Rat t = rat_min(rat(1, 2), 2 * rat_pow2(-k) / (1 + r2));
    for (int h = 0; h < 8; ++h) {
        if (t * t * r2 <= target2) {
            std::vector<Rat> z(xv.size());
            for (size_t j = 0; j < z.size(); ++j) z[j] = yv[j] + t * (yv[j] - xv[j]);
            return Point::vec(std::move(z));
        }
        t /= 2;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// PlaneRegionSpace

PlaneRegionSpace::PlaneRegionSpace(Region region, std::string name,
                                   std::optional<BoundedReal> exact_diameter,
                                   std::vector<Pt2> extra_anchors)
    : region_(std::move(region)),
      name_(std::move(name)),
      diam_(std::move(exact_diameter)),
      extra_anchors_(std::move(extra_anchors)) {
    if (region_.anchor_pts().empty()) {
        Rng probe(0, "region-probe");
        if (!region_.sample_pt(probe, Box{rat(-8), rat(8), rat(-8), rat(8)}, 512))
            throw EmptyRegion("plane region has no reachable points");
    }
}

std::string PlaneRegionSpace::describe() const {
    return name_.empty() ? "plane subset " + region_.str() : name_;
}

bool PlaneRegionSpace::contains(const Point& p) const {
    if (p.kind() != Point::Kind::Vector || p.as_vector().size() != 2) return false;
    return region_.contains(pt2_of(p));
}

LazyReal PlaneRegionSpace::distance(const Point& a, const Point& b) const {
    return LazyReal::sqrt_of(dist2(pt2_of(a), pt2_of(b)));
}

std::vector<Point> PlaneRegionSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    Box window{rat(-3), rat(3), rat(-3), rat(3)};
    for (int i = 0; i < count; ++i)
        if (auto p = region_.sample_pt(rng, window, 48)) out.push_back(point_of(*p));
    return out;
}

std::vector<Point> PlaneRegionSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                                 int count) const {
    Pt2 c = pt2_of(center);
    Box window{c.first - radius, c.first + radius, c.second - radius, c.second + radius};
    Rat r2 = radius * radius;
    std::vector<Point> out;
    int attempts = count * 6 + 6;
    while (attempts-- > 0 && static_cast<int>(out.size()) < count) {
        auto p = region_.sample_pt(rng, window, 8);
        if (p && dist2(*p, c) <= r2) out.push_back(point_of(*p));
    }
    return out;
}

std::optional<BoundedReal> PlaneRegionSpace::diameter() const {
    if (diam_) return diam_;
    auto b = region_.bound();
    if (!b) return std::nullopt;
    Rat diag2 = (b->x2 - b->x1) * (b->x2 - b->x1) + (b->y2 - b->y1) * (b->y2 - b->y1);
    return BoundedReal(Rat(0), sqrt_enclosure(diag2, 8).hi());
}

std::vector<Point> PlaneRegionSpace::anchors() const {
    std::vector<Point> out;
    for (const auto& p : region_.anchor_pts()) push_unique(out, point_of(p));
    for (const auto& p : extra_anchors_)
        if (region_.contains(p)) push_unique(out, point_of(p));
    return out;
}

std::optional<Point> PlaneRegionSpace::move_candidate(const Point& x, const Point& y, int k,
                                                      bool increase) const {
    Pt2 X = pt2_of(x), Y = pt2_of(y);
    Rat r2 = dist2(X, Y);
    if (!increase && r2 == 0) return std::nullopt;
    Rat target2 = rat_pow2(-2 * k);
    auto ok = [&](const Pt2& z) {
        if (z == Y || !region_.contains(z)) return false;
        if (dist2(z, Y) > target2) return false;
        Rat d = dist2(z, X);
        return increase ? d > r2 : d < r2;
    };
    const Region* curve = region_.curve_at(Y);
    Rat t = rat_min(rat(1, 2), 2 * rat_pow2(-k) / (1 + r2));
    Rat s = rat_pow2(-k);
    for (int h = 0; h < 9; ++h) {
        std::vector<Pt2> cands;
        if (r2 != 0) {
            Pt2 dir{X.first - Y.first, X.second - Y.second};
            Rat sign = increase ? Rat(-1) : Rat(1);
            cands.push_back({Y.first + sign * t * dir.first, Y.second + sign * t * dir.second});
        } else if (increase) {
            cands.push_back({Y.first + s, Y.second});
            cands.push_back({Y.first, Y.second + s});
        }
        if (curve && curve->kind() == Region::Kind::Circle) {
            const Pt2& c = curve->center_pt();
            const Rat& R = curve->radius();
            if (auto u = Region::u_on_circle(c, R, Y)) {
                cands.push_back(Region::circle_chart(c, R, *u + t));
                cands.push_back(Region::circle_chart(c, R, *u - t));
            } else {
                // west point: reflect through the center into the chart
                Pt2 mirror{2 * c.first - Y.first, 2 * c.second - Y.second};
                if (auto v = Region::u_on_circle(c, R, mirror)) {
                    auto flip = [&](const Pt2& p) -> Pt2 {
                        return {2 * c.first - p.first, 2 * c.second - p.second};
                    };
                    cands.push_back(flip(Region::circle_chart(c, R, *v + t)));
                    cands.push_back(flip(Region::circle_chart(c, R, *v - t)));
                }
            }
        }
        if (curve && curve->kind() == Region::Kind::Segment) {
            if (auto tt = curve->t_on_segment(Y)) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    Rat t2 = *tt + sgn * t;
                    if (t2 >= 0 && t2 <= 1) cands.push_back(curve->segment_chart(t2));
                }
            }
        }
        // axis nudges catch boundary slides the straight move misses
        cands.push_back({Y.first + s, Y.second});
        cands.push_back({Y.first - s, Y.second});
        cands.push_back({Y.first, Y.second + s});
        cands.push_back({Y.first, Y.second - s});
        for (const auto& z : cands)
            if (ok(z)) return point_of(z);
        t /= 2;
        s /= 2;
    }
    return std::nullopt;
}

std::optional<Point> PlaneRegionSpace::approach_within(const Point& x, const Point& y,
                                                       int k) const {
    return move_candidate(x, y, k, false);
}

std::optional<Point> PlaneRegionSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    return move_candidate(x, y, k, true);
}

std::optional<Rat> PlaneRegionSpace::separation_from_open_ball(const Point& x,
                                                               const Point& y) const {
    Pt2 X = pt2_of(x), Y = pt2_of(y);
    Rat r2 = dist2(X, Y);
    if (r2 == 0) return std::nullopt;
    if (auto pts = region_.finite_points()) {
        std::optional<Rat> g2;
        for (const auto& p : *pts) {
            if (dist2(p, X) >= r2) continue;
            Rat d2 = dist2(p, Y);
            if (!g2 || d2 < *g2) g2 = d2;
        }
        if (!g2) return rat(1);
        return *g2 / (1 + *g2);  // rational lower bound of sqrt(g2)
    }
    for (const Rat& eps : {rat(1, 2), rat(1, 8)})
        if (bnb_open_ball_reach_empty(region_, X, r2, Y, eps, 12)) return eps;
    return std::nullopt;
}

std::optional<Rat> PlaneRegionSpace::neighborhood_in_closed_ball(const Point& x,
                                                                 const Point& y) const {
    Pt2 X = pt2_of(x), Y = pt2_of(y);
    Rat r2 = dist2(X, Y);
    if (r2 == 0) return std::nullopt;
    if (region_within_ball(region_, X, r2)) return rat(1);
    for (const Rat& eps : {rat(1, 2), rat(1, 8)})
        if (bnb_escape_set_empty(region_, X, r2, Y, eps, 12)) return eps;
    return std::nullopt;
}

std::optional<Rat> PlaneRegionSpace::isolation_radius() const {
    auto pts = region_.finite_points();
    if (!pts || pts->size() < 1) return std::nullopt;
    if (pts->size() == 1) return rat(1);
    std::optional<Rat> m2;
    for (size_t i = 0; i < pts->size(); ++i)
        for (size_t j = i + 1; j < pts->size(); ++j) {
            Rat d2 = dist2((*pts)[i], (*pts)[j]);
            if (!m2 || d2 < *m2) m2 = d2;
        }
    if (auto root = rat_sqrt_exact(*m2)) return *root;
    return *m2 / (1 + *m2);
}

// ---------------------------------------------------------------------------
// XPrimeSpace

std::string XPrimeSpace::describe() const {
    return "two parallel lines with the cross-line lift metric";
}

bool XPrimeSpace::contains(const Point& p) const {
    if (p.kind() != Point::Kind::Vector || p.as_vector().size() != 2) return false;
    const Rat& line = p.as_vector()[1];
    return line == 0 || line == 1;
}

LazyReal XPrimeSpace::distance(const Point& a, const Point& b) const {
    const auto& av = a.as_vector();
    const auto& bv = b.as_vector();
    Rat dt = av[0] - bv[0];
    if (av[1] == bv[1]) return LazyReal(rat_abs(dt));
    return LazyReal::sqrt_of(dt * dt + 1);
}

std::vector<Point> XPrimeSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        Rat t = rng.next_rat_in(rat(-3), rat(3), 24);
        out.push_back(Point::vec({t, Rat(rng.next_bool() ? 1 : 0)}));
    }
    return out;
}

std::vector<Point> XPrimeSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                            int count) const {
    const auto& c = center.as_vector();
    std::vector<Point> out;
    int attempts = count * 6 + 6;
    while (attempts-- > 0 && static_cast<int>(out.size()) < count) {
        Rat t = rng.next_rat_in(c[0] - radius, c[0] + radius, 24);
        Rat line = rng.next_bool() ? Rat(1) : Rat(0);
        Point p = Point::vec({t, line});
        if (compare(distance(center, p), radius, 64) != Ordering::Greater) out.push_back(p);
    }
    return out;
}

std::vector<Point> XPrimeSpace::anchors() const {
    std::vector<Point> out;
    for (long a : {0L, 1L, -1L})
        for (long line : {0L, 1L}) out.push_back(Point::vec({rat(a), rat(line)}));
    return out;
}

std::optional<Point> XPrimeSpace::approach_within(const Point& x, const Point& y, int k) const {
    const auto& xv = x.as_vector();
    const auto& yv = y.as_vector();
    Rat s = xv[0], t = yv[0];
    if (s == t) return std::nullopt;  // same point, or an isolated sphere point
    Rat dir = s > t ? Rat(1) : Rat(-1);
    Rat step = rat_min(rat_pow2(-k), rat_abs(s - t) / 2);
    return Point::vec({t + dir * step, yv[1]});
}

std::optional<Point> XPrimeSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    const auto& xv = x.as_vector();
    const auto& yv = y.as_vector();
    Rat s = xv[0], t = yv[0];
    Rat dir = s > t ? Rat(-1) : Rat(1);  // away from x; either way when s == t
    return Point::vec({t + dir * rat_pow2(-k), yv[1]});
}

std::optional<Rat> XPrimeSpace::separation_from_open_ball(const Point& x, const Point& y) const {
    const auto& xv = x.as_vector();
    const auto& yv = y.as_vector();
    // Only the point directly across the gap is stranded: its ball of radius
    // 1 is reached by no open-ball point from the other line.
    if (xv[1] != yv[1] && xv[0] == yv[0]) return rat(1, 2);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// DiscreteSpace

DiscreteSpace::DiscreteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw EmptyRegion("label space needs at least one label");
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

std::string DiscreteSpace::describe() const {
    std::ostringstream os;
    os << labels_.size() << " labels with the discrete metric";
    return os.str();
}

bool DiscreteSpace::contains(const Point& p) const {
    return p.kind() == Point::Kind::Label &&
           std::find(labels_.begin(), labels_.end(), p.as_label()) != labels_.end();
}

LazyReal DiscreteSpace::distance(const Point& a, const Point& b) const {
    return a.as_label() == b.as_label() ? LazyReal() : LazyReal(rat(1));
}

std::vector<Point> DiscreteSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i)
        out.push_back(Point::label(labels_[rng.next_in(0, static_cast<long>(labels_.size()) - 1)]));
    return out;
}

std::vector<Point> DiscreteSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                              int count) const {
    if (radius >= 1) return sample_global(rng, count);
    return std::vector<Point>(count, center);
}

std::optional<BoundedReal> DiscreteSpace::diameter() const {
    return BoundedReal(labels_.size() >= 2 ? rat(1) : rat(0));
}

std::vector<Point> DiscreteSpace::anchors() const {
    std::vector<Point> out;
    for (size_t i = 0; i < labels_.size() && i < 6; ++i) out.push_back(Point::label(labels_[i]));
    return out;
}

std::optional<Rat> DiscreteSpace::isolation_radius() const { return rat(1); }

}  // namespace roundsleek
