#include "roundsleek/checkers.hpp"

#include <algorithm>

#include "roundsleek/errors.hpp"

namespace roundsleek {

namespace {

bool push_unique(std::vector<Point>& pts, const Point& p) {
    for (const auto& q : pts)
        if (q == p) return false;
    pts.push_back(p);
    return true;
}

// A representative of a nonempty interval, biased toward the given side.
Rat side_point(const Interval& c, bool toward_hi) {
    if (c.is_point()) return c.lo;
    if (toward_hi && !c.hi_open) return c.hi;
    if (!toward_hi && !c.lo_open) return c.lo;
    return (c.lo + c.hi) / 2;
}

Rat pick_in_union(const IntervalUnion& X) {
    const Interval& c = X.components().front();
    if (c.is_point() || !c.lo_open) return c.lo;
    if (!c.hi_open) return c.hi;
    return (c.lo + c.hi) / 2;
}

Rat dist_to_union(const Rat& q, const IntervalUnion& X) {
    Rat best;
    bool first = true;
    for (const auto& c : X.components()) {
        if (c.contains(q)) return Rat(0);
        Rat d = rat_min(rat_abs(q - c.lo), rat_abs(q - c.hi));
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

BoundedReal clamp_lo_nonneg(const BoundedReal& b) {
    Rat lo = b.lo() < 0 ? Rat(0) : b.lo();
    Rat hi = b.hi() < 0 ? Rat(0) : b.hi();
    return BoundedReal(lo, hi);
}

// Candidate (x, y) pairs for the roundness / sleekness searches: every
// ordered anchor pair, points sampled just off each anchor, then global
// filler. Anchors sit on the carrier's boundary features, which is where
// every interesting radius lives.
std::vector<std::pair<Point, Point>> candidate_pairs(const MetricSpace& space,
                                                     const ToleranceConfig& cfg, Rng& rng,
                                                     Effort& effort) {
    std::vector<std::pair<Point, Point>> pairs;
    std::vector<Point> anchors;
    for (const auto& a : space.impl().anchors()) push_unique(anchors, a);

    auto room = [&] { return static_cast<long>(pairs.size()) < cfg.budget; };
    for (std::size_t i = 0; i < anchors.size() && room(); ++i)
        for (std::size_t j = 0; j < anchors.size() && room(); ++j)
            if (i != j) pairs.push_back({anchors[i], anchors[j]});

    std::size_t near_anchors = std::min<std::size_t>(anchors.size(), 10);
    for (std::size_t i = 0; i < near_anchors && room(); ++i) {
        auto near = space.impl().sample_near(anchors[i], cfg.grid_delta * 4, rng, 2);
        effort.samples += static_cast<long>(near.size());
        for (const auto& p : near) {
            if (p == anchors[i] || !room()) continue;
            pairs.push_back({p, anchors[i]});
            if (room()) pairs.push_back({anchors[i], p});
        }
    }

    auto globe = space.impl().sample_global(rng, 12);
    effort.samples += static_cast<long>(globe.size());
    for (std::size_t i = 0; i + 1 < globe.size() && room(); ++i) {
        if (!(globe[i] == globe[i + 1])) pairs.push_back({globe[i], globe[i + 1]});
        if (!anchors.empty() && room()) {
            const Point& a = anchors[i % anchors.size()];
            if (!(globe[i] == a)) pairs.push_back({globe[i], a});
        }
    }
    return pairs;
}

// Positive certified distance between the pair, or nullopt when the pair is
// degenerate or undecided.
std::optional<BoundedReal> positive_gap(const MetricSpace& space, const Point& x, const Point& y,
                                        const ToleranceConfig& cfg) {
    LazyReal d = space.distance(x, y);
    BoundedReal e = d.enclosure(64);
    if (e.lo() > 0) return e;
    if (compare(d, Rat(0), cfg.precision_cap) != Ordering::Greater) return std::nullopt;
    return d.enclosure(cfg.precision_cap);
}

struct LineViolation {
    Rat x;
    Rat y;
};

// First configuration breaking roundness: a closed endpoint facing another
// component, approached from the far side.
std::optional<LineViolation> round_violation(const IntervalUnion& X) {
    const auto& cs = X.components();
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (!cs[i].lo_open) return LineViolation{side_point(cs[i - 1], true), cs[i].lo};
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        if (!cs[i].hi_open) return LineViolation{side_point(cs[i + 1], false), cs[i].hi};
    return std::nullopt;
}

// First configuration breaking sleekness: an attained endpoint whose closed
// ball about x saturates its side, paired with an x that keeps the exterior
// away.
std::optional<LineViolation> sleek_violation(const IntervalUnion& X) {
    const auto& cs = X.components();
    std::size_t last = cs.size() - 1;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool len = cs[i].lo < cs[i].hi;
        if (!cs[i].hi_open && (i > 0 || len)) {
            Rat x = len ? side_point(cs[i], false) : side_point(cs[i - 1], true);
            if (x != cs[i].hi) return LineViolation{x, cs[i].hi};
        }
        if (!cs[i].lo_open && (i < last || len)) {
            Rat x = len ? side_point(cs[i], true) : side_point(cs[i + 1], false);
            if (x != cs[i].lo) return LineViolation{x, cs[i].lo};
        }
    }
    return std::nullopt;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HoldsExact: return "holds-exact";
        case Verdict::HoldsAtBudget: return "holds-at-budget";
        case Verdict::Violated: return "violated";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::MinOnOpenSet: return "min-on-open-set";
        case WitnessKind::MaxOnOpenSet: return "max-on-open-set";
        case WitnessKind::SphereNotLimit: return "sphere-not-limit";
        case WitnessKind::ConvexityGap: return "convexity-gap";
        case WitnessKind::StrictConvexityGap: return "strict-convexity-gap";
    }
    return "min-on-open-set";
}

bool decide_round_interval_union(const IntervalUnion& X) {
    if (X.empty()) throw InvalidParameter("empty carrier");
    const auto& cs = X.components();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0 && !cs[i].lo_open) return false;
        if (i + 1 < cs.size() && !cs[i].hi_open) return false;
    }
    return true;
}

bool decide_sleek_interval_union(const IntervalUnion& X) {
    if (X.empty()) throw InvalidParameter("empty carrier");
    const auto& cs = X.components();
    std::size_t last = cs.size() - 1;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool len = cs[i].lo < cs[i].hi;
        if (!cs[i].hi_open && (i > 0 || len)) return false;
        if (!cs[i].lo_open && (i < last || len)) return false;
    }
    return true;
}

CheckVerdict check_round(const MetricSpace& space, const ToleranceConfig& cfg) {
    CheckVerdict out;
    if (const auto* line = space.as<LineSubsetSpace>()) {
        if (line->whole() || decide_round_interval_union(line->carrier())) {
            out.verdict = Verdict::HoldsExact;
            return out;
        }
        auto v = round_violation(line->carrier());
        out.verdict = Verdict::Violated;
        WitnessRecord w;
        w.kind = WitnessKind::MinOnOpenSet;
        w.x = Point::scalar(v->x);
        w.y = Point::scalar(v->y);
        Rat D = rat_abs(v->y - v->x);
        w.value = BoundedReal(D);
        BallQuery q{w.x, BoundedReal(D), false};
        TopoAnswer replay = closure_contains(space, q, w.y, cfg, &out.effort);
        Rat sep = replay.separation.value_or(cfg.sep_eps);
        w.separation = BoundedReal(sep);
        out.witness = w;
        return out;
    }

    Rng rng(cfg.seed, "check-round");
    auto pairs = candidate_pairs(space, cfg, rng, out.effort);
    bool any_unknown = false;
    for (const auto& [x, y] : pairs) {
        auto gap = positive_gap(space, x, y, cfg);
        if (!gap) continue;
        ++out.effort.samples;
        BallQuery q{x, *gap, false};
        TopoAnswer ans = closure_contains(space, q, y, cfg, &out.effort);
        if (ans.verdict == Tri::No) {
            out.verdict = Verdict::Violated;
            WitnessRecord w;
            w.kind = WitnessKind::MinOnOpenSet;
            w.x = x;
            w.y = y;
            w.value = *gap;
            Rat sep = ans.separation.value_or(cfg.sep_eps);
            w.separation = BoundedReal(sep);
            out.witness = w;
            return out;
        }
        if (ans.verdict == Tri::Unknown) any_unknown = true;
    }
    out.verdict = any_unknown ? Verdict::Inconclusive : Verdict::HoldsAtBudget;
    return out;
}

CheckVerdict check_sleek(const MetricSpace& space, const ToleranceConfig& cfg) {
    CheckVerdict out;
    if (const auto* line = space.as<LineSubsetSpace>()) {
        if (line->whole() || decide_sleek_interval_union(line->carrier())) {
            out.verdict = Verdict::HoldsExact;
            return out;
        }
        auto v = sleek_violation(line->carrier());
        out.verdict = Verdict::Violated;
        WitnessRecord w;
        w.kind = WitnessKind::SphereNotLimit;
        w.x = Point::scalar(v->x);
        w.y = Point::scalar(v->y);
        w.value = BoundedReal(rat_abs(v->y - v->x));
        TopoAnswer replay = exterior_limit_point(space, w.x, w.y, cfg, &out.effort);
        Rat sep = replay.separation.value_or(cfg.sep_eps);
        w.separation = BoundedReal(sep);
        out.witness = w;
        return out;
    }

    Rng rng(cfg.seed, "check-sleek");
    auto pairs = candidate_pairs(space, cfg, rng, out.effort);
    bool any_unknown = false;
    for (const auto& [x, y] : pairs) {
        auto gap = positive_gap(space, x, y, cfg);
        if (!gap) continue;
        ++out.effort.samples;
        TopoAnswer ans = exterior_limit_point(space, x, y, cfg, &out.effort);
        if (ans.verdict == Tri::No) {
            out.verdict = Verdict::Violated;
            WitnessRecord w;
            w.kind = WitnessKind::MaxOnOpenSet;
            w.x = x;
            w.y = y;
            w.value = *gap;
            Rat sep = ans.separation.value_or(cfg.sep_eps);
            w.separation = BoundedReal(sep);
            out.witness = w;
            return out;
        }
        if (ans.verdict == Tri::Unknown) any_unknown = true;
    }
    out.verdict = any_unknown ? Verdict::Inconclusive : Verdict::HoldsAtBudget;
    return out;
}

std::string convexity_kind_name(const ConvexityKind& kind) {
    switch (kind.tag) {
        case ConvexityKind::Tag::Lambda: return "lambda";
        case ConvexityKind::Tag::Metric: return "metric";
        case ConvexityKind::Tag::External: return "external";
        case ConvexityKind::Tag::StrongExternal: return "strong-external";
    }
    return "metric";
}

namespace {

// a + t (b - a), coordinatewise; nullopt for labels and sequence points.
std::optional<Point> affine(const Point& a, const Point& b, const Rat& t) {
    if (a.kind() != b.kind()) return std::nullopt;
    switch (a.kind()) {
        case Point::Kind::Scalar:
            return Point::scalar(a.as_scalar() + t * (b.as_scalar() - a.as_scalar()));
        case Point::Kind::Vector: {
            const auto& va = a.as_vector();
            const auto& vb = b.as_vector();
            if (va.size() != vb.size()) return std::nullopt;
            std::vector<Rat> out(va.size());
            for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] + t * (vb[i] - va[i]);
            return Point::vec(std::move(out));
        }
        case Point::Kind::Tuple: {
            const auto& ka = a.children();
            const auto& kb = b.children();
            if (ka.size() != kb.size()) return std::nullopt;
            std::vector<Point> parts;
            parts.reserve(ka.size());
            for (std::size_t i = 0; i < ka.size(); ++i) {
                auto part = affine(ka[i], kb[i], t);
                if (!part) return std::nullopt;
                parts.push_back(std::move(*part));
            }
            return Point::tuple(std::move(parts));
        }
        default:
            return std::nullopt;
    }
}

std::optional<Point> zero_like(const Point& p) {
    switch (p.kind()) {
        case Point::Kind::Scalar:
            return Point::scalar(Rat(0));
        case Point::Kind::Vector:
            return Point::vec(std::vector<Rat>(p.as_vector().size(), Rat(0)));
        case Point::Kind::Tuple: {
            std::vector<Point> parts;
            for (const auto& kid : p.children()) {
                auto z = zero_like(kid);
                if (!z) return std::nullopt;
                parts.push_back(std::move(*z));
            }
            return Point::tuple(std::move(parts));
        }
        default:
            return std::nullopt;
    }
}

std::optional<Point> add_pts(const Point& a, const Point& b) {
    if (a.kind() != b.kind()) return std::nullopt;
    switch (a.kind()) {
        case Point::Kind::Scalar:
            return Point::scalar(a.as_scalar() + b.as_scalar());
        case Point::Kind::Vector: {
            const auto& va = a.as_vector();
            const auto& vb = b.as_vector();
            if (va.size() != vb.size()) return std::nullopt;
            std::vector<Rat> out(va.size());
            for (std::size_t i = 0; i < va.size(); ++i) out[i] = va[i] + vb[i];
            return Point::vec(std::move(out));
        }
        case Point::Kind::Tuple: {
            const auto& ka = a.children();
            const auto& kb = b.children();
            if (ka.size() != kb.size()) return std::nullopt;
            std::vector<Point> parts;
            for (std::size_t i = 0; i < ka.size(); ++i) {
                auto part = add_pts(ka[i], kb[i]);
                if (!part) return std::nullopt;
                parts.push_back(std::move(*part));
            }
            return Point::tuple(std::move(parts));
        }
        default:
            return std::nullopt;
    }
}

BoundedReal convexity_residual(const MetricSpace& space, const ConvexityKind& kind,
                               const Point& x, const Point& y, const Point& z,
                               const BoundedReal& d, int prec) {
    switch (kind.tag) {
        case ConvexityKind::Tag::Lambda: {
            BoundedReal dzx = space.distance(x, z).enclosure(prec);
            BoundedReal dzy = space.distance(z, y).enclosure(prec);
            BoundedReal r1 = br_abs(dzx - BoundedReal(Rat(1) - kind.param) * d);
            BoundedReal r2 = br_abs(dzy - BoundedReal(kind.param) * d);
            return r1 + r2;
        }
        case ConvexityKind::Tag::Metric: {
            BoundedReal dzx = space.distance(x, z).enclosure(prec);
            BoundedReal dzy = space.distance(z, y).enclosure(prec);
            return br_abs(dzx + dzy - d);
        }
        case ConvexityKind::Tag::External: {
            BoundedReal dyz = space.distance(y, z).enclosure(prec);
            BoundedReal dxz = space.distance(x, z).enclosure(prec);
            return br_abs(d + dyz - dxz);
        }
        case ConvexityKind::Tag::StrongExternal: {
            BoundedReal dyz = space.distance(y, z).enclosure(prec);
            BoundedReal dxz = space.distance(x, z).enclosure(prec);
            return br_abs(d + dyz - dxz) + br_abs(dxz - BoundedReal(kind.param));
        }
    }
    return BoundedReal(Rat(1));
}

bool convexity_candidate_ok(const ConvexityKind& kind, const Point& x, const Point& y,
                            const Point& z) {
    if (z == x) return false;
    if (kind.tag != ConvexityKind::Tag::Lambda && z == y) return false;
    if (kind.tag == ConvexityKind::Tag::Lambda && z == y) return false;
    return true;
}

struct PairResult {
    bool skipped = false;
    bool ok = false;
    WitnessRecord record;
};

PairResult convexity_pair(const MetricSpace& space, const ConvexityKind& kind, const Point& x,
                          const Point& y, const ToleranceConfig& cfg, Rng& rng, Effort& effort) {
    PairResult res;
    LazyReal d = space.distance(x, y);
    if (compare(d, Rat(0), cfg.precision_cap) != Ordering::Greater) {
        res.skipped = true;
        return res;
    }
    if (kind.tag == ConvexityKind::Tag::StrongExternal &&
        compare(d, kind.param, cfg.precision_cap) != Ordering::Less) {
        res.skipped = true;
        return res;
    }

    res.record.kind = WitnessKind::ConvexityGap;
    res.record.x = x;
    res.record.y = y;
    res.record.value = d.enclosure(64);
    res.record.detail = convexity_kind_name(kind);
    if (kind.tag == ConvexityKind::Tag::Lambda || kind.tag == ConvexityKind::Tag::StrongExternal)
        res.record.param = kind.param;

    if (const auto* line = space.as<LineSubsetSpace>()) {
        Rat a = x.as_scalar();
        Rat b = y.as_scalar();
        Rat D = rat_abs(b - a);
        Rat dir = b > a ? Rat(1) : Rat(-1);
        std::optional<Rat> found;
        Rat predicted;
        switch (kind.tag) {
            case ConvexityKind::Tag::Lambda: {
                predicted = a + (Rat(1) - kind.param) * (b - a);
                if (space.contains(Point::scalar(predicted))) found = predicted;
                break;
            }
            case ConvexityKind::Tag::Metric: {
                predicted = (a + b) / 2;
                if (line->whole()) {
                    found = predicted;
                    break;
                }
                auto clipped =
                    line->carrier().clip(Interval{rat_min(a, b), rat_max(a, b), true, true});
                if (!clipped.empty()) found = pick_in_union(clipped);
                break;
            }
            case ConvexityKind::Tag::External: {
                predicted = b + (b - a);
                if (line->whole()) {
                    found = predicted;
                    break;
                }
                const IntervalUnion& X = line->carrier();
                Interval win = dir > 0 ? Interval{b, X.sup() + 1, true, false}
                                       : Interval{X.inf() - 1, b, false, true};
                auto clipped = X.clip(win);
                if (!clipped.empty()) found = pick_in_union(clipped);
                break;
            }
            case ConvexityKind::Tag::StrongExternal: {
                predicted = a + dir * kind.param;
                if (space.contains(Point::scalar(predicted))) found = predicted;
                break;
            }
        }
        ++effort.samples;
        if (found) {
            res.ok = true;
            res.record.z = Point::scalar(*found);
            res.record.separation = BoundedReal(Rat(0));
        } else {
            res.record.z = Point::scalar(predicted);
            Rat gap = line->whole() ? Rat(0) : dist_to_union(predicted, line->carrier());
            res.record.separation = BoundedReal(gap);
        }
        return res;
    }

    BoundedReal e = d.enclosure(cfg.precision_cap);
    std::vector<Point> cands;
    auto push_affine = [&](const Rat& t) {
        if (auto z = affine(x, y, t))
            if (space.contains(*z) && convexity_candidate_ok(kind, x, y, *z))
                push_unique(cands, *z);
    };
    Point near_seed = y;
    switch (kind.tag) {
        case ConvexityKind::Tag::Lambda: {
            push_affine(Rat(1) - kind.param);
            if (auto z = affine(x, y, Rat(1) - kind.param)) near_seed = *z;
            break;
        }
        case ConvexityKind::Tag::Metric: {
            for (const Rat& t : {rat(1, 2), rat(1, 4), rat(3, 4), rat(1, 8), rat(7, 8)})
                push_affine(t);
            if (auto z = affine(x, y, rat(1, 2))) near_seed = *z;
            break;
        }
        case ConvexityKind::Tag::External: {
            for (const Rat& t : {Rat(2), rat(3, 2), rat(5, 4), Rat(3)}) push_affine(t);
            if (auto z = affine(x, y, Rat(2))) near_seed = *z;
            break;
        }
        case ConvexityKind::Tag::StrongExternal: {
            for (int prec : {16, 32, 64, 128}) {
                BoundedReal eb = d.enclosure(prec);
                if (!(eb.lo() > 0)) continue;
                Rat t = kind.param * 2 / (eb.lo() + eb.hi());
                push_affine(t);
                if (auto z = affine(x, y, t)) near_seed = *z;
            }
            break;
        }
    }
    auto near = space.impl().sample_near(near_seed, cfg.grid_delta, rng, 8);
    effort.samples += static_cast<long>(near.size());
    for (const auto& z : near)
        if (convexity_candidate_ok(kind, x, y, z) && space.contains(z)) push_unique(cands, z);

    std::optional<BoundedReal> best;
    std::optional<Point> best_z;
    for (const auto& z : cands) {
        ++effort.samples;
        BoundedReal r = convexity_residual(space, kind, x, y, z, e, 32);
        if (!(r.hi() < cfg.sep_eps) && r.lo() < cfg.sep_eps) {
            ++effort.refinements;
            r = convexity_residual(space, kind, x, y, z, e, cfg.precision_cap);
        }
        if (r.hi() < cfg.sep_eps) {
            res.ok = true;
            res.record.z = z;
            res.record.separation = clamp_lo_nonneg(r);
            return res;
        }
        if (!best || r.hi() < best->hi()) {
            best = r;
            best_z = z;
        }
    }
    if (best_z) res.record.z = *best_z;
    res.record.separation =
        best ? clamp_lo_nonneg(*best) : BoundedReal(cfg.sep_eps, cfg.sep_eps);
    return res;
}

}  // namespace

CheckVerdict check_convexity(const MetricSpace& space, const ConvexityKind& kind,
                             const ToleranceConfig& cfg) {
    if (kind.tag == ConvexityKind::Tag::Lambda &&
        !(kind.param > 0 && kind.param < 1))
        throw InvalidParameter("lambda must lie strictly between 0 and 1");
    if (kind.tag == ConvexityKind::Tag::StrongExternal && !(kind.param > 0))
        throw InvalidParameter("strong external distance must be positive");

    CheckVerdict out;
    Rng rng(cfg.seed, "check-convexity");
    auto pairs = candidate_pairs(space, cfg, rng, out.effort);
    long cap = std::clamp(cfg.budget / 25, 4L, 60L);
    if (static_cast<long>(pairs.size()) > cap) pairs.resize(cap);

    long qualified = 0;
    std::optional<WitnessRecord> example;
    for (const auto& [x, y] : pairs) {
        PairResult pr = convexity_pair(space, kind, x, y, cfg, rng, out.effort);
        if (pr.skipped) continue;
        ++qualified;
        if (!pr.ok) {
            out.verdict = Verdict::Violated;
            out.witness = pr.record;
            return out;
        }
        if (!example) example = pr.record;
    }
    if (qualified == 0) {
        out.verdict = Verdict::Inconclusive;
        out.notes.push_back("no qualified pair at this budget");
        return out;
    }
    out.verdict = Verdict::HoldsAtBudget;
    out.witness = example;
    return out;
}

namespace {

struct LinearSetup {
    Point origin;
    std::vector<Point> pool;  // excludes the origin
};

// Origin, a deterministic point pool closed under a few scalings, and a
// translation-invariance spot-check. Throws NotLinear when the space refuses
// any of it.
LinearSetup linear_setup(const MetricSpace& space, const ToleranceConfig& cfg, Rng& rng,
                         Effort& effort) {
    std::vector<Point> seeds = space.impl().anchors();
    if (seeds.empty()) seeds = space.impl().sample_global(rng, 8);
    if (seeds.empty()) throw NotLinear("no points to probe");

    auto origin = zero_like(seeds.front());
    if (!origin) throw NotLinear("points do not form a vector space");
    if (!space.contains(*origin)) throw NotLinear("origin is not in the space");

    LinearSetup setup{*origin, {}};
    auto consider = [&](const Point& p) {
        if (p == *origin || !space.contains(p)) return;
        push_unique(setup.pool, p);
    };
    for (const auto& p : seeds) consider(p);
    for (const auto& p : seeds)
        for (const Rat& c : {Rat(2), Rat(3), Rat(4), Rat(-1), Rat(-2)})
            if (auto q = affine(*origin, p, c)) consider(*q);
    auto globe = space.impl().sample_global(rng, 8);
    effort.samples += static_cast<long>(globe.size());
    for (const auto& p : globe)
        if (p.kind() == seeds.front().kind()) consider(p);
    if (setup.pool.size() > 24) setup.pool.resize(24);
    if (setup.pool.empty()) throw NotLinear("no points besides the origin");

    std::size_t npts = std::min<std::size_t>(setup.pool.size(), 3);
    std::size_t nshift = std::min<std::size_t>(setup.pool.size(), 2);
    for (std::size_t i = 0; i < npts; ++i)
        for (std::size_t j = 0; j < npts; ++j)
            for (std::size_t s = 0; s < nshift; ++s) {
                if (i == j) continue;
                const Point& px = setup.pool[i];
                const Point& py = setup.pool[j];
                auto tx = add_pts(px, setup.pool[s]);
                auto ty = add_pts(py, setup.pool[s]);
                if (!tx || !ty) throw NotLinear("points do not translate");
                if (!space.contains(*tx) || !space.contains(*ty))
                    throw NotLinear("space is not translation closed");
                ++effort.refinements;
                Ordering c = compare(space.distance(*tx, *ty), space.distance(px, py), 96);
                if (c == Ordering::Less || c == Ordering::Greater)
                    throw NotLinear("metric is not translation invariant");
            }
    return setup;
}

}  // namespace

CheckVerdict check_strict_convexity(const MetricSpace& space, const ToleranceConfig& cfg) {
    CheckVerdict out;
    Rng rng(cfg.seed, "strict-convexity");
    LinearSetup setup = linear_setup(space, cfg, rng, out.effort);

    std::vector<LazyReal> radii;
    for (const auto& p : setup.pool) {
        LazyReal r = space.distance(setup.origin, p);
        if (compare(r, Rat(0), cfg.precision_cap) != Ordering::Greater) continue;
        bool fresh = true;
        for (const auto& seen : radii)
            if (compare(r, seen, 96) == Ordering::Equal) {
                fresh = false;
                break;
            }
        if (fresh) radii.push_back(r);
        if (radii.size() >= 6) break;
    }

    std::vector<Point> all = setup.pool;
    all.insert(all.begin(), setup.origin);
    long per_r = std::clamp(cfg.budget / 30, 6L, 60L);
    bool any_unknown = false;
    for (const auto& r : radii) {
        std::vector<Point> admitted;
        for (const auto& p : all) {
            Ordering c = compare(space.distance(setup.origin, p), r, cfg.precision_cap);
            if (c == Ordering::Less || c == Ordering::Equal) admitted.push_back(p);
        }
        long used = 0;
        for (std::size_t i = 0; i < admitted.size() && used < per_r; ++i)
            for (std::size_t j = i + 1; j < admitted.size() && used < per_r; ++j) {
                const Point& px = admitted[i];
                const Point& py = admitted[j];
                if (px == py) continue;
                auto m = affine(px, py, rat(1, 2));
                if (!m) throw NotLinear("no midpoint");
                if (!space.contains(*m)) throw NotLinear("midpoint left the space");
                ++used;
                ++out.effort.samples;
                Ordering c = compare(space.distance(*m, setup.origin), r, cfg.precision_cap);
                if (c == Ordering::Greater || c == Ordering::Equal) {
                    out.verdict = Verdict::Violated;
                    WitnessRecord w;
                    w.kind = WitnessKind::StrictConvexityGap;
                    w.x = px;
                    w.y = py;
                    w.z = *m;
                    w.value = r.enclosure(64);
                    BoundedReal diff =
                        space.distance(*m, setup.origin).enclosure(64) - r.enclosure(64);
                    w.separation = clamp_lo_nonneg(diff);
                    out.witness = w;
                    return out;
                }
                if (c == Ordering::Unknown) any_unknown = true;
            }
    }
    out.verdict = any_unknown ? Verdict::Inconclusive : Verdict::HoldsAtBudget;
    return out;
}

CheckVerdict check_strict_ball_convexity(const MetricSpace& space, const BoundedReal& r,
                                         const ToleranceConfig& cfg) {
    if (!(r.lo() > 0)) throw InvalidParameter("ball radius must be positive");
    CheckVerdict out;
    Rng rng(cfg.seed, "strict-ball-convexity");
    LinearSetup setup = linear_setup(space, cfg, rng, out.effort);

    std::vector<Point> admitted{setup.origin};
    for (const auto& p : setup.pool) {
        LazyReal dp = space.distance(setup.origin, p);
        if (r.exact()) {
            Ordering c = compare(dp, r.lo(), cfg.precision_cap);
            if (c == Ordering::Less || c == Ordering::Equal) admitted.push_back(p);
        } else if (dp.enclosure(cfg.precision_cap).hi() <= r.lo()) {
            admitted.push_back(p);
        }
    }

    std::vector<Rat> lambdas{rat(1, 2), rat(1, 4), rat(3, 4)};
    for (int i = 0; i < 2; ++i) {
        Rat l = rng.next_rat_in(rat(1, 16), rat(15, 16), 4);
        if (l > 0 && l < 1) lambdas.push_back(l);
    }

    long cap = std::clamp(cfg.budget / 10, 8L, 120L);
    long used = 0;
    bool any_unknown = false;
    for (std::size_t i = 0; i < admitted.size() && used < cap; ++i)
        for (std::size_t j = i + 1; j < admitted.size() && used < cap; ++j) {
            const Point& px = admitted[i];
            const Point& py = admitted[j];
            if (px == py) continue;
            for (const Rat& lam : lambdas) {
                if (used >= cap) break;
                auto z = affine(px, py, lam);
                if (!z) throw NotLinear("no convex combination");
                if (!space.contains(*z)) throw NotLinear("combination left the space");
                ++used;
                ++out.effort.samples;
                LazyReal dz = space.distance(setup.origin, *z);
                Ordering c;
                if (r.exact()) {
                    c = compare(dz, r.lo(), cfg.precision_cap);
                } else {
                    BoundedReal e = dz.enclosure(cfg.precision_cap);
                    c = e.hi() < r.lo()    ? Ordering::Less
                        : e.lo() > r.hi()  ? Ordering::Greater
                                           : Ordering::Unknown;
                }
                if (c == Ordering::Less) continue;
                if (c == Ordering::Unknown) {
                    any_unknown = true;
                    continue;
                }
                if (c == Ordering::Greater) {
                    out.verdict = Verdict::Violated;
                    WitnessRecord w;
                    w.kind = WitnessKind::StrictConvexityGap;
                    w.x = px;
                    w.y = py;
                    w.z = *z;
                    w.value = r;
                    w.separation = clamp_lo_nonneg(dz.enclosure(64) - r);
                    w.param = lam;
                    out.witness = w;
                    return out;
                }
                // On the sphere: interior membership is exactly "not a limit
                // of the exterior".
                TopoAnswer ext = exterior_limit_point(space, setup.origin, *z, cfg, &out.effort);
                if (ext.verdict == Tri::Yes) {
                    out.verdict = Verdict::Violated;
                    WitnessRecord w;
                    w.kind = WitnessKind::StrictConvexityGap;
                    w.x = px;
                    w.y = py;
                    w.z = *z;
                    w.value = r;
                    w.separation = BoundedReal(Rat(0));
                    w.param = lam;
                    out.witness = w;
                    return out;
                }
                if (ext.verdict == Tri::Unknown) any_unknown = true;
            }
        }
    out.verdict = any_unknown ? Verdict::Inconclusive : Verdict::HoldsAtBudget;
    return out;
}

UnionFamily interval_union_family(std::vector<IntervalUnion> parts) {
    UnionFamily fam;
    fam.n = static_cast<int>(parts.size());
    fam.make = [parts = std::move(parts)](const std::vector<int>& ids) {
        std::vector<Interval> comps;
        for (int i : ids)
            for (const auto& c : parts.at(static_cast<std::size_t>(i)).components())
                comps.push_back(c);
        return LineSubsetSpace::make(IntervalUnion(std::move(comps)));
    };
    return fam;
}

UnionFamily region_union_family(std::vector<Region> parts) {
    UnionFamily fam;
    fam.n = static_cast<int>(parts.size());
    fam.make = [parts = std::move(parts)](const std::vector<int>& ids) {
        std::vector<Region> chosen;
        for (int i : ids) chosen.push_back(parts.at(static_cast<std::size_t>(i)));
        Region r = chosen.size() == 1 ? chosen.front() : Region::unite(std::move(chosen));
        return MetricSpace(std::make_shared<PlaneRegionSpace>(std::move(r)));
    };
    return fam;
}

CheckVerdict check_union_sleekness(const UnionFamily& family, const ToleranceConfig& cfg,
                                   UnionSleekness* detail) {
    if (family.n <= 0 || !family.make) throw InvalidParameter("empty union family");
    UnionSleekness local;
    std::vector<int> all(static_cast<std::size_t>(family.n));
    for (int i = 0; i < family.n; ++i) all[static_cast<std::size_t>(i)] = i;

    bool pairwise_hold = true;
    for (int i = 0; i < family.n; ++i)
        for (int j = i + 1; j < family.n; ++j) {
            CheckVerdict v = check_sleek(family.make({i, j}), cfg);
            local.pairwise.push_back({i, j, v.verdict});
            if (v.verdict != Verdict::HoldsExact && v.verdict != Verdict::HoldsAtBudget)
                pairwise_hold = false;
        }

    local.full = check_sleek(family.make(all), cfg);
    local.contradiction =
        family.n > 1 && pairwise_hold && local.full.verdict == Verdict::Violated;

    CheckVerdict out = local.full;
    for (const auto& [i, j, v] : local.pairwise)
        out.notes.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            "): " + verdict_name(v));
    if (local.contradiction)
        out.notes.push_back("contradiction: pairwise unions sleek, full union violated");
    if (detail) *detail = std::move(local);
    return out;
}

bool replay_witness(const MetricSpace& space, const WitnessRecord& w, const ToleranceConfig& cfg) {
    if (!space.contains(w.x) || !space.contains(w.y)) return false;
    switch (w.kind) {
        case WitnessKind::MinOnOpenSet: {
            auto gap = positive_gap(space, w.x, w.y, cfg);
            if (!gap) return false;
            BallQuery q{w.x, *gap, false};
            return closure_contains(space, q, w.y, cfg).verdict == Tri::No;
        }
        case WitnessKind::MaxOnOpenSet:
        case WitnessKind::SphereNotLimit:
            return exterior_limit_point(space, w.x, w.y, cfg).verdict == Tri::No;
        case WitnessKind::StrictConvexityGap: {
            if (!w.z || !space.contains(*w.z)) return false;
            auto origin = zero_like(w.x);
            if (!origin || !space.contains(*origin)) return false;
            LazyReal dz = space.distance(*w.z, *origin);
            if (w.value.exact()) {
                Ordering c = compare(dz, w.value.lo(), cfg.precision_cap);
                return c == Ordering::Greater || c == Ordering::Equal;
            }
            return !(dz.enclosure(cfg.precision_cap).hi() < w.value.lo());
        }
        case WitnessKind::ConvexityGap: {
            if (!w.detail) return false;
            ConvexityKind kind;
            if (*w.detail == "lambda")
                kind = ConvexityKind::lambda(w.param.value_or(rat(1, 2)));
            else if (*w.detail == "metric")
                kind = ConvexityKind::metric();
            else if (*w.detail == "external")
                kind = ConvexityKind::external();
            else if (*w.detail == "strong-external")
                kind = ConvexityKind::strong_external(w.param.value_or(Rat(1)));
            else
                return false;
            Rng rng(cfg.seed, "check-convexity");
            Effort effort;
            PairResult pr = convexity_pair(space, kind, w.x, w.y, cfg, rng, effort);
            return !pr.skipped && !pr.ok;
        }
    }
    return false;
}

}  // namespace roundsleek
