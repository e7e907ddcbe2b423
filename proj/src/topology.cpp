#include "roundsleek/topology.hpp"

#include <algorithm>

#include "roundsleek/errors.hpp"

namespace roundsleek {

namespace {

int ladder_length(const ToleranceConfig& cfg) {
    return std::clamp(ceil_log2_inverse(cfg.grid_delta), 3, 20);
}

// Keep only rungs whose distance enclosures are certifiably strictly
// decreasing, scanning from the tightest rung backwards.
std::vector<std::pair<Point, BoundedReal>> thin_ladder(
    std::vector<std::pair<Point, BoundedReal>> rungs) {
    std::vector<std::pair<Point, BoundedReal>> kept;
    for (auto it = rungs.rbegin(); it != rungs.rend(); ++it) {
        if (kept.empty() || it->second.lo() > kept.back().second.hi()) kept.push_back(*it);
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

void bump(Effort* effort, long samples, long refinements) {
    if (!effort) return;
    effort->samples += samples;
    effort->refinements += refinements;
}

// A certified No must survive a sampling cross-check: no drawn point of
// B(y, eps) may satisfy the predicate the certificate claims empty.
template <class Bad>
bool no_survives(const MetricSpace& space, const Point& y, const Rat& eps,
                 const ToleranceConfig& cfg, Effort* effort, Bad bad) {
    Rng rng(cfg.seed, "no-crosscheck");
    auto near = space.impl().sample_near(y, eps, rng, 16);
    bump(effort, static_cast<long>(near.size()), 0);
    for (const auto& z : near) {
        if (compare(space.distance(z, y), eps, cfg.precision_cap) != Ordering::Less) continue;
        if (bad(z)) return false;
    }
    return true;
}

// Shared ladder driver: per rung k try the space's move hook, then sampled
// fallbacks, re-certifying every candidate before accepting it.
template <class Move, class Accept>
std::optional<std::vector<std::pair<Point, BoundedReal>>> run_ladder(
    const MetricSpace& space, const Point& y, const ToleranceConfig& cfg, Effort* effort,
    Move move, Accept accept) {
    int L = ladder_length(cfg);
    Rng rng(cfg.seed, "ladder");
    std::vector<std::pair<Point, BoundedReal>> rungs;
    for (int k = 1; k <= L; ++k) {
        Rat step = rat_pow2(-k);
        std::optional<Point> z;
        if (auto cand = move(k)) {
            bump(effort, 0, 1);
            if (accept(*cand, step)) z = cand;
        }
        if (!z) {
            auto draws = space.impl().sample_near(y, step, rng, 12);
            bump(effort, static_cast<long>(draws.size()), 0);
            for (const auto& cand : draws)
                if (accept(cand, step)) {
                    z = cand;
                    break;
                }
        }
        if (!z) return std::nullopt;
        BoundedReal dz = space.distance(*z, y).enclosure(16);
        rungs.push_back({*z, dz.meet(BoundedReal(Rat(0), step))});
    }
    return thin_ladder(std::move(rungs));
}

}  // namespace

TopoAnswer ball_member(const MetricSpace& space, const BallQuery& q, const Point& y,
                       const ToleranceConfig& cfg) {
    if (!space.contains(y) || !space.contains(q.center))
        throw DomainMismatch("ball query outside the space");
    TopoAnswer ans;
    LazyReal d = space.distance(q.center, y);
    if (q.radius.exact()) {
        switch (compare(d, q.radius.lo(), cfg.precision_cap)) {
            case Ordering::Less:
                ans.verdict = Tri::Yes;
                return ans;
            case Ordering::Equal:
                ans.verdict = q.closed ? Tri::Yes : Tri::No;
                return ans;
            case Ordering::Greater:
                ans.verdict = Tri::No;
                return ans;
            case Ordering::Unknown:
                return ans;
        }
    }
    BoundedReal e = d.enclosure(cfg.precision_cap);
    if (e.hi() < q.radius.lo())
        ans.verdict = Tri::Yes;
    else if (e.lo() > q.radius.hi())
        ans.verdict = Tri::No;
    return ans;
}

TopoAnswer closure_contains(const MetricSpace& space, const BallQuery& q, const Point& y,
                            const ToleranceConfig& cfg, Effort* effort) {
    TopoAnswer ans;
    LazyReal d = space.distance(q.center, y);
    BoundedReal e = d.enclosure(32);
    // Strictly inside: open-ball points are in the closure trivially.
    if (e.hi() < q.radius.lo()) {
        ans.verdict = Tri::Yes;
        ans.witness_seq.push_back({y, e});
        return ans;
    }
    // Strictly outside: the triangle inequality separates y from the ball.
    if (e.lo() > q.radius.hi()) {
        ans.verdict = Tri::No;
        ans.separation = e.lo() - q.radius.hi();
        return ans;
    }
    BoundedReal tight = d.enclosure(cfg.precision_cap);
    if (tight.hi() < q.radius.lo()) {
        ans.verdict = Tri::Yes;
        ans.witness_seq.push_back({y, tight});
        return ans;
    }
    if (tight.lo() > q.radius.hi()) {
        ans.verdict = Tri::No;
        ans.separation = tight.lo() - q.radius.hi();
        return ans;
    }
    // Sphere regime: insist the query radius pins d(x,y) within sep_eps,
    // then certify against the exact radius d(x,y).
    if (tight.width() > cfg.sep_eps) return ans;

    const Point& x = q.center;
    auto accept = [&](const Point& z, const Rat& step) {
        if (!space.contains(z)) return false;
        if (compare(space.distance(x, z), d, cfg.precision_cap) != Ordering::Less) return false;
        return compare(space.distance(z, y), step, cfg.precision_cap) != Ordering::Greater;
    };
    auto ladder = run_ladder(
        space, y, cfg, effort, [&](int k) { return space.impl().approach_within(x, y, k); },
        accept);
    if (ladder) {
        ans.verdict = Tri::Yes;
        ans.witness_seq = std::move(*ladder);
        return ans;
    }

    auto in_open_ball = [&](const Point& z) {
        return compare(space.distance(x, z), d, cfg.precision_cap) == Ordering::Less;
    };
    if (auto mu = space.impl().isolation_radius()) {
        // B(y, mu) = {y} and y is not in the open ball, so the intersection
        // is empty.
        if (no_survives(space, y, *mu, cfg, effort, in_open_ball)) {
            ans.verdict = Tri::No;
            ans.separation = *mu;
            return ans;
        }
    }
    if (auto eps = space.impl().separation_from_open_ball(x, y)) {
        if (no_survives(space, y, *eps, cfg, effort, in_open_ball)) {
            ans.verdict = Tri::No;
            ans.separation = *eps;
            return ans;
        }
    }
    return ans;
}

TopoAnswer exterior_limit_point(const MetricSpace& space, const Point& x, const Point& y,
                                const ToleranceConfig& cfg, Effort* effort) {
    TopoAnswer ans;
    LazyReal d = space.distance(x, y);
    if (compare(d, Rat(0), cfg.precision_cap) != Ordering::Greater) return ans;

    auto accept = [&](const Point& z, const Rat& step) {
        if (!space.contains(z)) return false;
        if (compare(space.distance(x, z), d, cfg.precision_cap) != Ordering::Greater) return false;
        return compare(space.distance(z, y), step, cfg.precision_cap) != Ordering::Greater;
    };
    auto ladder = run_ladder(
        space, y, cfg, effort, [&](int k) { return space.impl().escape_beyond(x, y, k); }, accept);
    if (ladder) {
        ans.verdict = Tri::Yes;
        ans.witness_seq = std::move(*ladder);
        return ans;
    }

    auto outside_closed_ball = [&](const Point& z) {
        return compare(space.distance(x, z), d, cfg.precision_cap) == Ordering::Greater;
    };
    if (auto mu = space.impl().isolation_radius()) {
        if (no_survives(space, y, *mu, cfg, effort, outside_closed_ball)) {
            ans.verdict = Tri::No;
            ans.separation = *mu;
            return ans;
        }
    }
    if (auto diam = space.impl().diameter()) {
        // Saturated radius: every point of the space lies in B[x, d(x,y)].
        if (compare(d, diam->hi(), cfg.precision_cap) != Ordering::Less) {
            ans.verdict = Tri::No;
            ans.separation = rat(1);
            return ans;
        }
    }
    if (auto eps = space.impl().neighborhood_in_closed_ball(x, y)) {
        if (no_survives(space, y, *eps, cfg, effort, outside_closed_ball)) {
            ans.verdict = Tri::No;
            ans.separation = *eps;
            return ans;
        }
    }
    return ans;
}

}  // namespace roundsleek
