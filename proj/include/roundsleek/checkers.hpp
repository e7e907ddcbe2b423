#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "roundsleek/interval_union.hpp"
#include "roundsleek/space.hpp"
#include "roundsleek/topology.hpp"

namespace roundsleek {

enum class Verdict { HoldsExact, HoldsAtBudget, Violated, Inconclusive };

std::string verdict_name(Verdict v);

enum class WitnessKind {
    MinOnOpenSet,
    MaxOnOpenSet,
    SphereNotLimit,
    ConvexityGap,
    StrictConvexityGap,
};

std::string witness_kind_name(WitnessKind k);

// A named counterexample (or, for the convexity checks, a realized example):
// the pair (x, y) under test, the combination / locus point z when one is in
// play, the radius or distance at stake, and the certified separation margin.
struct WitnessRecord {
    WitnessKind kind = WitnessKind::MinOnOpenSet;
    Point x;
    Point y;
    std::optional<Point> z;
    BoundedReal value;
    BoundedReal separation;
    std::optional<Rat> param;
    std::optional<std::string> detail;
};

struct CheckVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<WitnessRecord> witness;
    Effort effort;
    std::vector<std::string> notes;
};

// Exact decisions for subsets of the line under the absolute-value metric.
// Precondition: X nonempty.
bool decide_round_interval_union(const IntervalUnion& X);
bool decide_sleek_interval_union(const IntervalUnion& X);

// Does the closure of every open ball equal the closed ball? Exact on line
// subsets; elsewhere a budgeted pair search through closure_contains.
CheckVerdict check_round(const MetricSpace& space, const ToleranceConfig& cfg);

// Does the interior of every closed ball equal the open ball? Exact on line
// subsets; elsewhere a budgeted pair search through exterior_limit_point.
CheckVerdict check_sleek(const MetricSpace& space, const ToleranceConfig& cfg);

struct ConvexityKind {
    enum class Tag { Lambda, Metric, External, StrongExternal };
    Tag tag = Tag::Metric;
    Rat param;  // lambda for Lambda, s for StrongExternal

    static ConvexityKind lambda(const Rat& l) { return {Tag::Lambda, l}; }
    static ConvexityKind metric() { return {Tag::Metric, Rat(0)}; }
    static ConvexityKind external() { return {Tag::External, Rat(0)}; }
    static ConvexityKind strong_external(const Rat& s) { return {Tag::StrongExternal, s}; }
};

std::string convexity_kind_name(const ConvexityKind& kind);

// For sampled pairs (x, y), search for the z the chosen convexity notion
// demands. On line subsets per-pair existence is decided exactly; elsewhere a
// locus-first search at resolution sep_eps, so Violated is either an exact
// emptiness or a reproducible "no z found" with the best near-miss gap.
CheckVerdict check_convexity(const MetricSpace& space, const ConvexityKind& kind,
                             const ToleranceConfig& cfg);

// Translation-invariant linear-space checks around the origin. Both throw
// NotLinear when the origin is missing, a midpoint or translate leaves the
// space, or a translation-invariance spot-check certifiably fails.
CheckVerdict check_strict_convexity(const MetricSpace& space, const ToleranceConfig& cfg);
CheckVerdict check_strict_ball_convexity(const MetricSpace& space, const BoundedReal& r,
                                         const ToleranceConfig& cfg);

// A family of subspaces closed under union, given by the builder: make(ids)
// returns the subspace carried by the union of the parts named in ids.
struct UnionFamily {
    int n = 0;
    std::function<MetricSpace(const std::vector<int>&)> make;
};

UnionFamily interval_union_family(std::vector<IntervalUnion> parts);
UnionFamily region_union_family(std::vector<Region> parts);

struct UnionSleekness {
    CheckVerdict full;
    std::vector<std::tuple<int, int, Verdict>> pairwise;
    bool contradiction = false;
};

// Sleekness of every pairwise union and of the full union. The returned
// verdict is the full union's; pairwise results land in the notes and in
// *detail. The contradiction flag marks the impossible combination "all
// pairwise unions sleek, full union certifiably not".
CheckVerdict check_union_sleekness(const UnionFamily& family, const ToleranceConfig& cfg,
                                   UnionSleekness* detail = nullptr);

// Re-certify a Violated witness against the space it came from.
bool replay_witness(const MetricSpace& space, const WitnessRecord& w, const ToleranceConfig& cfg);

}  // namespace roundsleek
