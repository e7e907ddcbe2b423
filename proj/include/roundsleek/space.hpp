#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "roundsleek/bounded_real.hpp"
#include "roundsleek/interval_union.hpp"
#include "roundsleek/lazy_real.hpp"
#include "roundsleek/point.hpp"
#include "roundsleek/region.hpp"
#include "roundsleek/rng.hpp"

namespace roundsleek {

struct ToleranceConfig {
    Rat sep_eps = rat(1, 1000);    // max enclosure width accepted for sphere tests
    Rat grid_delta = rat(1, 64);   // witness ladder resolution
    long budget = 500;             // sampled pairs / probes per check
    int precision_cap = 128;       // refinement cutoff (bits)
    std::uint64_t seed = 1;
};

struct Effort {
    long samples = 0;
    long refinements = 0;
};

// A metric space the toolkit can probe. Implementations promise:
//  - distance() is exact-aware: enclosures only narrow under refinement, and
//    equal or comparable exact forms decide without numerics;
//  - the optional topology hooks return only certified objects. approach and
//    escape moves are re-verified by the caller, so a hook may be heuristic,
//    but the two emptiness certificates (separation_from_open_ball and
//    neighborhood_in_closed_ball) must be sound: they are the only path to a
//    "No"/Violated verdict besides isolation and diameter saturation.
class SpaceImpl {
public:
    virtual ~SpaceImpl() = default;

    virtual std::string describe() const = 0;
    virtual bool contains(const Point& p) const = 0;
    virtual LazyReal distance(const Point& a, const Point& b) const = 0;

    virtual std::vector<Point> sample_global(Rng& rng, int count) const = 0;
    virtual std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                           int count) const;

    // Upper bounds are what matter: every distance is <= diameter()->hi().
    virtual std::optional<BoundedReal> diameter() const { return std::nullopt; }
    virtual std::vector<Point> anchors() const { return {}; }
    virtual std::optional<Point> base_point() const;

    // z with d(x,z) < d(x,y) and d(z,y) <= 2^-k, if the space can build one.
    virtual std::optional<Point> approach_within(const Point& x, const Point& y, int k) const {
        (void)x, (void)y, (void)k;
        return std::nullopt;
    }
    // z with d(x,z) > d(x,y) and d(z,y) <= 2^-k; x == y asks for any nearby
    // point distinct from x.
    virtual std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const {
        (void)x, (void)y, (void)k;
        return std::nullopt;
    }
    // eps > 0 with B(y, eps) ∩ B(x, d(x,y)) = ∅ (y stranded on the sphere).
    virtual std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const {
        (void)x, (void)y;
        return std::nullopt;
    }
    // eps > 0 with B(y, eps) ⊆ B[x, d(x,y)] (no exterior points near y).
    virtual std::optional<Rat> neighborhood_in_closed_ball(const Point& x, const Point& y) const {
        (void)x, (void)y;
        return std::nullopt;
    }
    // mu > 0 such that d(p, q) < mu implies p == q, for uniformly discrete
    // spaces.
    virtual std::optional<Rat> isolation_radius() const { return std::nullopt; }
};

class MetricSpace {
public:
    MetricSpace() = default;
    explicit MetricSpace(std::shared_ptr<const SpaceImpl> impl) : impl_(std::move(impl)) {}

    bool valid() const { return impl_ != nullptr; }
    const SpaceImpl& impl() const { return *impl_; }
    std::shared_ptr<const SpaceImpl> share() const { return impl_; }

    template <class T>
    const T* as() const {
        return dynamic_cast<const T*>(impl_.get());
    }

    std::string describe() const { return impl_->describe(); }
    bool contains(const Point& p) const { return impl_->contains(p); }
    LazyReal distance(const Point& a, const Point& b) const { return impl_->distance(a, b); }

private:
    std::shared_ptr<const SpaceImpl> impl_;
};

// Subset of the line under the absolute-value metric, or the whole line.
class LineSubsetSpace : public SpaceImpl {
public:
    explicit LineSubsetSpace(IntervalUnion carrier, bool rationals_only = false);
    static MetricSpace whole_line();
    static MetricSpace make(IntervalUnion carrier, bool rationals_only = false);

    bool whole() const { return whole_; }
    bool rationals_only() const { return rationals_only_; }
    const IntervalUnion& carrier() const;

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                   int count) const override;
    std::optional<BoundedReal> diameter() const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> base_point() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;
    std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> neighborhood_in_closed_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> isolation_radius() const override;

private:
    LineSubsetSpace() = default;
    bool whole_ = false;
    bool rationals_only_ = false;
    IntervalUnion carrier_;
};

// R^n with the euclidean metric, n in {1, 2, 3}.
class RnSpace : public SpaceImpl {
public:
    explicit RnSpace(int n);
    int dim() const { return n_; }

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                   int count) const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> base_point() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;

private:
    int n_;
};

// A plane region under the euclidean metric.
class PlaneRegionSpace : public SpaceImpl {
public:
    PlaneRegionSpace(Region region, std::string name = "",
                     std::optional<BoundedReal> exact_diameter = std::nullopt,
                     std::vector<Pt2> extra_anchors = {});

    const Region& region() const { return region_; }

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                   int count) const override;
    std::optional<BoundedReal> diameter() const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;
    std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> neighborhood_in_closed_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> isolation_radius() const override;

private:
    std::optional<Point> move_candidate(const Point& x, const Point& y, int k,
                                        bool increase) const;
    Region region_;
    std::string name_;
    std::optional<BoundedReal> diam_;
    std::vector<Pt2> extra_anchors_;
};

// Two parallel copies of the line: points (t, line) with line in {0, 1};
// same-line distance |s - t|, cross-line distance sqrt((s - t)^2 + 1).
class XPrimeSpace : public SpaceImpl {
public:
    XPrimeSpace() = default;

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                   int count) const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;
    std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const override;
};

// Finite label set with the discrete metric.
class DiscreteSpace : public SpaceImpl {
public:
    explicit DiscreteSpace(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::vector<Point> sample_near(const Point& center, const Rat& radius, Rng& rng,
                                   int count) const override;
    std::optional<BoundedReal> diameter() const override;
    std::vector<Point> anchors() const override;
    std::optional<Rat> isolation_radius() const override;

private:
    std::vector<std::string> labels_;
};

}  // namespace roundsleek
