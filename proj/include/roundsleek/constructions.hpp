#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roundsleek/space.hpp"

namespace roundsleek {

// Finite product under the root-sum-square combination of the factor metrics.
class EuclideanProductSpace : public SpaceImpl {
public:
    explicit EuclideanProductSpace(std::vector<MetricSpace> factors);

    const std::vector<MetricSpace>& factors() const { return factors_; }

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
    std::optional<Rat> isolation_radius() const override;

private:
    std::vector<MetricSpace> factors_;
};

// Countable product with geometrically weighted factor metrics: term k of the
// sum is d_k(x_k, y_k) / (lambda_k 2^k), where lambda_k is the certified
// diameter bound of factor k (1 when the factor is unbounded). Explicit
// factors first, then optional repeated tail copies. Points are trimmed
// prefixes; coordinates past the prefix sit at the factor base points.
class ProductDSpace : public SpaceImpl {
public:
    ProductDSpace(std::vector<MetricSpace> head, std::optional<MetricSpace> tail,
                  int truncation_index);

    const std::vector<MetricSpace>& head() const { return head_; }
    const std::optional<MetricSpace>& tail() const { return tail_; }
    int truncation_index() const { return K_; }
    // 1-indexed factor access, valid for 1 <= k <= available_factors().
    const MetricSpace& factor(int k) const;
    long available_factors() const;
    const Rat& scale(int k) const { return scale_[k - 1]; }

    Point make_point(std::vector<Point> prefix) const;

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::optional<BoundedReal> diameter() const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> base_point() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;
    std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> isolation_radius() const override;

private:
    const Point& coord(const Point& p, int k) const;
    std::vector<MetricSpace> head_;
    std::optional<MetricSpace> tail_;
    int K_;
    std::vector<Rat> scale_;   // 1/(lambda_k 2^k), k = 1..K
    std::vector<Point> base_;  // base point per head factor, then tail base
};

// Same carrier with metric min{d, r}.
class TruncateSpace : public SpaceImpl {
public:
    TruncateSpace(MetricSpace base, const Rat& r,
                  std::optional<std::pair<Point, Point>> plateau_pair = std::nullopt);

    const MetricSpace& base() const { return base_; }
    const Rat& radius() const { return r_; }
    // A pair at base distance >= r, when one was supplied or found; the plateau
    // certificates and the exact diameter hang off it.
    const std::optional<std::pair<Point, Point>>& plateau_pair() const { return pair_; }

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
    MetricSpace base_;
    Rat r_;
    std::optional<std::pair<Point, Point>> pair_;
};

// Same carrier with metric phi(d) for a registered strictly increasing
// subadditive phi with phi(0) = 0: "t_over_1pt" (t / (1 + t)) or "log1p"
// (log(1 + t)).
class MonotoneSpace : public SpaceImpl {
public:
    MonotoneSpace(MetricSpace base, std::string transform);

    const MetricSpace& base() const { return base_; }
    const std::string& transform_name() const { return name_; }

    std::string describe() const override;
    bool contains(const Point& p) const override;
    LazyReal distance(const Point& a, const Point& b) const override;
    std::vector<Point> sample_global(Rng& rng, int count) const override;
    std::optional<BoundedReal> diameter() const override;
    std::vector<Point> anchors() const override;
    std::optional<Point> base_point() const override;
    std::optional<Point> approach_within(const Point& x, const Point& y, int k) const override;
    std::optional<Point> escape_beyond(const Point& x, const Point& y, int k) const override;
    std::optional<Rat> separation_from_open_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> neighborhood_in_closed_ball(const Point& x, const Point& y) const override;
    std::optional<Rat> isolation_radius() const override;

private:
    // Positive rational lower bound of phi(eps); nullopt when one cannot be
    // certified.
    std::optional<Rat> phi_lower(const Rat& eps) const;
    MetricSpace base_;
    std::string name_;
};

MetricSpace product_euclid(std::vector<MetricSpace> factors);
MetricSpace product_metric_D(std::vector<MetricSpace> head, std::optional<MetricSpace> tail,
                             int truncation_index);
MetricSpace truncate_metric(MetricSpace base, const Rat& r,
                            std::optional<std::pair<Point, Point>> plateau_pair = std::nullopt);
MetricSpace monotone_image(MetricSpace base, const std::string& transform);
// The standard bounded remetrization d / (1 + d).
MetricSpace bounded_transform(MetricSpace base);

// Carrier restriction: line spaces by an interval union, plane spaces (or the
// euclidean plane) by a region.
MetricSpace restrict_to(const MetricSpace& ambient, const IntervalUnion& carrier);
MetricSpace restrict_to(const MetricSpace& ambient, const Region& region);

}  // namespace roundsleek
