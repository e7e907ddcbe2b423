#include "roundsleek/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "roundsleek/errors.hpp"

namespace roundsleek {

namespace {

int bits_for(long n) {
    int e = 0;
    while ((1L << e) < n) ++e;
    return e;
}

// Smallest extra >= 0 with mag <= 2^extra, so scaling by mag loses at most
// `extra` bits of enclosure width.
int scale_bits(const Rat& mag) {
    int extra = 0;
    while (rat_pow2(extra) < mag) ++extra;
    return extra;
}

BoundedReal clamp_nonneg(const BoundedReal& v) {
    return BoundedReal(rat_max(v.lo(), Rat(0)), rat_max(v.hi(), Rat(0)));
}

}  // namespace

// ---------------------------------------------------------------------------
// EuclideanProductSpace

EuclideanProductSpace::EuclideanProductSpace(std::vector<MetricSpace> factors)
    : factors_(std::move(factors)) {
    if (factors_.size() < 2 || factors_.size() > 4)
        throw InvalidParameter("product takes 2 to 4 factors");
    for (const auto& f : factors_)
        if (!f.valid()) throw InvalidParameter("product factor is not a space");
}

std::string EuclideanProductSpace::describe() const {
    std::ostringstream os;
    os << "root-sum-square product of: ";
    for (size_t i = 0; i < factors_.size(); ++i)
        os << (i ? "; " : "") << factors_[i].describe();
    return os.str();
}

bool EuclideanProductSpace::contains(const Point& p) const {
    if (p.kind() != Point::Kind::Tuple) return false;
    const auto& kids = p.children();
    if (kids.size() != factors_.size()) return false;
    for (size_t i = 0; i < kids.size(); ++i)
        if (!factors_[i].contains(kids[i])) return false;
    return true;
}

LazyReal EuclideanProductSpace::distance(const Point& a, const Point& b) const {
    const auto& ka = a.children();
    const auto& kb = b.children();
    std::vector<LazyReal> ds;
    ds.reserve(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) ds.push_back(factors_[i].distance(ka[i], kb[i]));
    Rat sum(0);
    bool exact = true;
    for (const auto& d : ds) {
        auto sq = lz_exact_square(d);
        if (!sq) {
            exact = false;
            break;
        }
        sum += *sq;
    }
    if (exact) return LazyReal::sqrt_of(sum);
    return LazyReal(
        [ds](int prec) {
            BoundedReal out(Rat(0), Rat(1));
            bool first = true;
            for (int q = prec + 4; q <= 4096; q *= 2) {
                BoundedReal s;
                for (const auto& d : ds) s = s + br_square(clamp_nonneg(d.enclosure(q)));
                BoundedReal root = sqrt_enclosure(clamp_nonneg(s), q);
                out = first ? root : out.meet(root);
                first = false;
                if (out.width() <= rat_pow2(-prec)) break;
            }
            return out;
        },
        ExactForm::none());
}

std::vector<Point> EuclideanProductSpace::sample_global(Rng& rng, int count) const {
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Point> kids;
        for (const auto& f : factors_) {
            auto got = f.impl().sample_global(rng, 1);
            if (got.empty()) break;
            kids.push_back(got[0]);
        }
        if (kids.size() == factors_.size()) out.push_back(Point::tuple(std::move(kids)));
    }
    return out;
}

std::vector<Point> EuclideanProductSpace::sample_near(const Point& center, const Rat& radius,
                                                      Rng& rng, int count) const {
    const auto& ck = center.children();
    Rat slice = radius / static_cast<long>(factors_.size());
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        std::vector<Point> kids;
        for (size_t j = 0; j < factors_.size(); ++j) {
            auto got = factors_[j].impl().sample_near(ck[j], slice, rng, 1);
            if (got.empty()) break;
            kids.push_back(got[0]);
        }
        if (kids.size() == factors_.size()) out.push_back(Point::tuple(std::move(kids)));
    }
    return out;
}

std::optional<BoundedReal> EuclideanProductSpace::diameter() const {
    Rat sum2(0), lo(0);
    for (const auto& f : factors_) {
        auto d = f.impl().diameter();
        if (!d) return std::nullopt;
        sum2 += d->hi() * d->hi();
        lo = rat_max(lo, d->lo());
    }
    return BoundedReal(lo, sqrt_enclosure(sum2, 8).hi());
}

std::vector<Point> EuclideanProductSpace::anchors() const {
    std::vector<std::vector<Point>> per;
    for (const auto& f : factors_) {
        auto a = f.impl().anchors();
        if (a.empty()) {
            auto bp = f.impl().base_point();
            if (!bp) return {};
            a.push_back(*bp);
        }
        if (a.size() > 3) a.resize(3);
        per.push_back(std::move(a));
    }
    std::vector<Point> out;
    std::vector<size_t> idx(per.size(), 0);
    while (out.size() < 12) {
        std::vector<Point> kids;
        for (size_t j = 0; j < per.size(); ++j) kids.push_back(per[j][idx[j]]);
        out.push_back(Point::tuple(std::move(kids)));
        size_t j = 0;
        while (j < idx.size() && ++idx[j] == per[j].size()) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    return out;
}

std::optional<Point> EuclideanProductSpace::base_point() const {
    std::vector<Point> kids;
    for (const auto& f : factors_) {
        auto bp = f.impl().base_point();
        if (!bp) return std::nullopt;
        kids.push_back(*bp);
    }
    return Point::tuple(std::move(kids));
}

std::optional<Point> EuclideanProductSpace::approach_within(const Point& x, const Point& y,
                                                            int k) const {
    const auto& kx = x.children();
    const auto& ky = y.children();
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (compare(factors_[i].distance(kx[i], ky[i]), Rat(0), 64) != Ordering::Greater) continue;
        if (auto zi = factors_[i].impl().approach_within(kx[i], ky[i], k)) {
            auto kids = ky;
            kids[i] = *zi;
            return Point::tuple(std::move(kids));
        }
    }
    return std::nullopt;
}

std::optional<Point> EuclideanProductSpace::escape_beyond(const Point& x, const Point& y,
                                                          int k) const {
    const auto& kx = x.children();
    const auto& ky = y.children();
    for (int pass = 0; pass < 2; ++pass) {
        for (size_t i = 0; i < factors_.size(); ++i) {
            bool positive =
                compare(factors_[i].distance(kx[i], ky[i]), Rat(0), 64) == Ordering::Greater;
            if (positive != (pass == 0)) continue;
            if (auto zi = factors_[i].impl().escape_beyond(kx[i], ky[i], k)) {
                auto kids = ky;
                kids[i] = *zi;
                return Point::tuple(std::move(kids));
            }
        }
    }
    return std::nullopt;
}

std::optional<Rat> EuclideanProductSpace::separation_from_open_ball(const Point& x,
                                                                    const Point& y) const {
    const auto& kx = x.children();
    const auto& ky = y.children();
    // One coordinate differs by exactly the isolation gap of its factor, the
    // rest agree: every open-ball point keeps that coordinate at x's value and
    // so stays a full gap away from y.
    int differing = -1;
    for (size_t i = 0; i < factors_.size(); ++i) {
        Ordering o = compare(factors_[i].distance(kx[i], ky[i]), Rat(0), 64);
        if (o == Ordering::Equal) continue;
        if (o != Ordering::Greater || differing >= 0) return std::nullopt;
        differing = static_cast<int>(i);
    }
    if (differing < 0) return std::nullopt;
    auto mu = factors_[differing].impl().isolation_radius();
    if (!mu) return std::nullopt;
    if (compare(factors_[differing].distance(kx[differing], ky[differing]), *mu, 96) !=
        Ordering::Equal)
        return std::nullopt;
    return *mu / 2;
}

std::optional<Rat> EuclideanProductSpace::isolation_radius() const {
    std::optional<Rat> mu;
    for (const auto& f : factors_) {
        auto m = f.impl().isolation_radius();
        if (!m) return std::nullopt;
        mu = mu ? rat_min(*mu, *m) : *m;
    }
    return mu;
}

// ---------------------------------------------------------------------------
// ProductDSpace

ProductDSpace::ProductDSpace(std::vector<MetricSpace> head, std::optional<MetricSpace> tail,
                             int truncation_index)
    : head_(std::move(head)), tail_(std::move(tail)), K_(truncation_index) {
    if (K_ < 1 || K_ > 200) throw InvalidParameter("truncation index out of range");
    if (K_ < static_cast<int>(head_.size()))
        throw InvalidParameter("truncation index smaller than the explicit factor list");
    if (head_.empty() && !tail_) throw InvalidParameter("weighted product needs a factor");
    if (tail_ && !tail_->impl().diameter())
        throw MissingDiameter("repeated tail factor needs a certified diameter");
    auto lambda_of = [](const MetricSpace& f) {
        auto d = f.impl().diameter();
        if (!d || d->hi() == 0) return Rat(1);
        return d->hi();
    };
    for (int k = 1; k <= K_; ++k) {
        const MetricSpace* f = nullptr;
        if (k <= static_cast<int>(head_.size()))
            f = &head_[k - 1];
        else if (tail_)
            f = &*tail_;
        scale_.push_back(f ? Rat(1) / (lambda_of(*f) * rat_pow2(k)) : rat_pow2(-k));
    }
    for (const auto& f : head_) {
        auto bp = f.impl().base_point();
        if (!bp) throw InvalidParameter("every factor needs a base point");
        base_.push_back(*bp);
    }
    if (tail_) {
        auto bp = tail_->impl().base_point();
        if (!bp) throw InvalidParameter("every factor needs a base point");
        base_.push_back(*bp);
    }
}

const MetricSpace& ProductDSpace::factor(int k) const {
    if (k <= static_cast<int>(head_.size())) return head_[k - 1];
    return *tail_;
}

long ProductDSpace::available_factors() const {
    return tail_ ? K_ : static_cast<long>(head_.size());
}

const Point& ProductDSpace::coord(const Point& p, int k) const {
    const auto& kids = p.children();
    if (k <= static_cast<int>(kids.size())) return kids[k - 1];
    return k <= static_cast<int>(head_.size()) ? base_[k - 1] : base_.back();
}

Point ProductDSpace::make_point(std::vector<Point> prefix) const {
    if (static_cast<long>(prefix.size()) > available_factors())
        throw InvalidParameter("point prefix longer than the factor list");
    for (size_t i = 0; i < prefix.size(); ++i)
        if (!factor(static_cast<int>(i) + 1).contains(prefix[i]))
            throw DomainMismatch("coordinate outside its factor");
    while (!prefix.empty() &&
           prefix.back() == (prefix.size() <= head_.size() ? base_[prefix.size() - 1]
                                                           : base_.back()))
        prefix.pop_back();
    return Point::seq(std::move(prefix));
}

std::string ProductDSpace::describe() const {
    std::ostringstream os;
    os << "geometrically weighted product of " << head_.size() << " explicit factor"
       << (head_.size() == 1 ? "" : "s");
    if (tail_) os << " plus repeated copies of: " << tail_->describe();
    return os.str();
}

bool ProductDSpace::contains(const Point& p) const {
    if (p.kind() != Point::Kind::Seq) return false;
    const auto& kids = p.children();
    if (static_cast<long>(kids.size()) > available_factors()) return false;
    for (size_t i = 0; i < kids.size(); ++i)
        if (!factor(static_cast<int>(i) + 1).contains(kids[i])) return false;
    return true;
}

LazyReal ProductDSpace::distance(const Point& a, const Point& b) const {
    int P = static_cast<int>(std::max(a.children().size(), b.children().size()));
    std::vector<LazyReal> terms;
    terms.reserve(P);
    for (int k = 1; k <= P; ++k)
        terms.push_back(scale_[k - 1] * factor(k).distance(coord(a, k), coord(b, k)));
    int K = K_;
    return LazyReal(
        [terms, K](int prec) {
            if (prec == 0) {
                // Coarse first answer: truncated sum plus the geometric tail
                // allowance 2^-K.
                BoundedReal s;
                for (const auto& t : terms) s = s + t.enclosure(K + 2);
                return BoundedReal(rat_max(s.lo(), Rat(0)), s.hi() + rat_pow2(-K));
            }
            // Both points agree with the base past their prefixes, so the sum
            // is finite and exact refinement needs no tail allowance.
            int q = prec + 1 + bits_for(static_cast<long>(terms.size()) + 1);
            BoundedReal s;
            for (const auto& t : terms) s = s + t.enclosure(q);
            return clamp_nonneg(s);
        },
        ExactForm::none());
}

std::vector<Point> ProductDSpace::sample_global(Rng& rng, int count) const {
    long maxlen = std::min(available_factors(), 4L);
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        long len = rng.next_in(0, maxlen);
        std::vector<Point> prefix;
        for (int k = 1; k <= len; ++k) {
            auto got = factor(k).impl().sample_global(rng, 1);
            prefix.push_back(got.empty() ? coord(Point::seq({}), k) : got[0]);
        }
        out.push_back(make_point(std::move(prefix)));
    }
    return out;
}

std::optional<BoundedReal> ProductDSpace::diameter() const {
    Rat hi(0);
    for (const auto& f : head_)
        if (auto d = f.impl().diameter())
            (void)d;
        else
            return std::nullopt;
    int m = static_cast<int>(head_.size());
    hi = Rat(1) - rat_pow2(-m);
    if (tail_) hi += rat_pow2(-m);
    return BoundedReal(Rat(0), hi);
}

std::vector<Point> ProductDSpace::anchors() const {
    std::vector<Point> out;
    out.push_back(Point::seq({}));
    int upto = static_cast<int>(std::min<long>(available_factors(),
                                               static_cast<long>(head_.size()) + 1));
    for (int k = 1; k <= upto && out.size() < 8; ++k) {
        const Point& bk = coord(out[0], k);
        int used = 0;
        for (const auto& a : factor(k).impl().anchors()) {
            if (a == bk || used >= 2) continue;
            std::vector<Point> prefix;
            for (int j = 1; j < k; ++j) prefix.push_back(coord(out[0], j));
            prefix.push_back(a);
            out.push_back(make_point(std::move(prefix)));
            ++used;
            if (out.size() >= 8) break;
        }
    }
    return out;
}

std::optional<Point> ProductDSpace::base_point() const { return Point::seq({}); }

std::optional<Point> ProductDSpace::approach_within(const Point& x, const Point& y, int k) const {
    int P = static_cast<int>(std::max(x.children().size(), y.children().size()));
    for (int i = 1; i <= P; ++i) {
        if (compare(factor(i).distance(coord(x, i), coord(y, i)), Rat(0), 64) != Ordering::Greater)
            continue;
        int m = k + scale_bits(scale_[i - 1]);
        if (auto zi = factor(i).impl().approach_within(coord(x, i), coord(y, i), m)) {
            std::vector<Point> prefix;
            for (int j = 1; j <= std::max(P, i); ++j) prefix.push_back(coord(y, j));
            prefix[i - 1] = *zi;
            return make_point(std::move(prefix));
        }
    }
    return std::nullopt;
}

std::optional<Point> ProductDSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    int P = static_cast<int>(std::max(x.children().size(), y.children().size()));
    int cap = static_cast<int>(std::min<long>(available_factors(),
                                              std::max<long>(P + 1, head_.size() + 1)));
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 1; i <= cap; ++i) {
            bool positive = compare(factor(i).distance(coord(x, i), coord(y, i)), Rat(0), 64) ==
                            Ordering::Greater;
            if (positive != (pass == 0)) continue;
            int m = k + scale_bits(scale_[i - 1]);
            if (auto zi = factor(i).impl().escape_beyond(coord(x, i), coord(y, i), m)) {
                std::vector<Point> prefix;
                for (int j = 1; j <= std::max(P, i); ++j) prefix.push_back(coord(y, j));
                prefix[i - 1] = *zi;
                return make_point(std::move(prefix));
            }
        }
    }
    return std::nullopt;
}

std::optional<Rat> ProductDSpace::separation_from_open_ball(const Point& x, const Point& y) const {
    int P = static_cast<int>(std::max(x.children().size(), y.children().size()));
    int differing = -1;
    for (int i = 1; i <= P; ++i) {
        Ordering o = compare(factor(i).distance(coord(x, i), coord(y, i)), Rat(0), 64);
        if (o == Ordering::Equal) continue;
        if (o != Ordering::Greater || differing >= 0) return std::nullopt;
        differing = i;
    }
    if (differing < 0) return std::nullopt;
    auto mu = factor(differing).impl().isolation_radius();
    if (!mu) return std::nullopt;
    if (compare(factor(differing).distance(coord(x, differing), coord(y, differing)), *mu, 96) !=
        Ordering::Equal)
        return std::nullopt;
    return scale_[differing - 1] * *mu / 2;
}

std::optional<Rat> ProductDSpace::isolation_radius() const {
    if (tail_) return std::nullopt;
    std::optional<Rat> mu;
    for (int k = 1; k <= static_cast<int>(head_.size()); ++k) {
        auto m = head_[k - 1].impl().isolation_radius();
        if (!m) return std::nullopt;
        Rat v = scale_[k - 1] * *m;
        mu = mu ? rat_min(*mu, v) : v;
    }
    return mu;
}

// ---------------------------------------------------------------------------
// TruncateSpace

TruncateSpace::TruncateSpace(MetricSpace base, const Rat& r,
                             std::optional<std::pair<Point, Point>> plateau_pair)
    : base_(std::move(base)), r_(r), pair_(std::move(plateau_pair)) {
    if (!base_.valid()) throw InvalidParameter("truncation needs a base space");
    if (r_ <= 0) throw InvalidParameter("truncation radius must be positive");
    if (pair_) {
        if (!base_.contains(pair_->first) || !base_.contains(pair_->second))
            throw DomainMismatch("plateau pair outside the space");
        Ordering o = compare(base_.distance(pair_->first, pair_->second), r_, 96);
        if (o != Ordering::Greater && o != Ordering::Equal)
            throw InvalidParameter("plateau pair is not at distance >= r");
    } else {
        auto cand = base_.impl().anchors();
        Rng rng(0, "plateau-search");
        auto extra = base_.impl().sample_global(rng, 16);
        cand.insert(cand.end(), extra.begin(), extra.end());
        for (size_t i = 0; i < cand.size() && !pair_; ++i)
            for (size_t j = i + 1; j < cand.size() && !pair_; ++j)
                if (compare(base_.distance(cand[i], cand[j]), r_, 64) == Ordering::Greater)
                    pair_ = std::make_pair(cand[i], cand[j]);
    }
}

std::string TruncateSpace::describe() const {
    return base_.describe() + ", distances truncated at " + rat_str(r_);
}

bool TruncateSpace::contains(const Point& p) const { return base_.contains(p); }

LazyReal TruncateSpace::distance(const Point& a, const Point& b) const {
    LazyReal d = base_.distance(a, b);
    switch (compare(d, r_, 64)) {
        case Ordering::Less:
            return d;
        case Ordering::Greater:
        case Ordering::Equal:
            return LazyReal(r_);
        case Ordering::Unknown:
            return lz_min(d, LazyReal(r_));
    }
    return d;
}

std::vector<Point> TruncateSpace::sample_global(Rng& rng, int count) const {
    return base_.impl().sample_global(rng, count);
}

std::vector<Point> TruncateSpace::sample_near(const Point& center, const Rat& radius, Rng& rng,
                                              int count) const {
    return base_.impl().sample_near(center, radius, rng, count);
}

std::optional<BoundedReal> TruncateSpace::diameter() const {
    if (pair_) return BoundedReal(r_);
    if (auto bd = base_.impl().diameter()) return BoundedReal(Rat(0), rat_min(bd->hi(), r_));
    return BoundedReal(Rat(0), r_);
}

std::vector<Point> TruncateSpace::anchors() const {
    auto out = base_.impl().anchors();
    if (pair_) {
        if (std::find(out.begin(), out.end(), pair_->first) == out.end())
            out.push_back(pair_->first);
        if (std::find(out.begin(), out.end(), pair_->second) == out.end())
            out.push_back(pair_->second);
    }
    return out;
}

std::optional<Point> TruncateSpace::base_point() const { return base_.impl().base_point(); }

std::optional<Point> TruncateSpace::approach_within(const Point& x, const Point& y, int k) const {
    Ordering o = compare(base_.distance(x, y), r_, 96);
    if (o == Ordering::Greater) return std::nullopt;
    return base_.impl().approach_within(x, y, k);
}

std::optional<Point> TruncateSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    Ordering o = compare(base_.distance(x, y), r_, 96);
    if (o != Ordering::Less) return std::nullopt;
    return base_.impl().escape_beyond(x, y, k);
}

std::optional<Rat> TruncateSpace::separation_from_open_ball(const Point& x, const Point& y) const {
    LazyReal d = base_.distance(x, y);
    Ordering o = compare(d, r_, 96);
    if (o == Ordering::Greater) {
        // Open ball of the truncated metric at radius r is the base open
        // r-ball; everything there stays at least d_base(x,y) - r from y.
        for (int prec : {8, 16, 32, 64, 96}) {
            Rat gap = d.enclosure(prec).lo() - r_;
            if (gap > 0) return rat_min(gap, r_) / 2;
        }
        return std::nullopt;
    }
    if (o == Ordering::Less || o == Ordering::Equal) {
        if (auto eps = base_.impl().separation_from_open_ball(x, y))
            return rat_min(*eps, r_);
    }
    return std::nullopt;
}

std::optional<Rat> TruncateSpace::neighborhood_in_closed_ball(const Point& x,
                                                              const Point& y) const {
    Ordering o = compare(base_.distance(x, y), r_, 96);
    // At the plateau the closed ball is the whole space.
    if (o == Ordering::Greater || o == Ordering::Equal) return rat(1);
    if (o == Ordering::Less) {
        if (auto eps = base_.impl().neighborhood_in_closed_ball(x, y))
            return rat_min(*eps, r_);
    }
    return std::nullopt;
}

std::optional<Rat> TruncateSpace::isolation_radius() const {
    if (auto mu = base_.impl().isolation_radius()) return rat_min(*mu, r_);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// MonotoneSpace

namespace {

Rat t_over_1pt(const Rat& t) { return t / (1 + t); }

BoundedReal phi_enclose(const std::string& name, const BoundedReal& v, int prec) {
    BoundedReal t = clamp_nonneg(v);
    if (name == "t_over_1pt") return BoundedReal(t_over_1pt(t.lo()), t_over_1pt(t.hi()));
    return log1p_enclosure(t, prec);
}

}  // namespace

MonotoneSpace::MonotoneSpace(MetricSpace base, std::string transform)
    : base_(std::move(base)), name_(std::move(transform)) {
    if (!base_.valid()) throw InvalidParameter("transform needs a base space");
    if (name_ != "t_over_1pt" && name_ != "log1p") throw UnknownTransform(name_);
}

std::optional<Rat> MonotoneSpace::phi_lower(const Rat& eps) const {
    if (eps <= 0) return std::nullopt;
    if (name_ == "t_over_1pt") return t_over_1pt(eps);
    for (int prec : {16, 32, 64}) {
        Rat lo = log1p_enclosure(eps, prec).lo();
        if (lo > 0) return lo;
    }
    return std::nullopt;
}

std::string MonotoneSpace::describe() const {
    std::string phi = name_ == "t_over_1pt" ? "t -> t/(1+t)" : "t -> log(1+t)";
    return base_.describe() + ", remetrized by " + phi;
}

bool MonotoneSpace::contains(const Point& p) const { return base_.contains(p); }

LazyReal MonotoneSpace::distance(const Point& a, const Point& b) const {
    LazyReal d = base_.distance(a, b);
    if (name_ == "t_over_1pt") {
        if (auto q = d.exact_rat()) return LazyReal(t_over_1pt(rat_abs(*q)));
    }
    std::string name = name_;
    return LazyReal(
        [name, d](int prec) { return phi_enclose(name, d.enclosure(prec + 1), prec + 1); },
        ExactForm::phi_of(name_, d.form()));
}

std::vector<Point> MonotoneSpace::sample_global(Rng& rng, int count) const {
    return base_.impl().sample_global(rng, count);
}

std::optional<BoundedReal> MonotoneSpace::diameter() const {
    auto bd = base_.impl().diameter();
    if (name_ == "t_over_1pt") {
        if (!bd) return BoundedReal(Rat(0), Rat(1));
        return BoundedReal(Rat(0), t_over_1pt(bd->hi()));
    }
    if (!bd) return std::nullopt;
    return BoundedReal(Rat(0), log1p_enclosure(bd->hi(), 16).hi());
}

std::vector<Point> MonotoneSpace::anchors() const { return base_.impl().anchors(); }

std::optional<Point> MonotoneSpace::base_point() const { return base_.impl().base_point(); }

std::optional<Point> MonotoneSpace::approach_within(const Point& x, const Point& y, int k) const {
    // phi(t) <= t for both transforms, so base closeness certifies closeness.
    return base_.impl().approach_within(x, y, k);
}

std::optional<Point> MonotoneSpace::escape_beyond(const Point& x, const Point& y, int k) const {
    return base_.impl().escape_beyond(x, y, k);
}

std::optional<Rat> MonotoneSpace::separation_from_open_ball(const Point& x, const Point& y) const {
    // Balls are setwise unchanged under a strictly increasing transform, with
    // radii mapped through phi.
    if (auto eps = base_.impl().separation_from_open_ball(x, y)) return phi_lower(*eps);
    return std::nullopt;
}

std::optional<Rat> MonotoneSpace::neighborhood_in_closed_ball(const Point& x,
                                                              const Point& y) const {
    if (auto eps = base_.impl().neighborhood_in_closed_ball(x, y)) return phi_lower(*eps);
    return std::nullopt;
}

std::optional<Rat> MonotoneSpace::isolation_radius() const {
    if (auto mu = base_.impl().isolation_radius()) return phi_lower(*mu);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Factories

MetricSpace product_euclid(std::vector<MetricSpace> factors) {
    return MetricSpace(std::make_shared<EuclideanProductSpace>(std::move(factors)));
}

MetricSpace product_metric_D(std::vector<MetricSpace> head, std::optional<MetricSpace> tail,
                             int truncation_index) {
    return MetricSpace(
        std::make_shared<ProductDSpace>(std::move(head), std::move(tail), truncation_index));
}

MetricSpace truncate_metric(MetricSpace base, const Rat& r,
                            std::optional<std::pair<Point, Point>> plateau_pair) {
    return MetricSpace(std::make_shared<TruncateSpace>(std::move(base), r, std::move(plateau_pair)));
}

MetricSpace monotone_image(MetricSpace base, const std::string& transform) {
    return MetricSpace(std::make_shared<MonotoneSpace>(std::move(base), transform));
}

MetricSpace bounded_transform(MetricSpace base) {
    return monotone_image(std::move(base), "t_over_1pt");
}

MetricSpace restrict_to(const MetricSpace& ambient, const IntervalUnion& carrier) {
    if (auto* line = ambient.as<LineSubsetSpace>()) {
        IntervalUnion cut = line->whole() ? carrier : intersect_unions(line->carrier(), carrier);
        if (cut.empty()) throw EmptyRegion("restriction is empty");
        return LineSubsetSpace::make(cut, line->rationals_only());
    }
    if (auto* rn = ambient.as<RnSpace>(); rn && rn->dim() == 1) {
        if (carrier.empty()) throw EmptyRegion("restriction is empty");
        return LineSubsetSpace::make(carrier);
    }
    throw DomainMismatch("interval restriction needs a line space");
}

MetricSpace restrict_to(const MetricSpace& ambient, const Region& region) {
    if (auto* plane = ambient.as<PlaneRegionSpace>())
        return MetricSpace(
            std::make_shared<PlaneRegionSpace>(Region::intersect({plane->region(), region})));
    if (auto* rn = ambient.as<RnSpace>(); rn && rn->dim() == 2)
        return MetricSpace(std::make_shared<PlaneRegionSpace>(region));
    throw DomainMismatch("region restriction needs a plane space");
}

}  // namespace roundsleek
