#include "roundsleek/region.hpp"

#include <algorithm>
#include <sstream>

#include "roundsleek/errors.hpp"

namespace roundsleek {

namespace {

// Range of (t - c)^2 for t in [lo, hi].
void square_range(const Rat& lo, const Rat& hi, const Rat& c, Rat& out_lo, Rat& out_hi) {
    Rat a = lo - c, b = hi - c;
    Rat a2 = a * a, b2 = b * b;
    out_hi = rat_max(a2, b2);
    out_lo = (a <= 0 && b >= 0) ? Rat(0) : rat_min(a2, b2);
}

// Range of d((x,y), p)^2 over a box.
void box_dist2_range(const Box& bx, const Pt2& p, Rat& lo, Rat& hi) {
    Rat xl, xh, yl, yh;
    square_range(bx.x1, bx.x2, p.first, xl, xh);
    square_range(bx.y1, bx.y2, p.second, yl, yh);
    lo = xl + yl;
    hi = xh + yh;
}

Rat cross(const Pt2& u, const Pt2& v) { return u.first * v.second - u.second * v.first; }
Rat dot(const Pt2& u, const Pt2& v) { return u.first * v.first + u.second * v.second; }
Pt2 sub(const Pt2& u, const Pt2& v) { return {u.first - v.first, u.second - v.second}; }

std::optional<Box> intersect_boxes(const Box& a, const Box& b) {
    Box r{rat_max(a.x1, b.x1), rat_min(a.x2, b.x2), rat_max(a.y1, b.y1), rat_min(a.y2, b.y2)};
    if (r.x1 > r.x2 || r.y1 > r.y2) return std::nullopt;
    return r;
}

Box hull_boxes(const Box& a, const Box& b) {
    return Box{rat_min(a.x1, b.x1), rat_max(a.x2, b.x2), rat_min(a.y1, b.y1), rat_max(a.y2, b.y2)};
}

}  // namespace

Rat dist2(const Pt2& a, const Pt2& b) {
    Rat dx = a.first - b.first, dy = a.second - b.second;
    return dx * dx + dy * dy;
}

Region Region::full() { return Region{}; }

Region Region::halfplane(const Rat& a, const Rat& b, const Rat& c, bool closed) {
    if (a == 0 && b == 0) throw InvalidParameter("halfplane normal must be nonzero");
    Region r;
    r.kind_ = Kind::HalfPlane;
    r.a_ = a;
    r.b_ = b;
    r.c_ = c;
    r.closed_ = closed;
    return r;
}

Region Region::disk(const Pt2& center, const Rat& radius, bool closed) {
    if (radius <= 0) throw InvalidParameter("disk radius must be positive");
    Region r;
    r.kind_ = Kind::Disk;
    r.p_ = center;
    r.r_ = radius;
    r.closed_ = closed;
    return r;
}

Region Region::circle(const Pt2& center, const Rat& radius) {
    if (radius <= 0) throw InvalidParameter("circle radius must be positive");
    Region r;
    r.kind_ = Kind::Circle;
    r.p_ = center;
    r.r_ = radius;
    return r;
}

Region Region::segment(const Pt2& p, const Pt2& q, bool include_p, bool include_q) {
    if (p == q && !(include_p && include_q))
        throw InvalidParameter("degenerate segment must include its point");
    Region r;
    r.kind_ = Kind::Segment;
    r.p_ = p;
    r.q_ = q;
    r.incl_p_ = include_p;
    r.incl_q_ = include_q;
    return r;
}

Region Region::box2(const Box& b) {
    if (b.x1 > b.x2 || b.y1 > b.y2) throw InvalidParameter("box with reversed sides");
    Region r;
    r.kind_ = Kind::Box2;
    r.box_ = b;
    return r;
}

Region Region::unite(std::vector<Region> parts) {
    if (parts.empty()) throw InvalidParameter("union of no regions");
    if (parts.size() == 1) return parts[0];
    Region r;
    r.kind_ = Kind::Union;
    r.parts_ = std::move(parts);
    return r;
}

Region Region::intersect(std::vector<Region> parts) {
    if (parts.empty()) throw InvalidParameter("intersection of no regions");
    if (parts.size() == 1) return parts[0];
    Region r;
    r.kind_ = Kind::Intersection;
    r.parts_ = std::move(parts);
    return r;
}

bool Region::contains(const Rat& x, const Rat& y) const {
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::HalfPlane: {
            Rat v = a_ * x + b_ * y;
            return closed_ ? v <= c_ : v < c_;
        }
        case Kind::Disk: {
            Rat d2 = dist2({x, y}, p_);
            Rat r2 = r_ * r_;
            return closed_ ? d2 <= r2 : d2 < r2;
        }
        case Kind::Circle:
            return dist2({x, y}, p_) == r_ * r_;
        case Kind::Segment: {
            Pt2 z{x, y};
            Pt2 d = sub(q_, p_);
            if (p_ == q_) return z == p_;
            if (cross(d, sub(z, p_)) != 0) return false;
            Rat t = dot(sub(z, p_), d) / dot(d, d);
            if (t < 0 || t > 1) return false;
            if (t == 0 && !incl_p_) return false;
            if (t == 1 && !incl_q_) return false;
            return true;
        }
        case Kind::Box2:
            return x >= box_.x1 && x <= box_.x2 && y >= box_.y1 && y <= box_.y2;
        case Kind::Union:
            for (const auto& r : parts_)
                if (r.contains(x, y)) return true;
            return false;
        case Kind::Intersection:
            for (const auto& r : parts_)
                if (!r.contains(x, y)) return false;
            return true;
    }
    return false;
}

BoxStatus Region::box_status(const Box& b) const {
    switch (kind_) {
        case Kind::Full:
            return BoxStatus::Inside;
        case Kind::HalfPlane: {
            // Linear: extremes at corners.
            Rat vs[4] = {a_ * b.x1 + b_ * b.y1, a_ * b.x1 + b_ * b.y2, a_ * b.x2 + b_ * b.y1,
                         a_ * b.x2 + b_ * b.y2};
            Rat lo = vs[0], hi = vs[0];
            for (int i = 1; i < 4; ++i) {
                lo = rat_min(lo, vs[i]);
                hi = rat_max(hi, vs[i]);
            }
            bool all_in = closed_ ? hi <= c_ : hi < c_;
            bool all_out = closed_ ? lo > c_ : lo >= c_;
            if (all_in) return BoxStatus::Inside;
            if (all_out) return BoxStatus::Outside;
            return BoxStatus::Mixed;
        }
        case Kind::Disk: {
            Rat lo, hi, r2 = r_ * r_;
            box_dist2_range(b, p_, lo, hi);
            bool all_in = closed_ ? hi <= r2 : hi < r2;
            bool all_out = closed_ ? lo > r2 : lo >= r2;
            if (all_in) return BoxStatus::Inside;
            if (all_out) return BoxStatus::Outside;
            return BoxStatus::Mixed;
        }
        case Kind::Circle: {
            Rat lo, hi, r2 = r_ * r_;
            box_dist2_range(b, p_, lo, hi);
            if (lo > r2 || hi < r2) return BoxStatus::Outside;
            return BoxStatus::Mixed;
        }
        case Kind::Segment: {
            if (!clip_box(b)) return BoxStatus::Outside;
            return BoxStatus::Mixed;
        }
        case Kind::Box2: {
            if (b.x1 >= box_.x1 && b.x2 <= box_.x2 && b.y1 >= box_.y1 && b.y2 <= box_.y2)
                return BoxStatus::Inside;
            if (!intersect_boxes(b, box_)) return BoxStatus::Outside;
            return BoxStatus::Mixed;
        }
        case Kind::Union: {
            bool any_mixed = false;
            for (const auto& r : parts_) {
                BoxStatus s = r.box_status(b);
                if (s == BoxStatus::Inside) return BoxStatus::Inside;
                if (s == BoxStatus::Mixed) any_mixed = true;
            }
            return any_mixed ? BoxStatus::Mixed : BoxStatus::Outside;
        }
        case Kind::Intersection: {
            bool all_inside = true;
            for (const auto& r : parts_) {
                BoxStatus s = r.box_status(b);
                if (s == BoxStatus::Outside) return BoxStatus::Outside;
                if (s != BoxStatus::Inside) all_inside = false;
            }
            return all_inside ? BoxStatus::Inside : BoxStatus::Mixed;
        }
    }
    return BoxStatus::Mixed;
}

std::optional<Box> Region::clip_box(const Box& b) const {
    switch (kind_) {
        case Kind::Full:
            return b;
        case Kind::HalfPlane: {
            // Exact clip only for axis-aligned halfplanes; otherwise keep b.
            Box r = b;
            if (b_ == 0) {
                // a*x <= c  <=>  x <= c/a (a>0) or x >= c/a (a<0)
                Rat bound = c_ / a_;
                if (a_ > 0)
                    r.x2 = rat_min(r.x2, bound);
                else
                    r.x1 = rat_max(r.x1, bound);
            } else if (a_ == 0) {
                Rat bound = c_ / b_;
                if (b_ > 0)
                    r.y2 = rat_min(r.y2, bound);
                else
                    r.y1 = rat_max(r.y1, bound);
            }
            if (r.x1 > r.x2 || r.y1 > r.y2) return std::nullopt;
            if (box_status(r) == BoxStatus::Outside) return std::nullopt;
            return r;
        }
        case Kind::Disk:
        case Kind::Circle: {
            Box hull{p_.first - r_, p_.first + r_, p_.second - r_, p_.second + r_};
            auto clipped = intersect_boxes(b, hull);
            if (!clipped) return std::nullopt;
            if (box_status(*clipped) == BoxStatus::Outside) return std::nullopt;
            return clipped;
        }
        case Kind::Segment: {
            // Slab clipping of the parameter range against the box.
            Pt2 d = sub(q_, p_);
            if (p_ == q_) {
                if (p_.first < b.x1 || p_.first > b.x2 || p_.second < b.y1 || p_.second > b.y2)
                    return std::nullopt;
                return Box{p_.first, p_.first, p_.second, p_.second};
            }
            Rat t0(0), t1(1);
            auto clip_axis = [&](const Rat& origin, const Rat& dir, const Rat& lo,
                                 const Rat& hi) -> bool {
                if (dir == 0) return origin >= lo && origin <= hi;
                Rat ta = (lo - origin) / dir, tb = (hi - origin) / dir;
                if (ta > tb) std::swap(ta, tb);
                t0 = rat_max(t0, ta);
                t1 = rat_min(t1, tb);
                return t0 <= t1;
            };
            if (!clip_axis(p_.first, d.first, b.x1, b.x2)) return std::nullopt;
            if (!clip_axis(p_.second, d.second, b.y1, b.y2)) return std::nullopt;
            if (t0 > t1) return std::nullopt;
            Pt2 z0 = segment_chart(t0), z1 = segment_chart(t1);
            return Box{rat_min(z0.first, z1.first), rat_max(z0.first, z1.first),
                       rat_min(z0.second, z1.second), rat_max(z0.second, z1.second)};
        }
        case Kind::Box2:
            return intersect_boxes(b, box_);
        case Kind::Union: {
            std::optional<Box> acc;
            for (const auto& r : parts_) {
                auto c = r.clip_box(b);
                if (!c) continue;
                acc = acc ? hull_boxes(*acc, *c) : *c;
            }
            return acc;
        }
        case Kind::Intersection: {
            Box cur = b;
            for (const auto& r : parts_) {
                auto c = r.clip_box(cur);
                if (!c) return std::nullopt;
                cur = *c;
            }
            return cur;
        }
    }
    return b;
}

std::vector<const Region*> Region::union_leaves() const {
    std::vector<const Region*> out;
    if (kind_ == Kind::Union) {
        for (const auto& r : parts_) {
            auto sub = r.union_leaves();
            out.insert(out.end(), sub.begin(), sub.end());
        }
    } else {
        out.push_back(this);
    }
    return out;
}

std::optional<std::vector<Pt2>> Region::finite_points() const {
    if (kind_ == Kind::Segment && p_ == q_) return std::vector<Pt2>{p_};
    if (kind_ == Kind::Box2 && box_.x1 == box_.x2 && box_.y1 == box_.y2)
        return std::vector<Pt2>{{box_.x1, box_.y1}};
    if (kind_ == Kind::Union) {
        std::vector<Pt2> all;
        for (const auto& r : parts_) {
            auto sub = r.finite_points();
            if (!sub) return std::nullopt;
            all.insert(all.end(), sub->begin(), sub->end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }
    return std::nullopt;
}

std::vector<Pt2> Region::anchor_pts() const {
    std::vector<Pt2> raw;
    switch (kind_) {
        case Kind::Full:
            raw = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)},
                   {Rat(2), Rat(-1)}};
            break;
        case Kind::HalfPlane:
            raw = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)},  {Rat(-1), Rat(0)}, {Rat(0), Rat(1)},
                   {Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(2), Rat(-2)}};
            break;
        case Kind::Disk:
        case Kind::Circle: {
            const Rat& cx = p_.first;
            const Rat& cy = p_.second;
            raw = {{cx + r_, cy}, {cx - r_, cy}, {cx, cy + r_}, {cx, cy - r_}};
            if (kind_ == Kind::Disk) raw.push_back(p_);
            break;
        }
        case Kind::Segment:
            raw = {p_, q_, {(p_.first + q_.first) / 2, (p_.second + q_.second) / 2}};
            break;
        case Kind::Box2:
            raw = {{box_.x1, box_.y1}, {box_.x2, box_.y2}, {box_.x1, box_.y2},
                   {box_.x2, box_.y1}, box_.center()};
            break;
        case Kind::Union:
        case Kind::Intersection:
            for (const auto& r : parts_) {
                auto sub = r.anchor_pts();
                raw.insert(raw.end(), sub.begin(), sub.end());
            }
            break;
    }
    std::vector<Pt2> out;
    for (const auto& p : raw)
        if (contains(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

std::optional<Pt2> Region::sample_pt(Rng& rng, const Box& window, int attempts) const {
    Box win = window;
    if (auto b = bound()) {
        if (auto w = intersect_boxes(win, *b)) win = *w;
    }
    for (int i = 0; i < attempts; ++i) {
        Pt2 cand;
        switch (kind_) {
            case Kind::Circle: {
                Rat u = rng.next_rat_in(Rat(-1), Rat(1), 16);
                cand = circle_chart(p_, r_, u);
                break;
            }
            case Kind::Segment: {
                Rat t = rng.next_rat_in(Rat(0), Rat(1), 16);
                cand = segment_chart(t);
                break;
            }
            case Kind::Union: {
                const auto& part = parts_[rng.next_in(0, parts_.size() - 1)];
                auto s = part.sample_pt(rng, win, 1);
                if (!s) continue;
                cand = *s;
                break;
            }
            case Kind::Intersection: {
                auto s = parts_[0].sample_pt(rng, win, 1);
                if (!s) continue;
                cand = *s;
                break;
            }
            default:
                cand = {rng.next_rat_in(win.x1, win.x2, 16), rng.next_rat_in(win.y1, win.y2, 16)};
                break;
        }
        if (contains(cand)) return cand;
    }
    return std::nullopt;
}

std::optional<Box> Region::bound() const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Circle:
            return Box{p_.first - r_, p_.first + r_, p_.second - r_, p_.second + r_};
        case Kind::Segment:
            return Box{rat_min(p_.first, q_.first), rat_max(p_.first, q_.first),
                       rat_min(p_.second, q_.second), rat_max(p_.second, q_.second)};
        case Kind::Box2:
            return box_;
        case Kind::Union: {
            std::optional<Box> acc;
            for (const auto& r : parts_) {
                auto b = r.bound();
                if (!b) return std::nullopt;
                acc = acc ? hull_boxes(*acc, *b) : *b;
            }
            return acc;
        }
        case Kind::Intersection: {
            for (const auto& r : parts_)
                if (auto b = r.bound()) return b;
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

std::string Region::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Full:
            os << "plane";
            break;
        case Kind::HalfPlane:
            os << "halfplane(" << rat_str(a_) << "x + " << rat_str(b_) << "y "
               << (closed_ ? "<=" : "<") << " " << rat_str(c_) << ")";
            break;
        case Kind::Disk:
            os << (closed_ ? "disk[" : "disk(") << rat_str(p_.first) << ", " << rat_str(p_.second)
               << "; " << rat_str(r_) << (closed_ ? "]" : ")");
            break;
        case Kind::Circle:
            os << "circle(" << rat_str(p_.first) << ", " << rat_str(p_.second) << "; "
               << rat_str(r_) << ")";
            break;
        case Kind::Segment:
            if (p_ == q_) {
                os << "point(" << rat_str(p_.first) << ", " << rat_str(p_.second) << ")";
            } else {
                os << "segment" << (incl_p_ ? "[" : "(") << rat_str(p_.first) << ","
                   << rat_str(p_.second) << " -> " << rat_str(q_.first) << "," << rat_str(q_.second)
                   << (incl_q_ ? "]" : ")");
            }
            break;
        case Kind::Box2:
            os << "box[" << rat_str(box_.x1) << "," << rat_str(box_.x2) << "]x["
               << rat_str(box_.y1) << "," << rat_str(box_.y2) << "]";
            break;
        case Kind::Union:
        case Kind::Intersection: {
            const char* sep = kind_ == Kind::Union ? " u " : " n ";
            for (size_t i = 0; i < parts_.size(); ++i) {
                if (i) os << sep;
                os << parts_[i].str();
            }
            break;
        }
    }
    return os.str();
}

Pt2 Region::circle_chart(const Pt2& center, const Rat& radius, const Rat& u) {
    Rat den = 1 + u * u;
    return {center.first + radius * (1 - u * u) / den, center.second + radius * 2 * u / den};
}

std::optional<Rat> Region::u_on_circle(const Pt2& center, const Rat& radius, const Pt2& p) {
    Rat dx = p.first - center.first, dy = p.second - center.second;
    if (dx * dx + dy * dy != radius * radius) return std::nullopt;
    Rat den = dx + radius;
    if (den == 0) return std::nullopt;  // west point is not covered by the chart
    return dy / den;
}

Pt2 Region::segment_chart(const Rat& t) const {
    return {p_.first + t * (q_.first - p_.first), p_.second + t * (q_.second - p_.second)};
}

std::optional<Rat> Region::t_on_segment(const Pt2& z) const {
    if (p_ == q_) return z == p_ ? std::optional<Rat>(Rat(0)) : std::nullopt;
    Pt2 d = sub(q_, p_);
    if (cross(d, sub(z, p_)) != 0) return std::nullopt;
    Rat t = dot(sub(z, p_), d) / dot(d, d);
    if (t < 0 || t > 1) return std::nullopt;
    return t;
}

const Region* Region::curve_at(const Pt2& p) const {
    if (!contains(p)) return nullptr;
    switch (kind_) {
        case Kind::Circle:
            return this;
        case Kind::Segment:
            return p_ == q_ ? nullptr : this;
        case Kind::Union:
            for (const auto& r : parts_)
                if (r.contains(p))
                    return r.curve_at(p);  // first containing branch decides
            return nullptr;
        case Kind::Intersection:
            for (const auto& r : parts_)
                if (const Region* c = r.curve_at(p)) return c;
            return nullptr;
        default:
            return nullptr;
    }
}

}  // namespace roundsleek
