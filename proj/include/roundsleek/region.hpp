#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roundsleek/rational.hpp"
#include "roundsleek/rng.hpp"

namespace roundsleek {

using Pt2 = std::pair<Rat, Rat>;

struct Box {
    Rat x1, x2, y1, y2;  // x1 <= x2, y1 <= y2
    Pt2 center() const { return {(x1 + x2) / 2, (y1 + y2) / 2}; }
};

enum class BoxStatus { Outside, Inside, Mixed };

// A subset of the plane built from exactly decidable pieces. Membership of a
// rational point is always decided exactly; box_status and clip_box are
// conservative (Mixed / keeping the box is always sound) and exact on the
// pieces the certifier cares about.
class Region {
public:
    enum class Kind { Full, HalfPlane, Disk, Circle, Segment, Box2, Union, Intersection };

    static Region full();
    // {(x, y) | a*x + b*y <= c}, strict when closed == false
    static Region halfplane(const Rat& a, const Rat& b, const Rat& c, bool closed);
    static Region disk(const Pt2& center, const Rat& radius, bool closed);
    static Region circle(const Pt2& center, const Rat& radius);
    static Region segment(const Pt2& p, const Pt2& q, bool include_p, bool include_q);
    static Region box2(const Box& b);
    static Region point(const Pt2& p) { return segment(p, p, true, true); }
    static Region unite(std::vector<Region> parts);
    static Region intersect(std::vector<Region> parts);

    Kind kind() const { return kind_; }
    bool contains(const Rat& x, const Rat& y) const;
    bool contains(const Pt2& p) const { return contains(p.first, p.second); }

    BoxStatus box_status(const Box& b) const;
    // A sub-box of b still covering b ∩ region; nullopt when that set is
    // certainly empty. Conservative: returning b unchanged is always valid.
    std::optional<Box> clip_box(const Box& b) const;

    // Union-flattened parts (the region itself when not a union).
    std::vector<const Region*> union_leaves() const;
    // All points when the region is a finite point set; nullopt otherwise.
    std::optional<std::vector<Pt2>> finite_points() const;

    std::vector<Pt2> anchor_pts() const;
    std::optional<Pt2> sample_pt(Rng& rng, const Box& window, int attempts) const;

    // Bounding box for bounded regions; nullopt when unbounded.
    std::optional<Box> bound() const;

    std::string str() const;

    // Structure accessors for moves and serialization.
    const Rat& hp_a() const { return a_; }
    const Rat& hp_b() const { return b_; }
    const Rat& hp_c() const { return c_; }
    bool closed() const { return closed_; }
    const Pt2& center_pt() const { return p_; }
    const Rat& radius() const { return r_; }
    const Pt2& seg_p() const { return p_; }
    const Pt2& seg_q() const { return q_; }
    bool include_p() const { return incl_p_; }
    bool include_q() const { return incl_q_; }
    const Box& box_data() const { return box_; }
    const std::vector<Region>& parts() const { return parts_; }

    // Circle chart: u -> (cx + R(1-u^2)/(1+u^2), cy + 2Ru/(1+u^2)); covers the
    // circle minus its west point. u_on_circle inverts it for on-circle
    // rational points.
    static Pt2 circle_chart(const Pt2& center, const Rat& radius, const Rat& u);
    static std::optional<Rat> u_on_circle(const Pt2& center, const Rat& radius, const Pt2& p);
    // Segment chart: t in [0,1] -> p + t(q-p); t_on_segment inverts it.
    Pt2 segment_chart(const Rat& t) const;
    std::optional<Rat> t_on_segment(const Pt2& z) const;

    // Innermost Circle or Segment leaf whose carrier passes through p, if the
    // region constrains p to such a curve (used for tangential moves).
    const Region* curve_at(const Pt2& p) const;

private:
    Kind kind_ = Kind::Full;
    Rat a_, b_, c_;   // halfplane
    Pt2 p_, q_;       // disk/circle center; segment ends
    Rat r_;           // disk/circle radius
    bool closed_ = true;
    bool incl_p_ = true, incl_q_ = true;
    Box box_{Rat(0), Rat(0), Rat(0), Rat(0)};
    std::vector<Region> parts_;
};

Rat dist2(const Pt2& a, const Pt2& b);

}  // namespace roundsleek
