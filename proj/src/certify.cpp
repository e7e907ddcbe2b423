#include "roundsleek/certify.hpp"

#include <vector>

namespace roundsleek {

namespace {

void square_range(const Rat& lo, const Rat& hi, const Rat& c, Rat& out_lo, Rat& out_hi) {
    Rat a = lo - c, b = hi - c;
    Rat a2 = a * a, b2 = b * b;
    out_hi = rat_max(a2, b2);
    out_lo = (a <= 0 && b >= 0) ? Rat(0) : rat_min(a2, b2);
}

void box_dist2_range(const Box& bx, const Pt2& p, Rat& lo, Rat& hi) {
    Rat xl, xh, yl, yh;
    square_range(bx.x1, bx.x2, p.first, xl, xh);
    square_range(bx.y1, bx.y2, p.second, yl, yh);
    lo = xl + yl;
    hi = xh + yh;
}

// side = +1: prune boxes whose clipped part lies inside the closed ball
// around x (max d2 <= r2).  side = -1: prune boxes outside the open ball
// (min d2 >= r2).
bool bnb_empty(const Region& region, const Pt2& x, const Rat& r2, const Pt2& y, const Rat& eps,
               int side, int max_depth) {
    struct Node {
        Box box;
        int depth;
    };
    Rat eps2 = eps * eps;
    std::vector<Node> stack;
    stack.push_back({Box{y.first - eps, y.first + eps, y.second - eps, y.second + eps}, 0});
    long visited = 0;
    while (!stack.empty()) {
        if (++visited > 20000) return false;
        Node node = stack.back();
        stack.pop_back();
        auto clipped = region.clip_box(node.box);
        if (!clipped) continue;
        Box b = *clipped;
        Rat dy_lo, dy_hi;
        box_dist2_range(b, y, dy_lo, dy_hi);
        if (dy_lo >= eps2) continue;  // outside the open eps-ball
        Rat dx_lo, dx_hi;
        box_dist2_range(b, x, dx_lo, dx_hi);
        if (side > 0 ? dx_hi <= r2 : dx_lo >= r2) continue;
        bool split_x = b.x1 < b.x2, split_y = b.y1 < b.y2;
        if (!split_x && !split_y) {
            // Point box: the tests above were exact, so this is a genuine
            // member of the set (if it belongs to the region at all).
            if (region.contains(b.x1, b.y1)) return false;
            continue;
        }
        if (node.depth >= max_depth) return false;
        Rat mx = (b.x1 + b.x2) / 2, my = (b.y1 + b.y2) / 2;
        std::vector<Rat> xs = split_x ? std::vector<Rat>{b.x1, mx, b.x2} : std::vector<Rat>{b.x1, b.x2};
        std::vector<Rat> ys = split_y ? std::vector<Rat>{b.y1, my, b.y2} : std::vector<Rat>{b.y1, b.y2};
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            for (size_t j = 0; j + 1 < ys.size(); ++j)
                stack.push_back({Box{xs[i], xs[i + 1], ys[j], ys[j + 1]}, node.depth + 1});
    }
    return true;
}

}  // namespace

bool bnb_escape_set_empty(const Region& region, const Pt2& x, const Rat& r2, const Pt2& y,
                          const Rat& eps, int max_depth) {
    return bnb_empty(region, x, r2, y, eps, +1, max_depth);
}

bool bnb_open_ball_reach_empty(const Region& region, const Pt2& x, const Rat& r2, const Pt2& y,
                               const Rat& eps, int max_depth) {
    return bnb_empty(region, x, r2, y, eps, -1, max_depth);
}

}  // namespace roundsleek
