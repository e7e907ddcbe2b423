#include "roundsleek/svg.hpp"

#include <functional>
#include <sstream>
#include <utility>

#include "roundsleek/constructions.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/region.hpp"

namespace roundsleek {

namespace {

const char* kGeom = "#1f6feb";
const char* kBall = "#b08800";
const char* kAxis = "#c8c8c8";
const char* kWitX = "#cf222e";
const char* kWitY = "#8250df";
const char* kWitZ = "#116329";

std::string esc(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct WorldBox {
    bool any = false;
    Rat x1, x2, y1, y2;

    void add(const Rat& x, const Rat& y) {
        if (!any) {
            x1 = x2 = x;
            y1 = y2 = y;
            any = true;
            return;
        }
        if (x < x1) x1 = x;
        if (x > x2) x2 = x;
        if (y < y1) y1 = y;
        if (y > y2) y2 = y;
    }
};

// World-to-screen map with a uniform scale, so circles stay circles. The plot
// area is x in [30, 610], y in [20, 400]; captions live below it.
struct Mapper {
    Rat wcx, wcy, sppu;

    static Mapper fit(WorldBox wb) {
        if (!wb.any) wb.add(Rat(-2), Rat(-2)), wb.add(Rat(2), Rat(2));
        Rat w = wb.x2 - wb.x1, h = wb.y2 - wb.y1;
        Rat px = w / 10 + rat(1, 2), py = h / 10 + rat(1, 2);
        w += 2 * px;
        h += 2 * py;
        Mapper m;
        m.wcx = (wb.x1 + wb.x2) / 2;
        m.wcy = (wb.y1 + wb.y2) / 2;
        Rat sx = Rat(580) / w, sy = Rat(380) / h;
        m.sppu = sx < sy ? sx : sy;
        return m;
    }

    Rat sx(const Rat& x) const { return Rat(320) + (x - wcx) * sppu; }
    Rat sy(const Rat& y) const { return Rat(210) - (y - wcy) * sppu; }
    std::string X(const Rat& x) const { return rat_decimal(sx(x), 2); }
    std::string Y(const Rat& y) const { return rat_decimal(sy(y), 2); }
    std::string len(const Rat& l) const { return rat_decimal(l * sppu, 2); }

    // Visible world window.
    Rat vx1() const { return wcx - Rat(290) / sppu; }
    Rat vx2() const { return wcx + Rat(290) / sppu; }
    Rat vy1() const { return wcy - Rat(190) / sppu; }
    Rat vy2() const { return wcy + Rat(190) / sppu; }
};

struct Canvas {
    std::ostringstream defs;
    std::ostringstream body;
    std::vector<std::string> captions;
    int clip_id = 0;
};

std::string dash_attr(bool dashed) {
    return dashed ? " stroke-dasharray=\"6 4\"" : "";
}

void add_line(Canvas& c, const Mapper& m, const Rat& x1, const Rat& y1, const Rat& x2,
              const Rat& y2, const char* stroke, int width, bool dashed) {
    c.body << "<line x1=\"" << m.X(x1) << "\" y1=\"" << m.Y(y1) << "\" x2=\"" << m.X(x2)
           << "\" y2=\"" << m.Y(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
           << "\"" << dash_attr(dashed) << "/>\n";
}

void add_screen_line(Canvas& c, const std::string& x1, const std::string& y1,
                     const std::string& x2, const std::string& y2, const char* stroke, int width,
                     bool dashed) {
    c.body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\""
           << dash_attr(dashed) << "/>\n";
}

void add_dot(Canvas& c, const Mapper& m, const Rat& x, const Rat& y, const char* color,
             bool filled) {
    c.body << "<circle cx=\"" << m.X(x) << "\" cy=\"" << m.Y(y) << "\" r=\"4\" fill=\""
           << (filled ? color : "#ffffff") << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
}

void add_axes(Canvas& c, const Mapper& m) {
    if (m.vy1() < 0 && 0 < m.vy2())
        add_line(c, m, m.vx1(), Rat(0), m.vx2(), Rat(0), kAxis, 1, false);
    if (m.vx1() < 0 && 0 < m.vx2())
        add_line(c, m, Rat(0), m.vy1(), Rat(0), m.vy2(), kAxis, 1, false);
}

// ---------------------------------------------------------------------------
// Region drawing.

std::vector<Pt2> clip_halfplane(const Mapper& m, const Rat& a, const Rat& b, const Rat& c) {
    std::vector<Pt2> poly = {{m.vx1(), m.vy1()}, {m.vx2(), m.vy1()}, {m.vx2(), m.vy2()},
                             {m.vx1(), m.vy2()}};
    std::vector<Pt2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt2& p = poly[i];
        const Pt2& q = poly[(i + 1) % poly.size()];
        Rat fp = a * p.first + b * p.second - c;
        Rat fq = a * q.first + b * q.second - c;
        bool in_p = fp <= 0, in_q = fq <= 0;
        if (in_p) out.push_back(p);
        if (in_p != in_q) {
            Rat t = fp / (fp - fq);
            out.push_back({p.first + t * (q.first - p.first),
                           p.second + t * (q.second - p.second)});
        }
    }
    return out;
}

std::string polygon_points(const Mapper& m, const std::vector<Pt2>& poly) {
    std::string pts;
    for (const auto& p : poly) {
        if (!pts.empty()) pts += ' ';
        pts += m.X(p.first) + ',' + m.Y(p.second);
    }
    return pts;
}

// The clipping silhouette of an area-like region piece, as one SVG element.
std::optional<std::string> clip_shape(const Mapper& m, const Region& r) {
    switch (r.kind()) {
        case Region::Kind::Full:
            return std::string();
        case Region::Kind::HalfPlane: {
            auto poly = clip_halfplane(m, r.hp_a(), r.hp_b(), r.hp_c());
            if (poly.empty()) return std::nullopt;
            return "<polygon points=\"" + polygon_points(m, poly) + "\"/>";
        }
        case Region::Kind::Disk:
            return "<circle cx=\"" + m.X(r.center_pt().first) + "\" cy=\"" +
                   m.Y(r.center_pt().second) + "\" r=\"" + m.len(r.radius()) + "\"/>";
        case Region::Kind::Box2: {
            const Box& b = r.box_data();
            return "<rect x=\"" + m.X(b.x1) + "\" y=\"" + m.Y(b.y2) + "\" width=\"" +
                   m.len(b.x2 - b.x1) + "\" height=\"" + m.len(b.y2 - b.y1) + "\"/>";
        }
        default:
            return std::nullopt;
    }
}

void draw_region(Canvas& c, const Mapper& m, const Region& r);

void draw_boundary_line(Canvas& c, const Mapper& m, const Rat& a, const Rat& b, const Rat& cc,
                        bool dashed) {
    // Intersections of ax + by = c with the window edges.
    std::vector<Pt2> pts;
    auto push = [&](const Pt2& p) {
        for (const auto& q : pts)
            if (q == p) return;
        pts.push_back(p);
    };
    if (b != 0) {
        for (const Rat& x : {m.vx1(), m.vx2()}) {
            Rat y = (cc - a * x) / b;
            if (m.vy1() <= y && y <= m.vy2()) push({x, y});
        }
    }
    if (a != 0) {
        for (const Rat& y : {m.vy1(), m.vy2()}) {
            Rat x = (cc - b * y) / a;
            if (m.vx1() <= x && x <= m.vx2()) push({x, y});
        }
    }
    if (pts.size() >= 2)
        add_line(c, m, pts[0].first, pts[0].second, pts[1].first, pts[1].second, kGeom, 2,
                 dashed);
}

void draw_region_leaf(Canvas& c, const Mapper& m, const Region& r) {
    switch (r.kind()) {
        case Region::Kind::Full: {
            auto poly = polygon_points(m, {{m.vx1(), m.vy1()},
                                           {m.vx2(), m.vy1()},
                                           {m.vx2(), m.vy2()},
                                           {m.vx1(), m.vy2()}});
            c.body << "<polygon points=\"" << poly << "\" fill=\"" << kGeom
                   << "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
            return;
        }
        case Region::Kind::HalfPlane: {
            auto poly = clip_halfplane(m, r.hp_a(), r.hp_b(), r.hp_c());
            if (!poly.empty())
                c.body << "<polygon points=\"" << polygon_points(m, poly) << "\" fill=\"" << kGeom
                       << "\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
            draw_boundary_line(c, m, r.hp_a(), r.hp_b(), r.hp_c(), !r.closed());
            return;
        }
        case Region::Kind::Disk:
            c.body << "<circle cx=\"" << m.X(r.center_pt().first) << "\" cy=\""
                   << m.Y(r.center_pt().second) << "\" r=\"" << m.len(r.radius()) << "\" fill=\""
                   << kGeom << "\" fill-opacity=\"0.12\" stroke=\"" << kGeom
                   << "\" stroke-width=\"2\"" << dash_attr(!r.closed()) << "/>\n";
            return;
        case Region::Kind::Circle:
            c.body << "<circle cx=\"" << m.X(r.center_pt().first) << "\" cy=\""
                   << m.Y(r.center_pt().second) << "\" r=\"" << m.len(r.radius())
                   << "\" fill=\"none\" stroke=\"" << kGeom << "\" stroke-width=\"2\"/>\n";
            return;
        case Region::Kind::Segment: {
            if (r.seg_p() == r.seg_q()) {
                add_dot(c, m, r.seg_p().first, r.seg_p().second, kGeom, true);
                return;
            }
            add_line(c, m, r.seg_p().first, r.seg_p().second, r.seg_q().first, r.seg_q().second,
                     kGeom, 3, false);
            add_dot(c, m, r.seg_p().first, r.seg_p().second, kGeom, r.include_p());
            add_dot(c, m, r.seg_q().first, r.seg_q().second, kGeom, r.include_q());
            return;
        }
        case Region::Kind::Box2: {
            const Box& b = r.box_data();
            c.body << "<rect x=\"" << m.X(b.x1) << "\" y=\"" << m.Y(b.y2) << "\" width=\""
                   << m.len(b.x2 - b.x1) << "\" height=\"" << m.len(b.y2 - b.y1) << "\" fill=\""
                   << kGeom << "\" fill-opacity=\"0.12\" stroke=\"" << kGeom
                   << "\" stroke-width=\"2\"/>\n";
            return;
        }
        default:
            return;
    }
}

int paint_rank(Region::Kind k) {
    switch (k) {
        case Region::Kind::Circle: return 5;
        case Region::Kind::Segment: return 4;
        case Region::Kind::Disk: return 3;
        case Region::Kind::Box2: return 2;
        case Region::Kind::HalfPlane: return 1;
        case Region::Kind::Full: return 0;
        default: return -1;
    }
}

bool area_kind(Region::Kind k) {
    return k == Region::Kind::Full || k == Region::Kind::HalfPlane || k == Region::Kind::Disk ||
           k == Region::Kind::Box2;
}

void draw_intersection(Canvas& c, const Mapper& m, const Region& r) {
    const auto& parts = r.parts();
    std::size_t paint = 0;
    int best = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int rank = paint_rank(parts[i].kind());
        if (rank > best) {
            best = rank;
            paint = i;
        }
    }
    bool chain_ok = best >= 0;
    for (std::size_t i = 0; chain_ok && i < parts.size(); ++i)
        if (i != paint && !area_kind(parts[i].kind())) chain_ok = false;
    if (!chain_ok) {
        for (const auto& p : parts) draw_region(c, m, p);
        c.captions.push_back("intersection drawn as overlaid parts");
        return;
    }
    int groups = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == paint || parts[i].kind() == Region::Kind::Full) continue;
        auto shape = clip_shape(m, parts[i]);
        if (!shape || shape->empty()) continue;
        std::string id = "clip" + std::to_string(c.clip_id++);
        c.defs << "<clipPath id=\"" << id << "\">" << *shape << "</clipPath>\n";
        c.body << "<g clip-path=\"url(#" << id << ")\">\n";
        ++groups;
    }
    draw_region_leaf(c, m, parts[paint]);
    for (int i = 0; i < groups; ++i) c.body << "</g>\n";
}

void draw_region(Canvas& c, const Mapper& m, const Region& r) {
    switch (r.kind()) {
        case Region::Kind::Union:
            for (const auto& p : r.parts()) draw_region(c, m, p);
            return;
        case Region::Kind::Intersection:
            draw_intersection(c, m, r);
            return;
        default:
            draw_region_leaf(c, m, r);
            return;
    }
}

void region_bounds(const Region& r, WorldBox& wb) {
    switch (r.kind()) {
        case Region::Kind::Full:
            return;
        case Region::Kind::HalfPlane:
            return;
        case Region::Kind::Disk:
        case Region::Kind::Circle:
            wb.add(r.center_pt().first - r.radius(), r.center_pt().second - r.radius());
            wb.add(r.center_pt().first + r.radius(), r.center_pt().second + r.radius());
            return;
        case Region::Kind::Segment:
            wb.add(r.seg_p().first, r.seg_p().second);
            wb.add(r.seg_q().first, r.seg_q().second);
            return;
        case Region::Kind::Box2: {
            const Box& b = r.box_data();
            wb.add(b.x1, b.y1);
            wb.add(b.x2, b.y2);
            return;
        }
        case Region::Kind::Union:
        case Region::Kind::Intersection:
            for (const auto& p : r.parts()) region_bounds(p, wb);
            return;
    }
}

// ---------------------------------------------------------------------------
// 1-D carrier drawing (shared by the number line and product rows).

void draw_carrier_row(Canvas& c, const Mapper& m, const LineSubsetSpace& line, const Rat& y,
                      bool dashed) {
    if (line.whole()) {
        add_line(c, m, m.vx1(), y, m.vx2(), y, kGeom, 4, dashed);
        return;
    }
    for (const auto& comp : line.carrier().components()) {
        if (comp.is_point()) {
            add_dot(c, m, comp.lo, y, kGeom, true);
            continue;
        }
        add_line(c, m, comp.lo, y, comp.hi, y, kGeom, 4, dashed);
        add_dot(c, m, comp.lo, y, kGeom, !comp.lo_open);
        add_dot(c, m, comp.hi, y, kGeom, !comp.hi_open);
    }
}

void carrier_bounds(const LineSubsetSpace& line, WorldBox& wb, const Rat& y) {
    if (line.whole()) {
        wb.add(Rat(-3), y);
        wb.add(Rat(3), y);
        return;
    }
    for (const auto& comp : line.carrier().components()) {
        wb.add(comp.lo, y);
        wb.add(comp.hi, y);
    }
}

// ---------------------------------------------------------------------------
// Witness markers.

using Projector = std::function<std::optional<Pt2>(const Point&)>;

std::optional<Pt2> scalar_proj(const Point& p) {
    if (p.kind() != Point::Kind::Scalar) return std::nullopt;
    return Pt2{p.as_scalar(), Rat(0)};
}

std::optional<Pt2> vector2_proj(const Point& p) {
    if (p.kind() != Point::Kind::Vector || p.as_vector().size() != 2) return std::nullopt;
    return Pt2{p.as_vector()[0], p.as_vector()[1]};
}

// First two coordinates of a trimmed-prefix sequence point; missing entries
// sit at 0 (every drawn product here has base coordinate 0).
std::optional<Pt2> seq_proj(const Point& p) {
    if (p.kind() != Point::Kind::Seq) return std::nullopt;
    Rat a(0), b(0);
    const auto& kids = p.children();
    if (!kids.empty() && kids[0].kind() == Point::Kind::Scalar) a = kids[0].as_scalar();
    if (kids.size() > 1 && kids[1].kind() == Point::Kind::Scalar) b = kids[1].as_scalar();
    return Pt2{b, a};
}

void draw_witness_mark(Canvas& c, const Mapper& m, const Pt2& w, const char* color, char tag) {
    Rat x = m.sx(w.first), y = m.sy(w.second);
    if (tag == 'x') {
        add_screen_line(c, rat_decimal(x - 5, 2), rat_decimal(y - 5, 2), rat_decimal(x + 5, 2),
                        rat_decimal(y + 5, 2), color, 2, false);
        add_screen_line(c, rat_decimal(x - 5, 2), rat_decimal(y + 5, 2), rat_decimal(x + 5, 2),
                        rat_decimal(y - 5, 2), color, 2, false);
        return;
    }
    if (tag == 'z') {
        c.body << "<path d=\"M " << rat_decimal(x, 2) << ' ' << rat_decimal(y - 6, 2) << " L "
               << rat_decimal(x + 6, 2) << ' ' << rat_decimal(y, 2) << " L " << rat_decimal(x, 2)
               << ' ' << rat_decimal(y + 6, 2) << " L " << rat_decimal(x - 6, 2) << ' '
               << rat_decimal(y, 2) << " Z\" fill=\"" << color << "\"/>\n";
        return;
    }
    c.body << "<circle cx=\"" << rat_decimal(x, 2) << "\" cy=\"" << rat_decimal(y, 2)
           << "\" r=\"4\" fill=\"" << color << "\"/>\n";
}

void draw_witness(Canvas& c, const Mapper& m, const WitnessRecord& w, const Projector& proj) {
    struct Item {
        const Point* pt;
        const char* color;
        char tag;
        const char* label;
    };
    std::vector<Item> items = {{&w.x, kWitX, 'x', "x"}, {&w.y, kWitY, 'y', "y"}};
    if (w.z) items.push_back({&*w.z, kWitZ, 'z', "z"});
    std::string missed;
    for (const auto& item : items) {
        auto p = proj(*item.pt);
        if (p) {
            draw_witness_mark(c, m, *p, item.color, item.tag);
        } else {
            if (!missed.empty()) missed += ", ";
            missed += item.label;
        }
    }
    c.captions.push_back("witness " + witness_kind_name(w.kind) + ": x cross, y dot, z diamond");
    if (!missed.empty()) c.captions.push_back("not drawable here: " + missed);
}

void witness_bounds(const WitnessRecord& w, const Projector& proj, WorldBox& wb) {
    for (const Point* p : {&w.x, &w.y, w.z ? &*w.z : nullptr}) {
        if (!p) continue;
        if (auto q = proj(*p)) wb.add(q->first, q->second);
    }
}

// ---------------------------------------------------------------------------
// Ball overlays.

void draw_ball_plane(Canvas& c, const Mapper& m, const BallQuery& ball, const Projector& proj) {
    auto ctr = proj(ball.center);
    if (!ctr) {
        c.captions.push_back("ball overlay not drawable here");
        return;
    }
    c.body << "<circle cx=\"" << m.X(ctr->first) << "\" cy=\"" << m.Y(ctr->second) << "\" r=\""
           << m.len(ball.radius.hi()) << "\" fill=\"" << kBall
           << "\" fill-opacity=\"0.08\" stroke=\"" << kBall << "\" stroke-width=\"2\""
           << dash_attr(!ball.closed) << "/>\n";
    c.captions.push_back(std::string(ball.closed ? "closed" : "open") + " ball, radius " +
                         ball.radius.str());
}

void draw_ball_bracket(Canvas& c, const Mapper& m, const BallQuery& ball, const Rat& row_y) {
    if (ball.center.kind() != Point::Kind::Scalar) {
        c.captions.push_back("ball overlay not drawable here");
        return;
    }
    Rat ctp = ball.center.as_scalar();
    Rat r = ball.radius.hi();
    Rat y = m.sy(row_y) - 16;
    std::string ys = rat_decimal(y, 2);
    add_screen_line(c, m.X(ctp - r), ys, m.X(ctp + r), ys, kBall, 2, !ball.closed);
    for (const Rat& e : {Rat(ctp - r), Rat(ctp + r)})
        add_screen_line(c, m.X(e), rat_decimal(y - 5, 2), m.X(e), rat_decimal(y + 5, 2), kBall, 2,
                        false);
    add_screen_line(c, m.X(ctp), rat_decimal(y - 3, 2), m.X(ctp), rat_decimal(y + 3, 2), kBall, 2,
                    false);
    c.captions.push_back(std::string(ball.closed ? "closed" : "open") + " ball, radius " +
                         ball.radius.str());
}

void draw_ball_xprime(Canvas& c, const Mapper& m, const BallQuery& ball) {
    auto ctr = vector2_proj(ball.center);
    if (!ctr || (ctr->second != 0 && ctr->second != 1)) {
        c.captions.push_back("ball overlay not drawable here");
        return;
    }
    Rat a = ctr->first;
    int b = ctr->second == 0 ? 0 : 1;
    XPrimeBall ob;
    try {
        ob = xprime_ball_oracle(a, b, ball.radius);
    } catch (const InvalidParameter&) {
        c.captions.push_back("ball overlay skipped: radius enclosure straddles the gap 1");
        return;
    }
    Rat own = ob.own_half_width.hi();
    add_line(c, m, a - own, Rat(b), a + own, Rat(b), kBall, 6, !ball.closed);
    Rat other_y(1 - b);
    if (ob.other_is_point) {
        add_dot(c, m, a, other_y, kBall, true);
        c.captions.push_back("the other line meets the ball in the single point below the center");
    } else if (ob.other_half_width) {
        Rat w = ob.other_half_width->hi();
        add_line(c, m, a - w, other_y, a + w, other_y, kBall, 6, !ball.closed);
    }
    c.captions.push_back(std::string(ball.closed ? "closed" : "open") + " ball, radius " +
                         ball.radius.str());
}

// ---------------------------------------------------------------------------
// Transform unwrapping.

MetricSpace unwrap_transforms(MetricSpace space, SvgOverlay& overlay, Canvas& c) {
    bool dropped_ball = false;
    while (true) {
        if (const auto* tr = space.as<TruncateSpace>()) {
            c.captions.push_back("metric truncated at " + rat_str(tr->radius()) +
                                 "; geometry drawn from the base carrier");
            if (overlay.ball) dropped_ball = true;
            space = tr->base();
            continue;
        }
        if (const auto* mono = space.as<MonotoneSpace>()) {
            std::string phi = mono->transform_name() == "log1p" ? "log(1+t)" : "t/(1+t)";
            c.captions.push_back("metric transformed by " + phi +
                                 "; geometry drawn from the base carrier");
            if (overlay.ball) dropped_ball = true;
            space = mono->base();
            continue;
        }
        break;
    }
    if (dropped_ball) {
        overlay.ball.reset();
        c.captions.push_back("ball overlay omitted: radii live in the transformed metric");
    }
    return space;
}

std::string finish(Canvas& c, const SvgOverlay& overlay) {
    for (const auto& line : overlay.captions) c.captions.push_back(line);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
           "height=\"480\" viewBox=\"0 0 640 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"#ffffff\"/>\n";
    std::string defs = c.defs.str();
    if (!defs.empty()) out << "<defs>\n" << defs << "</defs>\n";
    out << c.body.str();
    int y = 430;
    int shown = 0;
    for (const auto& line : c.captions) {
        if (shown == 3) break;
        out << "<text x=\"30\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"13\" "
            << "fill=\"#333333\">" << esc(line) << "</text>\n";
        y += 18;
        ++shown;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const MetricSpace& space_in, const SvgOverlay& overlay_in) {
    Canvas c;
    SvgOverlay overlay = overlay_in;
    MetricSpace space = unwrap_transforms(space_in, overlay, c);
    c.captions.insert(c.captions.begin(), space.describe());

    // --- number line ---
    if (const auto* line = space.as<LineSubsetSpace>()) {
        WorldBox wb;
        carrier_bounds(*line, wb, Rat(0));
        wb.add(wb.x1, Rat(-3) / 2);
        wb.add(wb.x1, Rat(3) / 2);
        if (overlay.ball && overlay.ball->center.kind() == Point::Kind::Scalar) {
            Rat ctp = overlay.ball->center.as_scalar();
            wb.add(ctp - overlay.ball->radius.hi(), Rat(0));
            wb.add(ctp + overlay.ball->radius.hi(), Rat(0));
        }
        if (overlay.witness) witness_bounds(*overlay.witness, scalar_proj, wb);
        Mapper m = Mapper::fit(wb);
        add_axes(c, m);
        draw_carrier_row(c, m, *line, Rat(0), line->rationals_only());
        if (line->rationals_only()) c.captions.push_back("rational points only (drawn dashed)");
        if (overlay.ball) draw_ball_bracket(c, m, *overlay.ball, Rat(0));
        if (overlay.witness) draw_witness(c, m, *overlay.witness, scalar_proj);
        return finish(c, overlay);
    }

    // --- plane region ---
    if (const auto* plane = space.as<PlaneRegionSpace>()) {
        WorldBox wb;
        region_bounds(plane->region(), wb);
        if (!wb.any) {
            wb.add(Rat(-2), Rat(-2));
            wb.add(Rat(2), Rat(2));
        }
        if (overlay.ball) {
            if (auto ctr = vector2_proj(overlay.ball->center)) {
                Rat r = overlay.ball->radius.hi();
                wb.add(ctr->first - r, ctr->second - r);
                wb.add(ctr->first + r, ctr->second + r);
            }
        }
        if (overlay.witness) witness_bounds(*overlay.witness, vector2_proj, wb);
        Mapper m = Mapper::fit(wb);
        add_axes(c, m);
        draw_region(c, m, plane->region());
        if (overlay.ball) draw_ball_plane(c, m, *overlay.ball, vector2_proj);
        if (overlay.witness) draw_witness(c, m, *overlay.witness, vector2_proj);
        return finish(c, overlay);
    }

    // --- euclidean plane / line ---
    if (const auto* rn = space.as<RnSpace>()) {
        if (rn->dim() > 2) throw UnsupportedDimension(space.describe());
        bool flat = rn->dim() == 1;
        Projector proj = flat ? Projector(scalar_proj) : Projector(vector2_proj);
        WorldBox wb;
        wb.add(Rat(-2), Rat(-2));
        wb.add(Rat(2), Rat(2));
        if (overlay.ball) {
            if (auto ctr = proj(overlay.ball->center)) {
                Rat r = overlay.ball->radius.hi();
                wb.add(ctr->first - r, ctr->second - r);
                wb.add(ctr->first + r, ctr->second + r);
            }
        }
        if (overlay.witness) witness_bounds(*overlay.witness, proj, wb);
        Mapper m = Mapper::fit(wb);
        add_axes(c, m);
        if (flat) {
            add_line(c, m, m.vx1(), Rat(0), m.vx2(), Rat(0), kGeom, 4, false);
            if (overlay.ball) draw_ball_bracket(c, m, *overlay.ball, Rat(0));
        } else {
            draw_region_leaf(c, m, Region::full());
            if (overlay.ball) draw_ball_plane(c, m, *overlay.ball, proj);
        }
        if (overlay.witness) draw_witness(c, m, *overlay.witness, proj);
        return finish(c, overlay);
    }

    // --- two parallel lines ---
    if (space.as<XPrimeSpace>()) {
        WorldBox wb;
        wb.add(Rat(-3), Rat(-1));
        wb.add(Rat(3), Rat(2));
        if (overlay.ball) {
            if (auto ctr = vector2_proj(overlay.ball->center)) {
                Rat r = overlay.ball->radius.hi();
                wb.add(ctr->first - r, ctr->second);
                wb.add(ctr->first + r, ctr->second);
            }
        }
        if (overlay.witness) witness_bounds(*overlay.witness, vector2_proj, wb);
        Mapper m = Mapper::fit(wb);
        add_axes(c, m);
        add_line(c, m, m.vx1(), Rat(0), m.vx2(), Rat(0), kGeom, 2, false);
        add_line(c, m, m.vx1(), Rat(1), m.vx2(), Rat(1), kGeom, 2, false);
        if (overlay.ball) draw_ball_xprime(c, m, *overlay.ball);
        if (overlay.witness) draw_witness(c, m, *overlay.witness, vector2_proj);
        return finish(c, overlay);
    }

    // --- finite label set ---
    if (const auto* disc = space.as<DiscreteSpace>()) {
        WorldBox wb;
        wb.add(Rat(-1), Rat(-1));
        wb.add(Rat(static_cast<long>(disc->labels().size())), Rat(1));
        Mapper m = Mapper::fit(wb);
        for (std::size_t i = 0; i < disc->labels().size(); ++i) {
            add_dot(c, m, Rat(static_cast<long>(i)), Rat(0), kGeom, true);
            c.body << "<text x=\"" << m.X(Rat(static_cast<long>(i))) << "\" y=\""
                   << rat_decimal(m.sy(Rat(0)) - 10, 2)
                   << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
                      "fill=\"#333333\">"
                   << esc(disc->labels()[i]) << "</text>\n";
        }
        if (overlay.ball) c.captions.push_back("ball overlay not drawable here");
        c.captions.push_back("discrete metric: distinct labels at distance 1");
        return finish(c, overlay);
    }

    // --- product of two factors ---
    if (const auto* prod = space.as<EuclideanProductSpace>()) {
        const auto& fs = prod->factors();
        const auto* line0 = fs.size() == 2 ? fs[0].as<LineSubsetSpace>() : nullptr;
        const auto* line1 = fs.size() == 2 ? fs[1].as<LineSubsetSpace>() : nullptr;
        const auto* disc0 = fs.size() == 2 ? fs[0].as<DiscreteSpace>() : nullptr;

        auto tuple2 = [](const Point& p) -> const std::vector<Point>* {
            if (p.kind() != Point::Kind::Tuple || p.children().size() != 2) return nullptr;
            return &p.children();
        };

        if (line0 && line1) {
            Projector proj = [tuple2](const Point& p) -> std::optional<Pt2> {
                const auto* kids = tuple2(p);
                if (!kids || (*kids)[0].kind() != Point::Kind::Scalar ||
                    (*kids)[1].kind() != Point::Kind::Scalar)
                    return std::nullopt;
                return Pt2{(*kids)[0].as_scalar(), (*kids)[1].as_scalar()};
            };
            WorldBox wb;
            carrier_bounds(*line0, wb, Rat(0));
            {
                WorldBox tmp;
                carrier_bounds(*line1, tmp, Rat(0));
                wb.add(wb.x1, tmp.x1);
                wb.add(wb.x1, tmp.x2);
            }
            if (overlay.ball) {
                if (auto ctr = proj(overlay.ball->center)) {
                    Rat r = overlay.ball->radius.hi();
                    wb.add(ctr->first - r, ctr->second - r);
                    wb.add(ctr->first + r, ctr->second + r);
                }
            }
            if (overlay.witness) witness_bounds(*overlay.witness, proj, wb);
            Mapper m = Mapper::fit(wb);
            add_axes(c, m);
            auto x_spans = [&]() {
                std::vector<std::pair<Rat, Rat>> spans;
                if (line0->whole())
                    spans.push_back({m.vx1(), m.vx2()});
                else
                    for (const auto& comp : line0->carrier().components())
                        spans.push_back({comp.lo, comp.hi});
                return spans;
            }();
            auto y_spans = [&]() {
                std::vector<std::pair<Rat, Rat>> spans;
                if (line1->whole())
                    spans.push_back({m.vy1(), m.vy2()});
                else
                    for (const auto& comp : line1->carrier().components())
                        spans.push_back({comp.lo, comp.hi});
                return spans;
            }();
            for (const auto& xs : x_spans)
                for (const auto& ys : y_spans)
                    c.body << "<rect x=\"" << m.X(xs.first) << "\" y=\"" << m.Y(ys.second)
                           << "\" width=\"" << m.len(xs.second - xs.first) << "\" height=\""
                           << m.len(ys.second - ys.first) << "\" fill=\"" << kGeom
                           << "\" fill-opacity=\"0.12\" stroke=\"" << kGeom
                           << "\" stroke-width=\"1\"/>\n";
            c.captions.push_back("product of two line carriers, drawn as bands");
            if (overlay.ball) draw_ball_plane(c, m, *overlay.ball, proj);
            if (overlay.witness) draw_witness(c, m, *overlay.witness, proj);
            return finish(c, overlay);
        }

        if (disc0 && line1) {
            const auto& labels = disc0->labels();
            Projector proj = [tuple2, &labels](const Point& p) -> std::optional<Pt2> {
                const auto* kids = tuple2(p);
                if (!kids || (*kids)[0].kind() != Point::Kind::Label ||
                    (*kids)[1].kind() != Point::Kind::Scalar)
                    return std::nullopt;
                for (std::size_t i = 0; i < labels.size(); ++i)
                    if (labels[i] == (*kids)[0].as_label())
                        return Pt2{(*kids)[1].as_scalar(), Rat(static_cast<long>(i))};
                return std::nullopt;
            };
            WorldBox wb;
            for (std::size_t i = 0; i < labels.size(); ++i)
                carrier_bounds(*line1, wb, Rat(static_cast<long>(i)));
            wb.add(wb.x1, Rat(-1));
            wb.add(wb.x1, Rat(static_cast<long>(labels.size())));
            if (overlay.witness) witness_bounds(*overlay.witness, proj, wb);
            Mapper m = Mapper::fit(wb);
            for (std::size_t i = 0; i < labels.size(); ++i) {
                Rat row(static_cast<long>(i));
                draw_carrier_row(c, m, *line1, row, false);
                c.body << "<text x=\"12\" y=\"" << rat_decimal(m.sy(row) + 4, 2)
                       << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">"
                       << esc(labels[i]) << "</text>\n";
            }
            c.captions.push_back("one carrier copy per label, labels at distance 1");
            if (overlay.ball) c.captions.push_back("ball overlay not drawable here");
            if (overlay.witness) draw_witness(c, m, *overlay.witness, proj);
            return finish(c, overlay);
        }

        throw UnsupportedDimension(space.describe());
    }

    // --- weighted countable product: first two coordinates ---
    if (const auto* pd = space.as<ProductDSpace>()) {
        WorldBox wb;
        wb.add(Rat(-2), Rat(-1));
        wb.add(Rat(2), Rat(2));
        std::vector<Pt2> dots;
        for (const auto& a : pd->anchors()) {
            if (auto p = seq_proj(a)) {
                dots.push_back(*p);
                wb.add(p->first, p->second);
            }
        }
        if (overlay.witness) witness_bounds(*overlay.witness, seq_proj, wb);
        Mapper m = Mapper::fit(wb);
        add_axes(c, m);
        for (const auto& d : dots) add_dot(c, m, d.first, d.second, kGeom, false);
        c.captions.push_back(
            "projection onto coordinates 1 (vertical) and 2 (horizontal); anchor points hollow");
        if (overlay.ball)
            c.captions.push_back("ball overlay not drawn on a projection");
        if (overlay.witness) draw_witness(c, m, *overlay.witness, seq_proj);
        return finish(c, overlay);
    }

    throw UnsupportedDimension(space.describe());
}

}  // namespace roundsleek
