#include "roundsleek/report.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "roundsleek/axioms.hpp"
#include "roundsleek/constructions.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/gallery.hpp"

namespace roundsleek {

const char* const toolkit_version = "0.1.0";

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Cursor: a JSON node plus the path that reached it, for diagnostics.

struct Cursor {
    const json* node;
    std::string path;

    const json& ref() const { return *node; }
};

[[noreturn]] void fail(const Cursor& cur, const std::string& what) {
    throw ParseError(cur.path, what);
}

Cursor get(const Cursor& cur, const std::string& key) {
    if (!cur.ref().is_object()) fail(cur, "expected an object");
    auto it = cur.ref().find(key);
    if (it == cur.ref().end()) fail(cur, "missing key '" + key + "'");
    return {&*it, cur.path + "." + key};
}

std::optional<Cursor> maybe(const Cursor& cur, const std::string& key) {
    if (!cur.ref().is_object()) fail(cur, "expected an object");
    auto it = cur.ref().find(key);
    if (it == cur.ref().end() || it->is_null()) return std::nullopt;
    return Cursor{&*it, cur.path + "." + key};
}

Cursor at(const Cursor& cur, std::size_t i) {
    return {&cur.ref()[i], cur.path + "[" + std::to_string(i) + "]"};
}

std::size_t array_size(const Cursor& cur, std::size_t min_size) {
    if (!cur.ref().is_array()) fail(cur, "expected an array");
    if (cur.ref().size() < min_size)
        fail(cur, "expected at least " + std::to_string(min_size) + " element(s)");
    return cur.ref().size();
}

std::string as_string(const Cursor& cur) {
    if (!cur.ref().is_string()) fail(cur, "expected a string");
    return cur.ref().get<std::string>();
}

bool as_bool(const Cursor& cur) {
    if (!cur.ref().is_boolean()) fail(cur, "expected a boolean");
    return cur.ref().get<bool>();
}

long long as_int(const Cursor& cur) {
    if (!cur.ref().is_number_integer()) fail(cur, "expected an integer");
    return cur.ref().get<long long>();
}

bool opt_bool(const Cursor& cur, const std::string& key, bool fallback) {
    auto sub = maybe(cur, key);
    return sub ? as_bool(*sub) : fallback;
}

// Rationals travel as "p/q" strings; bare JSON integers are accepted on input.
Rat as_rat(const Cursor& cur) {
    if (cur.ref().is_number_integer()) return Rat(cur.ref().get<long>());
    if (!cur.ref().is_string()) fail(cur, "expected a rational as a \"p/q\" string");
    auto parsed = rat_parse(cur.ref().get<std::string>());
    if (!parsed) fail(cur, "malformed rational '" + cur.ref().get<std::string>() + "'");
    return *parsed;
}

json rat_json(const Rat& q) { return rat_str(q); }

json value_json(const BoundedReal& v) {
    if (v.exact()) return rat_json(v.lo());
    return json::array({rat_str(v.lo()), rat_str(v.hi())});
}

BoundedReal parse_value(const Cursor& cur) {
    if (cur.ref().is_string() || cur.ref().is_number_integer()) return BoundedReal(as_rat(cur));
    if (cur.ref().is_array() && cur.ref().size() == 2) {
        Rat lo = as_rat(at(cur, 0));
        Rat hi = as_rat(at(cur, 1));
        if (hi < lo) fail(cur, "enclosure bounds out of order");
        return BoundedReal(lo, hi);
    }
    fail(cur, "expected \"p/q\" or [\"lo\", \"hi\"]");
}

Pt2 parse_pt2(const Cursor& cur) {
    if (!cur.ref().is_array() || cur.ref().size() != 2) fail(cur, "expected [x, y]");
    return {as_rat(at(cur, 0)), as_rat(at(cur, 1))};
}

json pt2_json(const Pt2& p) { return json::array({rat_str(p.first), rat_str(p.second)}); }

// ---------------------------------------------------------------------------
// Point codec.

json point_json(const Point& p) {
    json j;
    switch (p.kind()) {
        case Point::Kind::Scalar:
            j["kind"] = "scalar";
            j["value"] = rat_json(p.as_scalar());
            break;
        case Point::Kind::Vector: {
            j["kind"] = "vector";
            json coords = json::array();
            for (const auto& c : p.as_vector()) coords.push_back(rat_json(c));
            j["coords"] = std::move(coords);
            break;
        }
        case Point::Kind::Label:
            j["kind"] = "label";
            j["name"] = p.as_label();
            break;
        case Point::Kind::Tuple:
        case Point::Kind::Seq: {
            bool tuple = p.kind() == Point::Kind::Tuple;
            j["kind"] = tuple ? "tuple" : "seq";
            json parts = json::array();
            for (const auto& c : p.children()) parts.push_back(point_json(c));
            j[tuple ? "parts" : "prefix"] = std::move(parts);
            break;
        }
    }
    return j;
}

Point parse_point(const Cursor& cur) {
    std::string kind = as_string(get(cur, "kind"));
    if (kind == "scalar") return Point::scalar(as_rat(get(cur, "value")));
    if (kind == "vector") {
        Cursor arr = get(cur, "coords");
        std::size_t n = array_size(arr, 1);
        std::vector<Rat> coords;
        for (std::size_t i = 0; i < n; ++i) coords.push_back(as_rat(at(arr, i)));
        return Point::vec(std::move(coords));
    }
    if (kind == "label") return Point::label(as_string(get(cur, "name")));
    if (kind == "tuple" || kind == "seq") {
        Cursor arr = get(cur, kind == "tuple" ? "parts" : "prefix");
        std::size_t n = array_size(arr, 0);
        std::vector<Point> parts;
        for (std::size_t i = 0; i < n; ++i) parts.push_back(parse_point(at(arr, i)));
        return kind == "tuple" ? Point::tuple(std::move(parts)) : Point::seq(std::move(parts));
    }
    fail(cur, "unknown point kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Witness codec.

json witness_json(const WitnessRecord& w) {
    json j;
    j["kind"] = witness_kind_name(w.kind);
    j["x"] = point_json(w.x);
    j["y"] = point_json(w.y);
    if (w.z) j["z"] = point_json(*w.z);
    j["value"] = value_json(w.value);
    j["separation"] = value_json(w.separation);
    if (w.param) j["param"] = rat_json(*w.param);
    if (w.detail) j["detail"] = *w.detail;
    return j;
}

WitnessRecord parse_witness(const Cursor& cur) {
    WitnessRecord w;
    std::string kind = as_string(get(cur, "kind"));
    bool known = false;
    for (WitnessKind k : {WitnessKind::MinOnOpenSet, WitnessKind::MaxOnOpenSet,
                          WitnessKind::SphereNotLimit, WitnessKind::ConvexityGap,
                          WitnessKind::StrictConvexityGap}) {
        if (witness_kind_name(k) == kind) {
            w.kind = k;
            known = true;
            break;
        }
    }
    if (!known) fail(cur, "unknown witness kind '" + kind + "'");
    w.x = parse_point(get(cur, "x"));
    w.y = parse_point(get(cur, "y"));
    if (auto z = maybe(cur, "z")) w.z = parse_point(*z);
    w.value = parse_value(get(cur, "value"));
    w.separation = parse_value(get(cur, "separation"));
    if (auto p = maybe(cur, "param")) w.param = as_rat(*p);
    if (auto d = maybe(cur, "detail")) w.detail = as_string(*d);
    return w;
}

// ---------------------------------------------------------------------------
// Region nodes.

struct ParsedRegion {
    Region region;
    json normalized;
};

ParsedRegion parse_region(const Cursor& cur) {
    std::string kind = as_string(get(cur, "kind"));
    json out;
    out["kind"] = kind;
    try {
        if (kind == "full") return {Region::full(), std::move(out)};
        if (kind == "halfplane") {
            Rat a = as_rat(get(cur, "a")), b = as_rat(get(cur, "b")), c = as_rat(get(cur, "c"));
            bool closed = opt_bool(cur, "closed", true);
            out["a"] = rat_json(a);
            out["b"] = rat_json(b);
            out["c"] = rat_json(c);
            out["closed"] = closed;
            return {Region::halfplane(a, b, c, closed), std::move(out)};
        }
        if (kind == "disk" || kind == "circle") {
            Pt2 center = parse_pt2(get(cur, "center"));
            Rat r = as_rat(get(cur, "r"));
            out["center"] = pt2_json(center);
            out["r"] = rat_json(r);
            if (kind == "circle") return {Region::circle(center, r), std::move(out)};
            bool closed = opt_bool(cur, "closed", true);
            out["closed"] = closed;
            return {Region::disk(center, r, closed), std::move(out)};
        }
        if (kind == "segment") {
            Pt2 p = parse_pt2(get(cur, "p"));
            Pt2 q = parse_pt2(get(cur, "q"));
            bool ip = opt_bool(cur, "include_p", true);
            bool iq = opt_bool(cur, "include_q", true);
            out["p"] = pt2_json(p);
            out["q"] = pt2_json(q);
            out["include_p"] = ip;
            out["include_q"] = iq;
            return {Region::segment(p, q, ip, iq), std::move(out)};
        }
        if (kind == "box") {
            Box b{as_rat(get(cur, "x1")), as_rat(get(cur, "x2")), as_rat(get(cur, "y1")),
                  as_rat(get(cur, "y2"))};
            out["x1"] = rat_json(b.x1);
            out["x2"] = rat_json(b.x2);
            out["y1"] = rat_json(b.y1);
            out["y2"] = rat_json(b.y2);
            return {Region::box2(b), std::move(out)};
        }
        if (kind == "union" || kind == "intersection") {
            Cursor arr = get(cur, "parts");
            std::size_t n = array_size(arr, 1);
            std::vector<Region> parts;
            json norm = json::array();
            for (std::size_t i = 0; i < n; ++i) {
                ParsedRegion sub = parse_region(at(arr, i));
                parts.push_back(std::move(sub.region));
                norm.push_back(std::move(sub.normalized));
            }
            out["parts"] = std::move(norm);
            Region r = kind == "union" ? Region::unite(std::move(parts))
                                       : Region::intersect(std::move(parts));
            return {std::move(r), std::move(out)};
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        fail(cur, e.what());
    }
    fail(cur, "unknown region kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Space definitions.

struct ParsedSpace {
    MetricSpace space;
    json normalized;
};

ParsedSpace parse_space(const Cursor& cur, bool top);

ParsedSpace parse_interval_union(const Cursor& cur, json out) {
    Cursor arr = get(cur, "intervals");
    std::size_t n = array_size(arr, 1);
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < n; ++i) {
        Cursor item = at(arr, i);
        Interval iv;
        iv.lo = as_rat(get(item, "lo"));
        iv.hi = as_rat(get(item, "hi"));
        iv.lo_open = opt_bool(item, "lo_open", false);
        iv.hi_open = opt_bool(item, "hi_open", false);
        if (iv.hi < iv.lo || (iv.lo == iv.hi && (iv.lo_open || iv.hi_open)))
            fail(item, "empty interval");
        parts.push_back(std::move(iv));
    }
    bool rats = opt_bool(cur, "rationals_only", false);
    IntervalUnion carrier;
    try {
        carrier = IntervalUnion(std::move(parts));
    } catch (const std::invalid_argument& e) {
        fail(arr, e.what());
    }
    json norm = json::array();
    for (const auto& c : carrier.components()) {
        json iv;
        iv["lo"] = rat_json(c.lo);
        iv["hi"] = rat_json(c.hi);
        iv["lo_open"] = c.lo_open;
        iv["hi_open"] = c.hi_open;
        norm.push_back(std::move(iv));
    }
    out["intervals"] = std::move(norm);
    out["rationals_only"] = rats;
    return {LineSubsetSpace::make(std::move(carrier), rats), std::move(out)};
}

ParsedSpace parse_region2d(const Cursor& cur, json out) {
    ParsedRegion reg = parse_region(get(cur, "region"));
    out["region"] = std::move(reg.normalized);
    std::string name;
    if (auto n = maybe(cur, "name")) {
        name = as_string(*n);
        out["name"] = name;
    }
    std::optional<BoundedReal> diam;
    if (auto d = maybe(cur, "diameter")) {
        diam = parse_value(*d);
        out["diameter"] = value_json(*diam);
    }
    std::vector<Pt2> extra;
    if (auto a = maybe(cur, "anchors")) {
        std::size_t n = array_size(*a, 1);
        json norm = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            extra.push_back(parse_pt2(at(*a, i)));
            norm.push_back(pt2_json(extra.back()));
        }
        out["anchors"] = std::move(norm);
    }
    try {
        auto impl = std::make_shared<PlaneRegionSpace>(std::move(reg.region), std::move(name),
                                                       std::move(diam), std::move(extra));
        return {MetricSpace(std::move(impl)), std::move(out)};
    } catch (const std::invalid_argument& e) {
        fail(cur, e.what());
    }
}

ParsedSpace parse_space(const Cursor& cur, bool top) {
    if (!cur.ref().is_object()) fail(cur, "expected an object");
    if (top) {
        Cursor schema = get(cur, "schema");
        if (as_int(schema) != 1) fail(schema, "unsupported schema version");
    }
    std::string type = as_string(get(cur, "type"));
    json out;
    if (top) out["schema"] = 1;
    out["type"] = type;

    if (type == "interval_union") return parse_interval_union(cur, std::move(out));
    if (type == "region2d") return parse_region2d(cur, std::move(out));

    if (type == "product_euclid" || type == "product_D") {
        std::string key = type == "product_euclid" ? "factors" : "head";
        Cursor arr = get(cur, key);
        std::size_t n = array_size(arr, 1);
        std::vector<MetricSpace> factors;
        json norm = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ParsedSpace sub = parse_space(at(arr, i), false);
            factors.push_back(std::move(sub.space));
            norm.push_back(std::move(sub.normalized));
        }
        out[key] = std::move(norm);
        try {
            if (type == "product_euclid")
                return {product_euclid(std::move(factors)), std::move(out)};
            std::optional<MetricSpace> tail;
            if (auto t = maybe(cur, "tail")) {
                ParsedSpace sub = parse_space(*t, false);
                tail = std::move(sub.space);
                out["tail"] = std::move(sub.normalized);
            } else {
                out["tail"] = nullptr;
            }
            long long trunc = 32;
            if (auto t = maybe(cur, "truncation")) trunc = as_int(*t);
            out["truncation"] = trunc;
            return {product_metric_D(std::move(factors), std::move(tail),
                                     static_cast<int>(trunc)),
                    std::move(out)};
        } catch (const std::invalid_argument& e) {
            fail(cur, e.what());
        }
    }

    if (type == "transform") {
        std::string name = as_string(get(cur, "transform"));
        out["transform"] = name;
        ParsedSpace inner = parse_space(get(cur, "inner"), false);
        out["inner"] = std::move(inner.normalized);
        try {
            if (name == "bounded") return {bounded_transform(std::move(inner.space)), std::move(out)};
            if (name == "log1p")
                return {monotone_image(std::move(inner.space), "log1p"), std::move(out)};
            if (name == "truncate") {
                Rat r = as_rat(get(cur, "r"));
                out["r"] = rat_json(r);
                std::optional<std::pair<Point, Point>> pair;
                if (auto p = maybe(cur, "plateau")) {
                    array_size(*p, 2);
                    pair = std::make_pair(parse_point(at(*p, 0)), parse_point(at(*p, 1)));
                    out["plateau"] = json::array(
                        {point_json(pair->first), point_json(pair->second)});
                }
                return {truncate_metric(std::move(inner.space), r, std::move(pair)),
                        std::move(out)};
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            fail(cur, e.what());
        }
        fail(get(cur, "transform"), "unknown transform '" + name + "'");
    }

    if (type == "labelset") {
        Cursor arr = get(cur, "labels");
        std::size_t n = array_size(arr, 1);
        std::vector<std::string> labels;
        json norm = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(as_string(at(arr, i)));
            norm.push_back(labels.back());
        }
        out["labels"] = std::move(norm);
        try {
            return {MetricSpace(std::make_shared<DiscreteSpace>(std::move(labels))),
                    std::move(out)};
        } catch (const std::invalid_argument& e) {
            fail(arr, e.what());
        }
    }

    if (type == "gallery") {
        std::string name = as_string(get(cur, "name"));
        out["name"] = name;
        try {
            return {gallery_space(name).space, std::move(out)};
        } catch (const UnknownName& e) {
            fail(get(cur, "name"), e.what());
        }
    }

    fail(get(cur, "type"), "unknown space type '" + type + "'");
}

std::string dump_doc(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Union families for the union-sleekness check.

UnionFamily union_family_of(const MetricSpace& space) {
    if (const auto* line = space.as<LineSubsetSpace>()) {
        if (!line->whole()) {
            std::vector<IntervalUnion> parts;
            for (const auto& comp : line->carrier().components())
                parts.push_back(IntervalUnion({comp}));
            return interval_union_family(std::move(parts));
        }
    }
    if (const auto* plane = space.as<PlaneRegionSpace>()) {
        if (plane->region().kind() == Region::Kind::Union)
            return region_union_family(plane->region().parts());
        return region_union_family({plane->region()});
    }
    throw InvalidParameter(
        "union-sleek needs an interval-union or plane-region space");
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::HoldsExact:
        case Verdict::HoldsAtBudget:
            return 0;
        case Verdict::Violated:
            return 1;
        case Verdict::Inconclusive:
            return 2;
    }
    return 2;
}

}  // namespace

SpaceHandle parse_space_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("$", e.what());
    }
    Cursor root{&doc, "$"};
    ParsedSpace parsed = parse_space(root, true);
    return {std::move(parsed.space), dump_doc(parsed.normalized)};
}

SpaceHandle load_space_selector(const std::string& selector) {
    const std::string prefix = "gallery:";
    if (selector.rfind(prefix, 0) == 0) {
        std::string name = selector.substr(prefix.size());
        GalleryEntry entry = gallery_space(name);
        json def;
        def["schema"] = 1;
        def["type"] = "gallery";
        def["name"] = name;
        return {entry.space, dump_doc(def)};
    }
    std::ifstream in(selector, std::ios::binary);
    if (!in) throw ParseError("$", "cannot read '" + selector + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_space_text(buf.str());
}

CheckRequest parse_check(const std::string& check, const std::optional<Rat>& param) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = check.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(check.substr(start));
            break;
        }
        parts.push_back(check.substr(start, colon - start));
        start = colon + 1;
    }

    auto numeric = [&](const std::size_t inline_idx, const std::string& what) -> Rat {
        if (parts.size() > inline_idx) {
            auto parsed = rat_parse(parts[inline_idx]);
            if (!parsed) throw ParseError("$.check", "malformed rational '" + parts[inline_idx] + "'");
            return *parsed;
        }
        if (param) return *param;
        throw ParseError("$.check", "check '" + check + "' needs a rational " + what);
    };

    CheckRequest req;
    const std::string& head = parts[0];
    if (head == "round" && parts.size() == 1) {
        req.kind = CheckRequest::Kind::Round;
        req.descriptor = "round";
        return req;
    }
    if (head == "sleek" && parts.size() == 1) {
        req.kind = CheckRequest::Kind::Sleek;
        req.descriptor = "sleek";
        return req;
    }
    if (head == "axioms" && parts.size() == 1) {
        req.kind = CheckRequest::Kind::Axioms;
        req.descriptor = "axioms";
        return req;
    }
    if (head == "union-sleek" && parts.size() == 1) {
        req.kind = CheckRequest::Kind::UnionSleek;
        req.descriptor = "union-sleek";
        return req;
    }
    if (head == "strict-convexity" && parts.size() == 1) {
        req.kind = CheckRequest::Kind::StrictConvexity;
        req.descriptor = "strict-convexity";
        return req;
    }
    if (head == "strict-ball-convexity" && parts.size() <= 2) {
        req.kind = CheckRequest::Kind::StrictBallConvexity;
        req.radius = numeric(1, "radius");
        req.descriptor = "strict-ball-convexity:" + rat_str(req.radius);
        return req;
    }
    if (head == "convexity" && parts.size() >= 2 && parts.size() <= 3) {
        req.kind = CheckRequest::Kind::Convexity;
        const std::string& sub = parts[1];
        if (sub == "metric" && parts.size() == 2) {
            req.convexity = ConvexityKind::metric();
            req.descriptor = "convexity:metric";
            return req;
        }
        if (sub == "external" && parts.size() == 2) {
            req.convexity = ConvexityKind::external();
            req.descriptor = "convexity:external";
            return req;
        }
        if (sub == "lambda") {
            Rat l = numeric(2, "parameter lambda");
            req.convexity = ConvexityKind::lambda(l);
            req.descriptor = "convexity:lambda:" + rat_str(l);
            return req;
        }
        if (sub == "strong-external") {
            Rat s = numeric(2, "parameter s");
            req.convexity = ConvexityKind::strong_external(s);
            req.descriptor = "convexity:strong-external:" + rat_str(s);
            return req;
        }
    }
    throw ParseError("$.check", "unknown check '" + check + "'");
}

RunResult run_check(const SpaceHandle& handle, const CheckRequest& request,
                    const ToleranceConfig& cfg) {
    CheckVerdict v;
    switch (request.kind) {
        case CheckRequest::Kind::Round:
            v = check_round(handle.space, cfg);
            break;
        case CheckRequest::Kind::Sleek:
            v = check_sleek(handle.space, cfg);
            break;
        case CheckRequest::Kind::Convexity:
            v = check_convexity(handle.space, *request.convexity, cfg);
            break;
        case CheckRequest::Kind::StrictConvexity:
            v = check_strict_convexity(handle.space, cfg);
            break;
        case CheckRequest::Kind::StrictBallConvexity:
            v = check_strict_ball_convexity(handle.space, BoundedReal(request.radius), cfg);
            break;
        case CheckRequest::Kind::Axioms: {
            // Unresolved comparisons sit at exact-equality configurations
            // (collinear triples and the like); they are not evidence of a
            // violation, so they stay in the notes without blocking the
            // verdict.
            AxiomReport rep = verify_metric_axioms(handle.space, cfg);
            v.verdict = rep.ok() ? Verdict::HoldsAtBudget : Verdict::Violated;
            v.effort.samples = rep.pairs_checked + rep.triples_checked;
            v.notes.push_back("pairs checked: " + std::to_string(rep.pairs_checked));
            v.notes.push_back("triples checked: " + std::to_string(rep.triples_checked));
            v.notes.push_back("violations: " + std::to_string(rep.violations));
            v.notes.push_back("unresolved: " + std::to_string(rep.unresolved));
            for (const auto& n : rep.notes) v.notes.push_back(n);
            break;
        }
        case CheckRequest::Kind::UnionSleek:
            v = check_union_sleekness(union_family_of(handle.space), cfg);
            break;
    }

    json doc;
    doc["schema"] = 1;
    doc["space"] = json::parse(handle.definition);
    doc["check"] = request.descriptor;
    doc["verdict"] = verdict_name(v.verdict);
    doc["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    doc["effort"] = {{"refinements", v.effort.refinements}, {"samples", v.effort.samples}};
    doc["notes"] = v.notes;
    doc["seed"] = cfg.seed;
    doc["config"] = {{"budget", cfg.budget},
                     {"precision_cap", cfg.precision_cap},
                     {"resolution", rat_str(cfg.grid_delta)},
                     {"sep", rat_str(cfg.sep_eps)}};
    doc["toolkit_version"] = toolkit_version;

    RunResult out;
    out.verdict = std::move(v);
    out.report_json = dump_doc(doc);
    out.exit_code = exit_code_for(out.verdict.verdict);
    return out;
}

bool replay_report(const std::string& report_text, std::vector<std::string>* diagnostics) {
    json doc;
    try {
        doc = json::parse(report_text);
    } catch (const json::parse_error& e) {
        throw ParseError("$", e.what());
    }
    Cursor root{&doc, "$"};
    Cursor schema = get(root, "schema");
    if (as_int(schema) != 1) fail(schema, "unsupported schema version");

    Cursor space_node = get(root, "space");
    ParsedSpace parsed = parse_space(space_node, true);
    SpaceHandle handle{std::move(parsed.space), dump_doc(parsed.normalized)};

    CheckRequest request = parse_check(as_string(get(root, "check")), std::nullopt);

    ToleranceConfig cfg;
    Cursor config = get(root, "config");
    cfg.budget = as_int(get(config, "budget"));
    cfg.precision_cap = static_cast<int>(as_int(get(config, "precision_cap")));
    cfg.grid_delta = as_rat(get(config, "resolution"));
    cfg.sep_eps = as_rat(get(config, "sep"));
    Cursor seed = get(root, "seed");
    if (!seed.ref().is_number_unsigned() && !seed.ref().is_number_integer())
        fail(seed, "expected an integer");
    cfg.seed = seed.ref().get<std::uint64_t>();

    RunResult rerun = run_check(handle, request, cfg);

    bool ok = true;
    auto note = [&](const std::string& line) {
        if (diagnostics) diagnostics->push_back(line);
        ok = false;
    };

    json regenerated = json::parse(rerun.report_json);
    json stored = doc;
    stored["toolkit_version"] = "";
    regenerated["toolkit_version"] = "";
    if (stored.dump(2) != regenerated.dump(2)) {
        note("regenerated report differs from the stored one");
        std::string old_verdict = doc.value("verdict", std::string());
        std::string new_verdict = verdict_name(rerun.verdict.verdict);
        if (old_verdict != new_verdict)
            note("verdict changed: stored '" + old_verdict + "', regenerated '" + new_verdict +
                 "'");
    }

    if (as_string(get(root, "verdict")) == verdict_name(Verdict::Violated)) {
        auto w = maybe(root, "witness");
        if (!w) {
            note("violated report carries no witness");
        } else {
            WitnessRecord rec = parse_witness(*w);
            if (!replay_witness(handle.space, rec, cfg))
                note("stored witness failed re-certification");
        }
    }
    return ok;
}

}  // namespace roundsleek
