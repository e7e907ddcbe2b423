#include "doctest.h"

#include "roundsleek/checkers.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/svg.hpp"

#include <string>

using namespace roundsleek;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TEST_CASE("rendering is deterministic and self-contained") {
    for (const GalleryEntry& entry : gallery_entries()) {
        if (entry.name == "euclid-3") continue;
        INFO("entry: ", entry.name);
        std::string a = render_svg(entry.space);
        std::string b = render_svg(entry.space);
        CHECK(a == b);
        CHECK(starts_with(a, "<?xml"));
        CHECK(ends_with(a, "</svg>\n"));
        CHECK(a.find("href") == std::string::npos);
        CHECK(a.find("http://example") == std::string::npos);
        // The only external identifier is the SVG namespace itself.
        std::size_t first = a.find("http");
        REQUIRE(first != std::string::npos);
        CHECK(a.compare(first, 26, "http://www.w3.org/2000/svg") == 0);
        CHECK(a.find("http", first + 1) == std::string::npos);
    }
}

TEST_CASE("three dimensions cannot be drawn") {
    GalleryEntry entry = gallery_space("euclid-3");
    CHECK_THROWS_AS(render_svg(entry.space), UnsupportedDimension);
}

TEST_CASE("region intersections clip instead of approximating") {
    GalleryEntry entry = gallery_space("quadrant");
    std::string svg = render_svg(entry.space);
    CHECK(svg.find("clipPath") != std::string::npos);
}

TEST_CASE("witness marks are drawn with a caption") {
    GalleryEntry entry = gallery_space("two-lines");
    ToleranceConfig cfg;
    cfg.budget = 200;
    CheckVerdict v = check_round(entry.space, cfg);
    REQUIRE(v.witness.has_value());

    SvgOverlay overlay;
    overlay.witness = v.witness;
    overlay.captions.push_back("check round: violated");
    std::string svg = render_svg(entry.space, overlay);
    CHECK(svg.find("witness") != std::string::npos);
    CHECK(svg.find("check round: violated") != std::string::npos);
    // Distinct marks for x and y.
    CHECK(svg.find("#cf222e") != std::string::npos);
    CHECK(svg.find("#8250df") != std::string::npos);
}

TEST_CASE("ball overlays carry their own caption") {
    GalleryEntry entry = gallery_space("closed-interval");
    SvgOverlay overlay;
    overlay.ball = BallQuery{Point::scalar(rat(0)), BoundedReal(rat(1, 2)), true};
    std::string svg = render_svg(entry.space, overlay);
    CHECK(svg.find("closed ball, radius") != std::string::npos);
}

TEST_CASE("the projection chart says it is a projection") {
    GalleryEntry entry = gallery_space("product-D");
    std::string svg = render_svg(entry.space);
    CHECK(svg.find("projection") != std::string::npos);
}

TEST_CASE("two-lines balls: strip for wide radii, dot at the pinch") {
    GalleryEntry entry = gallery_space("two-lines");
    Point center = Point::vec({rat(0), rat(0)});

    SvgOverlay pinch;
    pinch.ball = BallQuery{center, BoundedReal(rat(1)), true};
    std::string at_one = render_svg(entry.space, pinch);

    SvgOverlay wide;
    wide.ball = BallQuery{center, BoundedReal(rat(2)), true};
    std::string at_two = render_svg(entry.space, wide);

    CHECK(at_one != at_two);
    CHECK(starts_with(at_one, "<?xml"));
    CHECK(starts_with(at_two, "<?xml"));
}

TEST_CASE("number lines mark open endpoints hollow") {
    GalleryEntry entry = gallery_space("half-open-interval");
    std::string svg = render_svg(entry.space);
    // Hollow endpoint: white fill with the geometry-colored stroke.
    CHECK(svg.find("fill=\"#ffffff\" stroke=\"#1f6feb\"") != std::string::npos);
    CHECK(svg.find("fill=\"#1f6feb\"") != std::string::npos);
}

TEST_CASE("rationals-only carriers are drawn dashed with a caption") {
    GalleryEntry entry = gallery_space("rationals-sample");
    std::string svg = render_svg(entry.space);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("rational") != std::string::npos);
}
