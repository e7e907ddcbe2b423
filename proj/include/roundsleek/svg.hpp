#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roundsleek/checkers.hpp"
#include "roundsleek/space.hpp"
#include "roundsleek/topology.hpp"

namespace roundsleek {

struct SvgOverlay {
    std::optional<BallQuery> ball;
    std::optional<WitnessRecord> witness;
    std::vector<std::string> captions;  // extra caption lines, drawn after the default ones
};

// A deterministic, self-contained SVG 1.1 document: same space and overlay,
// same bytes. Line subsets draw on a number line; plane regions, products of
// two line carriers, and the two-line space draw in the plane; the weighted
// countable product draws its first two coordinates with a caption saying so.
// Throws UnsupportedDimension when the space has no such drawing.
std::string render_svg(const MetricSpace& space, const SvgOverlay& overlay = {});

}  // namespace roundsleek
