#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roundsleek/checkers.hpp"
#include "roundsleek/space.hpp"

namespace roundsleek {

extern const char* const toolkit_version;

// A space together with the canonical JSON text that rebuilds it. The text is
// normalized: parsing it again yields the same space and the same text.
struct SpaceHandle {
    MetricSpace space;
    std::string definition;
};

// Accepts "gallery:<name>" or a path to a JSON definition file.
SpaceHandle load_space_selector(const std::string& selector);
SpaceHandle parse_space_text(const std::string& text);

struct CheckRequest {
    enum class Kind {
        Round,
        Sleek,
        Convexity,
        StrictConvexity,
        StrictBallConvexity,
        Axioms,
        UnionSleek,
    };
    Kind kind = Kind::Round;
    std::optional<ConvexityKind> convexity;  // Convexity only
    Rat radius;                              // StrictBallConvexity only
    std::string descriptor;                  // canonical form, parameters embedded
};

// `check` as given on the command line ("round", "convexity:lambda:1/2", ...);
// `param` supplies the numeric argument when the descriptor omits it.
CheckRequest parse_check(const std::string& check, const std::optional<Rat>& param);

struct RunResult {
    CheckVerdict verdict;
    std::string report_json;  // canonical document text, trailing newline
    int exit_code = 0;        // 0 holds, 1 violated, 2 inconclusive
};

RunResult run_check(const SpaceHandle& handle, const CheckRequest& request,
                    const ToleranceConfig& cfg);

// Parse a stored report, rebuild the space and configuration, rerun the check,
// and compare the regenerated document with the stored one (toolkit_version
// aside). A Violated report additionally re-certifies its witness against the
// rebuilt space. Structural problems in the stored text throw ParseError; a
// clean rerun that disagrees returns false with one diagnostic line per
// discrepancy.
bool replay_report(const std::string& report_text,
                   std::vector<std::string>* diagnostics = nullptr);

}  // namespace roundsleek
