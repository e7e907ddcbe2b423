#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roundsleek/errors.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/report.hpp"
#include "roundsleek/svg.hpp"

namespace {

constexpr int kUsageError = 64;

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kUsageError;
}

bool write_text(const std::string& path, const std::string& text, std::string* err) {
    if (path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        *err = "cannot write '" + path + "'";
        return false;
    }
    out << text;
    return out.good();
}

std::optional<roundsleek::Rat> parse_rat_flag(const std::string& text, const char* flag,
                                              std::string* err) {
    auto q = roundsleek::rat_parse(text);
    if (!q) *err = std::string("malformed rational for ") + flag + ": '" + text + "'";
    return q;
}

roundsleek::SvgOverlay overlay_for(const roundsleek::RunResult& result,
                                   const roundsleek::CheckRequest& request) {
    roundsleek::SvgOverlay overlay;
    overlay.captions.push_back("check " + request.descriptor + ": " +
                               roundsleek::verdict_name(result.verdict.verdict));
    if (result.verdict.witness) {
        const auto& w = *result.verdict.witness;
        overlay.witness = w;
        switch (w.kind) {
            case roundsleek::WitnessKind::MinOnOpenSet:
                overlay.ball = roundsleek::BallQuery{w.x, w.value, false};
                break;
            case roundsleek::WitnessKind::MaxOnOpenSet:
            case roundsleek::WitnessKind::SphereNotLimit:
                overlay.ball = roundsleek::BallQuery{w.x, w.value, true};
                break;
            default:
                break;
        }
    }
    return overlay;
}

void print_summary(const roundsleek::SpaceHandle& handle, const roundsleek::CheckRequest& request,
                   const roundsleek::RunResult& result) {
    std::cout << "check:      " << request.descriptor << "\n";
    std::cout << "space:      " << handle.space.describe() << "\n";
    std::cout << "verdict:    " << roundsleek::verdict_name(result.verdict.verdict) << "\n";
    if (result.verdict.witness) {
        const auto& w = *result.verdict.witness;
        std::cout << "witness:    " << roundsleek::witness_kind_name(w.kind) << "  x=" << w.x.str()
                  << "  y=" << w.y.str();
        if (w.z) std::cout << "  z=" << w.z->str();
        std::cout << "  value=" << w.value.str() << "  separation=" << w.separation.str();
        if (w.param) std::cout << "  param=" << roundsleek::rat_str(*w.param);
        std::cout << "\n";
        if (w.detail) std::cout << "detail:     " << *w.detail << "\n";
    }
    std::cout << "effort:     " << result.verdict.effort.samples << " samples, "
              << result.verdict.effort.refinements << " refinements\n";
    for (const auto& note : result.verdict.notes) std::cout << "note:       " << note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "roundsleek: build explicit metric spaces, probe their balls, and decide or search "
        "witnesses for roundness, sleekness, and convexity properties"};
    app.get_formatter()->column_width(34);

    std::string space_arg, check_arg = "round", param_arg, json_arg, svg_arg, replay_arg;
    std::string resolution_arg = "1/64", sep_arg = "1/1000";
    long budget = 500;
    int precision_cap = 128;
    std::uint64_t seed = 1;
    bool list_gallery = false;

    app.add_option("--space", space_arg,
                   "space to load: a JSON definition file, or gallery:<name>");
    app.add_option("--check", check_arg,
                   "round | sleek | axioms | union-sleek | strict-convexity | "
                   "strict-ball-convexity:<r> | convexity:<metric|external|lambda:<l>|"
                   "strong-external:<s>>");
    app.add_option("--param", param_arg, "rational parameter for checks that take one");
    app.add_option("--budget", budget, "sampled pairs / probes per check")->check(CLI::PositiveNumber);
    app.add_option("--resolution", resolution_arg, "witness ladder resolution (rational)");
    app.add_option("--sep", sep_arg, "max enclosure width accepted for sphere tests (rational)");
    app.add_option("--precision-cap", precision_cap, "refinement cutoff in bits")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "sampling seed");
    app.add_option("--json", json_arg, "write the report document here ('-' for stdout)");
    app.add_option("--svg", svg_arg, "render the space (plus any witness) as SVG here");
    app.add_option("--replay", replay_arg, "re-certify a stored report instead of running a check");
    app.add_flag("--list-gallery", list_gallery, "print the gallery space names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (list_gallery) {
            for (const auto& name : roundsleek::gallery_names()) {
                roundsleek::GalleryEntry entry = roundsleek::gallery_space(name);
                std::cout << name << "\t" << "round=" << expected_name(entry.expected_round)
                          << "\tsleek=" << expected_name(entry.expected_sleek) << "\n";
            }
            return 0;
        }

        if (!replay_arg.empty()) {
            std::ifstream in(replay_arg, std::ios::binary);
            if (!in) return fail_usage("cannot read '" + replay_arg + "'");
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            std::vector<std::string> diagnostics;
            bool ok = roundsleek::replay_report(text, &diagnostics);
            for (const auto& line : diagnostics) std::cout << "replay: " << line << "\n";
            std::cout << (ok ? "replay: clean\n" : "replay: MISMATCH\n");
            return ok ? 0 : 1;
        }

        if (space_arg.empty())
            return fail_usage("--space is required (or use --replay / --list-gallery)");

        std::string err;
        roundsleek::ToleranceConfig cfg;
        cfg.budget = budget;
        cfg.precision_cap = precision_cap;
        cfg.seed = seed;
        if (auto q = parse_rat_flag(resolution_arg, "--resolution", &err))
            cfg.grid_delta = *q;
        else
            return fail_usage(err);
        if (auto q = parse_rat_flag(sep_arg, "--sep", &err))
            cfg.sep_eps = *q;
        else
            return fail_usage(err);
        if (cfg.grid_delta <= 0 || cfg.sep_eps <= 0)
            return fail_usage("--resolution and --sep must be positive");

        std::optional<roundsleek::Rat> param;
        if (!param_arg.empty()) {
            if (auto q = parse_rat_flag(param_arg, "--param", &err))
                param = *q;
            else
                return fail_usage(err);
        }

        roundsleek::SpaceHandle handle = roundsleek::load_space_selector(space_arg);
        roundsleek::CheckRequest request = roundsleek::parse_check(check_arg, param);
        roundsleek::RunResult result = roundsleek::run_check(handle, request, cfg);

        print_summary(handle, request, result);

        if (!json_arg.empty()) {
            if (!write_text(json_arg, result.report_json, &err)) return fail_usage(err);
            if (json_arg != "-") std::cout << "report:     " << json_arg << "\n";
        }
        if (!svg_arg.empty()) {
            std::string svg;
            try {
                svg = roundsleek::render_svg(handle.space, overlay_for(result, request));
            } catch (const roundsleek::UnsupportedDimension& e) {
                return fail_usage(std::string("cannot render: ") + e.what());
            }
            if (!write_text(svg_arg, svg, &err)) return fail_usage(err);
            if (svg_arg != "-") std::cout << "svg:        " << svg_arg << "\n";
        }
        return result.exit_code;
    } catch (const roundsleek::ParseError& e) {
        return fail_usage(e.what());
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what());
    }
}
