#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roundsleek/gallery.hpp"
#include "roundsleek/report.hpp"
#include "roundsleek/svg.hpp"

namespace py = pybind11;

namespace {

roundsleek::SpaceHandle load_space(const std::string& space) {
    if (!space.empty() && space[0] == '{') return roundsleek::parse_space_text(space);
    return roundsleek::load_space_selector(space);
}

roundsleek::ToleranceConfig make_config(long budget, const std::string& resolution,
                                        const std::string& sep, int precision_cap,
                                        std::uint64_t seed) {
    roundsleek::ToleranceConfig cfg;
    cfg.budget = budget;
    cfg.precision_cap = precision_cap;
    cfg.seed = seed;
    auto res = roundsleek::rat_parse(resolution);
    auto sp = roundsleek::rat_parse(sep);
    if (!res || !sp || *res <= 0 || *sp <= 0)
        throw std::invalid_argument("resolution and sep must be positive rationals");
    cfg.grid_delta = *res;
    cfg.sep_eps = *sp;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Balls, roundness, and sleekness in explicit metric spaces: run checks, "
        "replay reports, render spaces.";

    m.attr("__version__") = roundsleek::toolkit_version;

    m.def("gallery_names", &roundsleek::gallery_names,
          "Names of the built-in example spaces, usable as 'gallery:<name>'.");

    m.def(
        "run_check",
        [](const std::string& space, const std::string& check, const std::string& param,
           long budget, const std::string& resolution, const std::string& sep, int precision_cap,
           std::uint64_t seed) {
            std::optional<roundsleek::Rat> p;
            if (!param.empty()) {
                p = roundsleek::rat_parse(param);
                if (!p) throw std::invalid_argument("malformed rational param '" + param + "'");
            }
            roundsleek::SpaceHandle handle = load_space(space);
            roundsleek::CheckRequest request = roundsleek::parse_check(check, p);
            roundsleek::RunResult result =
                roundsleek::run_check(handle, request, make_config(budget, resolution, sep,
                                                                   precision_cap, seed));
            return py::make_tuple(result.report_json, result.exit_code);
        },
        py::arg("space"), py::arg("check"), py::arg("param") = "", py::arg("budget") = 500,
        py::arg("resolution") = "1/64", py::arg("sep") = "1/1000",
        py::arg("precision_cap") = 128, py::arg("seed") = 1,
        "Run a check against a space given as 'gallery:<name>', a definition file path, or "
        "inline definition JSON. Returns (report_json, exit_code).");

    m.def(
        "replay",
        [](const std::string& report_text) {
            std::vector<std::string> diagnostics;
            bool ok = roundsleek::replay_report(report_text, &diagnostics);
            return py::make_tuple(ok, diagnostics);
        },
        py::arg("report_json"),
        "Re-run a stored report and re-certify its witness. Returns (ok, diagnostics).");

    m.def(
        "render_svg",
        [](const std::string& space) { return roundsleek::render_svg(load_space(space).space); },
        py::arg("space"), "Deterministic SVG drawing of a space.");

    m.def(
        "normalize_space",
        [](const std::string& space) { return load_space(space).definition; },
        py::arg("space"), "Canonical definition JSON for a space selector or definition text.");
}
