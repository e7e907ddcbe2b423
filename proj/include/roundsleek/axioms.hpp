#pragma once

#include <string>
#include <vector>

#include "roundsleek/space.hpp"

namespace roundsleek {

// Outcome of sampling the metric axioms. Violations are certified (a strict
// comparison was decided the wrong way); unresolved counts comparisons the
// precision cap could not settle, which is expected at exact-equality
// configurations such as collinear triples.
struct AxiomReport {
    long pairs_checked = 0;
    long triples_checked = 0;
    long violations = 0;
    long unresolved = 0;
    std::vector<std::string> notes;

    bool ok() const { return violations == 0; }
};

AxiomReport verify_metric_axioms(const MetricSpace& space, const ToleranceConfig& cfg);

}  // namespace roundsleek
