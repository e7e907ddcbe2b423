#include "roundsleek/axioms.hpp"

#include <algorithm>

namespace roundsleek {

namespace {

void note(AxiomReport& rep, const std::string& text) {
    if (rep.notes.size() < 8) rep.notes.push_back(text);
}

}  // namespace

AxiomReport verify_metric_axioms(const MetricSpace& space, const ToleranceConfig& cfg) {
    AxiomReport rep;
    Rng rng(cfg.seed, "axioms");
    std::vector<Point> pts = space.impl().anchors();
    long want = std::clamp(cfg.budget / 40, 4L, 12L);
    for (const auto& p : space.impl().sample_global(rng, static_cast<int>(want))) {
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        if (static_cast<long>(pts.size()) >= want + 8) break;
    }
    int cap = cfg.precision_cap;

    for (size_t i = 0; i < pts.size(); ++i) {
        switch (compare(space.distance(pts[i], pts[i]), Rat(0), cap)) {
            case Ordering::Equal:
                break;
            case Ordering::Unknown:
                ++rep.unresolved;
                break;
            default:
                ++rep.violations;
                note(rep, "d(x,x) != 0 at x = " + pts[i].str());
        }
    }

    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            ++rep.pairs_checked;
            LazyReal dij = space.distance(pts[i], pts[j]);
            switch (compare(dij, Rat(0), cap)) {
                case Ordering::Greater:
                    break;
                case Ordering::Unknown:
                    ++rep.unresolved;
                    break;
                default:
                    ++rep.violations;
                    note(rep, "distinct points at distance 0: " + pts[i].str() + ", " +
                                  pts[j].str());
            }
            switch (compare(dij, space.distance(pts[j], pts[i]), cap)) {
                case Ordering::Equal:
                    break;
                case Ordering::Unknown:
                    ++rep.unresolved;
                    break;
                default:
                    ++rep.violations;
                    note(rep, "asymmetric pair: " + pts[i].str() + ", " + pts[j].str());
            }
        }

    long triple_budget = std::max(cfg.budget, 16L);
    long full = static_cast<long>(pts.size()) * pts.size() * pts.size();
    auto check_triple = [&](const Point& x, const Point& y, const Point& z) {
        ++rep.triples_checked;
        LazyReal lhs = space.distance(x, z);
        LazyReal rhs = space.distance(x, y) + space.distance(y, z);
        switch (compare(lhs, rhs, cap)) {
            case Ordering::Greater:
                ++rep.violations;
                note(rep, "triangle inequality fails through " + y.str() + " for " + x.str() +
                              ", " + z.str());
                break;
            case Ordering::Unknown:
                ++rep.unresolved;
                break;
            default:
                break;
        }
    };
    if (full <= triple_budget) {
        for (const auto& x : pts)
            for (const auto& y : pts)
                for (const auto& z : pts) check_triple(x, y, z);
    } else {
        long n = static_cast<long>(pts.size());
        for (long t = 0; t < triple_budget; ++t)
            check_triple(pts[rng.next_in(0, n - 1)], pts[rng.next_in(0, n - 1)],
                         pts[rng.next_in(0, n - 1)]);
    }
    return rep;
}

}  // namespace roundsleek
