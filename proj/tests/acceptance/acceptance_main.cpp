// Acceptance gate: every criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "roundsleek/checkers.hpp"
#include "roundsleek/constructions.hpp"
#include "roundsleek/gallery.hpp"
#include "roundsleek/report.hpp"
#include "support/grid_oracle.hpp"

#include "json.hpp"

using namespace roundsleek;
using nlohmann::json;

namespace {

Point sc(const Rat& v) { return Point::scalar(v); }

ToleranceConfig cfg_budget(long budget, std::uint64_t seed = 1) {
    ToleranceConfig cfg;
    cfg.budget = budget;
    cfg.seed = seed;
    return cfg;
}

bool holds(Verdict v) { return v == Verdict::HoldsExact || v == Verdict::HoldsAtBudget; }

struct Gate {
    int failures = 0;
    int index = 0;

    void criterion(const std::string& description, const std::function<bool(std::string&)>& body) {
        ++index;
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", index,
                    description.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                    detail.c_str());
        if (!ok) ++failures;
    }
};

long long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

// Shared draw for criteria 2 and 3 so both see the same carriers.
std::vector<IntervalUnion> random_carriers(int count) {
    Rng rng(424242, "acceptance-carriers");
    std::vector<IntervalUnion> out;
    while (static_cast<int>(out.size()) < count) {
        IntervalUnion u = random_union(rng, 4, 12);
        if (!u.empty()) out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

int main() {
    Gate gate;

    gate.criterion(
        "catalog verdicts reproduce across five seeds, counterexamples replay, under 60s",
        [](std::string& detail) {
            auto start = std::chrono::steady_clock::now();
            int entries_with_claims = 0;
            for (const GalleryEntry& entry : gallery_entries()) {
                bool claimed = false;
                for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                    ToleranceConfig cfg = cfg_budget(500, seed);
                    if (entry.expected_round != Expected::Unverified) {
                        claimed = true;
                        CheckVerdict v = check_round(entry.space, cfg);
                        if (entry.expected_round == Expected::True && !holds(v.verdict)) {
                            detail = entry.name + " round: expected holds, got " +
                                     verdict_name(v.verdict) + " at seed " + std::to_string(seed);
                            return false;
                        }
                        if (entry.expected_round == Expected::False) {
                            if (v.verdict != Verdict::Violated || !v.witness ||
                                !replay_witness(entry.space, *v.witness, cfg)) {
                                detail = entry.name + " round: expected a replaying violation at seed " +
                                         std::to_string(seed);
                                return false;
                            }
                        }
                    }
                    if (entry.expected_sleek != Expected::Unverified) {
                        claimed = true;
                        CheckVerdict v = check_sleek(entry.space, cfg);
                        if (entry.expected_sleek == Expected::True && !holds(v.verdict)) {
                            detail = entry.name + " sleek: expected holds, got " +
                                     verdict_name(v.verdict) + " at seed " + std::to_string(seed);
                            return false;
                        }
                        if (entry.expected_sleek == Expected::False) {
                            if (v.verdict != Verdict::Violated || !v.witness ||
                                !replay_witness(entry.space, *v.witness, cfg)) {
                                detail = entry.name + " sleek: expected a replaying violation at seed " +
                                         std::to_string(seed);
                                return false;
                            }
                        }
                    }
                }
                if (claimed) ++entries_with_claims;
            }
            if (entries_with_claims < 12) {
                detail = "only " + std::to_string(entries_with_claims) + " entries carry claims";
                return false;
            }
            if (elapsed_ms(start) >= 60000) {
                detail = "over the 60s budget";
                return false;
            }
            detail = std::to_string(entries_with_claims) + " entries";
            return true;
        });

    gate.criterion(
        "line-carrier deciders match the brute-force grid oracle on 1000 random carriers, under 120s",
        [](std::string& detail) {
            auto start = std::chrono::steady_clock::now();
            for (const IntervalUnion& u : random_carriers(1000)) {
                testing::OracleOutcome oracle = testing::grid_oracle(u);
                if (decide_round_interval_union(u) != oracle.round ||
                    decide_sleek_interval_union(u) != oracle.sleek) {
                    detail = "disagreement on " + u.str();
                    return false;
                }
            }
            if (elapsed_ms(start) >= 120000) {
                detail = "over the 120s budget";
                return false;
            }
            return true;
        });

    gate.criterion("sleek implies round on the same 1000 carriers", [](std::string& detail) {
        int sleek_seen = 0;
        for (const IntervalUnion& u : random_carriers(1000)) {
            bool round = decide_round_interval_union(u);
            bool sleek = decide_sleek_interval_union(u);
            if (sleek && !round) {
                detail = "decider implication fails on " + u.str();
                return false;
            }
            testing::OracleOutcome oracle = testing::grid_oracle(u);
            if (oracle.sleek && !oracle.round) {
                detail = "oracle implication fails on " + u.str();
                return false;
            }
            if (sleek) ++sleek_seen;
        }
        if (sleek_seen < 20) {
            detail = "only " + std::to_string(sleek_seen) + " sleek draws";
            return false;
        }
        detail = std::to_string(sleek_seen) + " sleek draws";
        return true;
    });

    gate.criterion(
        "singleton, nondegenerate-closed, and separated families match the expected classes",
        [](std::string& detail) {
            Rng rng(515151, "acceptance-families");
            for (int i = 0; i < 100; ++i) {
                IntervalUnion single = IntervalUnion::point(rng.next_rat_in(rat(-3), rat(3), 14));
                if (!decide_round_interval_union(single) || !decide_sleek_interval_union(single)) {
                    detail = "singleton class failed";
                    return false;
                }
                testing::OracleOutcome os = testing::grid_oracle(single);
                if (!os.round || !os.sleek) {
                    detail = "singleton oracle disagrees";
                    return false;
                }

                Rat a = rng.next_rat_in(rat(-3), rat(0), 12);
                Rat b = a + rat(1, 8) + rng.next_rat_in(rat(0), rat(2), 12);
                IntervalUnion closed = IntervalUnion::closed(a, b);
                testing::OracleOutcome oc = testing::grid_oracle(closed);
                if (!decide_round_interval_union(closed) || decide_sleek_interval_union(closed) ||
                    !oc.round || oc.sleek) {
                    detail = "closed-interval class failed on " + closed.str();
                    return false;
                }

                Rat c = b + rat(1, 4) + rng.next_rat_in(rat(0), rat(1), 12);
                Rat d = c + rat(1, 8) + rng.next_rat_in(rat(0), rat(1), 12);
                IntervalUnion split({IntervalUnion::make(a, b, false, false),
                                     IntervalUnion::make(c, d, false, false)});
                testing::OracleOutcome op = testing::grid_oracle(split);
                if (decide_round_interval_union(split) || decide_sleek_interval_union(split) ||
                    op.round || op.sleek) {
                    detail = "separated class failed on " + split.str();
                    return false;
                }
            }
            return true;
        });

    gate.criterion(
        "truncation kills both properties with replaying witnesses; the bounded remetrization "
        "preserves order on 10000 triples",
        [](std::string& detail) {
            Rng rng(626262, "acceptance-truncate");
            ToleranceConfig cfg = cfg_budget(500);
            for (int i = 0; i < 20; ++i) {
                Rat L = rat(1) + rng.next_rat_in(rat(0), rat(3), 10);
                Rat r = rng.next_rat_in(rat(1, 4), L - rat(1, 8), 10);
                MetricSpace t = truncate_metric(
                    LineSubsetSpace::make(IntervalUnion::closed(rat(0), L)), r,
                    std::make_pair(sc(rat(0)), sc(L)));
                CheckVerdict round = check_round(t, cfg);
                CheckVerdict sleek = check_sleek(t, cfg);
                if (round.verdict != Verdict::Violated || !round.witness ||
                    !replay_witness(t, *round.witness, cfg)) {
                    detail = "round not violated for L=" + L.get_str() + " r=" + r.get_str();
                    return false;
                }
                if (sleek.verdict != Verdict::Violated || !sleek.witness ||
                    !replay_witness(t, *sleek.witness, cfg)) {
                    detail = "sleek not violated for L=" + L.get_str() + " r=" + r.get_str();
                    return false;
                }
            }
            auto phi = [](const Rat& t) -> Rat { return t / (1 + t); };
            for (int i = 0; i < 10000; ++i) {
                Rat d1 = rng.next_rat_in(rat(0), rat(5), 20);
                Rat d2 = rng.next_rat_in(rat(0), rat(5), 20);
                bool order = (d1 < d2) == (phi(d1) < phi(d2)) && (d1 == d2) == (phi(d1) == phi(d2));
                if (!order || phi(d1 + d2) > phi(d1) + phi(d2) || phi(d1) >= 1) {
                    detail = "remetrization invariant failed at d1=" + d1.get_str() +
                             " d2=" + d2.get_str();
                    return false;
                }
            }
            return true;
        });

    gate.criterion(
        "the weighted countable product stays sleek over five seeds while its first factor is "
        "not round; a product of sleek factors is never flagged",
        [](std::string& detail) {
            GalleryEntry entry = gallery_space("product-D");
            const auto* impl = entry.space.as<ProductDSpace>();
            if (!impl) {
                detail = "product space missing";
                return false;
            }
            CheckVerdict factor = check_round(impl->factor(1), cfg_budget(300));
            if (factor.verdict != Verdict::Violated) {
                detail = "two-point factor unexpectedly round";
                return false;
            }
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                CheckVerdict v = check_sleek(entry.space, cfg_budget(500, seed));
                if (v.verdict != Verdict::HoldsAtBudget) {
                    detail = "product sleekness " + verdict_name(v.verdict) + " at seed " +
                             std::to_string(seed);
                    return false;
                }
            }
            MetricSpace open1 = LineSubsetSpace::make(IntervalUnion::open(rat(0), rat(1)));
            MetricSpace prod = product_euclid({open1, open1});
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                if (check_sleek(prod, cfg_budget(300, seed)).verdict == Verdict::Violated ||
                    check_round(prod, cfg_budget(300, seed)).verdict == Verdict::Violated) {
                    detail = "open square flagged at seed " + std::to_string(seed);
                    return false;
                }
            }
            return true;
        });

    gate.criterion(
        "closed-ball oracles agree with the metrics on 1000 probes each, including the pinch radii",
        [](std::string& detail) {
            MetricSpace xprime = gallery_space("two-lines").space;
            Rat a = rat(1, 3);
            Point xc = Point::vec({a, rat(0)});
            Rng rng(737373, "acceptance-balls");
            const Rat xr[] = {rat(1), rat(3, 2), rat(1, 2), rat(2)};
            for (const Rat& r : xr) {
                XPrimeBall ball = xprime_ball_oracle(a, 0, BoundedReal(r));
                for (int i = 0; i < 250; ++i) {
                    Rat t = rng.next_rat_in(rat(-4), rat(4), 20);
                    int line = rng.next_bool() ? 1 : 0;
                    Point p = Point::vec({t, rat(line)});
                    Ordering ord = compare(xprime.distance(xc, p), r);
                    if (ord == Ordering::Unknown || ball.member(p) != (ord != Ordering::Greater)) {
                        detail = "two-lines ball disagrees at r=" + r.get_str();
                        return false;
                    }
                }
                if (r == rat(1) &&
                    (!ball.other_is_point || !ball.member(Point::vec({a, rat(1)})))) {
                    detail = "pinch radius not a single lifted point";
                    return false;
                }
            }

            MetricSpace pd = gallery_space("product-D").space;
            const auto* impl = pd.as<ProductDSpace>();
            Point pc = impl->make_point({sc(rat(0)), sc(rat(1, 2))});
            const Rat pr[] = {rat(1, 2), rat(1, 4), rat(9, 16), rat(5, 4)};
            for (const Rat& r : pr) {
                ProductDBall ball = productD_ball_oracle(pc, r);
                for (int i = 0; i < 250; ++i) {
                    long len = rng.next_in(0, 3);
                    std::vector<Point> prefix;
                    for (long k = 1; k <= len; ++k)
                        prefix.push_back(k == 1 ? sc(rat(rng.next_bool() ? 1 : 0))
                                                : sc(rng.next_rat_in(rat(-2), rat(2), 12)));
                    Point p = impl->make_point(std::move(prefix));
                    Ordering ord = compare(pd.distance(pc, p), r);
                    if (ord == Ordering::Unknown || ball.member(p) != (ord != Ordering::Greater)) {
                        detail = "product ball disagrees at r=" + r.get_str();
                        return false;
                    }
                }
            }
            ProductDBall pinch = productD_ball_oracle(impl->make_point({}), rat(1, 2));
            if (!pinch.flip_is_point || !pinch.member(impl->make_point({sc(rat(1))}))) {
                detail = "product pinch radius not the single head flip";
                return false;
            }
            return true;
        });

    gate.criterion(
        "strict convexity: violated on the truncated line, holds at budget on the plane and "
        "the bounded line",
        [](std::string& detail) {
            ToleranceConfig cfg = cfg_budget(500);
            MetricSpace flat = truncate_metric(LineSubsetSpace::whole_line(), rat(1));
            CheckVerdict broken = check_strict_convexity(flat, cfg);
            if (broken.verdict != Verdict::Violated || !broken.witness ||
                !replay_witness(flat, *broken.witness, cfg)) {
                detail = "truncated line not flagged";
                return false;
            }
            CheckVerdict plane = check_strict_convexity(gallery_space("euclid-2").space, cfg);
            if (plane.verdict != Verdict::HoldsAtBudget) {
                detail = "plane: " + verdict_name(plane.verdict);
                return false;
            }
            CheckVerdict bounded =
                check_strict_convexity(bounded_transform(LineSubsetSpace::whole_line()), cfg);
            if (bounded.verdict != Verdict::HoldsAtBudget) {
                detail = "bounded line: " + verdict_name(bounded.verdict);
                return false;
            }
            return true;
        });

    gate.criterion(
        "a report batch regenerates byte-identically and every report replays clean",
        [](std::string& detail) {
            struct Job {
                const char* selector;
                const char* check;
            };
            const Job jobs[] = {
                {"gallery:closed-interval", "round"},
                {"gallery:closed-interval", "sleek"},
                {"gallery:gap-union", "round"},
                {"gallery:gap-union", "union-sleek"},
                {"gallery:quadrant", "sleek"},
                {"gallery:circle", "sleek"},
                {"gallery:two-lines", "round"},
                {"gallery:product-D", "sleek"},
                {"gallery:euclid-2", "convexity:lambda:1/2"},
                {"gallery:gap-union", "convexity:metric"},
                {"gallery:real-line", "convexity:strong-external:2"},
                {"gallery:euclid-2", "axioms"},
            };
            for (const Job& job : jobs) {
                SpaceHandle handle = load_space_selector(job.selector);
                CheckRequest req = parse_check(job.check, std::nullopt);
                RunResult first = run_check(handle, req, cfg_budget(500));
                RunResult second = run_check(handle, req, cfg_budget(500));
                if (first.report_json != second.report_json) {
                    detail = std::string(job.selector) + " " + job.check + ": not byte-stable";
                    return false;
                }
                std::vector<std::string> diags;
                if (!replay_report(first.report_json, &diags)) {
                    detail = std::string(job.selector) + " " + job.check + ": replay failed" +
                             (diags.empty() ? "" : " -- " + diags.front());
                    return false;
                }
            }
            return true;
        });

    if (gate.failures == 0) std::printf("acceptance: all %d criteria passed\n", gate.index);
    else std::printf("acceptance: %d of %d criteria failed\n", gate.failures, gate.index);
    return gate.failures;
}
