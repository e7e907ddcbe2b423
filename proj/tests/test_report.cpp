#include "doctest.h"

#include "roundsleek/errors.hpp"
#include "roundsleek/report.hpp"

#include "json.hpp"

#include <string>
#include <vector>

using namespace roundsleek;
using nlohmann::json;

namespace {

ToleranceConfig cfg_budget(long budget) {
    ToleranceConfig cfg;
    cfg.budget = budget;
    return cfg;
}

RunResult run(const std::string& selector, const std::string& check, long budget = 200) {
    SpaceHandle handle = load_space_selector(selector);
    CheckRequest req = parse_check(check, std::nullopt);
    return run_check(handle, req, cfg_budget(budget));
}

}  // namespace

TEST_CASE("definition normalization is idempotent per space type") {
    const char* defs[] = {
        R"({"schema":1,"type":"interval_union","intervals":[{"lo":"2","hi":3},{"lo":"0","hi":"1","hi_open":true}]})",
        R"({"schema":1,"type":"interval_union","rationals_only":true,"intervals":[{"lo":"0","hi":"1"}]})",
        R"({"schema":1,"type":"region2d","region":{"kind":"union","parts":[{"kind":"disk","center":["0","0"],"r":"1","closed":true},{"kind":"segment","p":["2","0"],"q":["3","0"],"include_p":false,"include_q":true}]}})",
        R"({"schema":1,"type":"region2d","region":{"kind":"intersection","parts":[{"kind":"circle","center":["0","0"],"r":"1"},{"kind":"halfplane","a":"-1","b":"0","c":"0","closed":true}]}})",
        R"({"schema":1,"type":"region2d","region":{"kind":"box","x1":"0","x2":"2","y1":"-1","y2":"1"}})",
        R"({"schema":1,"type":"product_euclid","factors":[{"type":"labelset","labels":["a","b"]},{"type":"interval_union","intervals":[{"lo":"0","hi":"1"}]}]})",
        R"({"schema":1,"type":"product_D","head":[{"type":"interval_union","intervals":[{"lo":"0","hi":"0"},{"lo":"1","hi":"1"}]}],"tail":{"type":"transform","transform":"bounded","inner":{"type":"interval_union","intervals":[{"lo":"-8","hi":"8"}]}}})",
        R"({"schema":1,"type":"transform","transform":"truncate","r":"1","inner":{"type":"interval_union","intervals":[{"lo":"-4","hi":"4"}]},"plateau":[{"kind":"scalar","value":"-4"},{"kind":"scalar","value":"4"}]})",
        R"({"schema":1,"type":"transform","transform":"log1p","inner":{"type":"interval_union","intervals":[{"lo":"0","hi":"1","lo_open":true,"hi_open":true}]}})",
        R"({"schema":1,"type":"labelset","labels":["x","y","z"]})",
        R"({"schema":1,"type":"gallery","name":"gap-union"})",
    };
    for (const char* def : defs) {
        INFO("definition: ", def);
        SpaceHandle first = parse_space_text(def);
        SpaceHandle second = parse_space_text(first.definition);
        CHECK(first.definition == second.definition);
        CHECK(first.space.valid());
    }
}

TEST_CASE("reports are byte-stable across runs") {
    RunResult a = run("gallery:gap-union", "round");
    RunResult b = run("gallery:gap-union", "round");
    CHECK(a.report_json == b.report_json);
    CHECK(a.exit_code == 1);
}

TEST_CASE("report document carries the full reproduction context") {
    RunResult r = run("gallery:closed-interval", "sleek");
    json doc = json::parse(r.report_json);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("verdict") == "violated");
    CHECK(doc.at("check") == "sleek");
    CHECK(doc.at("toolkit_version") == toolkit_version);
    CHECK(doc.at("space").at("type") == "gallery");
    CHECK(doc.at("config").contains("budget"));
    CHECK(doc.at("config").contains("resolution"));
    CHECK(doc.at("config").contains("sep"));
    CHECK(doc.at("config").contains("precision_cap"));
    CHECK(doc.contains("seed"));
    CHECK(doc.at("effort").contains("samples"));
    REQUIRE(doc.at("witness").is_object());
    CHECK(doc.at("witness").at("kind") == "sphere-not-limit");
    // Canonical form: two-space indent, trailing newline, sorted keys.
    CHECK(r.report_json == doc.dump(2) + "\n");
}

TEST_CASE("exit codes follow the verdict") {
    CHECK(run("gallery:closed-interval", "round").exit_code == 0);
    CHECK(run("gallery:gap-union", "round").exit_code == 1);

    SpaceHandle handle = load_space_selector("gallery:two-point");
    CheckRequest req = parse_check("convexity:strong-external:1/2", std::nullopt);
    RunResult inconclusive = run_check(handle, req, cfg_budget(100));
    CHECK(inconclusive.verdict.verdict == Verdict::Inconclusive);
    CHECK(inconclusive.exit_code == 2);
}

TEST_CASE("Violated reports replay cleanly for every reachable witness kind") {
    struct Case {
        const char* selector;
        const char* check;
        const char* kind;
    };
    const Case cases[] = {
        {"gallery:gap-union", "round", "min-on-open-set"},
        {"gallery:circle", "sleek", "max-on-open-set"},
        {"gallery:closed-interval", "sleek", "sphere-not-limit"},
        {"gallery:gap-union", "convexity:metric", "convexity-gap"},
    };
    for (const Case& c : cases) {
        INFO("case: ", c.selector, " ", c.check);
        RunResult r = run(c.selector, c.check);
        CHECK(r.exit_code == 1);
        json doc = json::parse(r.report_json);
        REQUIRE(doc.at("witness").is_object());
        CHECK(doc.at("witness").at("kind") == c.kind);

        std::vector<std::string> diags;
        CHECK(replay_report(r.report_json, &diags));
        CHECK(diags.empty());
    }
}

TEST_CASE("holds and axioms reports replay too") {
    for (const char* check : {"round", "axioms"}) {
        RunResult r = run("gallery:euclid-2", check);
        CHECK(r.exit_code == 0);
        CHECK(replay_report(r.report_json));
    }
}

TEST_CASE("replay flags a tampered verdict") {
    RunResult r = run("gallery:gap-union", "round");
    json doc = json::parse(r.report_json);
    doc["verdict"] = "holds-exact";
    doc["witness"] = nullptr;
    std::vector<std::string> diags;
    CHECK_FALSE(replay_report(doc.dump(2) + "\n", &diags));
    CHECK_FALSE(diags.empty());
}

TEST_CASE("replay flags a tampered witness point") {
    RunResult r = run("gallery:gap-union", "round");
    json doc = json::parse(r.report_json);
    REQUIRE(doc.at("witness").is_object());
    doc["witness"]["y"] = {{"kind", "scalar"}, {"value", "5/2"}};
    std::vector<std::string> diags;
    CHECK_FALSE(replay_report(doc.dump(2) + "\n", &diags));
    CHECK_FALSE(diags.empty());
}

TEST_CASE("parse errors carry a JSON path") {
    auto path_of = [](const std::string& text) -> std::string {
        try {
            parse_space_text(text);
        } catch (const ParseError& e) {
            return e.path;
        }
        return "";
    };

    CHECK(path_of(R"({"type":"interval_union","intervals":[{"lo":"0","hi":"1"}]})") == "$");
    CHECK(path_of(R"({"schema":2,"type":"interval_union","intervals":[{"lo":"0","hi":"1"}]})") ==
          "$.schema");
    CHECK(path_of(R"({"schema":1,"type":"mystery"})") == "$.type");
    CHECK(path_of(
              R"({"schema":1,"type":"interval_union","intervals":[{"lo":"1","hi":"0"}]})") ==
          "$.intervals[0]");
    CHECK(path_of(
              R"({"schema":1,"type":"interval_union","intervals":[{"lo":0.5,"hi":"1"}]})") ==
          "$.intervals[0].lo");
    CHECK(path_of(R"({"schema":1,"type":"gallery","name":"absent"})") == "$.name");
    CHECK(path_of(
              R"({"schema":1,"type":"region2d","region":{"kind":"union","parts":[{"kind":"full"},{"kind":"blob"}]}})") ==
          "$.region.parts[1]");
    CHECK(path_of(R"({"schema":1,"type":"product_euclid","factors":[]})") == "$.factors");
    CHECK(path_of("not json at all") == "$");
}

TEST_CASE("unknown or incomplete check descriptors are parse errors") {
    CHECK_THROWS_AS(parse_check("roundish", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_check("convexity:lambda", std::nullopt), ParseError);
    CHECK_THROWS_AS(parse_check("convexity:lambda:zzz", std::nullopt), ParseError);

    CheckRequest with_param = parse_check("convexity:lambda", rat(1, 2));
    CHECK(with_param.descriptor == "convexity:lambda:1/2");

    CheckRequest inline_param = parse_check("strict-ball-convexity:2", std::nullopt);
    CHECK(inline_param.descriptor == "strict-ball-convexity:2");
}

TEST_CASE("selector strings resolve files and gallery names") {
    SpaceHandle g = load_space_selector("gallery:two-lines");
    CHECK(g.space.valid());
    json def = json::parse(g.definition);
    CHECK(def.at("type") == "gallery");
    CHECK(def.at("name") == "two-lines");

    CHECK_THROWS_AS(load_space_selector("gallery:absent"), UnknownName);
    CHECK_THROWS_AS(load_space_selector("/no/such/file.json"), ParseError);
}
