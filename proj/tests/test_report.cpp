#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prism/report.hpp"

using namespace prism;

namespace {

EnumerationCaps tiny_caps() {
    EnumerationCaps caps;
    caps.max_s = 0;
    caps.max_t = 0;
    return caps;
}

} // namespace

TEST_CASE("verification over the minimal enumeration") {
    VerifyConfig config;
    config.caps = tiny_caps();
    VerificationReport report = run_verification(config);
    CHECK(!report.instances.empty());
    CHECK(report.failures() == 0);

    // every enumerated instance appears exactly once
    std::vector<FamilyInstance> insts = enumerate_instances(config.caps);
    CHECK(report.instances.size() == insts.size());

    // skips carry machine-readable reasons
    for (const auto& r : report.instances) {
        if (r.family == "5+*" || r.family == "5-*") {
            CHECK(r.slope.status == CheckStatus::Skipped);
            CHECK(r.slope.note == "family-5star-no-surface-slope");
            CHECK(r.words.note == "family-5star-torus-knot");
        }
        if (r.family.rfind("Spor", 0) == 0) {
            CHECK(r.words.status == CheckStatus::Skipped);
            CHECK(r.words.note == "sporadic-words-not-stated");
        }
        CHECK(r.knot.status == CheckStatus::Pass);
    }
}

TEST_CASE("fault injection: corrupted registry row fails the determinant check") {
    std::vector<FamilyInstance> insts;
    insts.push_back(instantiate(FamilyId::F5_1_pos, 0, 0));
    insts.push_back(instantiate(FamilyId::Spor5, 0, 0));
    insts[1].coeffs.p += 2; // corrupt: p = 13 instead of 11 (keeps gcd = 1)
    VerificationReport report = verify_instances(insts);
    CHECK(report.instances[0].determinant.status == CheckStatus::Pass);
    CHECK(report.instances[1].determinant.status == CheckStatus::Fail);
    CHECK(report.failures() > 0);
}

TEST_CASE("emission formats") {
    VerifyConfig config;
    config.caps = tiny_caps();
    config.caps.per_family.clear();
    // restrict to the sporadic rows for a fast, fixed-size report
    for (FamilyId f : all_families())
        if (family_row(f).arity != 0) config.caps.per_family[f] = {-100, -100};
    VerificationReport report = run_verification(config);
    REQUIRE(report.instances.size() == 6);

    std::string json = emit(report, ReportFormat::Json);
    CHECK(json.find("\"family\"") != std::string::npos);
    CHECK(json.find("\"s\"") != std::string::npos);
    CHECK(json.find("\"checks\"") != std::string::npos);
    CHECK(json.find("\"schema\": 1") != std::string::npos);
    CHECK(json.find("wall_ms") == std::string::npos);

    std::string csv = emit(report, ReportFormat::Csv);
    CHECK(csv.rfind("family,s,t,braid,p,q,r,knot,slope,determinant,burau_det,alexander_det,"
                    "sign_rule,congruence,words,seifert_fibered,primitive\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7); // header + 6 rows

    std::string text = emit(report, ReportFormat::Text);
    int spor_lines = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (line.rfind("Spor", 0) == 0) ++spor_lines;
    CHECK(spor_lines == 6);
    CHECK(report.failures() == 0);
    CHECK(text.find("\n        ! ") == std::string::npos); // no failure notes
}

TEST_CASE("determinism: identical configs produce byte-identical output") {
    VerifyConfig config;
    config.caps = tiny_caps();
    VerificationReport a = run_verification(config);
    VerificationReport b = run_verification(config);
    CHECK(emit(a, ReportFormat::Json) == emit(b, ReportFormat::Json));
    CHECK(emit(a, ReportFormat::Csv) == emit(b, ReportFormat::Csv));

    // concurrency does not change the output
    VerifyConfig threaded = config;
    threaded.jobs = 4;
    VerificationReport c = run_verification(threaded);
    CHECK(emit(a, ReportFormat::Json) == emit(c, ReportFormat::Json));
}

TEST_CASE("summary tallies match column-wise counts") {
    VerifyConfig config;
    config.caps = tiny_caps();
    VerificationReport report = run_verification(config);
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : report.instances)
        for (const CheckResult* c : {&r.knot, &r.slope, &r.determinant, &r.sign_rule,
                                     &r.congruence, &r.words, &r.seifert, &r.primitive}) {
            if (c->status == CheckStatus::Pass) ++pass;
            if (c->status == CheckStatus::Fail) ++fail;
            if (c->status == CheckStatus::Skipped) ++skip;
        }
    CHECK(report.tally(CheckStatus::Pass) == pass);
    CHECK(report.tally(CheckStatus::Fail) == fail);
    CHECK(report.tally(CheckStatus::Skipped) == skip);
}

TEST_CASE("config parsing") {
    VerifyConfig config = parse_config(R"({
        "max_s": 2, "max_t": 1, "jobs": 3,
        "families": {"4-1": {"max_s": 0}, "5+*": {"max_s": 10}}
    })");
    CHECK(config.caps.max_s == 2);
    CHECK(config.caps.max_t == 1);
    CHECK(config.jobs == 3);
    CHECK(config.caps.caps_for(FamilyId::F4_1_neg) == std::pair(0, 1));
    CHECK(config.caps.caps_for(FamilyId::F5_star_pos) == std::pair(10, 1));
    CHECK(config.caps.caps_for(FamilyId::F5_1_pos) == std::pair(2, 1));
    CHECK_THROWS(parse_config("{"));
    CHECK_THROWS_AS(parse_config(R"({"families": {"nope": {}}})"), std::invalid_argument);

    // empty caps give an empty report with zero counts
    VerifyConfig empty;
    empty.caps.max_s = -100;
    empty.caps.max_t = -100;
    VerificationReport report = run_verification(empty);
    CHECK(report.instances.empty());
    CHECK(report.tally(CheckStatus::Pass) == 0);
    CHECK(report.failures() == 0);
}
