#include "prism/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "prism/burau.hpp"
#include "prism/embedding.hpp"

namespace prism {

int VerificationReport::tally(CheckStatus s) const {
    int n = 0;
    for (const auto& inst : instances)
        for (const CheckResult* c : {&inst.knot, &inst.slope, &inst.determinant, &inst.sign_rule,
                                     &inst.congruence, &inst.words, &inst.seifert, &inst.primitive})
            if (c->status == s) ++n;
    return n;
}

VerifyConfig parse_config(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    VerifyConfig config;
    config.caps.max_s = doc.value("max_s", 4);
    config.caps.max_t = doc.value("max_t", 4);
    config.jobs = doc.value("jobs", 1);
    config.timings = doc.value("timings", false);
    if (doc.contains("families")) {
        for (auto& [name, caps] : doc.at("families").items()) {
            FamilyId id = family_from_name(name);
            config.caps.per_family[id] = {caps.value("max_s", config.caps.max_s),
                                          caps.value("max_t", config.caps.max_t)};
        }
    }
    if (config.jobs < 1) throw std::invalid_argument("jobs must be positive");
    return config;
}

InstanceReport verify_instance(const FamilyInstance& inst) {
    auto start = std::chrono::steady_clock::now();
    const FamilyRow& row = family_row(inst.family);

    InstanceReport r;
    r.family = row.name;
    r.s = inst.s;
    r.t = inst.t;
    r.braid = inst.braid_text();
    r.p = inst.coeffs.p;
    r.q = inst.coeffs.q;
    r.r = inst.coeffs.r;

    BraidWord braid = inst.expand();
    bool knot = closure_components(braid) == 1;
    r.knot = CheckResult::of(knot, knot ? "" : "closure is not a knot");

    if (inst.is_torus_row())
        r.slope = CheckResult::skip("family-5star-no-surface-slope");
    else
        r.slope = CheckResult::of(slope_certificate(inst), "surface slope != 4|q|");

    if (knot) {
        LaurentPoly delta = alexander_polynomial(braid);
        DeterminantCheck det = determinant_certificate(inst, &delta);
        r.burau_det = det.burau_det.str();
        r.alexander_det = det.alexander_at_neg1.str();
        r.determinant = CheckResult::of(
            det.pass, "determinant pipelines " + det.burau_det.str() + "/" +
                          det.alexander_at_neg1.str() + " vs |p| = " + std::to_string(det.expected));
        r.congruence = CheckResult::of(
            casson_walker_congruence(inst.coeffs, delta.second_derivative_at_one()),
            "Casson-Walker congruence failed");
    } else {
        r.determinant = CheckResult::fail("not computed: closure is not a knot");
        r.congruence = CheckResult::fail("not computed: closure is not a knot");
    }

    r.sign_rule = CheckResult::of(sign_rule_check(inst.coeffs), "sign rule failed");

    if (row.torus) {
        r.words = CheckResult::skip("family-5star-torus-knot");
        r.seifert = CheckResult::skip("family-5star-torus-knot");
        r.primitive = CheckResult::skip("family-5star-torus-knot");
    } else if (row.arity == 0) {
        r.words = CheckResult::skip("sporadic-words-not-stated");
        r.seifert = CheckResult::skip("sporadic-words-not-stated");
        r.primitive = CheckResult::skip("sporadic-words-not-stated");
    } else if (row.inner_word.empty()) {
        r.words = CheckResult::skip("family-1A-words-out-of-scope");
        r.seifert = CheckResult::skip("family-1A-words-out-of-scope");
        r.primitive = CheckResult::skip("family-1A-words-out-of-scope");
    } else {
        EmbeddingCheck check = verify_embedding(inst.family, inst.s, inst.t);
        bool word_ok = check.inner_match &&
                       (check.outer_match ? *check.outer_match : check.outer_shape_ok) &&
                       check.basis_pass;
        std::string note = check.detail;
        if (word_ok && !check.outer_match)
            note = "outer word x'^m y' with m = " + std::to_string(check.outer_exponent);
        r.words = CheckResult::of(word_ok, check.detail);
        if (word_ok) r.words.note = note;
        r.seifert = CheckResult::of(check.sf_pass, "SF(2,2) certificate failed");
        r.primitive = CheckResult::of(check.primitive_pass, "primitivity certificate failed");
    }

    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    return r;
}

VerificationReport verify_instances(const std::vector<FamilyInstance>& instances, int jobs) {
    VerificationReport report;
    report.instances.resize(instances.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(instances.size() ? instances.size() : 1));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            report.instances[i] = verify_instance(instances[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

VerificationReport run_verification(const VerifyConfig& config) {
    return verify_instances(enumerate_instances(config.caps), config.jobs);
}

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("unsupported format: " + name);
}

namespace {

const char* status_word(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

std::string csv_cell(const CheckResult& c) {
    std::string cell = status_word(c.status);
    if (c.status == CheckStatus::Skipped && !c.note.empty()) cell += ":" + c.note;
    return cell;
}

std::string emit_json(const VerificationReport& report, bool timings) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.instances) {
        nlohmann::ordered_json j;
        j["family"] = r.family;
        j["s"] = r.s;
        j["t"] = r.t;
        j["braid"] = r.braid;
        j["p"] = r.p;
        j["q"] = r.q;
        if (r.r) j["r"] = *r.r;
        nlohmann::ordered_json checks;
        auto put = [&](const char* key, const CheckResult& c) {
            nlohmann::ordered_json jc;
            jc["status"] = status_word(c.status);
            if (!c.note.empty()) jc["note"] = c.note;
            checks[key] = std::move(jc);
        };
        put("knot", r.knot);
        put("slope", r.slope);
        put("determinant", r.determinant);
        put("sign_rule", r.sign_rule);
        put("congruence", r.congruence);
        put("words", r.words);
        put("seifert_fibered", r.seifert);
        put("primitive", r.primitive);
        j["checks"] = std::move(checks);
        if (!r.burau_det.empty()) {
            j["determinant_values"] = {{"burau", r.burau_det}, {"alexander", r.alexander_det}};
        }
        if (timings) j["wall_ms"] = r.wall_ms;
        rows.push_back(std::move(j));
    }
    doc["instances"] = std::move(rows);
    doc["summary"] = {{"instances", report.instances.size()},
                      {"passed", report.tally(CheckStatus::Pass)},
                      {"failed", report.tally(CheckStatus::Fail)},
                      {"skipped", report.tally(CheckStatus::Skipped)}};
    return doc.dump(2) + "\n";
}

std::string emit_csv(const VerificationReport& report, bool timings) {
    std::ostringstream out;
    out << "family,s,t,braid,p,q,r,knot,slope,determinant,burau_det,alexander_det,"
           "sign_rule,congruence,words,seifert_fibered,primitive";
    if (timings) out << ",wall_ms";
    out << "\n";
    for (const auto& r : report.instances) {
        out << r.family << ',' << r.s << ',' << r.t << ',' << r.braid << ',' << r.p << ',' << r.q
            << ',' << (r.r ? std::to_string(*r.r) : "") << ',' << csv_cell(r.knot) << ','
            << csv_cell(r.slope) << ',' << csv_cell(r.determinant) << ',' << r.burau_det << ','
            << r.alexander_det << ',' << csv_cell(r.sign_rule) << ',' << csv_cell(r.congruence)
            << ',' << csv_cell(r.words) << ',' << csv_cell(r.seifert) << ','
            << csv_cell(r.primitive);
        if (timings) out << ',' << r.wall_ms;
        out << "\n";
    }
    return out.str();
}

char status_mark(const CheckResult& c) {
    switch (c.status) {
        case CheckStatus::Pass: return '+';
        case CheckStatus::Fail: return 'X';
        default: return '-';
    }
}

std::string emit_text(const VerificationReport& report) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "family" << std::setw(4) << "s" << std::setw(4) << "t"
        << std::setw(8) << "p" << std::setw(9) << "q"
        << " K S D G C W F P  braid / notes\n";
    for (const auto& r : report.instances) {
        out << std::left << std::setw(7) << r.family << std::setw(4) << r.s << std::setw(4) << r.t
            << std::setw(8) << r.p << std::setw(9) << r.q << ' ' << status_mark(r.knot) << ' '
            << status_mark(r.slope) << ' ' << status_mark(r.determinant) << ' '
            << status_mark(r.sign_rule) << ' ' << status_mark(r.congruence) << ' '
            << status_mark(r.words) << ' ' << status_mark(r.seifert) << ' '
            << status_mark(r.primitive) << "  " << r.braid;
        if (r.wall_ms > 0) out << "  (" << r.wall_ms << " ms)";
        out << "\n";
        for (const CheckResult* c : {&r.knot, &r.slope, &r.determinant, &r.sign_rule, &r.congruence,
                                     &r.words, &r.seifert, &r.primitive})
            if (c->status == CheckStatus::Fail && !c->note.empty())
                out << "        ! " << c->note << "\n";
    }
    out << "columns: K knot, S slope, D determinant, G sign rule, C Casson-Walker, "
           "W words, F Seifert-fibered, P primitive  (+ pass, X fail, - skipped)\n";
    out << "summary: " << report.instances.size() << " instances, "
        << report.tally(CheckStatus::Pass) << " checks passed, " << report.failures()
        << " failed, " << report.tally(CheckStatus::Skipped) << " skipped\n";
    return out.str();
}

} // namespace

std::string emit(const VerificationReport& report, ReportFormat format, bool timings) {
    switch (format) {
        case ReportFormat::Json: return emit_json(report, timings);
        case ReportFormat::Csv: return emit_csv(report, timings);
        default: return emit_text(report);
    }
}

} // namespace prism
