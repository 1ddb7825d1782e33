#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prism/families.hpp"

namespace prism {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    CheckStatus status = CheckStatus::Skipped;
    std::string note; // skip reason code or failure detail

    static CheckResult pass() { return {CheckStatus::Pass, ""}; }
    static CheckResult fail(std::string why) { return {CheckStatus::Fail, std::move(why)}; }
    static CheckResult skip(std::string reason) { return {CheckStatus::Skipped, std::move(reason)}; }
    static CheckResult of(bool ok, std::string why = "") {
        return ok ? pass() : fail(std::move(why));
    }
};

// One row of the verification table: every enumerated instance appears
// exactly once, with one column per certificate.
struct InstanceReport {
    std::string family;
    int s = 0, t = 0;
    std::string braid;
    long long p = 0, q = 0;
    std::optional<long long> r;
    CheckResult knot;        // closure is a knot
    CheckResult slope;       // B*k + (T+1)*a = 4|q|
    CheckResult determinant; // both pipelines = |p|
    std::string burau_det;
    std::string alexander_det;
    CheckResult sign_rule;
    CheckResult congruence;  // Casson-Walker
    CheckResult words;       // trace words match formulas + basis certificates
    CheckResult seifert;     // SF(2,2) with certificate
    CheckResult primitive;
    long long wall_ms = 0;
};

struct VerificationReport {
    std::vector<InstanceReport> instances;

    int tally(CheckStatus s) const;
    int failures() const { return tally(CheckStatus::Fail); }
};

struct VerifyConfig {
    EnumerationCaps caps;
    int jobs = 1;
    bool timings = false; // include wall_ms in machine-readable output
};

// Parse a JSON config document: {"max_s":4,"max_t":4,"jobs":2,
// "families":{"4-1":{"max_s":2,"max_t":1}}}.
VerifyConfig parse_config(const std::string& json_text);

// Run every certificate over one instance (used by both the batch runner and
// the single-instance CLI path).
InstanceReport verify_instance(const FamilyInstance& inst);

// Batch over explicit instances (tests use this to fault-inject a corrupted
// registry row); results keep the input order.
VerificationReport verify_instances(const std::vector<FamilyInstance>& instances, int jobs = 1);

// Deterministic batch over the configured enumeration.
VerificationReport run_verification(const VerifyConfig& config);

enum class ReportFormat { Json, Csv, Text };
ReportFormat report_format_from_name(const std::string& name);

std::string emit(const VerificationReport& report, ReportFormat format, bool timings = false);

} // namespace prism
