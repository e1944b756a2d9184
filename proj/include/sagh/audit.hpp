#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sagh {

/// Configuration of the randomized law suite.
struct AuditConfig {
    uint64_t seed = 1;
    int dim_max = 6;
    int cases = 500;
    int space_max = 4;     // atoms for the exhaustive extremality scan
    bool inject_corrupt_projection = false;
};

struct LawResult {
    std::string id;
    int pass = 0;
    int fail = 0;
    std::vector<std::string> witnesses; // up to 3 serialized failing instances
};

struct AuditReport {
    AuditConfig config;
    std::vector<LawResult> laws; // sorted by id

    bool all_pass() const;
    int total_pass() const;
    int total_fail() const;
};

/// Runs every law with per-law deterministic substreams of the seed.
AuditReport run_axiom_audit(const AuditConfig& config);

/// Renders the report; format is one of "json", "csv", "pretty".
/// Deterministic: no timestamps, reals at 17 significant digits, laws sorted
/// by id.
std::string render_report(const AuditReport& report, const std::string& format);

/// Serialized witnesses for replay, empty string when everything passed.
std::string witness_payload(const AuditReport& report);

} // namespace sagh
