#pragma once

#include <string>
#include <vector>

#include "liecheck/eliminator.hpp"

namespace liecheck {

inline constexpr const char* kToolVersion = "liecheck 1.0.0";

struct VerificationReport {
    std::string version = kToolVersion;
    std::string command;
    std::vector<CaseResult> cases;
    long eliminated = 0;
    long unresolved = 0;
    long failed = 0;
    std::vector<std::string> failures;
};

// Builds the report, checking the unresolved set against the expected
// manifest when a path is supplied: every unresolved case id must appear
// in the manifest and vice versa, otherwise the report fails.
VerificationReport make_report(const std::string& command, std::vector<CaseResult> cases,
                               const std::string& manifest_path);

// One entry per manifest line: case id and the reason it is settled by
// external reference data rather than re-derived here.
struct ManifestEntry {
    std::string case_id;
    std::string reason;
};
std::vector<ManifestEntry> load_manifest(const std::string& path);

// Deterministic serializations. Timings are zeroed unless include_timings
// is set, keeping repeated runs byte-identical.
std::string emit_report_text(const VerificationReport& report);
ordered_json emit_report_json(const VerificationReport& report, bool include_timings = false);

// Structural validation against the published report schema; returns the
// list of violations (empty = valid).
std::vector<std::string> validate_report_json(const ordered_json& doc);

}  // namespace liecheck
