#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cohomcheck {

inline constexpr const char* kToolVersion = "1.0.0";

// A verification run is a list of rows, one per checked claim. "pass" and
// "fail" mean what they say; "refuted" marks a claim whose expected outcome
// is a refutation (the row passes by refuting), and "skipped" marks checks
// omitted by configuration. Only "fail" rows make a run unsuccessful.
enum class Status { kPass, kFail, kRefuted, kSkipped };

std::string to_string(Status s);

struct ReportRow {
    std::string claim;   // registered claim id
    std::string anchor;  // the mathematical statement, from the registry
    Status status = Status::kFail;
    std::string witness; // parameters and evidence, human-readable
    double millis = 0.0;
};

struct VerificationReport {
    std::string tool_version = kToolVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<ReportRow> rows;

    bool all_passed() const;
    std::size_t count(Status s) const;
};

/// Fixed table of claim ids and the statements they verify. Every emitted
/// row's anchor comes from here.
const std::map<std::string, std::string>& claim_registry();

/// Row factory; throws std::out_of_range for an unregistered claim id.
ReportRow make_row(const std::string& claim, Status status, std::string witness,
                   double millis);

/// Fixed-width table plus a one-line summary.
std::string to_text(const VerificationReport& r);

/// Deterministic JSON: insertion-ordered keys, no timestamps; `millis` is
/// the only field expected to vary between identical runs.
std::string to_json(const VerificationReport& r);

/// FNV-1a 64-bit over bytes; stable fingerprint for large witnesses.
std::uint64_t fnv1a64(std::string_view s);
std::string hex64(std::uint64_t v);

} // namespace cohomcheck
