#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/checks.hpp"

namespace supercong {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct Summary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
    std::string version{kToolVersion};
    std::uint64_t pmin = 0;
    std::uint64_t pmax = 0;
    std::optional<std::string> timestamp;  // omitted unless requested; breaks byte-stability
    std::vector<CheckOutcome> outcomes;
    Summary summary;

    friend bool operator==(const Report&, const Report&) = default;
};

struct SuiteConfig {
    std::uint64_t pmin = 3;
    std::uint64_t pmax = 200;
    std::set<CheckId> checks;
    int workers = 1;
    std::size_t eta_bound = 1000;
    bool timings = false;
    bool timestamp = false;
};

/// Runs every selected check on every prime in [pmin, pmax] (C1_IDENTITY runs
/// its fixed (n, y) sample instead). Output is independent of `workers`.
/// Throws ConfigError for an empty check set, pmin > pmax, workers < 1, or an
/// a(p)-dependent check with pmax beyond the eta bound.
Report run_suite(const SuiteConfig& config);

/// Sorts outcomes by (check, p, note) and recomputes the summary.
void finalize(Report& report);

enum class ReportFormat { Json, Csv };

std::string emit_report(const Report& report, ReportFormat format);
/// Inverse of emit_report(…, Json). Throws std::invalid_argument on malformed input.
Report parse_report_json(std::string_view text);

/// Exit-code contract: 0 when no outcome failed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace supercong
