#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qaffine {

enum class CheckStatus { PASS, FAIL, SKIPPED };

std::string to_string(CheckStatus s);

// One verified identity (or diagnostic) inside a suite.
struct CheckResult {
    std::string description;
    CheckStatus status = CheckStatus::PASS;
    std::string residual = "0"; // canonical string in exact mode, float rendering in numeric mode
    std::string note;           // witness on failure, safe-window or diagnostic detail otherwise
    bool informational = false; // diagnostics that never gate the suite outcome
};

// Machine-readable outcome of one verification suite.
struct VerificationReport {
    std::string suite;
    // Parameter record (truncation, mode ranges, samples, ...); insertion
    // order is the canonical report order.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }

    CheckResult& add(std::string description, CheckStatus status,
                     std::string residual = "0", std::string note = "");
    // Convenience for exact checks: PASS with residual "0", or FAIL carrying
    // the rendered nonzero difference.
    CheckResult& add_exact(std::string description, bool ok,
                           std::string residual_on_fail, std::string note = "");
    CheckResult& add_info(std::string description, CheckStatus status,
                          std::string residual = "0", std::string note = "");

    std::size_t count(CheckStatus s) const;     // gated checks only
    std::size_t count_informational() const;
    bool failed() const; // true iff some gated check is FAIL
};

} // namespace qaffine
