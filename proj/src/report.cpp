#include "qaffine/report.hpp"

namespace qaffine {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::PASS:
        return "PASS";
    case CheckStatus::FAIL:
        return "FAIL";
    case CheckStatus::SKIPPED:
        return "SKIPPED";
    }
    return "?";
}

CheckResult& VerificationReport::add(std::string description, CheckStatus status,
                                     std::string residual, std::string note) {
    checks.push_back(CheckResult{std::move(description), status, std::move(residual),
                                 std::move(note), false});
    return checks.back();
}

CheckResult& VerificationReport::add_exact(std::string description, bool ok,
                                           std::string residual_on_fail,
                                           std::string note) {
    return add(std::move(description), ok ? CheckStatus::PASS : CheckStatus::FAIL,
               ok ? "0" : std::move(residual_on_fail), std::move(note));
}

CheckResult& VerificationReport::add_info(std::string description, CheckStatus status,
                                          std::string residual, std::string note) {
    checks.push_back(CheckResult{std::move(description), status, std::move(residual),
                                 std::move(note), true});
    return checks.back();
}

std::size_t VerificationReport::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.informational && c.status == s)
            ++n;
    return n;
}

std::size_t VerificationReport::count_informational() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.informational)
            ++n;
    return n;
}

bool VerificationReport::failed() const {
    for (const auto& c : checks)
        if (!c.informational && c.status == CheckStatus::FAIL)
            return true;
    return false;
}

} // namespace qaffine
