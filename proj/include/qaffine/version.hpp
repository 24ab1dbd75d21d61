#pragma once

namespace qaffine {

// Tool version; participates in report schema and cache keys, so cached
// operator blocks are invalidated on upgrade.
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "qaffine-report/1";

} // namespace qaffine
