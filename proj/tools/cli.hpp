#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tricoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

inline constexpr const char* kReportFormat = "tricoh-report-v1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one invocation; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricoh::cli
