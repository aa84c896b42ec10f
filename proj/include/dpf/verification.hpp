#pragma once

#include <string>
#include <vector>

namespace dpf {

/// One acceptance check: an exact property of the library verified by
/// exhaustive enumeration or frozen reference values.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

enum class VerifyScale { kSmall, kFull };

/// Runs the full verification suite; kSmall trims the exhaustive bounds for
/// a quick smoke run, kFull uses the complete ranges.
std::vector<CriterionResult> run_acceptance(VerifyScale scale);

/// "[ 3] PASS  paper-values: ..." with elapsed seconds appended on request.
std::string format_criterion_line(const CriterionResult& r, bool with_seconds = true);

}  // namespace dpf
