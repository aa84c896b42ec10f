// Runs every acceptance criterion at full scale and prints one line per
// criterion. Nonzero exit iff any criterion fails.

#include <cstdio>
#include <iostream>

#include "dpf/verification.hpp"

int main() {
    auto results = dpf::run_acceptance(dpf::VerifyScale::kFull);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << dpf::format_criterion_line(r) << "\n";
        if (r.pass) ++passed;
    }
    std::cout << "RESULT: " << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}
