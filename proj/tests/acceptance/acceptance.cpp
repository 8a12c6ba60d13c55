// One line per acceptance criterion; exit status 0 iff all pass.

#include "stieltjes/verify/acceptance.hpp"

#include <cstdio>

int main() {
    using namespace stieltjes::verify;
    int failed = 0;
    for (int i = 1; i <= kCriterionCount; ++i) {
        const CriterionResult r = run_criterion(i);
        std::printf("[%s] criterion %d: %s (%zu cases, %zu failed, %.2f s)\n", r.pass() ? "PASS" : "FAIL", r.number,
                    r.title.c_str(), r.cases.size(), r.failures(), r.seconds);
        for (const CaseResult& c : r.cases) {
            if (!c.pass) std::printf("    %s: %s\n", c.id.c_str(), c.reason.c_str());
        }
        std::fflush(stdout);
        if (!r.pass()) ++failed;
    }
    std::printf("%d of %d criteria passed\n", kCriterionCount - failed, kCriterionCount);
    return failed == 0 ? 0 : 1;
}
