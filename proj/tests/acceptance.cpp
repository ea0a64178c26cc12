// Acceptance suite: reproduces the reference design strengths and checks the
// library's mathematical guarantees end to end. One line per criterion.
#include <iostream>

#include "gdesign/reproduce.hpp"

int main() {
    using namespace gdesign;
    std::vector<CriterionResult> results;
    try {
        results = run_acceptance(std::cout);
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << "\n";
    int fails = 0;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << ": " << status_name(r.status) << " — "
                  << r.detail << "\n";
        fails += r.status == Status::kFail;
    }
    std::cout << "\n"
              << (fails == 0 ? "ACCEPTANCE: all criteria pass"
                             : "ACCEPTANCE: FAILURES PRESENT")
              << " (" << results.size() << " criteria, " << fails << " failing)\n";
    return fails == 0 ? 0 : 1;
}
