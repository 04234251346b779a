#include "tilt3/verify.hpp"
#include <iostream>

int main() {
    auto results = tilt3::verify::run_acceptance_suite();
    bool all = true;
    for (const auto& c : results) {
        bool pass = c.pass();
        all = all && pass;
        std::cout << "ACCEPTANCE " << c.number << " (" << c.title << "): "
                  << (pass ? "PASS" : "FAIL") << "\n";
        for (const auto& check : c.checks)
            if (!check.pass)
                std::cout << "    FAIL " << check.label
                          << (check.detail.empty() ? "" : "  [" + check.detail + "]") << "\n";
    }
    std::cout << (all ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
    return all ? 0 : 1;
}
