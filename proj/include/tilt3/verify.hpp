#pragma once

#include <string>
#include <vector>

namespace tilt3::verify {

struct CheckResult {
    std::string label;
    bool pass;
    std::string detail;  // exact values involved, for the report table
};

struct CriterionResult {
    int number;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the full built-in verification suite: the exact blow-up computations
/// (beta-bar values, destabilizing walls, the corrected degree-3 inequality
/// closed forms), the C0/beta0 constants, the Riemann-Roch identities, the
/// toric tangent cross-checks, Frobenius decompositions, polarization
/// admissibility, and the structural property checks. Every comparison is
/// exact unless a check label says otherwise.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace tilt3::verify
