#pragma once

#include "tilt3/tilt.hpp"

#include <vector>

namespace tilt3 {

/// A built-in polarized Fano threefold together with its corrective cycle
/// Gamma and a note on which construction produced Gamma.
struct FanoEntry {
    ModelPtr model;
    GammaClass gamma;
    std::string provenance;
};

/// The built-in database: P^3, the quadric threefold, P^1 x P^1 x P^1,
/// P(T_{P^2}), the blow-up of P^3 in a point, the blow-up of P^3 in a line,
/// and P^1 x P^2. Every entry passes validate_model.
const std::vector<FanoEntry>& builtin_models();

/// Lookup by name ("p3", "q3", "p1xp1xp1", "ptp2", "blowup-p3-point",
/// "blowup-p3-line", "p1xp2"); throws std::invalid_argument on unknown names.
const FanoEntry& builtin_model(const std::string& name);

/// The corrective cycle for a database entry, rebuilt from its
/// classification: zero on Picard-rank-1 and product-type index-2 entries,
/// the blow-up construction on the blow-up of P^3 in a point, and
/// C0 H^2 - td2 on index-1 entries. Always Gamma . H >= 0.
GammaClass gamma_for(const FanoEntry& entry);

// --- index-two blow-up constants -----------------------------------------

/// f_C(b) = 7 (b^2/2 + C)(1-b)/2 + (b/6)(7 b^2 - 1)
Scalar blowup_f(const Scalar& c, const Scalar& beta);
/// g_C(b) = (b^2/2 + C) + (b/6)(7 b^2 - 1)
Scalar blowup_g(const Scalar& c, const Scalar& beta);
/// Both values at once.
std::pair<Scalar, Scalar> index2_functions(const Scalar& c, const Scalar& beta);

/// The minimal C >= 0 with g_C >= 0 on (0, 1/sqrt(7)), found by exact
/// critical-point analysis. Lives in Q(sqrt(30)).
Scalar c0_blowup();
/// The interior minimizer of g: the positive root of 21 b^2 + 6 b - 1.
Scalar blowup_g_minimizer();

// --- index-one constants ---------------------------------------------------

struct IndexOneConstants {
    Rational h3;
    Scalar beta0;  // largest zero of g_X in [0, 1]
    Scalar c0;     // minimal admissible C
};

/// The four auxiliary functions of the index-one estimate, parameterized by
/// the degree H^3.
struct Index1System {
    Rational h3;

    explicit Index1System(Rational h3_in);

    /// f_{X,C}(b) = b^2/2 - b/2 + C
    Scalar f(const Scalar& c, const Scalar& beta) const;
    /// g_X(b) = b^3/6 - b^2/4 + b (1/12 + 2/H^3) - 1/H^3
    Scalar g(const Scalar& beta) const;
    /// h_{X,C}(b) = f_{X,C}(b) (1-b)/2 + g_X(b)
    Scalar h(const Scalar& c, const Scalar& beta) const;
    /// l_{X,C}(b) = f_{X,C}(b)/H^3 + g_X(b)
    Scalar l(const Scalar& c, const Scalar& beta) const;

    /// beta0 and the minimal C >= 0 with C H^3 >= H^3/12 + 2, f >= 0 on
    /// [0,1] and l >= 0 on [0, beta0]. All interval minima are located
    /// exactly at endpoints or critical points in quadratic extensions.
    IndexOneConstants constants() const;
};

/// Requires H3 >= 4.
IndexOneConstants index1_constants(const Rational& h3);

}  // namespace tilt3
