#pragma once

#include "tilt3/chow.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace tilt3 {

/// A complete smooth fan in Z^3: primitive ray generators plus maximal cones
/// given as ray-index triples.
struct ToricFan {
    std::vector<std::array<long, 3>> rays;
    std::vector<std::array<size_t, 3>> max_cones;
};

/// Smoothness (each cone unimodular) and completeness (every facet shared by
/// exactly two maximal cones, which sit on opposite sides of it). Violations
/// are returned as data.
std::vector<std::string> validate_fan(const ToricFan& fan);

/// A smooth complete toric threefold: a fan together with the intersection
/// model and the divisor class of each ray.
struct ToricThreefold {
    ToricFan fan;
    ModelPtr model;
    std::vector<std::vector<long>> ray_classes;  // per ray, in the divisor basis

    DivisorClass ray_divisor(size_t rho) const;
};

/// Checks fan validity, the linear-equivalence relations
/// sum_rho <u_k, v_rho> D_rho = 0 and sum_rho D_rho = c1(T_X).
std::vector<std::string> validate_toric(const ToricThreefold& tv);

/// (c1, ch2) of the tangent bundle from c(T_X) = prod_rho (1 + D_rho):
/// c1 = sum D_rho, c2 = sum_{rho<tau} D_rho.D_tau, ch2 = (c1^2 - 2 c2)/2.
/// Throws if the result disagrees with the model's stored tangent data.
std::pair<DivisorClass, CurveClass> tangent_chern(const ToricThreefold& tv);

/// One summand class of a Frobenius pushforward with its multiplicity.
struct FrobeniusSummand {
    std::vector<long> class_vector;  // L_j in the divisor basis
    unsigned long multiplicity;      // eta_j
};

/// m_* O(D) = sum_j (L_j^dual)^{eta_j}: the summands enumerate the integral
/// classes (-D + sum_rho a_rho D_rho)/m over a_rho in {0..m-1}, and
/// sum_j eta_j = m^3. Summands are sorted by class vector.
struct FrobeniusDecomposition {
    unsigned long m;
    std::vector<long> twist;  // D
    std::vector<FrobeniusSummand> summands;

    unsigned long total_multiplicity() const;
    /// Multiplicity of a given class (0 when absent).
    unsigned long multiplicity_of(const std::vector<long>& cls) const;
};

FrobeniusDecomposition frobenius_decompose(const ToricThreefold& tv, const std::vector<long>& d,
                                           unsigned long m);

/// Growth degree of m -> eta(class) over the sampled range (>= 5 values):
/// exact successive finite differences when the counts are polynomial in m,
/// with a log-ratio fallback. Throws if the class never appears.
int growth_exponent(const ToricThreefold& tv, const std::vector<long>& d,
                    const std::vector<long>& cls, const std::vector<unsigned long>& m_range);

struct AdmissibleResult {
    bool admissible;
    // When inadmissible: an effective divisor class witnessing the failure,
    // with H.D^2 < 0, or a non-extremal zero direction of H.D^2.
    std::vector<Scalar> witness;
    std::string reason;
};

/// Decides whether D -> H.D^2 is nonnegative on the effective cone (spanned
/// by the torus-invariant classes) and whether every zero direction is an
/// extremal ray of that cone.
AdmissibleResult admissible_polarization(const ToricThreefold& tv, const DivisorClass& h);

/// Exact copositivity of a symmetric rational matrix over the nonnegative
/// orthant. On failure produces a rational certificate x >= 0 with
/// x^T M x < 0, verified before returning.
bool copositive(const std::vector<std::vector<Rational>>& m, std::vector<Rational>* witness);

/// Continued-fraction convergents p/q of a quadratic irrational, q strictly
/// increasing, each satisfying |x - p/q| < 1/q^2 (verified exactly).
std::vector<std::pair<mpz_class, mpz_class>> dirichlet_approx(const Scalar& x, size_t count);

/// lhs = chi(frobenius_scale(ch(O(D)), m)); rhs = sum_j eta_j chi(L_j, O(D))
/// over the decomposition of m_* O_X. The two sides agree exactly.
std::pair<Scalar, Scalar> pushforward_chi_check(const ToricThreefold& tv,
                                                const std::vector<long>& d, unsigned long m);

/// Built-in toric structures for the toric database models: p3,
/// blowup-p3-point, blowup-p3-line, p1xp2, p1xp1xp1.
const std::vector<ToricThreefold>& builtin_toric();
const ToricThreefold& builtin_toric_model(const std::string& name);

}  // namespace tilt3
