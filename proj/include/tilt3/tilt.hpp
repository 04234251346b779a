#pragma once

#include "tilt3/chow.hpp"

#include <array>
#include <utility>

namespace tilt3 {

/// A slope value: finite exact Scalar or +infinity. Division by zero in a
/// slope is +infinity by convention, and +infinity compares greater than
/// every finite value.
class SlopeValue {
public:
    SlopeValue() : finite_(true) {}
    explicit SlopeValue(Scalar v) : finite_(true), value_(std::move(v)) {}
    static SlopeValue infinity() {
        SlopeValue s;
        s.finite_ = false;
        return s;
    }

    bool is_finite() const { return finite_; }
    const Scalar& value() const;

    friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const SlopeValue& a, const SlopeValue& b) { return !(a == b); }
    friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }

    std::string str() const { return finite_ ? value_.str() : "+inf"; }

private:
    bool finite_;
    Scalar value_;
};

/// A numerical wall in the (alpha, beta) upper half-plane: either a vertical
/// ray or a semicircle with center on the beta-axis, stored as (center,
/// radius^2) so the data stays rational whenever the classes are.
struct WallDescriptor {
    enum class Kind { vertical, semicircle };
    Kind kind;
    Scalar beta_wall;   // vertical: the ray beta = beta_wall
    Scalar center_beta; // semicircle: center (center_beta, 0)
    Scalar radius_sq;   // semicircle: squared radius, > 0

    static WallDescriptor vertical(Scalar beta) {
        return {Kind::vertical, std::move(beta), Scalar(0), Scalar(0)};
    }
    static WallDescriptor semicircle(Scalar center, Scalar radius_sq) {
        return {Kind::semicircle, Scalar(0), std::move(center), std::move(radius_sq)};
    }
    bool is_vertical() const { return kind == Kind::vertical; }
};

/// A 1-cycle Gamma with Gamma . H >= 0, used to correct the degree-3
/// inequality. The pairing against H is cached at construction.
class GammaClass {
public:
    explicit GammaClass(CurveClass gamma);
    static GammaClass zero(const ModelPtr& m) { return GammaClass(m->zero_curve()); }

    const CurveClass& cycle() const { return gamma_; }
    const Scalar& dot_h() const { return gamma_dot_h_; }
    const ModelPtr& model() const { return gamma_.model(); }

private:
    CurveClass gamma_;
    Scalar gamma_dot_h_;
};

/// Slope mu = H^2.ch1 / H^3 ch0; +infinity when ch0 = 0.
SlopeValue mu(const ChernCharacter& ch);

/// Tilt slope nu_{alpha,beta} with alpha > 0.
SlopeValue nu(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta);
/// Same, parameterized by alpha^2 >= 0 (the slope only depends on alpha^2;
/// this keeps points with irrational alpha but rational alpha^2 exact).
SlopeValue nu_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta);
/// Numerator H.ch2^b - (alpha^2/2) H^3 ch0 and denominator H^2.ch1^b of nu.
void nu_fraction(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta,
                 Scalar& numerator, Scalar& denominator);

/// Discriminant (H^2.ch1)^2 - 2 (H^3 ch0)(H.ch2); invariant under twist.
Scalar discriminant(const ChernCharacter& ch);

/// The distinguished root beta-bar of nu_{0,beta} = 0:
/// (H^2.ch1 - sqrt(disc)) / H^3 ch0 for ch0 != 0, H.ch2 / H^2.ch1 otherwise.
/// Afterwards H.ch2^{beta-bar} = 0.
Scalar beta_bar(const ChernCharacter& ch);

/// Both roots (beta-, beta+) of nu_{0,beta} = 0 for ch0 != 0, disc >= 0:
/// mu -+ sqrt(disc / (H^3 ch0)^2).
std::pair<Scalar, Scalar> beta_pm(const ChernCharacter& ch);

/// The numerical wall { nu(v) = nu(w) } in the upper half-plane.
/// Throws std::domain_error when the H-contracted triples are proportional
/// (no wall) or the solution set is empty.
WallDescriptor wall_between(const ChernCharacter& v, const ChernCharacter& w);
/// Same computation from H-contracted triples (v0, v1, v2).
WallDescriptor wall_between_triples(const std::array<Scalar, 3>& v,
                                    const std::array<Scalar, 3>& w);

/// True iff the top point (center, sqrt(radius_sq)) of the semicircular wall
/// between v and w lies on the hyperbola nu(v) = 0. Exact.
bool hyperbola_top_check(const ChernCharacter& v, const ChernCharacter& w);

/// d(alpha)/d(beta) = (beta - mu)/alpha along the hyperbola nu(ch) = 0.
/// Requires alpha > 0, ch0 != 0, and (alpha, beta) exactly on the hyperbola.
Scalar hyperbola_slope(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta);

/// Left-hand side ch3^b - Gamma.ch1^b - (alpha^2/6) H^2.ch1^b of the
/// degree-3 inequality; the caller interprets the sign. alpha >= 0.
Scalar gamma_inequality(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta,
                        const GammaClass& gamma);
Scalar gamma_inequality_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq,
                                 const Scalar& beta, const GammaClass& gamma);

/// The support-property quadratic form
///   Q = alpha^2 (disc + 3 (G.H/H^3)(H^3 ch0^b)^2)
///     + 2 (H.ch2^b)(2 H.ch2^b - 3 G.H ch0^b)
///     - 6 (H^2.ch1^b)(ch3^b - G.ch1^b).
Scalar q_form(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta,
              const GammaClass& gamma);
Scalar q_form_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta,
                       const GammaClass& gamma);

/// H-contracted triple of the class whose wall against ch is the vanishing
/// locus of q_form: (H^2.ch1, 2 H.ch2 - 3 (G.H) ch0, 3 ch3 - 3 G.ch1).
std::array<Scalar, 3> q_form_wall_triple(const ChernCharacter& ch, const GammaClass& gamma);

enum class LiBound { satisfied, violated, exempt };

/// Checks disc/(H^3 ch0)^2 >= min{ 1/(H^3)^2, 3/(2 i_X H^3) } for a Fano
/// model. The numerical signatures of O_X, its shifts and ideal sheaves of
/// points (disc = 0, beta-bar = 0, ch0 = +-1) are exempt.
LiBound li_bound_check(const ChernCharacter& ch);
/// The threshold min{ 1/(H^3)^2, 3/(2 i_X H^3) } itself.
Rational li_bound_threshold(const ModelPtr& m);

}  // namespace tilt3
