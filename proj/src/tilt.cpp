#include "tilt3/tilt.hpp"

#include <array>

namespace tilt3 {

const Scalar& SlopeValue::value() const {
    if (!finite_) throw std::domain_error("slope is +infinity");
    return value_;
}

GammaClass::GammaClass(CurveClass gamma) : gamma_(std::move(gamma)) {
    gamma_dot_h_ = pair(gamma_.model()->polarization(), gamma_);
    if (gamma_dot_h_.sign() < 0)
        throw std::domain_error("Gamma . H must be nonnegative, got " + gamma_dot_h_.str());
}

SlopeValue mu(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    if (v.v0.is_zero()) return SlopeValue::infinity();
    return SlopeValue(v.v1 / v.v0);
}

void nu_fraction(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta,
                 Scalar& numerator, Scalar& denominator) {
    HContraction v = h_contract(twist(ch, beta));
    numerator = v.v2 - alpha_sq / Scalar(2) * v.v0;
    denominator = v.v1;
}

SlopeValue nu_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta) {
    if (alpha_sq.sign() <= 0) throw std::invalid_argument("nu needs alpha > 0");
    Scalar num, den;
    nu_fraction(ch, alpha_sq, beta, num, den);
    if (den.is_zero()) return SlopeValue::infinity();
    return SlopeValue(num / den);
}

SlopeValue nu(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta) {
    if (alpha.sign() <= 0) throw std::invalid_argument("nu needs alpha > 0");
    return nu_alpha_sq(ch, alpha * alpha, beta);
}

Scalar discriminant(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    return v.v1 * v.v1 - Scalar(2) * v.v0 * v.v2;
}

namespace {

// sqrt of a Scalar that is required to be a nonnegative rational; the
// quadratic-extension arithmetic never needs nested radicals.
Scalar sqrt_nonneg(const Scalar& x, const char* what) {
    if (!x.is_rational())
        throw std::domain_error(std::string(what) + " is irrational; square root would leave "
                                                    "the quadratic extension");
    if (x.sign() < 0) throw std::domain_error(std::string(what) + " is negative: " + x.str());
    return Scalar::sqrt_rational(x.as_rational());
}

}  // namespace

Scalar beta_bar(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    if (v.v0.is_zero()) {
        if (v.v1.is_zero())
            throw std::domain_error("beta_bar undefined: H^3 ch0 = H^2.ch1 = 0");
        return v.v2 / v.v1;
    }
    Scalar root = sqrt_nonneg(discriminant(ch), "discriminant");
    return (v.v1 - root) / v.v0;
}

std::pair<Scalar, Scalar> beta_pm(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    if (v.v0.is_zero()) throw std::domain_error("beta_pm needs ch0 != 0");
    Scalar root = sqrt_nonneg(discriminant(ch) / (v.v0 * v.v0), "discriminant");
    SlopeValue m = mu(ch);
    return {m.value() - root, m.value() + root};
}

WallDescriptor wall_between_triples(const std::array<Scalar, 3>& v,
                                    const std::array<Scalar, 3>& w) {
    // nu(v) = nu(w), cross-multiplied, collapses to
    //   P (alpha^2 + beta^2)/2 - Q beta + R = 0
    // with the three 2x2 minors of the triples:
    Scalar p = v[1] * w[0] - v[0] * w[1];
    Scalar q = v[2] * w[0] - v[0] * w[2];
    Scalar r = v[2] * w[1] - v[1] * w[2];
    if (p.is_zero() && q.is_zero()) {
        // r == 0 means proportional triples (every point solves the
        // equation); r != 0 means no solutions at all.
        throw std::domain_error(r.is_zero() ? "no wall: proportional H-contracted triples"
                                            : "no wall: empty solution locus");
    }
    if (p.is_zero()) return WallDescriptor::vertical(r / q);
    Scalar center = q / p;
    Scalar radius_sq = center * center - Scalar(2) * r / p;
    if (radius_sq.sign() <= 0)
        throw std::domain_error("no wall: semicircle with radius^2 = " + radius_sq.str());
    return WallDescriptor::semicircle(center, radius_sq);
}

namespace {

std::array<Scalar, 3> contract3(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    return {v.v0, v.v1, v.v2};
}

}  // namespace

WallDescriptor wall_between(const ChernCharacter& v, const ChernCharacter& w) {
    require_same_model(v.model(), w.model());
    return wall_between_triples(contract3(v), contract3(w));
}

bool hyperbola_top_check(const ChernCharacter& v, const ChernCharacter& w) {
    WallDescriptor wall = wall_between(v, w);
    if (wall.is_vertical())
        throw std::domain_error("hyperbola_top_check needs a semicircular wall");
    Scalar num, den;
    nu_fraction(v, wall.radius_sq, wall.center_beta, num, den);
    return num.is_zero();
}

Scalar hyperbola_slope(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta) {
    if (alpha.sign() <= 0) throw std::invalid_argument("hyperbola_slope needs alpha > 0");
    HContraction v = h_contract(ch);
    if (v.v0.is_zero()) throw std::domain_error("hyperbola_slope needs ch0 != 0");
    Scalar num, den;
    nu_fraction(ch, alpha * alpha, beta, num, den);
    if (!num.is_zero())
        throw std::domain_error("point is not on the hyperbola nu = 0 (numerator " + num.str() +
                                ")");
    return (beta - mu(ch).value()) / alpha;
}

Scalar gamma_inequality_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq,
                                 const Scalar& beta, const GammaClass& gamma) {
    require_same_model(ch.model(), gamma.model());
    if (alpha_sq.sign() < 0) throw std::invalid_argument("gamma_inequality needs alpha^2 >= 0");
    ChernCharacter t = twist(ch, beta);
    Scalar h2ch1 = pair(t.ch1, div_square(ch.model()->polarization()));
    return t.ch3 - pair(t.ch1, gamma.cycle()) - alpha_sq / Scalar(6) * h2ch1;
}

Scalar gamma_inequality(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta,
                        const GammaClass& gamma) {
    if (alpha.sign() < 0) throw std::invalid_argument("gamma_inequality needs alpha >= 0");
    return gamma_inequality_alpha_sq(ch, alpha * alpha, beta, gamma);
}

Scalar q_form_alpha_sq(const ChernCharacter& ch, const Scalar& alpha_sq, const Scalar& beta,
                       const GammaClass& gamma) {
    require_same_model(ch.model(), gamma.model());
    ChernCharacter t = twist(ch, beta);
    HContraction v = h_contract(t);
    Scalar h3 = ch.model()->h_cubed();
    Scalar gh = gamma.dot_h();
    Scalar gch1 = pair(t.ch1, gamma.cycle());
    Scalar ch0b = t.ch0;  // ch0 is twist-invariant
    return alpha_sq * (discriminant(ch) + Scalar(3) * gh / h3 * v.v0 * v.v0) +
           Scalar(2) * v.v2 * (Scalar(2) * v.v2 - Scalar(3) * gh * ch0b) -
           Scalar(6) * v.v1 * (t.ch3 - gch1);
}

Scalar q_form(const ChernCharacter& ch, const Scalar& alpha, const Scalar& beta,
              const GammaClass& gamma) {
    return q_form_alpha_sq(ch, alpha * alpha, beta, gamma);
}

std::array<Scalar, 3> q_form_wall_triple(const ChernCharacter& ch, const GammaClass& gamma) {
    HContraction v = h_contract(ch);
    Scalar gh = gamma.dot_h();
    Scalar gch1 = pair(ch.ch1, gamma.cycle());
    return {v.v1, Scalar(2) * v.v2 - Scalar(3) * gh * ch.ch0, Scalar(3) * ch.ch3 - Scalar(3) * gch1};
}

Rational li_bound_threshold(const ModelPtr& m) {
    if (!m->fano_index()) throw std::domain_error("li bound needs a Fano index on the model");
    Rational h3 = m->h_cubed().as_rational();
    Rational a = Rational(1) / h3.squared();
    Rational b = Rational(3) / (Rational(2) * Rational(static_cast<long>(*m->fano_index())) * h3);
    return a < b ? a : b;
}

LiBound li_bound_check(const ChernCharacter& ch) {
    HContraction v = h_contract(ch);
    if (v.v0.is_zero()) throw std::domain_error("li_bound_check needs ch0 != 0");
    Scalar disc = discriminant(ch);
    // Numerical signature of O_X shifts and ideal sheaves of points.
    if (disc.is_zero() && ch.ch0.abs() == Scalar(1) && beta_bar(ch).is_zero())
        return LiBound::exempt;
    Scalar lhs = disc / (v.v0 * v.v0);
    return Scalar::compare(lhs, Scalar(li_bound_threshold(ch.model()))) >= 0
               ? LiBound::satisfied
               : LiBound::violated;
}

}  // namespace tilt3
