#include "tilt3/tilt.hpp"

#include "tilt3/fano.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tilt3;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }

const ModelPtr& blowup() { return builtin_model("blowup-p3-point").model; }

ChernCharacter line(long mh) { return ch_line_bundle(sc(mh) * blowup()->named_divisor("h")); }

ChernCharacter o_e() { return ch_divisor_sheaf(blowup()->named_divisor("e")); }

ChernCharacter random_chern(std::mt19937& gen, const ModelPtr& m) {
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    std::vector<Scalar> c1, c2;
    for (size_t i = 0; i < m->picard_rank(); ++i) c1.push_back(sc(num(-5, 5), num(1, 3)));
    for (size_t i = 0; i < m->curve_rank(); ++i) c2.push_back(sc(num(-5, 5), num(1, 3)));
    return {sc(num(-5, 5), num(1, 3)), m->divisor(c1), m->curve(c2), sc(num(-5, 5), num(1, 3))};
}

}  // namespace

TEST_CASE("slope mu") {
    CHECK(mu(line(1)) == SlopeValue(sc(4, 7)));
    CHECK(mu(ch_structure(blowup())) == SlopeValue(sc(0)));
    CHECK(!mu(o_e()).is_finite());
    CHECK(SlopeValue(sc(1000000)) < SlopeValue::infinity());
}

TEST_CASE("tilt slope nu") {
    const auto& p3 = builtin_model("p3").model;
    CHECK(nu(ch_structure(p3), sc(1), sc(-1)) == SlopeValue(sc(0)));
    // points of 7 a^2 - 7 b^2 + 8 m b - 2 m^2 = 0 are nu(O(mh)) = 0
    for (long mm : {1L, 2L, 3L}) {
        // pick beta rational, solve a^2 = beta^2 - (8m/7) beta + 2m^2/7
        Scalar beta = sc(mm) * sc(5, 4);
        Scalar alpha_sq =
            beta * beta - sc(8 * mm, 7) * beta + sc(2 * mm * mm, 7);
        if (alpha_sq.sign() > 0) CHECK(nu_alpha_sq(line(mm), alpha_sq, beta) == SlopeValue(sc(0)));
    }
    ChernCharacter torsion{sc(0), blowup()->zero_divisor(), blowup()->curve({sc(1), sc(0)}),
                           sc(0)};
    CHECK(!nu(torsion, sc(1), sc(0)).is_finite());
    CHECK_THROWS_AS(nu(line(1), sc(0), sc(0)), std::invalid_argument);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(line(1)) == sc(2));
    CHECK(discriminant(ch_line_bundle(blowup()->polarization())) == sc(0));
    std::mt19937 gen(43);
    for (int i = 0; i < 40; ++i) {
        ChernCharacter ch = random_chern(gen, blowup());
        Scalar beta = sc(std::uniform_int_distribution<long>(-6, 6)(gen),
                         std::uniform_int_distribution<long>(1, 4)(gen));
        CHECK(discriminant(twist(ch, beta)) == discriminant(ch));
        long a = std::uniform_int_distribution<long>(-3, 3)(gen);
        CHECK(discriminant(tensor_line(ch, sc(a) * blowup()->polarization())) ==
              discriminant(ch));
    }
}

TEST_CASE("beta_bar closed forms") {
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    for (long mm = -3; mm <= 0; ++mm)
        CHECK(beta_bar(line(mm)) == (sc(4) + sqrt2) * sc(mm) / sc(7));
    CHECK(beta_bar(line(1)) == (sc(4) - sqrt2) / sc(7));
    CHECK(beta_bar(o_e()) == sc(1, 2));
    // postcondition: H.ch2^{beta_bar} = 0
    for (long mm : {-2L, 1L, 3L}) {
        ChernCharacter ch = line(mm);
        CHECK(pair(blowup()->polarization(), twist(ch, beta_bar(ch)).ch2).is_zero());
    }
    ChernCharacter both_zero{sc(0), blowup()->zero_divisor(), blowup()->curve({sc(0), sc(1)}),
                             sc(0)};
    CHECK_THROWS_AS(beta_bar(both_zero), std::domain_error);
}

TEST_CASE("beta_pm") {
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    auto [lo, hi] = beta_pm(line(1));
    CHECK(lo == (sc(4) - sqrt2) / sc(7));
    CHECK(hi == (sc(4) + sqrt2) / sc(7));
    auto [l2, h2] = beta_pm(ch_line_bundle(blowup()->polarization()));
    CHECK(l2 == h2);
    CHECK(l2 == mu(ch_line_bundle(blowup()->polarization())).value());
    auto [l3, h3] = beta_pm(ch_structure(blowup()));
    CHECK(l3 == sc(0));
    CHECK(h3 == sc(0));
    CHECK_THROWS_AS(beta_pm(o_e()), std::domain_error);
    // nu_{0,beta} numerator vanishes at both roots
    for (long mm : {1L, 2L}) {
        auto [bl, bh] = beta_pm(line(mm));
        for (const Scalar& b : {bl, bh}) {
            Scalar num, den;
            nu_fraction(line(mm), sc(0), b, num, den);
            CHECK(num.is_zero());
        }
    }
}

TEST_CASE("wall between O(2h) and O(2h-e)") {
    auto h = blowup()->named_divisor("h");
    auto e = blowup()->named_divisor("e");
    WallDescriptor wall = wall_between(line(2), ch_line_bundle(sc(2) * h - e));
    REQUIRE(!wall.is_vertical());
    CHECK(wall.center_beta == sc(1, 2));
    CHECK(wall.radius_sq == sc(1, 4));
}

TEST_CASE("vertical wall against a point-like class") {
    // w with H^3 ch0 = H^2.ch1 = 0 but H.ch2 != 0 forces beta = v1/v0
    ChernCharacter w{sc(0), blowup()->zero_divisor(), blowup()->curve({sc(1), sc(-1)}), sc(0)};
    REQUIRE(h_contract(w).v1.is_zero());
    REQUIRE(!h_contract(w).v2.is_zero());
    ChernCharacter v = line(3);
    WallDescriptor wall = wall_between(v, w);
    REQUIRE(wall.is_vertical());
    CHECK(wall.beta_wall == h_contract(v).v1 / h_contract(v).v0);
    // slope equality holds along the ray (both slopes infinite there)
    for (long a = 1; a <= 5; ++a) {
        Scalar alpha_sq = sc(a, 2);
        Scalar nv, dv, nw, dw;
        nu_fraction(v, alpha_sq, wall.beta_wall, nv, dv);
        nu_fraction(w, alpha_sq, wall.beta_wall, nw, dw);
        CHECK(nv * dw == nw * dv);
        CHECK(dv.is_zero());
        CHECK(!nu_alpha_sq(v, alpha_sq, wall.beta_wall).is_finite());
        CHECK(!nu_alpha_sq(w, alpha_sq, wall.beta_wall).is_finite());
    }
}

TEST_CASE("proportional classes have no wall") {
    ChernCharacter v = line(2);
    CHECK_THROWS_AS(wall_between(v, v), std::domain_error);
    CHECK_THROWS_AS(wall_between(v, scale(sc(2), v)), std::domain_error);
}

TEST_CASE("hyperbola top point and slope") {
    auto h = blowup()->named_divisor("h");
    auto e = blowup()->named_divisor("e");
    CHECK(hyperbola_top_check(line(2), ch_line_bundle(sc(2) * h - e)));
    // nu(O(2h)) at (1/2, 1/2): numerator m^2 - 4 m b + 7/2 b^2 - 7/2 a^2 = 0
    Scalar num, den;
    nu_fraction(line(2), sc(1, 4), sc(1, 2), num, den);
    CHECK(num.is_zero());

    // Apex at beta = mu exists on negative-discriminant classes, where the
    // branch alpha^2 = (beta - mu)^2 - disc/v0^2 has its minimum; the slope
    // there is 0.
    ChernCharacter v{sc(1), blowup()->zero_divisor(), blowup()->curve({sc(1), sc(0)}), sc(0)};
    REQUIRE(discriminant(v).sign() < 0);
    REQUIRE(mu(v).value() == sc(0));
    Scalar alpha = Scalar::sqrt_rational(rat(4, 7));  // alpha^2 = 2 v2/v0 at beta = 0
    CHECK(hyperbola_slope(v, alpha, sc(0)) == sc(0));
    CHECK_THROWS_AS(hyperbola_slope(v, sc(1), sc(100)), std::domain_error);
}

TEST_CASE("hyperbola slope agrees with a finite-difference oracle") {
    ChernCharacter v = line(2);
    HContraction hv = h_contract(v);
    double v0 = hv.v0.to_double(), v1 = hv.v1.to_double(), v2 = hv.v2.to_double();
    auto alpha_of = [&](double beta) {
        return std::sqrt(beta * beta - 2 * (v1 / v0) * beta + 2 * (v2 / v0));
    };
    int checked = 0;
    for (long tenth : {-5L, -2L, 1L}) {
        Rational rb(tenth, 10);
        Scalar sb(rb);
        Scalar alpha_sq = sb * sb - sc(2) * (hv.v1 / hv.v0) * sb + sc(2) * hv.v2 / hv.v0;
        REQUIRE(alpha_sq.sign() > 0);
        Scalar alpha = Scalar::sqrt_rational(alpha_sq.as_rational());
        double exact = hyperbola_slope(v, alpha, sb).to_double();
        double b0 = rb.to_double();
        double h = 1e-6;
        double numeric = (alpha_of(b0 + h) - alpha_of(b0 - h)) / (2 * h);
        CHECK(std::abs(exact - numeric) < 1e-8);
        ++checked;
    }
    CHECK(checked == 3);
}

TEST_CASE("gamma inequality closed forms") {
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    Scalar k = sc(1, 48);
    GammaClass gamma(k * blowup()->curve({sc(1), sc(2)}));
    CHECK(gamma.dot_h().is_zero());
    for (long mm = -3; mm <= 0; ++mm) {
        ChernCharacter ch = line(mm);
        Scalar got = gamma_inequality_alpha_sq(ch, sc(0), beta_bar(ch), gamma);
        CHECK(got == (sc(3, 98) + sc(2, 147) * sqrt2) * sc(mm * mm * mm) - k * sc(mm));
    }
    CHECK(gamma_inequality_alpha_sq(o_e(), sc(0), sc(1, 2), gamma) == sc(1, 24) - sc(2) * k);
    // Gamma = 0, O_X at (alpha, 0) evaluates to zero
    GammaClass zero = GammaClass::zero(blowup());
    CHECK(gamma_inequality(ch_structure(blowup()), sc(3, 2), sc(0), zero) == sc(0));
    // constructor rejects Gamma.H < 0
    CHECK_THROWS_AS(GammaClass(blowup()->curve({sc(0), sc(1)})), std::domain_error);
}

TEST_CASE("q form on P3 structure sheaf vanishes identically") {
    const auto& p3 = builtin_model("p3").model;
    GammaClass zero = GammaClass::zero(p3);
    std::mt19937 gen(47);
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    for (int i = 0; i < 25; ++i) {
        Scalar alpha = sc(num(1, 9), num(1, 3));
        Scalar beta = sc(num(-9, 9), num(1, 3));
        CHECK(q_form(ch_structure(p3), alpha, beta, zero) == sc(0));
    }
}

TEST_CASE("q form vanishing locus is the predicted wall") {
    std::mt19937 gen(53);
    const auto& m = blowup();
    int made = 0;
    for (int tries = 0; tries < 200 && made < 5; ++tries) {
        ChernCharacter ch = random_chern(gen, m);
        GammaClass gamma = [&]() {
            while (true) {
                try {
                    auto num = [&](long lo, long hi) {
                        return std::uniform_int_distribution<long>(lo, hi)(gen);
                    };
                    return GammaClass(m->curve({sc(num(0, 4), num(1, 3)), sc(num(0, 4), num(1, 3))}));
                } catch (const std::domain_error&) {
                }
            }
        }();
        WallDescriptor wall;
        try {
            HContraction hv = h_contract(ch);
            wall = wall_between_triples({hv.v0, hv.v1, hv.v2}, q_form_wall_triple(ch, gamma));
        } catch (const std::domain_error&) {
            continue;
        }
        if (wall.is_vertical()) continue;
        ++made;
        Scalar beta = wall.center_beta + wall.radius_sq / (sc(2) * (sc(1) + wall.radius_sq));
        Scalar alpha_sq = wall.radius_sq - (beta - wall.center_beta).squared();
        REQUIRE(alpha_sq.sign() > 0);
        CHECK(q_form_alpha_sq(ch, alpha_sq, beta, gamma).is_zero());
        CHECK(!q_form_alpha_sq(ch, alpha_sq + sc(2), beta, gamma).is_zero());
    }
    CHECK(made == 5);
}

TEST_CASE("li bound") {
    CHECK(li_bound_check(line(1)) == LiBound::satisfied);  // 2/49 >= 1/49
    CHECK(li_bound_threshold(blowup()) == rat(1, 49));
    CHECK(li_bound_check(ch_structure(blowup())) == LiBound::exempt);
    CHECK(li_bound_check(dual_shift(ch_structure(blowup()))) == LiBound::exempt);
    CHECK(li_bound_threshold(builtin_model("p3").model) == rat(3, 8));
    CHECK(li_bound_threshold(builtin_model("q3").model) == rat(1, 4));  // min{1/4, 1/4}
    CHECK_THROWS_AS(li_bound_check(o_e()), std::domain_error);
    // an ideal-sheaf-of-points signature: (1, 0, 0, -n) is exempt
    ChernCharacter ideal{sc(1), blowup()->zero_divisor(), blowup()->zero_curve(), sc(-3)};
    CHECK(li_bound_check(ideal) == LiBound::exempt);
    // rank 7 with disc = 16: 16/2401 < 1/49, no exemption applies
    ChernCharacter thin{sc(7), blowup()->named_divisor("h"), blowup()->zero_curve(), sc(0)};
    REQUIRE(discriminant(thin) == sc(16));
    CHECK(li_bound_check(thin) == LiBound::violated);
}

TEST_CASE("irrational discriminants refuse the square root") {
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    ChernCharacter ch{sqrt2, blowup()->named_divisor("h"), blowup()->curve({sc(1), sc(0)}),
                      sc(0)};
    REQUIRE(!discriminant(ch).is_rational());
    CHECK_THROWS_AS(beta_bar(ch), std::domain_error);
    CHECK_THROWS_AS(beta_pm(ch), std::domain_error);
}

TEST_CASE("twist equivariance of nu under tensoring by multiples of H") {
    std::mt19937 gen(59);
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    const auto& m = blowup();
    for (int i = 0; i < 30; ++i) {
        ChernCharacter ch = random_chern(gen, m);
        long a = num(-3, 3);
        Scalar alpha = sc(num(1, 6), num(1, 3));
        Scalar beta = sc(num(-6, 6), num(1, 3));
        CHECK(nu(ch, alpha, beta) == nu(tensor_line(ch, sc(a) * m->polarization()), alpha,
                                        beta + sc(a)));
    }
}
