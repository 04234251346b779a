#include "tilt3/fano.hpp"

#include "tilt3/rr.hpp"

#include <doctest.h>

using namespace tilt3;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }

}  // namespace

TEST_CASE("database contents") {
    const auto& db = builtin_models();
    CHECK(db.size() == 7);
    for (const auto& e : db) {
        CAPTURE(e.model->name());
        CHECK(validate_model(e.model).empty());
        CHECK(todd(e.model).td3 == sc(1));
        CHECK(e.gamma.dot_h().sign() >= 0);
    }
    CHECK_THROWS_AS(builtin_model("p2"), std::invalid_argument);
}

TEST_CASE("gamma_for reproduces the stored cycles") {
    for (const auto& e : builtin_models()) {
        GammaClass g = gamma_for(e);
        CHECK(g.cycle() == e.gamma.cycle());
        if (e.model->picard_rank() == 1) CHECK(g.cycle().is_zero());
    }
    // product-type index-2 entries carry Gamma = 0
    CHECK(builtin_model("p1xp1xp1").gamma.cycle().is_zero());
    CHECK(builtin_model("ptp2").gamma.cycle().is_zero());
    // the blow-up carries (h^2+e^2)/6 + C0 H^2
    const auto& bl = builtin_model("blowup-p3-point");
    Scalar c0 = c0_blowup();
    CurveClass want = Scalar(rat(1, 6)) * bl.model->curve({sc(1), sc(1)}) +
                      c0 * div_square(bl.model->polarization());
    CHECK(bl.gamma.cycle() == want);
    CHECK(bl.gamma.dot_h() == sc(1, 6) + sc(7) * c0);
}

TEST_CASE("index-two blow-up constant") {
    Scalar want(rat(-3, 98), rat(10, 1323), rat(30));
    CHECK(c0_blowup() == want);
    Scalar bstar = blowup_g_minimizer();
    CHECK(bstar == (sc(-3) + Scalar::sqrt_rational(rat(30))) / sc(21));
    // 21 b^2 + 6 b - 1 = 0 at the minimizer
    CHECK(sc(21) * bstar * bstar + sc(6) * bstar - sc(1) == sc(0));
    CHECK(blowup_g(c0_blowup(), bstar) == sc(0));
    // g_{C0} >= 0 and f_{C0} >= g_{C0} on (0, 1/sqrt(7))
    for (long i = 1; i <= 100; ++i) {
        Scalar beta = sc(3 * i, 800);
        auto [f, g] = index2_functions(c0_blowup(), beta);
        CHECK(g.sign() >= 0);
        CHECK(Scalar::compare(f, g) >= 0);
    }
    // minimality: any smaller constant goes negative somewhere
    CHECK(blowup_g(c0_blowup() - sc(1, 100000), bstar).sign() < 0);
}

TEST_CASE("index-one system") {
    for (long h3 = 4; h3 <= 48; ++h3) {
        Index1System sys{rat(h3)};
        CHECK(sys.g(sc(0)) == sc(-1, h3));
        CHECK(sys.g(sc(1)) == sc(1, h3));
        CHECK(sys.g(sc(1, 2)) == sc(0));  // forced by the displayed form
        CHECK(index1_constants(rat(h3)).beta0 == sc(1, 2));
    }
    CHECK_THROWS_AS(index1_constants(rat(3)), std::domain_error);

    IndexOneConstants k54 = index1_constants(rat(54));
    CHECK(k54.beta0 == sc(2, 3));
    CHECK(k54.c0 == sc(1));  // the l-constraint at beta = 0 is binding
    Index1System sys54{rat(54)};
    CHECK(sys54.l(k54.c0, sc(0)) == sc(0));
    CHECK(Scalar::compare(k54.c0, sc(1, 8)) >= 0);
    CHECK(Scalar::compare(k54.c0 * sc(54), sc(54, 12) + sc(2)) >= 0);

    // beta0 becomes the larger quadratic root past 48, rational at 50 and 54
    CHECK(index1_constants(rat(50)).beta0 == sc(3, 5));
    // irrational case stays exact: H^3 = 52 gives (1 + sqrt(1/13))/2
    IndexOneConstants k52 = index1_constants(rat(52));
    CHECK(k52.beta0 == (sc(1) + Scalar::sqrt_rational(rat(1, 13))) / sc(2));
    CHECK(sys54.g(k54.beta0) == sc(0));
    CHECK(Index1System{rat(52)}.g(k52.beta0) == sc(0));
}

TEST_CASE("index-one gamma construction") {
    for (const char* name : {"p1xp2", "blowup-p3-line"}) {
        const auto& e = builtin_model(name);
        const auto& m = e.model;
        IndexOneConstants k = index1_constants(m->h_cubed().as_rational());
        CurveClass want = k.c0 * div_square(m->polarization()) - todd(m).td2;
        CHECK(e.gamma.cycle() == want);
        // Gamma.H = C0 H^3 - H.td2 = 54 - 13/2
        CHECK(e.gamma.dot_h() == sc(95, 2));
    }
}

TEST_CASE("h >= l on the index-one interval") {
    Index1System sys{rat(54)};
    IndexOneConstants k = sys.constants();
    for (long i = 0; i <= 40; ++i) {
        Scalar beta = k.beta0 * sc(i, 40);
        CHECK(Scalar::compare(sys.h(k.c0, beta), sys.l(k.c0, beta)) >= 0);
        CHECK(sys.f(k.c0, beta).sign() >= 0);
        CHECK(sys.l(k.c0, beta).sign() >= 0);
    }
}
