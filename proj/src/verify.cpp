#include "tilt3/verify.hpp"

#include "tilt3/fano.hpp"
#include "tilt3/model_io.hpp"
#include "tilt3/rr.hpp"
#include "tilt3/tilt.hpp"
#include "tilt3/toric.hpp"

#include <random>
#include <sstream>

namespace tilt3::verify {

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }

// Random small rationals and Chern characters, deterministic per seed.
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Rational rational(long span = 6, long max_den = 4) {
        return Rational(integer(-span, span), integer(1, max_den));
    }
    ChernCharacter chern(const ModelPtr& m) {
        std::vector<Scalar> c1, c2;
        for (size_t i = 0; i < m->picard_rank(); ++i) c1.emplace_back(rational());
        for (size_t i = 0; i < m->curve_rank(); ++i) c2.emplace_back(rational());
        return {Scalar(rational()), m->divisor(c1), m->curve(c2), Scalar(rational())};
    }
};

struct Suite {
    std::vector<CriterionResult> results;
    CriterionResult* current = nullptr;

    void criterion(int number, std::string title) {
        results.push_back({number, std::move(title), {}});
        current = &results.back();
    }

    void check(const std::string& label, bool pass, const std::string& detail = "") {
        current->checks.push_back({label, pass, detail});
    }

    void check_equal(const std::string& label, const Scalar& got, const Scalar& want) {
        bool ok = got == want;
        check(label, ok, ok ? "= " + got.str() : "got " + got.str() + ", want " + want.str());
    }
};

ChernCharacter blowup_line_bundle(const ModelPtr& m, long mm) {
    return ch_line_bundle(Scalar(rat(mm)) * m->named_divisor("h"));
}

ChernCharacter blowup_exceptional_sheaf(const ModelPtr& m) {
    return ch_divisor_sheaf(m->named_divisor("e"));
}

void criterion_beta_bar(Suite& s) {
    s.criterion(1, "beta-bar closed forms on the blow-up of P3 in a point");
    const auto& m = builtin_model("blowup-p3-point").model;
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    for (long mm = -3; mm <= 0; ++mm) {
        Scalar want = (sc(4) + sqrt2) * sc(mm) / sc(7);
        s.check_equal("beta_bar(O(" + std::to_string(mm) + "h))",
                      beta_bar(blowup_line_bundle(m, mm)), want);
    }
    s.check_equal("beta_bar(O(h))", beta_bar(blowup_line_bundle(m, 1)),
                  (sc(4) - sqrt2) / sc(7));
    s.check_equal("beta_bar(O_e)", beta_bar(blowup_exceptional_sheaf(m)), sc(1, 2));
}

void criterion_walls(Suite& s) {
    s.criterion(2, "destabilizing walls O(mh) vs O(mh-e) on the blow-up");
    const auto& m = builtin_model("blowup-p3-point").model;
    auto h = m->named_divisor("h");
    auto e = m->named_divisor("e");
    for (long mm = 2; mm <= 6; ++mm) {
        ChernCharacter v = ch_line_bundle(Scalar(rat(mm)) * h);
        ChernCharacter w = ch_line_bundle(Scalar(rat(mm)) * h - e);
        WallDescriptor wall = wall_between(v, w);
        Scalar want_rsq = (sc(2 * mm * mm - 4 * mm) + sc(7, 4)) / sc(7);
        bool ok = !wall.is_vertical() && wall.center_beta == sc(1, 2) &&
                  wall.radius_sq == want_rsq;
        s.check("wall m=" + std::to_string(mm), ok,
                "center " + wall.center_beta.str() + ", radius_sq " + wall.radius_sq.str());
        s.check("top point on the nu=0 hyperbola, m=" + std::to_string(mm),
                hyperbola_top_check(v, w));
    }
}

void criterion_gamma_inequality(Suite& s) {
    s.criterion(3, "corrected degree-3 inequality closed forms, Gamma = k(h^2+2e^2)");
    const auto& m = builtin_model("blowup-p3-point").model;
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    Scalar k_hi = sc(3, 98) + sc(2, 147) * sqrt2;
    std::vector<std::pair<std::string, Scalar>> ks = {{"1/48", sc(1, 48)},
                                                      {"3/98+2/147*sqrt(2)", k_hi}};
    for (const auto& [kname, k] : ks) {
        GammaClass gamma(k * m->curve({sc(1), sc(2)}));
        for (long mm = -3; mm <= 0; ++mm) {
            ChernCharacter ch = blowup_line_bundle(m, mm);
            Scalar value = gamma_inequality_alpha_sq(ch, sc(0), beta_bar(ch), gamma);
            Scalar want = k_hi * sc(mm * mm * mm) - k * sc(mm);
            std::string label =
                "O(" + std::to_string(mm) + "h), k=" + kname + " at (0, beta_bar)";
            s.check(label, value == want && value.sign() <= 0,
                    "value " + value.str() + (value.sign() <= 0 ? " <= 0" : " > 0"));
        }
        for (long mm = 2; mm <= 6; ++mm) {
            ChernCharacter ch = blowup_line_bundle(m, mm);
            Scalar alpha_sq = (sc(2 * mm * mm - 4 * mm) + sc(7, 4)) / sc(7);
            Scalar value = gamma_inequality_alpha_sq(ch, alpha_sq, sc(1, 2), gamma);
            Scalar want = sc(-mm * mm * mm, 42) + sc(mm * mm, 21) - k * sc(mm);
            std::string label = "O(" + std::to_string(mm) + "h), k=" + kname + " at wall top";
            s.check(label, value == want && value.sign() <= 0,
                    "value " + value.str() + (value.sign() <= 0 ? " <= 0" : " > 0"));
        }
        ChernCharacter oe = blowup_exceptional_sheaf(m);
        Scalar value = gamma_inequality_alpha_sq(oe, sc(0), sc(1, 2), gamma);
        Scalar want = sc(1, 24) - sc(2) * k;
        s.check("O_e, k=" + kname + " at (0, 1/2)", value == want && value.sign() <= 0,
                "value " + value.str());
    }
}

void criterion_index2_constants(Suite& s) {
    s.criterion(4, "index-two constants: C0 for the blow-up, degree-six models");
    Scalar want_c0 = sc(-3, 98) + sc(10, 1323) * Scalar::sqrt_rational(rat(30));
    s.check_equal("C0 (blow-up)", c0_blowup(), want_c0);
    Scalar bstar = blowup_g_minimizer();
    s.check_equal("g_{C0} vanishes at its minimizer", blowup_g(c0_blowup(), bstar), sc(0));
    {
        bool ok = true;
        for (long i = 1; i <= 100; ++i) {
            // samples in (0, 1/sqrt(7)) ~ (0, 0.3779)
            Scalar beta = sc(i * 3, 800);
            auto [f, g] = index2_functions(c0_blowup(), beta);
            if (Scalar::compare(f, g) < 0 || g.sign() < 0) ok = false;
        }
        s.check("f_{C0} >= g_{C0} >= 0 on 100 samples in (0, 1/sqrt(7))", ok);
    }
    for (const char* name : {"p1xp1xp1", "ptp2"}) {
        const auto& m = builtin_model(name).model;
        s.check_equal(std::string(name) + ": H^3 recomputed from model data", m->h_cubed(),
                      sc(6));
        s.check(std::string(name) + ": ch2(T_X) = 0", m->ch2_tangent().is_zero());
        auto td = todd(m);
        bool td2_ok = td.td2 == Scalar(rat(1, 2)) * div_square(m->polarization());
        s.check(std::string(name) + ": td2 = H^2/2", td2_ok);
    }
}

void criterion_index1_constants(Suite& s) {
    s.criterion(5, "index-one constants: g_X roots and beta0");
    for (long h3 = 4; h3 <= 48; h3 += 4) {
        Index1System sys{rat(h3)};
        bool ok = sys.g(sc(0)) == sc(-1, h3) && sys.g(sc(1)) == sc(1, h3) &&
                  sys.g(sc(1, 2)) == sc(0) && index1_constants(rat(h3)).beta0 == sc(1, 2);
        s.check("H^3 = " + std::to_string(h3) + ": g_X(0), g_X(1), beta0 = 1/2", ok);
    }
    {
        Index1System sys{rat(54)};
        IndexOneConstants k = sys.constants();
        s.check_equal("H^3 = 54: beta0", k.beta0, sc(2, 3));
        s.check_equal("H^3 = 54: g_X(beta0) = 0", sys.g(k.beta0), sc(0));
        bool hl = true;
        for (long i = 0; i <= 20; ++i) {
            Scalar beta = k.beta0 * sc(i, 20);
            if (Scalar::compare(sys.h(k.c0, beta), sys.l(k.c0, beta)) < 0) hl = false;
        }
        s.check("H^3 = 54: h_{X,C0} >= l_{X,C0} on [0, beta0]", hl);
        // Dropping C0 by epsilon must break one of the defining constraints.
        for (const Rational& eps : {rat(1, 1000), rat(1, 1000000)}) {
            Scalar c = k.c0 - Scalar(eps);
            bool violated = Scalar::compare(c * sc(54), sc(54) / sc(12) + sc(2)) < 0;
            for (long i = 0; i <= 200 && !violated; ++i)
                if (sys.f(c, sc(i, 200)).sign() < 0) violated = true;
            for (long i = 0; i <= 200 && !violated; ++i) {
                Scalar beta = k.beta0 * sc(i, 200);
                if (sys.l(c, beta).sign() < 0) violated = true;
            }
            s.check("H^3 = 54: C0 - " + eps.str() + " violates a constraint", violated,
                    "C0 = " + k.c0.str());
        }
    }
}

void criterion_hrr(Suite& s) {
    s.criterion(6, "Riemann-Roch suite: chi(O_X), twisted P3 values, pairing identities");
    for (const auto& entry : builtin_models()) {
        const auto& m = entry.model;
        s.check_equal(m->name() + ": chi(O_X)", euler_char(ch_structure(m)), sc(1));
        s.check(m->name() + ": model validates", validate_model(m).empty());
    }
    {
        const auto& p3 = builtin_model("p3").model;
        bool ok = true;
        for (long n = -3; n <= 3; ++n) {
            Scalar got = euler_char(ch_line_bundle(Scalar(rat(n)) * p3->named_divisor("h")));
            Scalar want = sc((n + 1) * (n + 2) * (n + 3), 6);
            if (got != want) ok = false;
        }
        s.check("P3: chi(O(n)) = (n+1)(n+2)(n+3)/6 for n in -3..3", ok);
    }
    Rng rng(20240517);
    for (const char* name : {"blowup-p3-point", "p1xp1xp1", "ptp2"}) {
        const auto& m = builtin_model(name).model;
        ChernCharacter oh = ch_line_bundle(m->polarization());
        Scalar h3 = m->h_cubed();
        Scalar hch2t = pair(m->polarization(), m->ch2_tangent());
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            ChernCharacter e = rng.chern(m);
            Scalar lhs = euler_pair(oh, e);
            Scalar rhs = e.ch3 - pair(e.ch1, m->ch2_tangent()) / sc(12) +
                         (hch2t - sc(2) * h3 + sc(12)) / sc(12) * e.ch0;
            ok = lhs == rhs && lhs == euler_char(tensor_line(e, -m->polarization()));
        }
        s.check(std::string(name) + ": index-2 chi(O(H), E) closed form, 100 random classes",
                ok);
    }
    for (const char* name : {"p1xp2", "blowup-p3-line"}) {
        const auto& m = builtin_model(name).model;
        ChernCharacter oh = ch_line_bundle(m->polarization());
        ToddClass td = todd(m);
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i) {
            ChernCharacter e = rng.chern(m);
            Scalar lhs = euler_pair(oh, e);
            Scalar rhs = e.ch3 - pair(m->polarization(), e.ch2) / sc(2) +
                         pair(e.ch1, td.td2) - e.ch0;
            ok = lhs == rhs;
        }
        s.check(std::string(name) + ": index-1 chi(O(H), E) closed form, 100 random classes",
                ok);
    }
}

void criterion_toric_tangent(Suite& s) {
    s.criterion(7, "toric tangent data cross-check");
    for (const auto& tv : builtin_toric()) {
        try {
            tangent_chern(tv);
            s.check(tv.model->name() + ": prod(1 + D_rho) matches stored tangent data", true);
        } catch (const std::exception& ex) {
            s.check(tv.model->name() + ": prod(1 + D_rho) matches stored tangent data", false,
                    ex.what());
        }
    }
}

void criterion_frobenius(Suite& s) {
    s.criterion(8, "Frobenius pushforward decompositions on P1 x P2");
    const auto& tv = builtin_toric_model("p1xp2");
    for (const auto& any : builtin_toric()) {
        bool ok = true;
        for (unsigned long m = 1; m <= 6; ++m) {
            auto dec = frobenius_decompose(any, std::vector<long>(any.model->picard_rank(), 0), m);
            if (dec.total_multiplicity() != m * m * m) ok = false;
        }
        s.check(any.model->name() + ": sum eta_j = m^3 for m in 1..6", ok);
    }
    {
        bool ok = true;
        for (unsigned long m = 2; m <= 8; ++m)
            if (frobenius_decompose(tv, {0, 0}, m).multiplicity_of({0, 1}) != m - 1) ok = false;
        s.check("eta(f) = m - 1 for m in 2..8", ok);
    }
    {
        std::vector<unsigned long> range;
        for (unsigned long m = 3; m <= 12; ++m) range.push_back(m);
        auto deg = [&](std::vector<long> cls) { return growth_exponent(tv, {0, 0}, cls, range); };
        s.check("growth degree 3 for h+f", deg({1, 1}) == 3);
        s.check("growth degree 3 for 2h+f", deg({2, 1}) == 3);
        s.check("growth degree 2 for h", deg({1, 0}) == 2);
        s.check("growth degree 2 for 2h", deg({2, 0}) == 2);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& d : std::vector<std::vector<long>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}})
            for (unsigned long m = 1; m <= 4; ++m) {
                auto [lhs, rhs] = pushforward_chi_check(tv, d, m);
                if (lhs != rhs) {
                    ok = false;
                    detail = "lhs " + lhs.str() + " != rhs " + rhs.str();
                }
            }
        s.check("chi(m* O(D)) = sum eta_j chi(L_j, O(D)), D in {0,h,f,h+f}, m in 1..4", ok,
                detail);
    }
}

void criterion_admissibility(Suite& s) {
    s.criterion(9, "polarization admissibility");
    const auto& p1p2 = builtin_toric_model("p1xp2");
    Rng rng(987);
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        long a = rng.integer(1, 9), b = rng.integer(1, 9);
        auto h = Scalar(rat(a)) * p1p2.model->named_divisor("h") +
                 Scalar(rat(b)) * p1p2.model->named_divisor("f");
        if (!admissible_polarization(p1p2, h).admissible) ok = false;
    }
    s.check("P1 x P2: admissible for 5 random positive polarizations", ok);

    const auto& bl = builtin_toric_model("blowup-p3-line");
    auto h = bl.model->named_divisor("h");
    auto f = bl.model->named_divisor("f");
    s.check("blow-up of P3 in a line: h + f admissible",
            admissible_polarization(bl, h + f).admissible);
    auto res = admissible_polarization(bl, sc(3) * h + f);
    bool witness_ok = false;
    std::string detail = res.reason;
    if (!res.admissible && !res.witness.empty()) {
        DivisorClass d = bl.model->divisor(res.witness);
        Scalar q = triple(sc(3) * h + f, d, d);
        witness_ok = q.sign() < 0;
        detail = "witness D with H.D^2 = " + q.str();
    }
    s.check("blow-up of P3 in a line: 3h + f inadmissible with explicit witness",
            !res.admissible && witness_ok, detail);
}

void criterion_properties(Suite& s) {
    s.criterion(10, "structural properties: walls, Q-form, monotonicity, Dirichlet");
    const auto& m = builtin_model("blowup-p3-point").model;
    Rng rng(4242);

    auto random_gamma = [&]() {
        // retry until Gamma.H >= 0
        while (true) {
            try {
                return GammaClass(m->curve({Scalar(rng.rational()), Scalar(rng.rational())}));
            } catch (const std::domain_error&) {
            }
        }
    };
    // rational betas strictly inside the diameter of a semicircle:
    // |t| <= (k/(k+1)) r^2/(1+r^2) < r
    auto inside_offset = [](const WallDescriptor& w, long num, long den) {
        return Scalar(rat(num, den)) * w.radius_sq / (Scalar(1) + w.radius_sq);
    };

    // Wall soundness: nu(v) = nu(w) exactly at sampled wall points.
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 200 && made < 8; ++tries) {
            ChernCharacter v = rng.chern(m), w = rng.chern(m);
            WallDescriptor wall;
            try {
                wall = wall_between(v, w);
            } catch (const std::domain_error&) {
                continue;
            }
            if (wall.is_vertical()) continue;
            ++made;
            for (int i = 1; i <= 20 && ok; ++i) {
                Scalar beta = wall.center_beta + inside_offset(wall, 2 * i - 21, 22);
                Scalar alpha_sq = wall.radius_sq - (beta - wall.center_beta).squared();
                if (alpha_sq.sign() <= 0) continue;
                Scalar nv, dv, nw, dw;
                nu_fraction(v, alpha_sq, beta, nv, dv);
                nu_fraction(w, alpha_sq, beta, nw, dw);
                if (nv * dw != nw * dv) ok = false;
            }
        }
        s.check("wall soundness: slope equality at 20 points on 8 random walls",
                ok && made == 8);
    }

    // Nested walls: two semicircular walls for the same v coincide or are
    // disjoint as slope-equality loci. Geometrically the two circles may
    // still cross when disc(v) < 0, but only at the single point where the
    // slope of v degenerates to 0/0, which no wall contains; for disc >= 0
    // the circles themselves stay disjoint.
    {
        bool ok = true;
        int made = 0, made_nonneg = 0;
        for (int tries = 0; tries < 600 && (made < 20 || made_nonneg < 10); ++tries) {
            ChernCharacter v = rng.chern(m);
            ChernCharacter w1 = rng.chern(m), w2 = rng.chern(m);
            WallDescriptor a, b;
            try {
                a = wall_between(v, w1);
                b = wall_between(v, w2);
            } catch (const std::domain_error&) {
                continue;
            }
            if (a.is_vertical() || b.is_vertical()) continue;
            bool disc_nonneg = discriminant(v).sign() >= 0;
            if (made >= 20 && !disc_nonneg) continue;
            ++made;
            made_nonneg += disc_nonneg;
            if (a.center_beta == b.center_beta && a.radius_sq == b.radius_sq) continue;
            // distinct circles centered on the axis miss each other in
            // alpha > 0 iff d^2 <= (r1 - r2)^2 or d^2 >= (r1 + r2)^2
            Scalar dsq = (a.center_beta - b.center_beta).squared();
            Scalar sum_sq = a.radius_sq + b.radius_sq;
            Scalar cross =
                sc(2) * Scalar::sqrt_rational((a.radius_sq * b.radius_sq).as_rational());
            bool geom_disjoint = Scalar::compare(dsq, sum_sq - cross) <= 0 ||
                                 Scalar::compare(dsq, sum_sq + cross) >= 0;
            if (geom_disjoint) continue;
            if (disc_nonneg) {
                ok = false;
                continue;
            }
            // The crossing must be exactly the 0/0 point of v.
            Scalar beta0 = ((a.radius_sq - b.radius_sq) / (b.center_beta - a.center_beta) +
                            a.center_beta + b.center_beta) /
                           sc(2);
            Scalar alpha_sq = a.radius_sq - (beta0 - a.center_beta).squared();
            Scalar num, den;
            nu_fraction(v, alpha_sq, beta0, num, den);
            if (!num.is_zero() || !den.is_zero()) ok = false;
        }
        s.check("nested walls: wall pairs coincide or share no slope-equality point",
                ok && made >= 20 && made_nonneg >= 10);
    }

    // Hyperbola-top on sampled wall pairs.
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 400 && made < 20; ++tries) {
            ChernCharacter v = rng.chern(m), w = rng.chern(m);
            try {
                WallDescriptor wall = wall_between(v, w);
                if (wall.is_vertical()) continue;
                ++made;
                if (!hyperbola_top_check(v, w)) ok = false;
            } catch (const std::domain_error&) {
                continue;
            }
        }
        s.check("hyperbola meets 20 random semicircular walls at their top points",
                ok && made == 20);
    }

    // Twist invariance of the discriminant.
    {
        bool ok = true;
        for (int i = 0; i < 50 && ok; ++i) {
            ChernCharacter ch = rng.chern(m);
            if (discriminant(twist(ch, Scalar(rng.rational()))) != discriminant(ch)) ok = false;
        }
        s.check("discriminant is twist-invariant on 50 random classes", ok);
    }

    // Q-form vanishing locus is the predicted wall.
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 400 && made < 10; ++tries) {
            ChernCharacter ch = rng.chern(m);
            GammaClass gamma = random_gamma();
            WallDescriptor wall;
            try {
                HContraction hv = h_contract(ch);
                wall = wall_between_triples({hv.v0, hv.v1, hv.v2}, q_form_wall_triple(ch, gamma));
            } catch (const std::domain_error&) {
                continue;
            }
            if (wall.is_vertical()) continue;
            ++made;
            for (int i = 1; i <= 6 && ok; ++i) {
                Scalar beta = wall.center_beta + inside_offset(wall, 2 * i - 7, 8);
                Scalar alpha_sq = wall.radius_sq - (beta - wall.center_beta).squared();
                if (alpha_sq.sign() <= 0) continue;
                if (!q_form_alpha_sq(ch, alpha_sq, beta, gamma).is_zero()) ok = false;
                if (q_form_alpha_sq(ch, alpha_sq + sc(1), beta, gamma).is_zero()) ok = false;
            }
        }
        s.check("Q-form vanishes exactly on its predicted wall (10 random classes)",
                ok && made == 10);
    }

    // On the hyperbola nu = 0, Q = -6 (H^2.ch1^b) * (degree-3 inequality LHS).
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 500 && made < 20; ++tries) {
            ChernCharacter ch = rng.chern(m);
            GammaClass gamma = random_gamma();
            HContraction hv = h_contract(ch);
            if (hv.v0.is_zero()) continue;
            Scalar beta = Scalar(rng.rational());
            Scalar num, den;
            nu_fraction(ch, sc(0), beta, num, den);
            Scalar alpha_sq = sc(2) * num / hv.v0;
            if (alpha_sq.sign() <= 0) continue;
            ++made;
            Scalar q = q_form_alpha_sq(ch, alpha_sq, beta, gamma);
            Scalar g = gamma_inequality_alpha_sq(ch, alpha_sq, beta, gamma);
            Scalar h2ch1b = h_contract(twist(ch, beta)).v1;
            if (q != sc(-6) * h2ch1b * g) ok = false;
        }
        s.check("on nu = 0: Q = -6 (H^2.ch1^b) x inequality value (20 random points)",
                ok && made == 20);
    }

    // Monotonicity along the hyperbola as alpha decreases.
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 500 && made < 10; ++tries) {
            ChernCharacter ch = rng.chern(m);
            if (ch.ch0.sign() <= 0) continue;
            Scalar disc = discriminant(ch);
            if (disc.sign() <= 0 || !disc.is_rational()) continue;
            GammaClass gamma = random_gamma();
            HContraction hv = h_contract(ch);
            Scalar bbar = beta_bar(ch);
            ++made;
            Scalar prev;
            bool have_prev = false;
            // walk up the left branch: beta -> beta_bar, alpha -> 0
            for (int i = 1; i <= 8; ++i) {
                Scalar beta = bbar - sc(9 - i, 6);
                Scalar num, den;
                nu_fraction(ch, sc(0), beta, num, den);
                Scalar alpha_sq = sc(2) * num / hv.v0;
                if (alpha_sq.sign() <= 0) continue;
                Scalar value = -gamma_inequality_alpha_sq(ch, alpha_sq, beta, gamma);
                if (have_prev && Scalar::compare(value, prev) > 0) ok = false;
                prev = value;
                have_prev = true;
            }
        }
        s.check(
            "Gamma.ch1^b + (a^2/6) H^2.ch1^b - ch3^b non-increasing as alpha drops (10 classes)",
            ok && made == 10);
    }

    // beta_bar flips sign under the shifted derived dual.
    {
        bool ok = true;
        int made = 0;
        for (int tries = 0; tries < 500 && made < 25; ++tries) {
            ChernCharacter ch = rng.chern(m);
            if (ch.ch0.is_zero()) continue;
            Scalar disc = discriminant(ch);
            if (disc.sign() < 0 || !disc.is_rational()) continue;
            ++made;
            if (beta_bar(dual_shift(ch)) != -beta_bar(ch)) ok = false;
        }
        s.check("beta_bar(dual_shift) = -beta_bar on 25 random classes", ok && made == 25);
    }

    // Dirichlet approximation, exact bound.
    {
        Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
        std::vector<std::pair<std::string, Scalar>> xs = {
            {"sqrt(2)", sqrt2}, {"(4-sqrt(2))/7", (sc(4) - sqrt2) / sc(7)}};
        for (const auto& [name, x] : xs) {
            auto conv = dirichlet_approx(x, 8);
            bool ok = conv.size() == 8;
            mpz_class prev_q = 0;
            Scalar prev_err;
            bool have_prev = false;
            for (const auto& [p, q] : conv) {
                if (q <= prev_q) ok = false;
                prev_q = q;
                Scalar err = (x - Scalar(Rational(p, q))).abs();
                if (Scalar::compare(err, Scalar(Rational(mpz_class(1), q * q))) >= 0) ok = false;
                if (have_prev && Scalar::compare(err, prev_err) >= 0) ok = false;
                prev_err = err;
                have_prev = true;
            }
            s.check("Dirichlet bound |x - p/q| < 1/q^2 for 8 convergents of " + name, ok,
                    ok ? "last q = " + prev_q.get_str() : "");
        }
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    Suite s;
    criterion_beta_bar(s);
    criterion_walls(s);
    criterion_gamma_inequality(s);
    criterion_index2_constants(s);
    criterion_index1_constants(s);
    criterion_hrr(s);
    criterion_toric_tangent(s);
    criterion_frobenius(s);
    criterion_admissibility(s);
    criterion_properties(s);
    return s.results;
}

}  // namespace tilt3::verify
