#include "tilt3/toric.hpp"

#include "tilt3/fano.hpp"
#include "tilt3/rr.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tilt3;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }

}  // namespace

TEST_CASE("builtin fans validate") {
    CHECK(builtin_toric().size() == 5);
    for (const auto& tv : builtin_toric()) {
        CAPTURE(tv.model->name());
        CHECK(validate_fan(tv.fan).empty());
        CHECK(validate_toric(tv).empty());
    }
}

TEST_CASE("broken fans are reported") {
    ToricFan p3 = builtin_toric_model("p3").fan;
    p3.max_cones.pop_back();
    auto violations = validate_fan(p3);
    REQUIRE(!violations.empty());
    bool facet = false;
    for (const auto& v : violations)
        if (v.find("expected 2") != std::string::npos) facet = true;
    CHECK(facet);

    ToricFan bad = builtin_toric_model("p3").fan;
    bad.rays[0] = {2, 0, 0};  // not primitive, cones not unimodular
    violations = validate_fan(bad);
    CHECK(violations.size() >= 2);
}

TEST_CASE("tangent data from the fan matches the stored model data") {
    for (const auto& tv : builtin_toric()) {
        CAPTURE(tv.model->name());
        auto [c1, ch2] = tangent_chern(tv);
        CHECK(c1 == tv.model->c1_tangent());
        CHECK(ch2 == tv.model->ch2_tangent());
    }
    // blow-up at a point: 2h^2 + 2e^2; products: 2 (pullbacks cancel)
    const auto& bl = builtin_toric_model("blowup-p3-point");
    CHECK(bl.model->ch2_tangent() == bl.model->curve({sc(2), sc(2)}));
    // triple products: P3 has ch2(T) = 2 h^2
    const auto& p3 = builtin_toric_model("p3");
    CHECK(p3.model->ch2_tangent() == p3.model->curve({sc(2)}));
    // corrupted tangent data throws
    ToricThreefold broken = bl;
    auto data = bl.model->data();
    data.name = "broken";
    data.ch2_tangent = {rat(2), rat(1)};
    broken.model = ThreefoldModel::create(data);
    CHECK_THROWS_AS(tangent_chern(broken), std::domain_error);
}

TEST_CASE("frobenius decomposition tables on P1 x P2") {
    const auto& tv = builtin_toric_model("p1xp2");
    auto dec2 = frobenius_decompose(tv, {0, 0}, 2);
    CHECK(dec2.total_multiplicity() == 8);
    CHECK(dec2.multiplicity_of({0, 0}) == 1);
    CHECK(dec2.multiplicity_of({0, 1}) == 1);
    CHECK(dec2.multiplicity_of({1, 0}) == 3);
    CHECK(dec2.multiplicity_of({1, 1}) == 3);

    auto dec3 = frobenius_decompose(tv, {0, 0}, 3);
    CHECK(dec3.total_multiplicity() == 27);
    CHECK(dec3.multiplicity_of({0, 0}) == 1);
    CHECK(dec3.multiplicity_of({0, 1}) == 2);
    CHECK(dec3.multiplicity_of({1, 0}) == 7);
    CHECK(dec3.multiplicity_of({1, 1}) == 14);
    CHECK(dec3.multiplicity_of({2, 0}) == 1);
    CHECK(dec3.multiplicity_of({2, 1}) == 2);

    for (unsigned long m = 2; m <= 8; ++m)
        CHECK(frobenius_decompose(tv, {0, 0}, m).multiplicity_of({0, 1}) == m - 1);
    CHECK(frobenius_decompose(tv, {0, 0}, 1).summands.size() == 1);
}

TEST_CASE("decomposition is independent of ray order") {
    ToricThreefold tv = builtin_toric_model("p1xp2");
    ToricThreefold permuted = tv;
    std::vector<size_t> perm = {4, 2, 0, 3, 1};
    for (size_t i = 0; i < perm.size(); ++i) {
        permuted.fan.rays[i] = tv.fan.rays[perm[i]];
        permuted.ray_classes[i] = tv.ray_classes[perm[i]];
    }
    std::vector<size_t> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    for (size_t c = 0; c < tv.fan.max_cones.size(); ++c)
        for (int k = 0; k < 3; ++k)
            permuted.fan.max_cones[c][k] = inv[tv.fan.max_cones[c][k]];
    REQUIRE(validate_toric(permuted).empty());
    for (unsigned long m = 1; m <= 5; ++m) {
        auto a = frobenius_decompose(tv, {1, 1}, m);
        auto b = frobenius_decompose(permuted, {1, 1}, m);
        REQUIRE(a.summands.size() == b.summands.size());
        for (size_t i = 0; i < a.summands.size(); ++i) {
            CHECK(a.summands[i].class_vector == b.summands[i].class_vector);
            CHECK(a.summands[i].multiplicity == b.summands[i].multiplicity);
        }
    }
}

TEST_CASE("growth exponents") {
    const auto& tv = builtin_toric_model("p1xp2");
    std::vector<unsigned long> range;
    for (unsigned long m = 3; m <= 12; ++m) range.push_back(m);
    CHECK(growth_exponent(tv, {0, 0}, {0, 1}, range) == 1);
    CHECK(growth_exponent(tv, {0, 0}, {1, 0}, range) == 2);
    CHECK(growth_exponent(tv, {0, 0}, {2, 0}, range) == 2);
    CHECK(growth_exponent(tv, {0, 0}, {1, 1}, range) == 3);
    CHECK(growth_exponent(tv, {0, 0}, {2, 1}, range) == 3);
    CHECK(growth_exponent(tv, {0, 0}, {0, 0}, range) == 0);
    CHECK_THROWS_AS(growth_exponent(tv, {0, 0}, {9, 9}, range), std::domain_error);
    std::vector<unsigned long> tiny = {2, 3};
    CHECK_THROWS_AS(growth_exponent(tv, {0, 0}, {0, 1}, tiny), std::invalid_argument);
    // non-consecutive ranges use the log-ratio fit
    std::vector<unsigned long> sparse = {3, 5, 7, 9, 11, 12};
    CHECK(growth_exponent(tv, {0, 0}, {1, 1}, sparse) == 3);
    CHECK(growth_exponent(tv, {0, 0}, {1, 0}, sparse) == 2);
    CHECK(growth_exponent(tv, {0, 0}, {0, 1}, sparse) == 1);
}

TEST_CASE("copositivity decision with certificates") {
    using Mat = std::vector<std::vector<Rational>>;
    auto R = [](long n) { return Rational(n); };
    CHECK(copositive(Mat{{R(0), R(1)}, {R(1), R(0)}}, nullptr));
    CHECK(copositive(Mat{{R(1), R(-1)}, {R(-1), R(1)}}, nullptr));  // PSD
    CHECK(copositive(Mat{{R(1), R(5)}, {R(5), R(1)}}, nullptr));    // indefinite but copositive
    std::vector<Rational> w;
    CHECK(!copositive(Mat{{R(0), R(-1)}, {R(-1), R(0)}}, &w));
    CHECK(!copositive(Mat{{R(1), R(-3)}, {R(-3), R(1)}}, &w));
    CHECK(!copositive(Mat{{R(-1)}}, &w));
    CHECK(w == std::vector<Rational>{R(1)});
    // 3x3: the Horn-like matrix is copositive
    Mat horn = {{R(1), R(-1), R(1)}, {R(-1), R(1), R(-1)}, {R(1), R(-1), R(1)}};
    CHECK(copositive(horn, nullptr));
    Mat bad3 = {{R(1), R(0), R(-2)}, {R(0), R(1), R(0)}, {R(-2), R(0), R(1)}};
    CHECK(!copositive(bad3, &w));
}

TEST_CASE("polarization admissibility") {
    const auto& p1p2 = builtin_toric_model("p1xp2");
    auto h = p1p2.model->named_divisor("h");
    auto f = p1p2.model->named_divisor("f");
    CHECK(admissible_polarization(p1p2, sc(1) * h + sc(1) * f).admissible);
    CHECK(admissible_polarization(p1p2, sc(7) * h + sc(2) * f).admissible);

    const auto& bl = builtin_toric_model("blowup-p3-line");
    auto bh = bl.model->named_divisor("h");
    auto bf = bl.model->named_divisor("f");
    CHECK(admissible_polarization(bl, bh + bf).admissible);
    CHECK(admissible_polarization(bl, sc(1) * bh + sc(3) * bf).admissible);  // a <= b
    auto res = admissible_polarization(bl, sc(3) * bh + bf);
    REQUIRE(!res.admissible);
    DivisorClass witness = bl.model->divisor(res.witness);
    CHECK(triple(sc(3) * bh + bf, witness, witness).sign() < 0);
    // the exceptional divisor h - f is the natural witness
    CHECK(witness == bh - bf);
}

TEST_CASE("dirichlet approximation") {
    Scalar sqrt2 = Scalar::sqrt_rational(rat(2));
    auto conv = dirichlet_approx(sqrt2, 4);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0] == std::pair<mpz_class, mpz_class>{1, 1});
    CHECK(conv[1] == std::pair<mpz_class, mpz_class>{3, 2});
    CHECK(conv[2] == std::pair<mpz_class, mpz_class>{7, 5});
    CHECK(conv[3] == std::pair<mpz_class, mpz_class>{17, 12});

    Scalar x = (sc(4) - sqrt2) / sc(7);
    auto conv2 = dirichlet_approx(x, 8);
    mpz_class prev_q = 0;
    Scalar prev_err;
    bool have_prev = false;
    for (const auto& [p, q] : conv2) {
        CHECK(q > prev_q);
        prev_q = q;
        Scalar err = (x - Scalar(Rational(p, q))).abs();
        CHECK(Scalar::compare(err, Scalar(Rational(mpz_class(1), q * q))) < 0);
        if (have_prev) CHECK(Scalar::compare(err, prev_err) < 0);
        prev_err = err;
        have_prev = true;
    }
    CHECK_THROWS_AS(dirichlet_approx(sc(3, 2), 3), std::domain_error);
}

TEST_CASE("pushforward chi bookkeeping") {
    const auto& tv = builtin_toric_model("p1xp2");
    for (const auto& d : std::vector<std::vector<long>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}})
        for (unsigned long m = 1; m <= 4; ++m) {
            auto [lhs, rhs] = pushforward_chi_check(tv, d, m);
            CAPTURE(d[0]);
            CAPTURE(d[1]);
            CAPTURE(m);
            CHECK(lhs == rhs);
        }
    auto [lhs, rhs] = pushforward_chi_check(tv, {1, 0}, 2);
    CHECK(lhs == sc(6));  // chi(O(2h)) on P1 x P2
    auto [l1, r1] = pushforward_chi_check(tv, {0, 0}, 2);
    CHECK(l1 == sc(1));
    // m = 1 is the identity decomposition
    auto dec = frobenius_decompose(tv, {0, 0}, 1);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].class_vector == std::vector<long>{0, 0});
    CHECK(dec.summands[0].multiplicity == 1);
}

TEST_CASE("sum of multiplicities is m cubed everywhere") {
    for (const auto& tv : builtin_toric())
        for (unsigned long m = 1; m <= 6; ++m) {
            auto dec =
                frobenius_decompose(tv, std::vector<long>(tv.model->picard_rank(), 0), m);
            CHECK(dec.total_multiplicity() == m * m * m);
        }
}
