#include "tilt3/scalar.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tilt3;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar(rat(n, d)); }
Scalar root(long n, long d = 1) { return Scalar::sqrt_rational(rat(n, d)); }

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4, 9).is_perfect_square());
    CHECK(Rational(4, 9).exact_sqrt() == Rational(2, 3));
    CHECK(!Rational(8, 9).is_perfect_square());
}

TEST_CASE("square part extraction") {
    mpz_class s, r;
    extract_square_part(mpz_class(8), s, r);
    CHECK(s == 2);
    CHECK(r == 2);
    extract_square_part(mpz_class(49), s, r);
    CHECK(s == 7);
    CHECK(r == 1);
    extract_square_part(mpz_class(0), s, r);
    CHECK(r == 0);
    // large square times a square-free part
    extract_square_part(mpz_class("123456789123456789") * mpz_class("123456789123456789") * 30,
                        s, r);
    CHECK(s == mpz_class("123456789123456789"));
    CHECK(r == 30);
}

TEST_CASE("conjugate product and sum") {
    Scalar x(rat(1), rat(1), rat(2));   // 1 + sqrt(2)
    Scalar y(rat(1), rat(-1), rat(2));  // 1 - sqrt(2)
    CHECK(arith(x, y, ArithOp::mul) == sc(-1));
    Scalar a(rat(4, 7), rat(1, 7), rat(2));
    Scalar b(rat(4, 7), rat(-1, 7), rat(2));
    CHECK(arith(a, b, ArithOp::add) == sc(8, 7));
}

TEST_CASE("radicand canonicalization") {
    CHECK(Scalar(rat(0), rat(1), rat(8, 49)) == Scalar(rat(0), rat(2, 7), rat(2)));
    CHECK(root(4, 9) == sc(2, 3));
    CHECK(root(2, 49) == Scalar(rat(0), rat(1, 7), rat(2)));
    CHECK(root(0) == sc(0));
    CHECK(root(18) == Scalar(rat(0), rat(3), rat(2)));
    CHECK(root(1, 2) == Scalar(rat(0), rat(1, 2), rat(2)));  // sqrt(1/2) = sqrt(2)/2
    CHECK_THROWS_AS(Scalar::sqrt_rational(rat(-1)), std::domain_error);
}

TEST_CASE("decimal evaluation of the blow-up constant") {
    // 10/1323 sqrt(30) - 3/98 ~ 0.01079, bracketed by rational interval
    // arithmetic: 5477/1000 < sqrt(30) < 5478/1000.
    Scalar c0 = Scalar(rat(-3, 98), rat(10, 1323), rat(30));
    Rational lo = rat(10, 1323) * rat(5477, 1000) - rat(3, 98);
    Rational hi = rat(10, 1323) * rat(5478, 1000) - rat(3, 98);
    CHECK(Rational(5477, 1000).squared() < rat(30));
    CHECK(rat(30) < Rational(5478, 1000).squared());
    CHECK(Scalar::compare(Scalar(lo), c0) < 0);
    CHECK(Scalar::compare(c0, Scalar(hi)) < 0);
    CHECK(lo > rat(1, 100));  // so c0 > 0.01
    CHECK(hi < rat(109, 10000));
    CHECK(c0.to_double() == doctest::Approx(0.01079).epsilon(1e-3));
}

TEST_CASE("exact sign by squaring") {
    CHECK(Scalar(rat(0), rat(0), rat(2)).sign() == 0);
    // 3/98 - (2/147) sqrt(2): compare (3/98)^2 = 9/9604 vs (2/147)^2 * 2 = 8/21609
    CHECK(rat(9, 9604) > rat(8, 21609));
    CHECK(Scalar(rat(3, 98), rat(-2, 147), rat(2)).sign() > 0);
    CHECK(Scalar(rat(-3, 98), rat(10, 1323), rat(30)).sign() > 0);
    CHECK(Scalar(rat(3, 98), rat(-10, 1323), rat(30)).sign() < 0);
    // exact zero from an uncanonical combination: 2 - sqrt(4)
    CHECK(Scalar(rat(2), rat(-1), rat(4)).sign() == 0);
}

TEST_CASE("arithmetic requires compatible radicands") {
    Scalar a(rat(0), rat(1), rat(2));
    Scalar b(rat(0), rat(1), rat(3));
    CHECK_THROWS_AS(a * b, IncompatibleRadicands);
    CHECK_THROWS_AS(a + b, IncompatibleRadicands);
    // compatible up to a square factor: sqrt(8) = 2 sqrt(2)
    CHECK(Scalar(rat(0), rat(1), rat(8)) + a == Scalar(rat(0), rat(3), rat(2)));
    CHECK_THROWS_AS(a / Scalar(rat(0)), std::domain_error);
}

TEST_CASE("total comparison across radicands") {
    Scalar s2 = root(2), s3 = root(3);
    CHECK(Scalar::compare(s2, s3) < 0);
    CHECK(Scalar::compare(s3 + sc(1), s2 + sc(1)) > 0);
    // 1 + sqrt(2) vs sqrt(3) + 1/2: 2.414... vs 2.232...
    CHECK(Scalar::compare(sc(1) + s2, s3 + sc(1, 2)) > 0);
    // sqrt(2) + 2 vs sqrt(3) + sqrt(3)/3: 3.414 vs 2.309
    CHECK(Scalar::compare(s2 + sc(2), s3 + s3 / sc(3)) > 0);
    // equal values, different spellings
    CHECK(Scalar::compare(root(8), sc(2) * s2) == 0);
    // negative branch
    CHECK(Scalar::compare(-s2, -s3) > 0);
    CHECK(Scalar::compare(sc(-1) - s2, sc(-1) - s3) > 0);  // negation flips order
}

TEST_CASE("floor of quadratic irrationals") {
    CHECK(root(2).floor() == 1);
    CHECK((-root(2)).floor() == -2);
    CHECK((sc(4) - root(2)).floor() == 2);
    CHECK(((sc(4) - root(2)) / sc(7)).floor() == 0);
    CHECK(sc(-7, 2).floor() == -4);
}

TEST_CASE("serialization round-trips exactly") {
    std::vector<Scalar> samples = {
        sc(0), sc(5), sc(-22, 7), root(2), -root(2), sc(1) + root(2),
        Scalar(rat(-3, 98), rat(10, 1323), rat(30)),
        Scalar(rat(4, 7), rat(-1, 7), rat(2)),
    };
    for (const auto& s : samples) CHECK(Scalar::parse(s.str()) == s);
    CHECK(Scalar::parse("4/7 - 1/7*sqrt(2)") == Scalar(rat(4, 7), rat(-1, 7), rat(2)));
    CHECK(Scalar::parse("sqrt(9)") == sc(3));
    CHECK(Scalar::parse("-sqrt(2)") == -root(2));
    CHECK(Scalar::parse("1/2") == sc(1, 2));
    CHECK_THROWS_AS(Scalar::parse("sqrt(2) + sqrt(3)"), IncompatibleRadicands);
    CHECK_THROWS_AS(Scalar::parse("walrus"), std::invalid_argument);
}

TEST_CASE("field axioms on random values") {
    std::mt19937 gen(7);
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    const long rads[] = {0, 2, 30};
    for (int i = 0; i < 300; ++i) {
        long d = rads[num(0, 2)];
        auto rnd = [&]() {
            return Scalar(rat(num(-8, 8), num(1, 5)), rat(num(-8, 8), num(1, 5)), rat(d));
        };
        Scalar x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x - x == sc(0));
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x.sign() * y.sign() == (x * y).sign());
        CHECK((x.sign() == 0) == (x == sc(0)));
    }
}

TEST_CASE("sqrt squared is the identity on nonnegative rationals") {
    std::mt19937 gen(11);
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    for (int i = 0; i < 200; ++i) {
        Rational q(num(0, 400), num(1, 40));
        Scalar s = Scalar::sqrt_rational(q);
        CHECK(s * s == Scalar(q));
        CHECK(s.sign() >= 0);
    }
}

TEST_CASE("float evaluation agrees with exact sign away from zero") {
    std::mt19937 gen(13);
    auto num = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); };
    const long rads[] = {0, 2, 30};
    for (int i = 0; i < 500; ++i) {
        Scalar x(rat(num(-9, 9), num(1, 7)), rat(num(-9, 9), num(1, 7)), rat(rads[num(0, 2)]));
        double v = x.to_double();
        if (std::abs(v) > 1e-6) {
            CHECK((v > 0 ? 1 : -1) == x.sign());
        }
    }
}
