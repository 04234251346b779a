#pragma once

#include "tilt3/rational.hpp"

#include <iosfwd>
#include <string>

namespace tilt3 {

/// Two scalars live in incompatible quadratic extensions; the computation
/// has to be restructured so that only one radicand is in play at a time.
class IncompatibleRadicands : public std::domain_error {
public:
    explicit IncompatibleRadicands(const std::string& what) : std::domain_error(what) {}
};

/// Exact real number of the form a + b*sqrt(d) with a, b rational.
///
/// The radicand is kept canonical: a nonnegative square-free integer, and 0
/// exactly when the value is rational. Square factors are pulled out on
/// construction (sqrt(8/49) becomes 2/7*sqrt(2)), so equal values have equal
/// representations and equality is syntactic.
///
/// Addition, subtraction, multiplication and division require compatible
/// radicands (equal up to a rational square factor) and throw
/// IncompatibleRadicands otherwise; mixing extensions is rejected rather than
/// widened to a degree-4 field. Sign determination and three-way comparison
/// are total: they work across extensions through exact squaring case
/// analysis and never consult floating point.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : a_(n) {}
    Scalar(const Rational& q) : a_(q) {}
    /// Value a + b*sqrt(d); d must be >= 0. Canonicalizes the radicand.
    Scalar(const Rational& a, const Rational& b, const Rational& d);

    /// Exact square root of a rational q >= 0: rational when q is a perfect
    /// square, otherwise the canonical b*sqrt(d).
    static Scalar sqrt_rational(const Rational& q);

    /// Parses "p/q", "b*sqrt(d)", "a + b*sqrt(d)", "a - sqrt(d)", ...
    static Scalar parse(const std::string& text);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    /// Canonical radicand as an integer (0 for rational values).
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Requires is_rational().
    const Rational& as_rational() const;

    /// Exact sign in {-1, 0, +1}, decided by rational comparisons only.
    int sign() const;
    /// Exact three-way comparison, total across radicands.
    static int compare(const Scalar& x, const Scalar& y);

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    Scalar squared() const { return *this * *this; }

    /// Exact floor (uses a float estimate only as a starting guess, then
    /// corrects with exact comparisons).
    mpz_class floor() const;

    double to_double() const;

    /// "p/q" for rationals, otherwise "a + b*sqrt(d)" / "b*sqrt(d)".
    /// parse(str()) round-trips exactly.
    std::string str() const;

private:
    // Rewrites o in terms of this->d_ if the radicands differ by a rational
    // square; throws IncompatibleRadicands otherwise.
    Scalar aligned_to(const Scalar& o) const;

    Rational a_;
    Rational b_;
    mpz_class d_ = 0;  // square-free, 0 iff b_ == 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithOp { add, sub, mul, div };

/// Uniform entry point mirroring the four operators.
Scalar arith(const Scalar& x, const Scalar& y, ArithOp op);

}  // namespace tilt3
