#include "tilt3/scalar.hpp"

#include <cmath>
#include <ostream>

namespace tilt3 {

Scalar::Scalar(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
    if (d.sign() < 0) throw std::domain_error("negative radicand");
    if (b.is_zero() || d.is_zero()) return;
    // sqrt(p/q) = sqrt(p*q)/q; then pull the square part out of p*q.
    mpz_class pq = d.numerator() * d.denominator();
    mpz_class s, r;
    extract_square_part(pq, s, r);
    Rational scale(s, d.denominator());
    if (r == 1) {
        a_ += b * scale;
        return;
    }
    b_ = b * scale;
    d_ = r;
}

Scalar Scalar::sqrt_rational(const Rational& q) {
    if (q.sign() < 0) throw std::domain_error("sqrt_rational of a negative rational");
    return Scalar(Rational(0), Rational(1), q);
}

const Rational& Scalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("scalar is irrational: " + str());
    return a_;
}

int Scalar::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|sqrt(d) decided by squaring.
    Rational lhs = a_.squared();
    Rational rhs = b_.squared() * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

Scalar Scalar::aligned_to(const Scalar& o) const {
    if (o.b_.is_zero() || o.d_ == d_) return o;
    if (b_.is_zero()) return o;
    Rational ratio = Rational(o.d_) / Rational(d_);
    if (!ratio.is_perfect_square())
        throw IncompatibleRadicands("incompatible radicands sqrt(" + d_.get_str() +
                                    ") vs sqrt(" + o.d_.get_str() + ")");
    // sqrt(o.d) = sqrt(ratio) * sqrt(d)
    Scalar out;
    out.a_ = o.a_;
    out.b_ = o.b_ * ratio.exact_sqrt();
    out.d_ = d_;
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.a_ = -a_;
    out.b_ = -b_;
    out.d_ = d_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar rhs = aligned_to(o);
    if (b_.is_zero()) d_ = rhs.d_;
    a_ += rhs.a_;
    b_ += rhs.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar rhs = aligned_to(o);
    if (b_.is_zero()) d_ = rhs.d_;
    // (a + b sqrt(d))(a' + b' sqrt(d)) = aa' + bb'd + (ab' + a'b) sqrt(d)
    Rational a2 = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d_);
    Rational b2 = a_ * rhs.b_ + rhs.a_ * b_;
    a_ = a2;
    b_ = b2;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    Scalar rhs = b_.is_zero() ? o : aligned_to(o);
    if (b_.is_zero()) d_ = rhs.d_;
    // Multiply by the conjugate; the norm a'^2 - b'^2 d is a nonzero rational.
    Rational norm = rhs.a_.squared() - rhs.b_.squared() * Rational(d_);
    Scalar conj;
    conj.a_ = rhs.a_ / norm;
    conj.b_ = -rhs.b_ / norm;
    conj.d_ = d_;
    return *this *= conj;
}

int Scalar::compare(const Scalar& x, const Scalar& y) {
    if (x.b_.is_zero() || y.b_.is_zero() || x.d_ == y.d_) return (x - y).sign();
    // Distinct square-free radicands: x - y = r + s*sqrt(d1) + t*sqrt(d2).
    // Compare u = s*sqrt(d1) + t*sqrt(d2) against -r by squaring; u^2 lives
    // in the single extension Q(sqrt(d1*d2)).
    Rational r = x.a_ - y.a_;
    const Rational& s = x.b_;
    Rational t = -y.b_;
    int su;
    if (s.sign() == t.sign()) {
        su = s.sign();
    } else {
        Rational ls = s.squared() * Rational(x.d_);
        Rational lt = t.squared() * Rational(y.d_);
        // ls == lt cannot happen for canonical radicands (it would force
        // d1/d2 to be a rational square), but uncanonical fallback radicands
        // can tie; then u = 0 exactly.
        if (ls == lt) return r.sign();
        su = ls > lt ? s.sign() : t.sign();
    }
    Rational k = -r;  // compare u vs k
    if (su > 0 && k.sign() <= 0) return 1;
    if (su < 0 && k.sign() >= 0) return -1;
    Scalar u_sq = Scalar(s.squared() * Rational(x.d_) + t.squared() * Rational(y.d_),
                         s * t * Rational(2), Rational(mpz_class(x.d_ * y.d_)));
    int mag = (u_sq - Scalar(k.squared())).sign();
    return su > 0 ? mag : -mag;
}

mpz_class Scalar::floor() const {
    if (is_rational()) return a_.floor();
    mpz_class guess(std::floor(to_double()));
    while (compare(*this, Scalar(Rational(guess))) < 0) --guess;
    while (compare(*this, Scalar(Rational(mpz_class(guess + 1)))) >= 0) ++guess;
    return guess;
}

double Scalar::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

std::string Scalar::str() const {
    if (is_rational()) return a_.str();
    std::string root = (b_.abs() == Rational(1) ? std::string("sqrt(")
                                                : b_.abs().str() + "*sqrt(") +
                       d_.get_str() + ")";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + root;
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + root;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

// Recursive-descent parser for sums of terms  [+-] rat | rat*sqrt(rat) | sqrt(rat).
struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_word(const std::string& w) {
        skip_ws();
        return s.compare(pos, w.size(), w) == 0;
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (pos == start) throw std::invalid_argument("bad scalar literal: " + s);
        return Rational::parse(s.substr(start, pos - start));
    }

    Scalar parse_term(int sign_in) {
        Rational coeff(sign_in);
        bool have_coeff = false;
        if (!peek_word("sqrt")) {
            coeff = coeff * parse_rational();
            have_coeff = true;
        }
        skip_ws();
        if (have_coeff && !eat('*')) return Scalar(coeff);
        if (!peek_word("sqrt")) throw std::invalid_argument("bad scalar literal: " + s);
        pos += 4;
        if (!eat('(')) throw std::invalid_argument("bad scalar literal: " + s);
        Rational rad = parse_rational();
        if (!eat(')')) throw std::invalid_argument("bad scalar literal: " + s);
        return Scalar(Rational(0), coeff, rad);
    }

    Scalar parse() {
        Scalar acc;
        int sign_next = 1;
        if (eat('+')) sign_next = 1;
        else if (eat('-')) sign_next = -1;
        acc = parse_term(sign_next);
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) sign_next = 1;
            else if (eat('-')) sign_next = -1;
            else throw std::invalid_argument("bad scalar literal: " + s);
            acc += parse_term(sign_next);
        }
        return acc;
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).parse(); }

Scalar arith(const Scalar& x, const Scalar& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::logic_error("unreachable");
}

}  // namespace tilt3
