#include "tilt3/fano.hpp"

#include <algorithm>
#include <map>

namespace tilt3 {

namespace {

// Dense polynomial with rational coefficients, coeffs[k] * x^k.
using Poly = std::vector<Rational>;

Scalar eval(const Poly& p, const Scalar& x) {
    Scalar acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

Poly derivative(const Poly& p) {
    Poly out;
    for (size_t k = 1; k < p.size(); ++k) out.push_back(Rational(mpz_class(k)) * p[k]);
    return out;
}

// Real roots of a polynomial of degree <= 2; roots of quadratics live in the
// quadratic extension of the discriminant.
std::vector<Scalar> low_degree_roots(const Poly& p) {
    Poly q = p;
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.size() <= 1) return {};  // constant: no isolated roots worth reporting
    if (q.size() == 2) return {Scalar(-q[0] / q[1])};
    if (q.size() != 3) throw std::logic_error("root solver limited to degree 2");
    Rational a = q[2], b = q[1], c = q[0];
    Rational disc = b.squared() - Rational(4) * a * c;
    if (disc.sign() < 0) return {};
    Scalar root = Scalar::sqrt_rational(disc);
    Scalar two_a = Scalar(Rational(2) * a);
    if (disc.is_zero()) return {Scalar(-b) / two_a};
    return {(Scalar(-b) - root) / two_a, (Scalar(-b) + root) / two_a};
}

// Exact minimum of p over [lo, hi]: candidates are the endpoints and the
// critical points inside. Comparisons are total across radicands.
Scalar min_on_interval(const Poly& p, const Scalar& lo, const Scalar& hi) {
    std::vector<Scalar> candidates{lo, hi};
    for (const Scalar& r : low_degree_roots(derivative(p)))
        if (Scalar::compare(lo, r) <= 0 && Scalar::compare(r, hi) <= 0) candidates.push_back(r);
    Scalar best = eval(p, candidates.front());
    for (size_t i = 1; i < candidates.size(); ++i) {
        Scalar v = eval(p, candidates[i]);
        if (Scalar::compare(v, best) < 0) best = v;
    }
    return best;
}

Scalar max_scalar(std::initializer_list<Scalar> xs) {
    Scalar best = *xs.begin();
    for (const Scalar& x : xs)
        if (Scalar::compare(x, best) > 0) best = x;
    return best;
}

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

Rational rat(long n, long d = 1) { return Rational(n, d); }

ThreefoldModel::Data base(std::string name, std::vector<std::string> dbasis,
                          std::vector<std::string> cbasis) {
    ThreefoldModel::Data d;
    d.name = std::move(name);
    d.divisor_basis = std::move(dbasis);
    d.curve_basis = std::move(cbasis);
    return d;
}

ModelPtr make_p3() {
    auto d = base("p3", {"h"}, {"h2"});
    d.pairing = {{rat(1)}};
    d.product = {{rats({rat(1)})}};
    d.c1_tangent = {rat(4)};
    d.ch2_tangent = {rat(2)};
    d.polarization = {rat(1)};
    d.fano_index = 4;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_quadric() {
    // Hyperplane class h with h^3 = 2; curve basis the line class l, h.l = 1.
    auto d = base("q3", {"h"}, {"l"});
    d.pairing = {{rat(1)}};
    d.product = {{rats({rat(2)})}};  // h^2 = 2l
    d.c1_tangent = {rat(3)};
    d.ch2_tangent = {rat(1)};  // ch2(T) = h^2/2 = l
    d.polarization = {rat(1)};
    d.fano_index = 3;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_p1p1p1() {
    // h_i the pullbacks of points; curve basis l_i = h_j.h_k dual to h_i.
    auto d = base("p1xp1xp1", {"h1", "h2", "h3"}, {"l1", "l2", "l3"});
    d.pairing = {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    auto zero = rats({rat(0), rat(0), rat(0)});
    d.product = {{zero, rats({rat(0), rat(0), rat(1)}), rats({rat(0), rat(1), rat(0)})},
                 {rats({rat(0), rat(0), rat(1)}), zero, rats({rat(1), rat(0), rat(0)})},
                 {rats({rat(0), rat(1), rat(0)}), rats({rat(1), rat(0), rat(0)}), zero}};
    d.c1_tangent = {rat(2), rat(2), rat(2)};
    d.ch2_tangent = {rat(0), rat(0), rat(0)};
    d.polarization = {rat(1), rat(1), rat(1)};
    d.fano_index = 2;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_ptp2() {
    // The P^1-bundle P(T_{P^2}), a (1,1)-divisor in P^2 x P^2; a, b are the
    // two hyperplane pullbacks. Triples: a^3 = b^3 = 0, a^2 b = a b^2 = 1;
    // numerically a.b = a^2 + b^2.
    auto d = base("ptp2", {"a", "b"}, {"a2", "b2"});
    d.pairing = {{rat(0), rat(1)}, {rat(1), rat(0)}};
    d.product = {{rats({rat(1), rat(0)}), rats({rat(1), rat(1)})},
                 {rats({rat(1), rat(1)}), rats({rat(0), rat(1)})}};
    d.c1_tangent = {rat(2), rat(2)};
    d.ch2_tangent = {rat(0), rat(0)};
    d.polarization = {rat(1), rat(1)};
    d.fano_index = 2;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_blowup_point() {
    // Blow-up of P^3 in a point: h the hyperplane pullback, e the
    // exceptional divisor, with e^3 = h^3 = 1 and h.e = 0.
    auto d = base("blowup-p3-point", {"h", "e"}, {"h2", "e2"});
    d.pairing = {{rat(1), rat(0)}, {rat(0), rat(1)}};
    d.product = {{rats({rat(1), rat(0)}), rats({rat(0), rat(0)})},
                 {rats({rat(0), rat(0)}), rats({rat(0), rat(1)})}};
    d.c1_tangent = {rat(4), rat(-2)};
    d.ch2_tangent = {rat(2), rat(2)};
    d.polarization = {rat(2), rat(-1)};  // H = 2h - e
    d.fano_index = 2;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_blowup_line() {
    // Blow-up of P^3 along a line: h the hyperplane pullback, f the fiber
    // class of the induced P^2-bundle over P^1. Triples: h^3 = h^2 f = 1,
    // h f^2 = f^3 = 0; f.f = 0 as a cycle.
    auto d = base("blowup-p3-line", {"h", "f"}, {"h2", "hf"});
    d.pairing = {{rat(1), rat(1)}, {rat(1), rat(0)}};
    d.product = {{rats({rat(1), rat(0)}), rats({rat(0), rat(1)})},
                 {rats({rat(0), rat(1)}), rats({rat(0), rat(0)})}};
    d.c1_tangent = {rat(3), rat(1)};
    // From the toric tangent computation ch2(T) = (sum D_rho^2)/2.
    d.ch2_tangent = {rat(3, 2), rat(-1)};
    d.polarization = {rat(3), rat(1)};  // H = -K
    d.fano_index = 1;
    return ThreefoldModel::create(std::move(d));
}

ModelPtr make_p1p2() {
    // P^1 x P^2: h from P^2, f from P^1; h^3 = 0, h^2 f = 1, f.f = 0.
    auto d = base("p1xp2", {"h", "f"}, {"h2", "hf"});
    d.pairing = {{rat(0), rat(1)}, {rat(1), rat(0)}};
    d.product = {{rats({rat(1), rat(0)}), rats({rat(0), rat(1)})},
                 {rats({rat(0), rat(1)}), rats({rat(0), rat(0)})}};
    d.c1_tangent = {rat(3), rat(2)};
    d.ch2_tangent = {rat(3, 2), rat(0)};
    d.polarization = {rat(3), rat(2)};  // H = -K
    d.fano_index = 1;
    return ThreefoldModel::create(std::move(d));
}

CurveClass td2_of(const ModelPtr& m) {
    CurveClass c1_sq = div_square(m->c1_tangent());
    return Scalar(Rational(1, 24)) * (Scalar(3) * c1_sq - Scalar(2) * m->ch2_tangent());
}

GammaClass gamma_rank1(const ModelPtr& m) { return GammaClass::zero(m); }

GammaClass gamma_blowup_point(const ModelPtr& m) {
    // (h^2 + e^2)/6 + C0 H^2
    Scalar c0 = c0_blowup();
    CurveClass base = m->curve({Scalar(Rational(1, 6)), Scalar(Rational(1, 6))});
    return GammaClass(base + c0 * div_square(m->polarization()));
}

GammaClass gamma_index1(const ModelPtr& m) {
    IndexOneConstants k = index1_constants(m->h_cubed().as_rational());
    return GammaClass(k.c0 * div_square(m->polarization()) - td2_of(m));
}

std::vector<FanoEntry> build_database() {
    std::vector<FanoEntry> db;
    auto p3 = make_p3();
    auto q3 = make_quadric();
    auto p111 = make_p1p1p1();
    auto ptp2 = make_ptp2();
    auto blpt = make_blowup_point();
    auto blline = make_blowup_line();
    auto p1p2 = make_p1p2();
    db.push_back({p3, gamma_rank1(p3), "Picard rank 1 (Gamma = 0)"});
    db.push_back({q3, gamma_rank1(q3), "Picard rank 1 (Gamma = 0)"});
    db.push_back({p111, GammaClass::zero(p111), "index 2, product type (Gamma = 0)"});
    db.push_back({ptp2, GammaClass::zero(ptp2), "index 2, projective bundle (Gamma = 0)"});
    db.push_back({blpt, gamma_blowup_point(blpt), "index 2, blow-up of P3 in a point"});
    db.push_back({blline, gamma_index1(blline), "index 1 (Gamma = C0 H^2 - td2)"});
    db.push_back({p1p2, gamma_index1(p1p2), "index 1 (Gamma = C0 H^2 - td2)"});
    return db;
}

}  // namespace

const std::vector<FanoEntry>& builtin_models() {
    static const std::vector<FanoEntry> db = build_database();
    return db;
}

const FanoEntry& builtin_model(const std::string& name) {
    for (const auto& e : builtin_models())
        if (e.model->name() == name) return e;
    throw std::invalid_argument("unknown builtin model '" + name + "'");
}

GammaClass gamma_for(const FanoEntry& entry) {
    const ModelPtr& m = entry.model;
    if (m->picard_rank() == 1) return gamma_rank1(m);
    if (!m->fano_index()) throw std::domain_error("entry without Fano index is not classified");
    if (*m->fano_index() == 2) {
        if (m->name() == "blowup-p3-point") return gamma_blowup_point(m);
        return GammaClass::zero(m);
    }
    if (*m->fano_index() == 1) return gamma_index1(m);
    throw std::domain_error("no Gamma construction for model " + m->name());
}

Scalar blowup_g(const Scalar& c, const Scalar& beta) {
    Scalar b2 = beta * beta;
    return b2 / Scalar(2) + c + beta / Scalar(6) * (Scalar(7) * b2 - Scalar(1));
}

Scalar blowup_f(const Scalar& c, const Scalar& beta) {
    Scalar b2 = beta * beta;
    return Scalar(7) * (b2 / Scalar(2) + c) * (Scalar(1) - beta) / Scalar(2) +
           beta / Scalar(6) * (Scalar(7) * b2 - Scalar(1));
}

std::pair<Scalar, Scalar> index2_functions(const Scalar& c, const Scalar& beta) {
    return {blowup_f(c, beta), blowup_g(c, beta)};
}

Scalar blowup_g_minimizer() {
    // positive root of 21 b^2 + 6 b - 1
    return (Scalar(-3) + Scalar::sqrt_rational(Rational(30))) / Scalar(21);
}

Scalar c0_blowup() {
    // g_C = C + psi with psi = 7/6 b^3 + 1/2 b^2 - 1/6 b; C0 = max(0, -min psi)
    // over [0, 1/sqrt(7)].
    Poly psi = {rat(0), rat(-1, 6), rat(1, 2), rat(7, 6)};
    Scalar hi = Scalar::sqrt_rational(Rational(1, 7));
    Scalar min_psi = min_on_interval(psi, Scalar(0), hi);
    return max_scalar({Scalar(0), -min_psi});
}

Index1System::Index1System(Rational h3_in) : h3(std::move(h3_in)) {
    if (h3 < Rational(4)) throw std::domain_error("index-one system needs H^3 >= 4");
}

Scalar Index1System::f(const Scalar& c, const Scalar& beta) const {
    return beta * beta / Scalar(2) - beta / Scalar(2) + c;
}

Scalar Index1System::g(const Scalar& beta) const {
    Scalar b2 = beta * beta;
    return b2 * beta / Scalar(6) - b2 / Scalar(4) +
           beta * Scalar(rat(1, 12) + Rational(2) / h3) - Scalar(Rational(1) / h3);
}

Scalar Index1System::h(const Scalar& c, const Scalar& beta) const {
    return f(c, beta) * (Scalar(1) - beta) / Scalar(2) + g(beta);
}

Scalar Index1System::l(const Scalar& c, const Scalar& beta) const {
    return f(c, beta) / Scalar(h3) + g(beta);
}

IndexOneConstants Index1System::constants() const {
    // g_X factors as (b - 1/2)(b^2/6 - b/6 + 2/H^3); the largest zero in
    // [0, 1] is 1/2 unless b^2 - b + 12/H^3 has real roots.
    Scalar beta0(Rational(1, 2));
    Rational disc = Rational(1) - Rational(48) / h3;
    if (disc.sign() >= 0) beta0 = (Scalar(1) + Scalar::sqrt_rational(disc)) / Scalar(2);

    // Each constraint is affine in C, so the minimal C is a maximum of
    // interval minima of the C-free parts.
    Rational c_pairing = rat(1, 12) + Rational(2) / h3;  // C H^3 >= H^3/12 + 2
    Poly f_free = {rat(0), rat(-1, 2), rat(1, 2)};       // f = C + (b^2 - b)/2
    Scalar c_f = -min_on_interval(f_free, Scalar(0), Scalar(1));
    // l = C/H^3 + phi with phi = f_free/H^3 + g_X.
    Rational inv = Rational(1) / h3;
    Poly phi = {-inv, rat(1, 12) + Rational(3) / (Rational(2) * h3), inv / Rational(2) - rat(1, 4),
                rat(1, 6)};
    Scalar c_l = Scalar(h3) * (-min_on_interval(phi, Scalar(0), beta0));

    IndexOneConstants out{h3, beta0, max_scalar({Scalar(0), Scalar(c_pairing), c_f, c_l})};
    if (!g(out.beta0).is_zero()) throw std::logic_error("beta0 is not a zero of g_X");
    if (Scalar::compare(out.beta0, Scalar(rat(1, 2))) < 0 ||
        Scalar::compare(out.beta0, Scalar(1)) > 0)
        throw std::logic_error("beta0 outside [1/2, 1]");
    return out;
}

IndexOneConstants index1_constants(const Rational& h3) { return Index1System(h3).constants(); }

}  // namespace tilt3
