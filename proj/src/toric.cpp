#include "tilt3/toric.hpp"

#include "tilt3/fano.hpp"
#include "tilt3/rr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace tilt3 {

namespace {

using Mat = std::vector<std::vector<Rational>>;
using Vec = std::vector<Rational>;

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
          const std::array<long, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Row echelon form; returns rank. Operates on an augmented matrix in place.
size_t echelon(Mat& m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = Rational(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Unique solution of A x = b when the columns are independent and the system
// is consistent; nullopt otherwise.
std::optional<Vec> solve_unique(const Mat& a, const Vec& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Mat aug(rows, Vec(cols + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    echelon(aug);
    Vec x(cols);
    std::vector<bool> pinned(cols, false);
    for (size_t r = 0; r < rows; ++r) {
        size_t lead = cols + 1;
        for (size_t c = 0; c <= cols; ++c)
            if (!aug[r][c].is_zero()) {
                lead = c;
                break;
            }
        if (lead == cols + 1) continue;        // zero row
        if (lead == cols) return std::nullopt; // inconsistent
        x[lead] = aug[r][cols];
        pinned[lead] = true;
    }
    for (bool p : pinned)
        if (!p) return std::nullopt;  // underdetermined
    return x;
}

// Is b a nonnegative combination of the columns of A? Complete by basic
// feasible solution enumeration (Caratheodory: a feasible point exists iff
// one with independent support does).
bool cone_member(const Mat& a, const Vec& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    bool b_zero = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x.is_zero(); });
    if (b_zero) return true;
    for (unsigned mask = 1; mask < (1u << cols); ++mask) {
        std::vector<size_t> idx;
        for (size_t c = 0; c < cols; ++c)
            if (mask & (1u << c)) idx.push_back(c);
        if (idx.size() > rows) continue;
        Mat sub(rows, Vec(idx.size()));
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[r][idx[c]];
        auto sol = solve_unique(sub, b);
        if (!sol) continue;
        if (std::all_of(sol->begin(), sol->end(),
                        [](const Rational& x) { return x.sign() >= 0; }))
            return true;
    }
    return false;
}

// Does the affine slice {x >= 0, M x = 0, sum x = 1} contain a strictly
// positive point? The vertex centroid of the slice is positive iff some
// point is.
std::optional<Vec> positive_kernel_point(const Mat& m) {
    size_t n = m.size();
    Mat a = m;
    a.push_back(Vec(n, Rational(1)));
    Vec b(m.size(), Rational(0));
    b.push_back(Rational(1));
    std::vector<Vec> vertices;
    size_t rows = a.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t c = 0; c < n; ++c)
            if (mask & (1u << c)) idx.push_back(c);
        if (idx.size() > rows) continue;
        Mat sub(rows, Vec(idx.size()));
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = a[r][idx[c]];
        auto sol = solve_unique(sub, b);
        if (!sol) continue;
        if (!std::all_of(sol->begin(), sol->end(),
                         [](const Rational& x) { return x.sign() >= 0; }))
            continue;
        Vec full(n);
        for (size_t c = 0; c < idx.size(); ++c) full[idx[c]] = (*sol)[c];
        vertices.push_back(std::move(full));
    }
    if (vertices.empty()) return std::nullopt;
    Vec centroid(n);
    for (const auto& v : vertices)
        for (size_t c = 0; c < n; ++c) centroid[c] += v[c];
    Rational inv(1, static_cast<long>(vertices.size()));
    bool positive = true;
    for (auto& c : centroid) {
        c *= inv;
        if (c.sign() <= 0) positive = false;
    }
    if (!positive) return std::nullopt;
    return centroid;
}

Rational det_rec(const Mat& m) {
    Mat a = m;
    size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

Mat minor_matrix(const Mat& m, size_t drop_r, size_t drop_c) {
    Mat out;
    for (size_t r = 0; r < m.size(); ++r) {
        if (r == drop_r) continue;
        Vec row;
        for (size_t c = 0; c < m.size(); ++c)
            if (c != drop_c) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

Mat adjugate(const Mat& m) {
    size_t n = m.size();
    Mat adj(n, Vec(n));
    if (n == 1) {
        adj[0][0] = Rational(1);
        return adj;
    }
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            Rational cof = det_rec(minor_matrix(m, r, c));
            if ((r + c) % 2) cof = -cof;
            adj[c][r] = cof;
        }
    return adj;
}

Rational quad_value(const Mat& m, const Vec& x) {
    Rational out;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < x.size(); ++j) out += x[i] * x[j] * m[i][j];
    }
    return out;
}

// Cottle-Habetler-Lemke recursion: with every proper principal submatrix
// copositive, M fails copositivity exactly when det M < 0 and adj M >= 0;
// in that case adj(M) 1 is a nonnegative certificate with value
// det(M) * sum(adj M) < 0.
bool copositive_rec(const Mat& m, Vec* witness) {
    size_t n = m.size();
    if (n == 1) {
        if (m[0][0].sign() >= 0) return true;
        if (witness) *witness = {Rational(1)};
        return false;
    }
    for (size_t k = 0; k < n; ++k) {
        Vec sub_w;
        if (!copositive_rec(minor_matrix(m, k, k), witness ? &sub_w : nullptr)) {
            if (witness) {
                witness->assign(n, Rational(0));
                size_t j = 0;
                for (size_t c = 0; c < n; ++c)
                    if (c != k) (*witness)[c] = sub_w[j++];
            }
            return false;
        }
    }
    Rational det = det_rec(m);
    if (det.sign() >= 0) return true;
    Mat adj = adjugate(m);
    for (const auto& row : adj)
        for (const auto& x : row)
            if (x.sign() < 0) return true;
    if (witness) {
        witness->assign(n, Rational(0));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) (*witness)[r] += adj[r][c];
    }
    return false;
}

}  // namespace

bool copositive(const Mat& m, Vec* witness) {
    bool ok = copositive_rec(m, witness);
    if (!ok && witness) {
        bool nonneg = std::all_of(witness->begin(), witness->end(),
                                  [](const Rational& x) { return x.sign() >= 0; });
        if (!nonneg || quad_value(m, *witness).sign() >= 0)
            throw std::logic_error("copositivity certificate failed verification");
    }
    return ok;
}

std::vector<std::string> validate_fan(const ToricFan& fan) {
    std::vector<std::string> out;
    auto note = [&](const std::string& s) { out.push_back(s); };
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& r = fan.rays[i];
        long g = std::abs(std::gcd(std::gcd(r[0], r[1]), r[2]));
        if (g != 1) note("ray " + std::to_string(i) + " is not primitive");
    }
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (size_t i : cone)
            if (i >= fan.rays.size()) {
                note("cone " + std::to_string(c) + " references a missing ray");
                return out;
            }
        long d = det3(fan.rays[cone[0]], fan.rays[cone[1]], fan.rays[cone[2]]);
        if (d != 1 && d != -1)
            note("cone " + std::to_string(c) + " is not smooth (determinant " +
                 std::to_string(d) + ")");
    }
    // Completeness: every facet of a maximal cone is shared with exactly one
    // other cone, and the two remaining rays sit on opposite sides of it.
    std::map<std::pair<size_t, size_t>, std::vector<size_t>> facets;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (int drop = 0; drop < 3; ++drop) {
            size_t a = cone[(drop + 1) % 3], b = cone[(drop + 2) % 3];
            facets[{std::min(a, b), std::max(a, b)}].push_back(c);
        }
    }
    for (const auto& [facet, cones] : facets) {
        if (cones.size() != 2) {
            note("facet {" + std::to_string(facet.first) + "," + std::to_string(facet.second) +
                 "} belongs to " + std::to_string(cones.size()) + " cones, expected 2");
            continue;
        }
        std::array<long, 2> sides{};
        for (int k = 0; k < 2; ++k) {
            const auto& cone = fan.max_cones[cones[k]];
            for (size_t i : cone)
                if (i != facet.first && i != facet.second)
                    sides[k] = det3(fan.rays[facet.first], fan.rays[facet.second], fan.rays[i]);
        }
        if (sides[0] * sides[1] >= 0)
            note("facet {" + std::to_string(facet.first) + "," + std::to_string(facet.second) +
                 "}: adjacent cones do not lie on opposite sides");
    }
    return out;
}

DivisorClass ToricThreefold::ray_divisor(size_t rho) const {
    const auto& cls = ray_classes.at(rho);
    std::vector<Scalar> coeffs;
    coeffs.reserve(cls.size());
    for (long c : cls) coeffs.emplace_back(Rational(c));
    return model->divisor(std::move(coeffs));
}

std::vector<std::string> validate_toric(const ToricThreefold& tv) {
    std::vector<std::string> out = validate_fan(tv.fan);
    if (tv.ray_classes.size() != tv.fan.rays.size())
        out.push_back("ray class count does not match ray count");
    if (!out.empty()) return out;
    size_t r = tv.model->picard_rank();
    for (int k = 0; k < 3; ++k) {
        std::vector<long> sum(r, 0);
        for (size_t rho = 0; rho < tv.fan.rays.size(); ++rho)
            for (size_t c = 0; c < r; ++c) sum[c] += tv.fan.rays[rho][k] * tv.ray_classes[rho][c];
        if (std::any_of(sum.begin(), sum.end(), [](long x) { return x != 0; }))
            out.push_back("linear equivalence fails for lattice coordinate " + std::to_string(k));
    }
    DivisorClass total = tv.model->zero_divisor();
    for (size_t rho = 0; rho < tv.fan.rays.size(); ++rho) total += tv.ray_divisor(rho);
    if (total != tv.model->c1_tangent())
        out.push_back("sum of ray divisors does not equal c1(T_X)");
    return out;
}

std::pair<DivisorClass, CurveClass> tangent_chern(const ToricThreefold& tv) {
    auto violations = validate_toric(tv);
    if (!violations.empty())
        throw std::invalid_argument("invalid toric threefold: " + violations.front());
    DivisorClass c1 = tv.model->zero_divisor();
    for (size_t rho = 0; rho < tv.fan.rays.size(); ++rho) c1 += tv.ray_divisor(rho);
    CurveClass c2 = tv.model->zero_curve();
    for (size_t a = 0; a < tv.fan.rays.size(); ++a)
        for (size_t b = a + 1; b < tv.fan.rays.size(); ++b)
            c2 += product_curve(tv.ray_divisor(a), tv.ray_divisor(b));
    CurveClass ch2 = Scalar(Rational(1, 2)) * (div_square(c1) - Scalar(2) * c2);
    if (c1 != tv.model->c1_tangent() || ch2 != tv.model->ch2_tangent())
        throw std::domain_error("toric tangent data disagrees with the stored model data on " +
                                tv.model->name());
    return {c1, ch2};
}

unsigned long FrobeniusDecomposition::total_multiplicity() const {
    unsigned long total = 0;
    for (const auto& s : summands) total += s.multiplicity;
    return total;
}

unsigned long FrobeniusDecomposition::multiplicity_of(const std::vector<long>& cls) const {
    for (const auto& s : summands)
        if (s.class_vector == cls) return s.multiplicity;
    return 0;
}

FrobeniusDecomposition frobenius_decompose(const ToricThreefold& tv, const std::vector<long>& d,
                                           unsigned long m) {
    if (m < 1) throw std::invalid_argument("frobenius_decompose needs m >= 1");
    size_t r = tv.model->picard_rank();
    if (d.size() != r) throw std::invalid_argument("divisor vector has wrong length");
    size_t nrays = tv.fan.rays.size();
    std::map<std::vector<long>, unsigned long> counts;
    std::vector<unsigned long> a(nrays, 0);
    std::vector<long> acc(r, 0);
    for (size_t c = 0; c < r; ++c) acc[c] = -d[c];
    const long lm = static_cast<long>(m);
    while (true) {
        bool divisible = true;
        for (size_t c = 0; c < r && divisible; ++c) divisible = (acc[c] % lm) == 0;
        if (divisible) {
            std::vector<long> cls(r);
            for (size_t c = 0; c < r; ++c) cls[c] = acc[c] / lm;
            ++counts[cls];
        }
        // odometer increment, keeping the running class sum
        size_t pos = 0;
        while (pos < nrays) {
            if (a[pos] + 1 < m) {
                ++a[pos];
                for (size_t c = 0; c < r; ++c) acc[c] += tv.ray_classes[pos][c];
                break;
            }
            for (size_t c = 0; c < r; ++c)
                acc[c] -= static_cast<long>(a[pos]) * tv.ray_classes[pos][c];
            a[pos] = 0;
            ++pos;
        }
        if (pos == nrays) break;
    }
    FrobeniusDecomposition out{m, d, {}};
    for (auto& [cls, mult] : counts) out.summands.push_back({cls, mult});
    unsigned long expected = m * m * m;
    if (out.total_multiplicity() != expected)
        throw std::logic_error("Frobenius multiplicities sum to " +
                               std::to_string(out.total_multiplicity()) + ", expected m^3 = " +
                               std::to_string(expected));
    return out;
}

int growth_exponent(const ToricThreefold& tv, const std::vector<long>& d,
                    const std::vector<long>& cls, const std::vector<unsigned long>& m_range) {
    if (m_range.size() < 5) throw std::invalid_argument("growth_exponent needs >= 5 sample points");
    std::vector<mpz_class> eta;
    bool seen = false;
    for (unsigned long m : m_range) {
        unsigned long v = frobenius_decompose(tv, d, m).multiplicity_of(cls);
        seen = seen || v > 0;
        eta.emplace_back(v);
    }
    if (!seen) throw std::domain_error("class never appears in the sampled range");
    bool consecutive = true;
    for (size_t i = 1; i < m_range.size(); ++i)
        if (m_range[i] != m_range[i - 1] + 1) consecutive = false;
    if (consecutive) {
        // eta is frequently an exact polynomial in m; successive finite
        // differences then vanish at order degree+1.
        std::vector<mpz_class> diff = eta;
        for (int order = 0; order <= 4 && !diff.empty(); ++order) {
            if (std::all_of(diff.begin(), diff.end(), [](const mpz_class& x) { return x == 0; }))
                return std::max(order - 1, 0);
            std::vector<mpz_class> next;
            for (size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
            diff = std::move(next);
        }
    }
    // Fallback: log-ratio of the last two samples with eta > 0 at distinct m.
    int j = -1, i = -1;
    for (int k = static_cast<int>(eta.size()) - 1; k >= 0 && i < 0; --k) {
        if (eta[k] == 0) continue;
        if (j < 0)
            j = k;
        else if (m_range[k] != m_range[j])
            i = k;
    }
    if (i < 0) return 0;  // a single usable sample: bounded
    double ratio = std::log(eta[j].get_d() / eta[i].get_d()) /
                   std::log(double(m_range[j]) / double(m_range[i]));
    return std::clamp(static_cast<int>(std::lround(ratio)), 0, 3);
}

AdmissibleResult admissible_polarization(const ToricThreefold& tv, const DivisorClass& h) {
    require_same_model(tv.model, h.model());
    size_t r = tv.model->picard_rank();
    // Primitive representatives of the distinct torus-invariant classes.
    std::vector<Vec> gens;
    for (const auto& cls : tv.ray_classes) {
        mpz_class g = 0;
        for (long c : cls) g = gcd(g, mpz_class(c));
        if (g == 0) continue;
        Vec prim(r);
        for (size_t c = 0; c < r; ++c) prim[c] = Rational(mpz_class(mpz_class(cls[c]) / g));
        if (std::find(gens.begin(), gens.end(), prim) == gens.end()) gens.push_back(prim);
    }
    size_t n = gens.size();
    auto gen_divisor = [&](size_t i) {
        std::vector<Scalar> coeffs(gens[i].begin(), gens[i].end());
        return tv.model->divisor(std::move(coeffs));
    };
    Mat m(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = triple(h, gen_divisor(i), gen_divisor(j)).as_rational();

    auto combine = [&](const Vec& x) {
        std::vector<Scalar> coeffs(r);
        for (size_t i = 0; i < n; ++i)
            for (size_t c = 0; c < r; ++c) coeffs[c] += Scalar(x[i] * gens[i][c]);
        return coeffs;
    };

    Vec w;
    if (!copositive(m, &w))
        return {false, combine(w), "H.D^2 < 0 for an effective divisor class"};

    // Zero directions: an interior zero of a face forces M_F x = 0 there.
    // Single generators must be extremal; any strictly positive kernel point
    // of a larger face is a non-extremal zero.
    Mat gen_cols(r, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < r; ++c) gen_cols[c][i] = gens[i][c];
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i].sign() != 0) continue;
        Mat rest(r, Vec(0));
        for (size_t j = 0; j < n; ++j) {
            bool proportional = true;
            for (size_t c = 0; c < r && proportional; ++c)
                for (size_t cc = 0; cc < r && proportional; ++cc)
                    if (gens[i][c] * gens[j][cc] != gens[i][cc] * gens[j][c])
                        proportional = false;
            if (proportional) continue;
            for (size_t c = 0; c < r; ++c) rest[c].push_back(gens[j][c]);
        }
        if (cone_member(rest, gens[i]))
            return {false, combine([&] {
                        Vec e(n);
                        e[i] = Rational(1);
                        return e;
                    }()),
                    "zero direction of H.D^2 is not an extremal ray"};
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> idx;
        for (size_t c = 0; c < n; ++c)
            if (mask & (1u << c)) idx.push_back(c);
        if (idx.size() < 2) continue;
        Mat sub(idx.size(), Vec(idx.size()));
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b) sub[a][b] = m[idx[a]][idx[b]];
        auto point = positive_kernel_point(sub);
        if (!point) continue;
        Vec full(n);
        for (size_t a = 0; a < idx.size(); ++a) full[idx[a]] = (*point)[a];
        auto coeffs = combine(full);
        bool zero_class = std::all_of(coeffs.begin(), coeffs.end(),
                                      [](const Scalar& s) { return s.is_zero(); });
        if (zero_class) continue;
        return {false, coeffs,
                "zero direction of H.D^2 with full support on a face (not extremal)"};
    }
    return {true, {}, "H.D^2 >= 0 on the effective cone with only extremal zero directions"};
}

std::vector<std::pair<mpz_class, mpz_class>> dirichlet_approx(const Scalar& x, size_t count) {
    if (x.is_rational())
        throw std::domain_error("dirichlet_approx needs a quadratic irrational");
    std::vector<std::pair<mpz_class, mpz_class>> out;
    mpz_class p1 = 1, q1 = 0;  // p_{k-1}, q_{k-1}
    mpz_class p2 = 0, q2 = 1;  // p_{k-2}, q_{k-2}
    Scalar xi = x;
    mpz_class last_q = 0;
    while (out.size() < count) {
        mpz_class a = xi.floor();
        mpz_class p = a * p1 + p2;
        mpz_class q = a * q1 + q2;
        p2 = p1, q2 = q1;
        p1 = p, q1 = q;
        if (q > last_q) {
            Scalar err = (x - Scalar(Rational(p, q))).abs();
            Scalar bound = Scalar(Rational(mpz_class(1), q * q));
            if (Scalar::compare(err, bound) >= 0)
                throw std::logic_error("convergent misses the Dirichlet bound");
            out.emplace_back(p, q);
            last_q = q;
        }
        xi = Scalar(1) / (xi - Scalar(Rational(a)));  // xi was irrational, never integral
    }
    return out;
}

std::pair<Scalar, Scalar> pushforward_chi_check(const ToricThreefold& tv,
                                                const std::vector<long>& d, unsigned long m) {
    std::vector<Scalar> coeffs;
    for (long c : d) coeffs.emplace_back(Rational(c));
    ChernCharacter line = ch_line_bundle(tv.model->divisor(coeffs));
    Scalar lhs = euler_char(frobenius_scale(line, m));
    FrobeniusDecomposition dec = frobenius_decompose(tv, std::vector<long>(d.size(), 0), m);
    Scalar rhs;
    for (const auto& s : dec.summands) {
        std::vector<Scalar> lc(s.class_vector.begin(), s.class_vector.end());
        ChernCharacter lch = ch_line_bundle(tv.model->divisor(lc));
        rhs += Scalar(Rational(mpz_class(s.multiplicity))) * euler_pair(lch, line);
    }
    return {lhs, rhs};
}

namespace {

std::vector<ToricThreefold> build_toric() {
    std::vector<ToricThreefold> out;
    auto model = [](const char* name) { return builtin_model(name).model; };

    out.push_back({{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}},
                   model("p3"),
                   {{1}, {1}, {1}, {1}}});

    out.push_back({{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 1}},
                    {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}}},
                   model("blowup-p3-point"),
                   {{1, -1}, {1, -1}, {1, -1}, {1, 0}, {0, 1}}});

    out.push_back({{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 0}},
                    {{0, 2, 3}, {1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}}},
                   model("blowup-p3-line"),
                   {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, -1}}});

    out.push_back({{{{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                    {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}}},
                   model("p1xp2"),
                   {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}}});

    out.push_back({{{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                    {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                     {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}}},
                   model("p1xp1xp1"),
                   {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}}});
    return out;
}

}  // namespace

const std::vector<ToricThreefold>& builtin_toric() {
    static const std::vector<ToricThreefold> db = build_toric();
    return db;
}

const ToricThreefold& builtin_toric_model(const std::string& name) {
    for (const auto& tv : builtin_toric())
        if (tv.model->name() == name) return tv;
    throw std::invalid_argument("no builtin toric structure for '" + name + "'");
}

}  // namespace tilt3
