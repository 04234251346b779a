#include "tilt3/chow.hpp"

#include <sstream>

namespace tilt3 {

void require_same_model(const ModelPtr& a, const ModelPtr& b) {
    if (!a || !b) throw std::invalid_argument("class without a model");
    if (a != b)
        throw std::invalid_argument("model mismatch: '" + a->name() + "' vs '" + b->name() + "'");
}

namespace {

std::vector<Scalar> add_vec(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<Scalar> scale_vec(const Scalar& t, const std::vector<Scalar>& a) {
    std::vector<Scalar> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = t * a[i];
    return out;
}

bool all_zero(const std::vector<Scalar>& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> to_scalars(const std::vector<Rational>& v) {
    return std::vector<Scalar>(v.begin(), v.end());
}

}  // namespace

DivisorClass::DivisorClass(ModelPtr model, std::vector<Scalar> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != model_->picard_rank())
        throw std::invalid_argument("divisor coefficient count does not match Picard rank");
}

bool DivisorClass::is_zero() const { return all_zero(coeffs_); }
DivisorClass DivisorClass::operator-() const {
    return DivisorClass(model_, scale_vec(Scalar(-1), coeffs_));
}
DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    require_same_model(model_, o.model_);
    coeffs_ = add_vec(coeffs_, o.coeffs_);
    return *this;
}
DivisorClass& DivisorClass::operator-=(const DivisorClass& o) { return *this += -o; }
DivisorClass& DivisorClass::operator*=(const Scalar& t) {
    coeffs_ = scale_vec(t, coeffs_);
    return *this;
}
bool operator==(const DivisorClass& a, const DivisorClass& b) {
    require_same_model(a.model_, b.model_);
    return a.coeffs_ == b.coeffs_;
}

CurveClass::CurveClass(ModelPtr model, std::vector<Scalar> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != model_->curve_rank())
        throw std::invalid_argument("curve coefficient count does not match curve rank");
}

bool CurveClass::is_zero() const { return all_zero(coeffs_); }
CurveClass CurveClass::operator-() const {
    return CurveClass(model_, scale_vec(Scalar(-1), coeffs_));
}
CurveClass& CurveClass::operator+=(const CurveClass& o) {
    require_same_model(model_, o.model_);
    coeffs_ = add_vec(coeffs_, o.coeffs_);
    return *this;
}
CurveClass& CurveClass::operator-=(const CurveClass& o) { return *this += -o; }
CurveClass& CurveClass::operator*=(const Scalar& t) {
    coeffs_ = scale_vec(t, coeffs_);
    return *this;
}
bool operator==(const CurveClass& a, const CurveClass& b) {
    require_same_model(a.model_, b.model_);
    return a.coeffs_ == b.coeffs_;
}

ModelPtr ThreefoldModel::create(Data data) {
    const size_t r = data.divisor_basis.size();
    const size_t s = data.curve_basis.size();
    if (r == 0 || s == 0) throw std::invalid_argument("model needs nonempty bases");
    auto check_rows = [&](size_t rows, size_t cols, const auto& m, const char* what) {
        if (m.size() != rows) throw std::invalid_argument(std::string(what) + ": bad row count");
        for (const auto& row : m)
            if (row.size() != cols) throw std::invalid_argument(std::string(what) + ": bad row size");
    };
    check_rows(r, s, data.pairing, "pairing");
    if (data.product.size() != r) throw std::invalid_argument("product: bad size");
    for (const auto& row : data.product) check_rows(r, s, row, "product");
    if (data.c1_tangent.size() != r) throw std::invalid_argument("c1_tangent: bad size");
    if (data.ch2_tangent.size() != s) throw std::invalid_argument("ch2_tangent: bad size");
    if (data.polarization.size() != r) throw std::invalid_argument("polarization: bad size");
    return ModelPtr(new ThreefoldModel(std::move(data)));
}

DivisorClass ThreefoldModel::divisor(std::vector<Scalar> coeffs) const {
    return DivisorClass(shared_from_this(), std::move(coeffs));
}
CurveClass ThreefoldModel::curve(std::vector<Scalar> coeffs) const {
    return CurveClass(shared_from_this(), std::move(coeffs));
}
DivisorClass ThreefoldModel::basis_divisor(size_t i) const {
    std::vector<Scalar> c(picard_rank());
    c.at(i) = Scalar(1);
    return divisor(std::move(c));
}
DivisorClass ThreefoldModel::named_divisor(const std::string& name) const {
    for (size_t i = 0; i < data_.divisor_basis.size(); ++i)
        if (data_.divisor_basis[i] == name) return basis_divisor(i);
    throw std::invalid_argument("unknown divisor basis name '" + name + "' on model " + data_.name);
}
DivisorClass ThreefoldModel::zero_divisor() const {
    return divisor(std::vector<Scalar>(picard_rank()));
}
CurveClass ThreefoldModel::zero_curve() const { return curve(std::vector<Scalar>(curve_rank())); }

DivisorClass ThreefoldModel::polarization() const {
    return divisor(to_scalars(data_.polarization));
}
DivisorClass ThreefoldModel::c1_tangent() const { return divisor(to_scalars(data_.c1_tangent)); }
CurveClass ThreefoldModel::ch2_tangent() const { return curve(to_scalars(data_.ch2_tangent)); }
Scalar ThreefoldModel::h_cubed() const {
    auto h = polarization();
    return triple(h, h, h);
}

Scalar pair(const DivisorClass& d, const CurveClass& c) {
    require_same_model(d.model(), c.model());
    const auto& pairing = d.model()->data().pairing;
    Scalar out;
    for (size_t i = 0; i < d.coeffs().size(); ++i) {
        if (d[i].is_zero()) continue;
        for (size_t j = 0; j < c.coeffs().size(); ++j) {
            if (c[j].is_zero()) continue;
            out += d[i] * c[j] * Scalar(pairing[i][j]);
        }
    }
    return out;
}

CurveClass product_curve(const DivisorClass& d, const DivisorClass& dp) {
    require_same_model(d.model(), dp.model());
    const auto& model = d.model();
    const auto& product = model->data().product;
    std::vector<Scalar> out(model->curve_rank());
    for (size_t i = 0; i < d.coeffs().size(); ++i) {
        if (d[i].is_zero()) continue;
        for (size_t j = 0; j < dp.coeffs().size(); ++j) {
            if (dp[j].is_zero()) continue;
            Scalar c = d[i] * dp[j];
            for (size_t k = 0; k < out.size(); ++k)
                out[k] += c * Scalar(product[i][j][k]);
        }
    }
    return CurveClass(model, std::move(out));
}

CurveClass div_square(const DivisorClass& d) { return product_curve(d, d); }

Scalar triple(const DivisorClass& d, const DivisorClass& dp, const DivisorClass& dpp) {
    return pair(dpp, product_curve(d, dp));
}

std::vector<std::string> validate_model(const ModelPtr& m) {
    std::vector<std::string> violations;
    const auto& data = m->data();
    const size_t r = m->picard_rank();
    auto note = [&](const std::string& v) { violations.push_back(v); };

    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (data.product[i][j] != data.product[j][i])
                note("product symmetry: product[" + std::to_string(i) + "][" + std::to_string(j) +
                     "] != product[" + std::to_string(j) + "][" + std::to_string(i) + "]");

    // D_i.D_j.D_k computed through pairing(D_k, product[i][j]) must not
    // depend on which factor is contracted last.
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j)
            for (size_t k = j; k < r; ++k) {
                auto di = m->basis_divisor(i);
                auto dj = m->basis_divisor(j);
                auto dk = m->basis_divisor(k);
                Scalar t1 = pair(dk, product_curve(di, dj));
                Scalar t2 = pair(di, product_curve(dj, dk));
                Scalar t3 = pair(dj, product_curve(di, dk));
                if (t1 != t2 || t1 != t3)
                    note("triple symmetry: (" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(k) + ") gives " + t1.str() + ", " + t2.str() + ", " +
                         t3.str());
            }

    if (m->h_cubed().sign() <= 0) note("H^3 must be positive, got " + m->h_cubed().str());

    // chi(O_X) = 1: pairing(c1, c2)/24 with c2 = (c1^2 - 2 ch2(T))/2.
    {
        auto c1 = m->c1_tangent();
        CurveClass c2 = Scalar(Rational(1, 2)) * (div_square(c1) - Scalar(2) * m->ch2_tangent());
        Scalar chi = pair(c1, c2) / Scalar(24);
        if (chi != Scalar(1)) note("chi(O_X) = 1 fails: c1.c2/24 = " + chi.str());
    }

    if (data.fano_index) {
        auto expected = Scalar(static_cast<long>(*data.fano_index)) * m->polarization();
        if (expected != m->c1_tangent())
            note("c1(T_X) must equal fano_index * H");
    }
    return violations;
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, a.ch3 + b.ch3};
}
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2, a.ch3 - b.ch3};
}
ChernCharacter scale(const Scalar& t, const ChernCharacter& ch) {
    return {t * ch.ch0, t * ch.ch1, t * ch.ch2, t * ch.ch3};
}

ChernCharacter ch_line_bundle(const DivisorClass& d) {
    Scalar half(Rational(1, 2)), sixth(Rational(1, 6));
    return {Scalar(1), d, half * div_square(d), sixth * triple(d, d, d)};
}

ChernCharacter ch_structure(const ModelPtr& m) { return ch_line_bundle(m->zero_divisor()); }

ChernCharacter ch_divisor_sheaf(const DivisorClass& d) {
    Scalar half(Rational(1, 2)), sixth(Rational(1, 6));
    return {Scalar(0), d, -(half * div_square(d)), sixth * triple(d, d, d)};
}

ChernCharacter tensor_line(const ChernCharacter& ch, const DivisorClass& d) {
    require_same_model(ch.model(), d.model());
    Scalar half(Rational(1, 2)), sixth(Rational(1, 6));
    CurveClass d2 = div_square(d);
    return {
        ch.ch0,
        ch.ch1 + ch.ch0 * d,
        ch.ch2 + product_curve(d, ch.ch1) + (ch.ch0 * half) * d2,
        ch.ch3 + pair(d, ch.ch2) + half * pair(ch.ch1, d2) + ch.ch0 * sixth * triple(d, d, d),
    };
}

ChernCharacter twist(const ChernCharacter& ch, const Scalar& beta) {
    const auto h = ch.model()->polarization();
    Scalar half(Rational(1, 2)), sixth(Rational(1, 6));
    Scalar b2 = beta * beta, b3 = b2 * beta;
    CurveClass h2 = div_square(h);
    // ch0^b = ch0
    // ch1^b = ch1 - b H ch0
    // ch2^b = ch2 - b H.ch1 + (b^2/2) H^2 ch0
    // ch3^b = ch3 - b H.ch2 + (b^2/2) H^2.ch1 - (b^3/6) H^3 ch0
    return {
        ch.ch0,
        ch.ch1 - (beta * ch.ch0) * h,
        ch.ch2 - beta * product_curve(h, ch.ch1) + (b2 * half * ch.ch0) * h2,
        ch.ch3 - beta * pair(h, ch.ch2) + b2 * half * pair(ch.ch1, h2) -
            b3 * sixth * triple(h, h, h) * ch.ch0,
    };
}

ChernCharacter dual_shift(const ChernCharacter& ch) {
    return {-ch.ch0, ch.ch1, -ch.ch2, ch.ch3};
}

ChernCharacter dual(const ChernCharacter& ch) { return {ch.ch0, -ch.ch1, ch.ch2, -ch.ch3}; }

ChernCharacter ch_mul(const ChernCharacter& a, const ChernCharacter& b) {
    require_same_model(a.model(), b.model());
    return {
        a.ch0 * b.ch0,
        a.ch0 * b.ch1 + b.ch0 * a.ch1,
        a.ch0 * b.ch2 + b.ch0 * a.ch2 + product_curve(a.ch1, b.ch1),
        a.ch0 * b.ch3 + b.ch0 * a.ch3 + pair(a.ch1, b.ch2) + pair(b.ch1, a.ch2),
    };
}

HContraction h_contract(const ChernCharacter& ch) {
    const auto h = ch.model()->polarization();
    return {
        triple(h, h, h) * ch.ch0,
        pair(ch.ch1, div_square(h)),
        pair(h, ch.ch2),
        ch.ch3,
    };
}

ChernCharacter frobenius_scale(const ChernCharacter& ch, unsigned long m) {
    if (m < 1) throw std::invalid_argument("frobenius_scale needs m >= 1");
    Scalar sm{Rational(mpz_class(m))};
    return {ch.ch0, sm * ch.ch1, (sm * sm) * ch.ch2, (sm * sm * sm) * ch.ch3};
}

}  // namespace tilt3
