#pragma once

#include "tilt3/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tilt3 {

class ThreefoldModel;
using ModelPtr = std::shared_ptr<const ThreefoldModel>;

/// Divisor class with Scalar coefficients over a fixed model's basis.
class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(ModelPtr model, std::vector<Scalar> coeffs);

    const ModelPtr& model() const { return model_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](size_t i) const { return coeffs_[i]; }
    bool is_zero() const;

    DivisorClass operator-() const;
    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Scalar& t);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Scalar& t, DivisorClass a) { return a *= t; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b);
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

private:
    ModelPtr model_;
    std::vector<Scalar> coeffs_;
};

/// Curve class (A_1 numerical class) with Scalar coefficients.
class CurveClass {
public:
    CurveClass() = default;
    CurveClass(ModelPtr model, std::vector<Scalar> coeffs);

    const ModelPtr& model() const { return model_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](size_t i) const { return coeffs_[i]; }
    bool is_zero() const;

    CurveClass operator-() const;
    CurveClass& operator+=(const CurveClass& o);
    CurveClass& operator-=(const CurveClass& o);
    CurveClass& operator*=(const Scalar& t);
    friend CurveClass operator+(CurveClass a, const CurveClass& b) { return a += b; }
    friend CurveClass operator-(CurveClass a, const CurveClass& b) { return a -= b; }
    friend CurveClass operator*(const Scalar& t, CurveClass a) { return a *= t; }
    friend bool operator==(const CurveClass& a, const CurveClass& b);
    friend bool operator!=(const CurveClass& a, const CurveClass& b) { return !(a == b); }

private:
    ModelPtr model_;
    std::vector<Scalar> coeffs_;
};

/// Numerical intersection theory of a polarized smooth projective threefold.
///
/// Divisor and curve classes are expressed in named bases; the degree pairing
/// Pic x A_1 -> Q and the product Pic x Pic -> A_1 are stored as exact
/// rational data. The stored data is deliberately redundant (pairing and
/// product together determine all triple products) and validate() cross-checks
/// the copies against each other.
class ThreefoldModel : public std::enable_shared_from_this<ThreefoldModel> {
public:
    struct Data {
        std::string name;
        std::vector<std::string> divisor_basis;
        std::vector<std::string> curve_basis;
        // pairing[i][j] = D_i . C_j
        std::vector<std::vector<Rational>> pairing;
        // product[i][j] = D_i . D_j as a curve-class coefficient vector
        std::vector<std::vector<std::vector<Rational>>> product;
        std::vector<Rational> c1_tangent;   // divisor coefficients of -K_X
        std::vector<Rational> ch2_tangent;  // curve coefficients of ch_2(T_X)
        std::vector<Rational> polarization; // divisor coefficients of H
        std::optional<unsigned> fano_index;
    };

    static ModelPtr create(Data data);

    const std::string& name() const { return data_.name; }
    size_t picard_rank() const { return data_.divisor_basis.size(); }
    size_t curve_rank() const { return data_.curve_basis.size(); }
    const std::vector<std::string>& divisor_basis() const { return data_.divisor_basis; }
    const std::vector<std::string>& curve_basis() const { return data_.curve_basis; }
    const Data& data() const { return data_; }
    std::optional<unsigned> fano_index() const { return data_.fano_index; }

    DivisorClass divisor(std::vector<Scalar> coeffs) const;
    CurveClass curve(std::vector<Scalar> coeffs) const;
    DivisorClass basis_divisor(size_t i) const;
    /// Divisor basis element by name; throws on unknown names.
    DivisorClass named_divisor(const std::string& name) const;
    DivisorClass zero_divisor() const;
    CurveClass zero_curve() const;

    DivisorClass polarization() const;
    DivisorClass c1_tangent() const;
    CurveClass ch2_tangent() const;
    Scalar h_cubed() const;

private:
    explicit ThreefoldModel(Data data) : data_(std::move(data)) {}
    Data data_;
};

/// Degree pairing D . c of a divisor class against a curve class.
Scalar pair(const DivisorClass& d, const CurveClass& c);
/// Bilinear extension of the product tensor: D . D' as a curve class.
CurveClass product_curve(const DivisorClass& d, const DivisorClass& dp);
/// D . D as a curve class.
CurveClass div_square(const DivisorClass& d);
/// Triple intersection number D . D' . D''.
Scalar triple(const DivisorClass& d, const DivisorClass& dp, const DivisorClass& dpp);

/// Checks every model invariant; returns human-readable violations (empty
/// means valid). Violations are data, not errors.
std::vector<std::string> validate_model(const ModelPtr& m);

/// Chern character (ch0, ch1, ch2, ch3) with ch1 a divisor class and ch2 a
/// curve class. Immutable value type.
struct ChernCharacter {
    Scalar ch0;
    DivisorClass ch1;
    CurveClass ch2;
    Scalar ch3;

    const ModelPtr& model() const { return ch1.model(); }

    friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
        return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2 && a.ch3 == b.ch3;
    }
    friend bool operator!=(const ChernCharacter& a, const ChernCharacter& b) { return !(a == b); }
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter scale(const Scalar& t, const ChernCharacter& ch);

/// H-contracted character (H^3 ch0, H^2.ch1, H.ch2, ch3).
struct HContraction {
    Scalar v0, v1, v2, v3;
};

/// ch(O(D)) = (1, D, D^2/2, D^3/6).
ChernCharacter ch_line_bundle(const DivisorClass& d);
/// ch(O_X).
ChernCharacter ch_structure(const ModelPtr& m);
/// ch(O_D) = 1 - exp(-D) for an effective divisor D: (0, D, -D^2/2, D^3/6).
ChernCharacter ch_divisor_sheaf(const DivisorClass& d);
/// ch . exp(D), truncated in degree 3. Group law:
/// tensor_line(ch_line_bundle(D'), D) = ch_line_bundle(D + D').
ChernCharacter tensor_line(const ChernCharacter& ch, const DivisorClass& d);
/// Twisted character ch . exp(-beta H), all four components exact.
ChernCharacter twist(const ChernCharacter& ch, const Scalar& beta);
/// Numerical class of the shifted derived dual RHom(E, O)[1]:
/// (-ch0, ch1, -ch2, ch3). An involution.
ChernCharacter dual_shift(const ChernCharacter& ch);
/// Numerical class of the (unshifted) dual: (ch0, -ch1, ch2, -ch3).
ChernCharacter dual(const ChernCharacter& ch);
/// Ring product of two characters, truncated in degree 3.
ChernCharacter ch_mul(const ChernCharacter& a, const ChernCharacter& b);
HContraction h_contract(const ChernCharacter& ch);
/// Pullback along the degree-m^3 toric Frobenius: ch_k -> m^k ch_k.
ChernCharacter frobenius_scale(const ChernCharacter& ch, unsigned long m);

void require_same_model(const ModelPtr& a, const ModelPtr& b);

}  // namespace tilt3
