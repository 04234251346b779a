#include "tilt3/rr.hpp"

namespace tilt3 {

ToddClass todd(const ModelPtr& m) {
    DivisorClass c1 = m->c1_tangent();
    CurveClass c1_sq = div_square(c1);
    CurveClass c2 = Scalar(Rational(1, 2)) * (c1_sq - Scalar(2) * m->ch2_tangent());
    return {
        Scalar(1),
        Scalar(Rational(1, 2)) * c1,
        Scalar(Rational(1, 24)) * (Scalar(3) * c1_sq - Scalar(2) * m->ch2_tangent()),
        pair(c1, c2) / Scalar(24),
    };
}

Scalar euler_char(const ChernCharacter& ch) {
    ToddClass td = todd(ch.model());
    // Degree-3 part of ch . td.
    return ch.ch3 + pair(td.td1, ch.ch2) + pair(ch.ch1, td.td2) + ch.ch0 * td.td3;
}

Scalar euler_pair(const ChernCharacter& f, const ChernCharacter& e) {
    return euler_char(ch_mul(dual(f), e));
}

std::array<Scalar, 4> frobenius_chi_polynomial(const ChernCharacter& ch) {
    ToddClass td = todd(ch.model());
    // chi(m* ch) = m^3 ch3 + m^2 td1.ch2 + m ch1.td2 + ch0 td3.
    return {ch.ch3, pair(td.td1, ch.ch2), pair(ch.ch1, td.td2), ch.ch0 * td.td3};
}

}  // namespace tilt3
