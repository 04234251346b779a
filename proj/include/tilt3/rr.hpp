#pragma once

#include "tilt3/chow.hpp"

#include <array>

namespace tilt3 {

/// Todd class of the tangent bundle, derived from (c1(T), ch2(T)) only:
/// td = (1, c1/2, (3 c1^2 - 2 ch2(T))/24, c1.c2/24) with
/// c2 = (c1^2 - 2 ch2(T))/2. On a valid model td3 = chi(O_X) = 1.
struct ToddClass {
    Scalar td0;
    DivisorClass td1;
    CurveClass td2;
    Scalar td3;
};

ToddClass todd(const ModelPtr& m);

/// chi(E) = integral of ch(E).td(T_X): the exact Euler characteristic of the
/// numerical class.
Scalar euler_char(const ChernCharacter& ch);

/// chi(F, E) = sum (-1)^i ext^i(F, E), computed as the Euler characteristic
/// of ch(F)^dual . ch(E).
Scalar euler_pair(const ChernCharacter& f, const ChernCharacter& e);

/// Coefficients (c3, c2, c1, c0) of the exact cubic polynomial
/// m -> chi(frobenius_scale(ch, m)); the leading coefficient is ch3.
std::array<Scalar, 4> frobenius_chi_polynomial(const ChernCharacter& ch);

}  // namespace tilt3
