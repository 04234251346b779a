#pragma once

#include "tilt3/fano.hpp"
#include "tilt3/tilt.hpp"
#include "tilt3/toric.hpp"

#include <string>

namespace tilt3 {

/// JSON schema:
/// {name, divisor_basis:[string], curve_basis:[string],
///  pairing:[[rational]], product:{"i,j":[rational]},
///  c1_tangent:[rational], ch2_tangent:[rational], H:[rational],
///  fano_index?}
/// with rationals as "p/q" strings.
std::string model_to_json(const ModelPtr& m);
ModelPtr model_from_json(const std::string& text);
ModelPtr model_from_file(const std::string& path);

/// {ch0, ch1:[...], ch2:[...], ch3} with scalar strings "a + b*sqrt(d)".
std::string chern_to_json(const ChernCharacter& ch);
ChernCharacter chern_from_json(const ModelPtr& m, const std::string& text);

/// {"kind":"semicircle","center":...,"radius_sq":...} or
/// {"kind":"vertical","beta":...}.
std::string wall_to_json(const WallDescriptor& w);

/// Fan JSON: {rays:[[int,int,int]], cones:[[i,j,k]],
///            ray_classes:{"ray_index":[int,...]}}.
std::string fan_to_json(const ToricThreefold& tv);
/// Reads the fan schema back over an existing intersection model.
ToricThreefold toric_from_json(const ModelPtr& m, const std::string& text);

/// Integer-linear combination of named basis divisors: "2h-e", "h+3f", "0".
DivisorClass parse_divisor_expr(const ModelPtr& m, const std::string& text);

/// Class mini-language:
///   O(EXPR)    line bundle with EXPR a divisor expression
///   div(EXPR)  structure sheaf of the divisor EXPR
///   {...}      raw Chern character JSON
ChernCharacter parse_class_expr(const ModelPtr& m, const std::string& text);

/// Gamma mini-language: "0", "builtin", orrational-coefficient degree-two
/// expressions such as "k(h^2+2e^2)" with k a scalar literal, "h^2+2e^2",
/// "1/6(h^2+e^2)", "h*f".
GammaClass parse_gamma_expr(const FanoEntry& entry, const std::string& text);

}  // namespace tilt3
