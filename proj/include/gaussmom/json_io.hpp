#pragma once

#include <string>

#include "json.hpp"

#include "gaussmom/half_int_value.hpp"
#include "gaussmom/moments.hpp"
#include "gaussmom/rational.hpp"

namespace gaussmom {

using Json = nlohmann::json;

/// Exact rationals travel as decimal strings so arbitrary precision survives
/// serialization: {"num": "...", "den": "..."}.
Json to_json(const BigRational& r);
BigRational rational_from_json(const Json& j);

/// {"coef_num": "...", "coef_den": "...", "sqrt_pi_power": k}
Json to_json(const HalfIntValue& v);
HalfIntValue half_int_value_from_json(const Json& j);

Json to_json(const MomentResult& r);

/// Compact dump with sorted keys; parsing and re-dumping a canonical string
/// reproduces it byte for byte.
std::string canonical_dump(const Json& j);

}  // namespace gaussmom
