#include "gaussmom/json_io.hpp"

namespace gaussmom {

Json to_json(const BigRational& r) {
  return Json{{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

BigRational rational_from_json(const Json& j) {
  return BigRational(BigInt(j.at("num").get<std::string>()),
                     BigInt(j.at("den").get<std::string>()));
}

Json to_json(const HalfIntValue& v) {
  return Json{{"coef_num", v.coef.numerator().str()},
              {"coef_den", v.coef.denominator().str()},
              {"sqrt_pi_power", v.sqrt_pi_power}};
}

HalfIntValue half_int_value_from_json(const Json& j) {
  return HalfIntValue{BigRational(BigInt(j.at("coef_num").get<std::string>()),
                                  BigInt(j.at("coef_den").get<std::string>())),
                      j.at("sqrt_pi_power").get<int>()};
}

Json to_json(const MomentResult& r) {
  return Json{{"exact_coef", to_json(r.exact_coef)},
              {"alpha_exponent", to_json(r.alpha_exponent)},
              {"float", r.float_value},
              {"method", to_string(r.method)},
              {"error_estimate", r.error_estimate}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace gaussmom
