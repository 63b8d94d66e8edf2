#pragma once

#include "gaussmom/rational.hpp"

namespace gaussmom {

BigInt factorial(unsigned n);

/// Double factorial m!! for m >= -1, with (-1)!! = 0!! = 1.
BigInt double_factorial(long long m);

/// The Gaussian-moment coefficient gamma_{2n}, computed four independent
/// ways. All four must agree exactly for every n; tests enforce this.

/// prod_{k=0}^{n-1} (1/2 + k); the empty product at n = 0 is 1.
BigRational gamma_coeff_product(unsigned n);

/// Iterates gamma_{2(n+1)} = (2n+1)/2 * gamma_{2n} from gamma_0 = 1.
BigRational gamma_coeff_recurrence(unsigned n);

/// (2n-1)!! / 2^n.
BigRational gamma_coeff_double_factorial(unsigned n);

/// n-th derivative of (1-x)^(-1/2) at 0, read off the truncated series.
BigRational gamma_coeff_jet(unsigned n);

enum class GammaCoeffMethod { product, recurrence, double_factorial, jet };

const char* to_string(GammaCoeffMethod method);
GammaCoeffMethod gamma_coeff_method_from_string(const std::string& name);

struct GammaCoefficient {
  unsigned n = 0;
  BigRational value;
};

GammaCoefficient make_gamma_coefficient(unsigned n,
                                        GammaCoeffMethod method = GammaCoeffMethod::product);

}  // namespace gaussmom
