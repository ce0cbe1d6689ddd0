#pragma once

#include "ospoly/lambda_poly.hpp"

#include <vector>

namespace ospoly {

// One summand a(lambda) * e^{mu(lambda) t}.
struct ExpTerm {
    LambdaPoly amplitude;
    LambdaPoly exponent;
};

// Finite sum of exponentials with polynomial amplitudes and exponents, the
// shape of every trace generating function here.  Terms with equal exponents
// are merged and zero amplitudes dropped.
class ExpPolySeries {
public:
    ExpPolySeries() = default;
    explicit ExpPolySeries(std::vector<ExpTerm> terms);

    const std::vector<ExpTerm>& terms() const { return terms_; }

    // Taylor coefficients at t = 0 up to and including t^order:
    // coefficient of t^k is sum_j a_j mu_j^k / k!.
    std::vector<LambdaPoly> taylor(int order) const;

private:
    std::vector<ExpTerm> terms_;
};

// Coefficients of num/den as formal power series.  den[0] must be a nonzero
// rational constant, otherwise SingularGeneratingFunctionError.
std::vector<LambdaPoly> series_divide(const std::vector<LambdaPoly>& num,
                                      const std::vector<LambdaPoly>& den);

// c_0..c_order of the Taylor expansion of numer/denom at t = 0, exact in Q[lambda].
// The k-th derivative data is k! * c_k.
std::vector<LambdaPoly> ratio_series_coeffs(const ExpPolySeries& numer,
                                            const ExpPolySeries& denom,
                                            int order);

} // namespace ospoly
