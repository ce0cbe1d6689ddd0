#include "ospoly/exp_series.hpp"

#include "ospoly/errors.hpp"

namespace ospoly {

ExpPolySeries::ExpPolySeries(std::vector<ExpTerm> terms) {
    for (auto& t : terms) {
        if (t.amplitude.is_zero()) continue;
        bool merged = false;
        for (auto& have : terms_) {
            if (have.exponent == t.exponent) {
                have.amplitude += t.amplitude;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const ExpTerm& t) { return t.amplitude.is_zero(); });
}

std::vector<LambdaPoly> ExpPolySeries::taylor(int order) const {
    std::vector<LambdaPoly> out(static_cast<std::size_t>(order) + 1);
    for (const auto& t : terms_) {
        LambdaPoly mu_pow(Rational(1));
        Rational kfact = 1;
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                mu_pow *= t.exponent;
                kfact *= k;
            }
            out[static_cast<std::size_t>(k)] += (t.amplitude * mu_pow).div_rational(kfact);
        }
    }
    return out;
}

std::vector<LambdaPoly> series_divide(const std::vector<LambdaPoly>& num,
                                      const std::vector<LambdaPoly>& den) {
    if (den.empty() || !den[0].is_constant() || den[0].is_zero())
        throw SingularGeneratingFunctionError();
    const Rational d0 = den[0].coeff(0);
    std::vector<LambdaPoly> c(num.size());
    for (std::size_t k = 0; k < num.size(); ++k) {
        LambdaPoly acc = k < num.size() ? num[k] : LambdaPoly();
        for (std::size_t m = 0; m < k; ++m) {
            const std::size_t dk = k - m;
            if (dk < den.size()) acc -= c[m] * den[dk];
        }
        c[k] = acc.div_rational(d0);
    }
    return c;
}

std::vector<LambdaPoly> ratio_series_coeffs(const ExpPolySeries& numer,
                                            const ExpPolySeries& denom,
                                            int order) {
    return series_divide(numer.taylor(order), denom.taylor(order));
}

} // namespace ospoly
