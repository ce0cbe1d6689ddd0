#include "ospoly/hypergeom.hpp"

#include "ospoly/errors.hpp"

namespace ospoly {

namespace {

// (-k)_m as an exact rational
Rational falling_pochhammer(int k, int m) {
    Rational acc = 1;
    for (int j = 0; j < m; ++j) acc *= Rational(-k + j);
    return acc;
}

} // namespace

HTauPoly terminating_sum_absorbed(int k, const std::vector<HTauPoly>& uppers,
                                  const std::vector<HTauPoly>& absorbed_lowers,
                                  const Rational& z, bool with_m_factorial) {
    if (uppers.empty() && absorbed_lowers.empty()) throw Error("empty parameter lists");
    const AlgebraCase cas = !uppers.empty() ? uppers.front().algebra_case()
                                            : absorbed_lowers.front().algebra_case();
    HTauPoly sum(cas);
    Rational zpow = 1;
    Rational mfact = 1;
    for (int m = 0; m <= k; ++m) {
        if (m > 0) {
            zpow *= z;
            mfact *= m;
        }
        HTauPoly term = HTauPoly::constant(cas, falling_pochhammer(k, m) * zpow);
        if (with_m_factorial) term = term.div_rational(mfact);
        for (const auto& u : uppers) term *= pochhammer(u, m);
        for (const auto& b : absorbed_lowers) {
            HTauPoly shifted = b + b.like_constant(Rational(m));
            term *= pochhammer(shifted, k - m);
        }
        sum += term;
    }
    return sum;
}

HTauPoly terminating_sum_rational_lowers(int k, const std::vector<HTauPoly>& uppers,
                                         const std::vector<Rational>& lowers,
                                         const Rational& z, bool with_m_factorial,
                                         AlgebraCase cas) {
    HTauPoly sum(cas);
    Rational zpow = 1;
    Rational mfact = 1;
    Rational lower_prod = 1;
    for (int m = 0; m <= k; ++m) {
        if (m > 0) {
            zpow *= z;
            mfact *= m;
            for (const auto& b : lowers) {
                const Rational factor = b + Rational(m - 1);
                if (factor == 0) throw SingularParameterError();
                lower_prod *= factor;
            }
        }
        HTauPoly term = HTauPoly::constant(cas, falling_pochhammer(k, m) * zpow / lower_prod);
        if (with_m_factorial) term = term.div_rational(mfact);
        for (const auto& u : uppers) term *= pochhammer(u, m);
        sum += term;
    }
    return sum;
}

namespace {

const AlgebraCase kGen = AlgebraCase::GenericFG;

HTauPoly gen_const(const Rational& r) { return HTauPoly::constant(kGen, r); }

} // namespace

HTauPoly hahn_closed_even_grade(int k, int i) {
    // prefactor (-1)^k (i+1)_k (i+1/2-tau)_k / k!, lowers (i+1, i+1/2-tau),
    // uppers (k+2i+1, (2i+1/2-tau-H)/2), z = 1, the sum convention with m!.
    const HTauPoly tau = HTauPoly::tau(kGen);
    const HTauPoly H = HTauPoly::h(kGen);
    const HTauPoly x =
        (gen_const(Rational(2 * i) + half()) - tau - H).div_rational(Rational(2));
    const std::vector<HTauPoly> uppers = {gen_const(Rational(k + 2 * i + 1)), x};
    const std::vector<HTauPoly> lowers = {gen_const(Rational(i + 1)),
                                          gen_const(Rational(i) + half()) - tau};
    HTauPoly f = terminating_sum_absorbed(k, uppers, lowers, Rational(1), true);
    f = f.div_rational(Rational(factorial(static_cast<unsigned>(k))));
    if (k % 2 != 0) f *= Rational(-1);
    return f;
}

HTauPoly hahn_closed_even_grade_tie(int k, int i, bool half_whole_bracket) {
    const HTauPoly tau = HTauPoly::tau(kGen);
    const HTauPoly Tsq = HTauPoly::constant(kGen, LambdaPoly::tau_square());
    HTauPoly bracket(kGen);
    if (half_whole_bracket) {
        bracket = (tau * Rational(2 * k + 2 * i + 1) - Tsq).div_rational(Rational(2));
    } else {
        bracket = tau * Rational(2 * k + 2 * i + 1, 2) - Tsq;
    }
    return bracket * hahn_closed_even_grade(k, i);
}

HTauPoly hahn_closed_odd_grade(int k, int i) {
    const HTauPoly tau = HTauPoly::tau(kGen);
    const HTauPoly H = HTauPoly::h(kGen);
    const HTauPoly x =
        (gen_const(Rational(2 * i + 2) + half()) - tau - H).div_rational(Rational(2));
    const std::vector<HTauPoly> uppers = {gen_const(Rational(k + 2 * i + 2)), x};
    const std::vector<HTauPoly> lowers = {gen_const(Rational(i + 2)),
                                          gen_const(Rational(i + 1) + half()) - tau};
    HTauPoly f = terminating_sum_absorbed(k, uppers, lowers, Rational(1), true);
    f = f.div_rational(Rational(factorial(static_cast<unsigned>(k))));
    if (k % 2 != 0) f *= Rational(-1);
    return f;
}

HTauPoly hahn_closed_odd_grade_tie(int k, int i) {
    const HTauPoly tau = HTauPoly::tau(kGen);
    return tau * Rational(-1, 2 * i + k + 2) * hahn_closed_odd_grade(k, i);
}

HTauPoly meixner_closed(int k, int j, bool with_m_factorial) {
    const AlgebraCase c = AlgebraCase::WeylPQ;
    const HTauPoly H = HTauPoly::h(c);
    const int i = j / 2;
    const bool odd_grade = (j % 2 != 0);
    // even grade: (2i+1)_k (2i+k+1)_k / k! * 2F1(-k, 2i-H+1/2 ; 2i+1 | 2)
    // odd grade:  (2i+2)_k (2i+k+2)_{k+1} / k! * 2F1(-k, 2i-H+3/2 ; 2i+2 | 2)
    const Rational base = odd_grade ? Rational(2 * i + 2) : Rational(2 * i + 1);
    const Rational shift = odd_grade ? Rational(3, 2) : half();
    const HTauPoly upper = HTauPoly::constant(c, Rational(2 * i) + shift) - H;
    HTauPoly f = terminating_sum_absorbed(k, {upper}, {HTauPoly::constant(c, base)},
                                          Rational(2), with_m_factorial);
    HTauPoly pre = odd_grade
                       ? pochhammer(HTauPoly::constant(c, Rational(2 * i + k + 2)), k + 1)
                       : pochhammer(HTauPoly::constant(c, Rational(2 * i + k + 1)), k);
    f *= pre;
    return f.div_rational(Rational(factorial(static_cast<unsigned>(k))));
}

HTauPoly dualhahn_closed(int k, int i, bool corrected_params) {
    const AlgebraCase c = AlgebraCase::MatrixUV;
    const HTauPoly H = HTauPoly::h(c);
    const HTauPoly lam = HTauPoly(c).like_lambda();
    const HTauPoly iconst = HTauPoly::constant(c, Rational(i));
    // printed: uppers (i-H, H+i), lowers (lambda+i+2, i-lambda)
    // corrected: uppers (i-H, H-i), lowers (lambda+i+1, i-lambda)
    const HTauPoly upper2 = corrected_params ? H - iconst : H + iconst;
    const HTauPoly lower1 =
        lam + HTauPoly::constant(c, Rational(corrected_params ? i + 1 : i + 2));
    const HTauPoly lower2 = iconst - lam;
    HTauPoly f = terminating_sum_absorbed(k, {iconst - H, upper2}, {lower1, lower2},
                                          Rational(1), true);
    f *= pochhammer(HTauPoly::constant(c, Rational(2 * i + 2)), k);
    f = f.div_rational(Rational(factorial(static_cast<unsigned>(k))));
    if (k % 2 != 0) f *= Rational(-1);
    return f;
}

CompareResult compare_up_to_constant(const HTauPoly& recursive, const HTauPoly& closed) {
    if (recursive.is_zero() && closed.is_zero()) return {CompareOutcome::Equal, "1", ""};
    if (recursive.is_zero() || closed.is_zero())
        return {CompareOutcome::Mismatch, "", (recursive - closed).to_string()};
    // pivot on the closed side's top H coefficient (even slot if present)
    const int d = closed.h_degree();
    const bool pivot_even = !closed.even_coeff(d).is_zero();
    const LambdaPoly pc = pivot_even ? closed.even_coeff(d) : closed.odd_coeff(d);
    const LambdaPoly pr = pivot_even ? recursive.even_coeff(d) : recursive.odd_coeff(d);
    if (pr.is_zero()) return {CompareOutcome::Mismatch, "", (recursive - closed).to_string()};
    if (recursive * pc == closed * pr) {
        if (pr == pc) return {CompareOutcome::Equal, "1", ""};
        return {CompareOutcome::Proportional, render_ratio(pr, pc), ""};
    }
    return {CompareOutcome::Mismatch, "", (recursive - closed).to_string()};
}

} // namespace ospoly
