#include "ospoly/supertrace.hpp"

#include "ospoly/errors.hpp"

namespace ospoly {

namespace {

const LambdaPoly kZero{};

ExpPolySeries even_numerator(AlgebraCase cas) {
    const LambdaPoly lam = LambdaPoly::variable();
    const LambdaPoly one(Rational(1));
    switch (cas) {
        case AlgebraCase::GenericFG:
        case AlgebraCase::MatrixUV:
            // e^{(lambda+1)t} + e^{-lambda t}
            return ExpPolySeries({{one, lam + one}, {one, -lam}});
        case AlgebraCase::WeylPQ:
            // e^{t/2}
            return ExpPolySeries({{one, LambdaPoly(half())}});
    }
    throw Error("unreachable");
}

ExpPolySeries even_denominator() {
    const LambdaPoly one(Rational(1));
    // e^t + 1
    return ExpPolySeries({{one, one}, {one, LambdaPoly()}});
}

} // namespace

MomentTable::MomentTable(AlgebraCase c, int max_order) : cas_(c) {
    rebuild(max_order < 0 ? 0 : max_order);
}

void MomentTable::rebuild(int order) {
    // Even generating function phi_0(t) = c * numerator / (e^t + 1),
    // normalized so that the constant coefficient (= L(1)) is 1.
    std::vector<LambdaPoly> c = ratio_series_coeffs(even_numerator(cas_), even_denominator(), order);
    if (!c[0].is_constant() || c[0].is_zero()) throw SingularGeneratingFunctionError();
    const Rational c0 = c[0].coeff(0);
    even_.clear();
    even_.reserve(c.size());
    Rational kfact = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0) kfact *= k;
        even_.push_back(c[k].div_rational(c0) * kfact);
    }

    odd_.assign(c.size(), LambdaPoly());
    if (cas_ == AlgebraCase::GenericFG) {
        // phi_1(t) = (e^{(lambda+1)t} - e^{-lambda t}) / (e^t - 1): numerator and
        // denominator both vanish at t = 0, so one factor of t cancels exactly.
        const LambdaPoly lam = LambdaPoly::variable();
        const LambdaPoly one(Rational(1));
        ExpPolySeries num({{one, lam + one}, {LambdaPoly(Rational(-1)), -lam}});
        ExpPolySeries den({{one, one}, {LambdaPoly(Rational(-1)), LambdaPoly()}});
        std::vector<LambdaPoly> n = num.taylor(order + 1);
        std::vector<LambdaPoly> d = den.taylor(order + 1);
        if (!n[0].is_zero() || !d[0].is_zero()) throw SingularGeneratingFunctionError();
        n.erase(n.begin());
        d.erase(d.begin());
        std::vector<LambdaPoly> c1 = series_divide(n, d);
        // L(tau H^k) = (lambda + 1/2) k! [t^k] phi_1
        const LambdaPoly scale = (lam + LambdaPoly(half())).div_rational(c0);
        kfact = 1;
        for (std::size_t k = 0; k < c1.size(); ++k) {
            if (k > 0) kfact *= k;
            odd_[k] = c1[k] * scale * kfact;
        }
    }
}

const LambdaPoly& MomentTable::even_moment(int k) {
    if (k < 0) return kZero;
    if (k > max_order()) extend(k);
    return even_[static_cast<std::size_t>(k)];
}

const LambdaPoly& MomentTable::odd_moment(int k) {
    if (k < 0 || cas_ != AlgebraCase::GenericFG) return kZero;
    if (k > max_order()) extend(k);
    return odd_[static_cast<std::size_t>(k)];
}

void MomentTable::extend(int order) {
    if (order > max_order()) rebuild(order);
}

LambdaPoly trace(const GradedElement& u, MomentTable& table) {
    if (u.algebra_case() != table.algebra_case()) throw CaseMismatchError();
    const HTauPoly f = u.coeff(0);
    LambdaPoly acc;
    const auto lam = f.lambda_value();
    auto moment = [&](const LambdaPoly& m) {
        return lam ? LambdaPoly(m.evaluate(*lam)) : m;
    };
    for (int k = 0; k < static_cast<int>(f.even_part().size()); ++k)
        acc += f.even_coeff(k) * moment(table.even_moment(k));
    for (int k = 0; k < static_cast<int>(f.odd_part().size()); ++k)
        acc += f.odd_coeff(k) * moment(table.odd_moment(k));
    return acc;
}

LambdaPoly form(const GradedElement& u, const GradedElement& v, MomentTable& table) {
    return trace(u * v.supertranspose(), table);
}

LambdaPoly form_graded(const HTauPoly& f, const HTauPoly& g, int i, MomentTable& table) {
    return form(GradedElement::monomial(f, i), GradedElement::monomial(g, i), table);
}

} // namespace ospoly
