#include "ospoly/ortho.hpp"

#include "ospoly/errors.hpp"

#include <string>

namespace ospoly {

HTauPoly extract_grade(const GradedElement& u, int expected_grade) {
    if (u.is_zero()) return HTauPoly(u.algebra_case());
    if (u.coeffs().size() != 1 || u.coeffs().begin()->first != expected_grade) {
        std::string support;
        for (const auto& [g, f] : u.coeffs()) support += " " + std::to_string(g);
        throw GradeMismatchError("normal form supported on grade(s){" + support +
                                 " } instead of " + std::to_string(expected_grade));
    }
    return u.coeffs().begin()->second;
}

namespace {

// G^power or G^power * tau as a normal-form element
GradedElement generic_seed(int power, bool with_tau) {
    const AlgebraCase c = AlgebraCase::GenericFG;
    GradedElement seed = GradedElement::raising(c, power);
    if (with_tau) seed = seed * GradedElement::tau_element(c);
    return seed;
}

} // namespace

HTauPoly GenericFamily::member(int k, int j) const {
    auto it = cache_.find({k, j});
    if (it != cache_.end()) return it->second;
    HTauPoly f(AlgebraCase::GenericFG);
    if (j % 2 == 0) {
        // even grade j = 2i: (ad F)^k of G^{j+k} (k even) or G^{j+k} tau (k odd)
        const GradedElement seed = generic_seed(j + k, k % 2 != 0);
        f = extract_grade(
            ad_power(GradedElement::lowering(AlgebraCase::GenericFG), static_cast<unsigned>(k), seed), j);
    } else {
        const int i = (j - 1) / 2;
        if (k % 2 == 0) {
            // (ad F)^{k+1} of G^{2i+k+2}
            const GradedElement seed = generic_seed(j + k + 1, false);
            f = extract_grade(ad_power(GradedElement::lowering(AlgebraCase::GenericFG),
                                       static_cast<unsigned>(k + 1), seed),
                              j);
        } else {
            f = member_odd_odd(k, i, OddOddReading::ReducedAd);
        }
    }
    cache_.emplace(std::make_pair(k, j), f);
    return f;
}

HTauPoly GenericFamily::member_odd_odd(int k, int i, OddOddReading reading) const {
    const int j = 2 * i + 1;
    int seed_power = 0;
    int steps = 0;
    switch (reading) {
        case OddOddReading::AsPrinted:
            seed_power = 2 * i + k;
            steps = k + 1;
            break;
        case OddOddReading::ReducedAd:
            seed_power = 2 * i + k;
            steps = k - 1;
            break;
        case OddOddReading::RaisedSeed:
            seed_power = 2 * i + k + 2;
            steps = k + 1;
            break;
    }
    const GradedElement seed = generic_seed(seed_power, true);
    return extract_grade(
        ad_power(GradedElement::lowering(AlgebraCase::GenericFG), static_cast<unsigned>(steps), seed), j);
}

HTauPoly WeylFamily::member(int k, int j) const {
    auto it = cache_.find({k, j});
    if (it != cache_.end()) return it->second;
    const AlgebraCase c = AlgebraCase::WeylPQ;
    const int i = j / 2;
    const bool odd_grade = (j % 2 != 0);
    const int seed_power = odd_grade ? 2 * i + 2 * k + 2 : 2 * i + 2 * k;
    const int steps = odd_grade ? 2 * k + 1 : 2 * k;
    const GradedElement seed = GradedElement::raising(c, seed_power);
    HTauPoly f = extract_grade(
        ad_power(GradedElement::lowering(c), static_cast<unsigned>(steps), seed), j);
    cache_.emplace(std::make_pair(k, j), f);
    return f;
}

HTauPoly MatrixFamily::member(int l, int j) const {
    auto it = cache_.find({l, j});
    if (it != cache_.end()) return it->second;
    const AlgebraCase c = AlgebraCase::MatrixUV;
    const GradedElement U = GradedElement::lowering(c);
    const int i = j / 2;
    const Rational root = Rational(i) + half();
    HTauPoly f(c);
    if (j % 2 == 0) {
        // even grade 2i
        if (l == 0) {
            f = HTauPoly::constant(c, Rational(1));
        } else if (l == 1) {
            f = extract_grade(anti_bracket(U, GradedElement::raising(c, j + 1)), j);
        } else if (l == 2) {
            f = extract_grade(super_bracket(U, GradedElement::raising(c, j + 1)), j);
        } else {
            // descend into grade 2i+2 and pull back down with two more brackets
            const bool even_l = (l % 2 == 0);
            const HTauPoly inner = member(l - 2, j + 2);
            const GradedElement innerElt =
                GradedElement::monomial(inner, j + 2);
            auto brk = [&](const GradedElement& x, const GradedElement& y) {
                return even_l ? super_bracket(x, y) : anti_bracket(x, y);
            };
            const HTauPoly g = extract_grade(brk(U, innerElt), j + 1);
            const HTauPoly divided = g.exact_div_linear(root);
            f = extract_grade(brk(U, GradedElement::monomial(divided, j + 1)), j);
        }
    } else {
        // odd grade 2i+1
        if (l == 0) {
            f = HTauPoly::constant(c, Rational(1));
        } else if (l % 2 == 0) {
            const HTauPoly upper = member(l, j + 1);
            const HTauPoly g = extract_grade(
                super_bracket(U, GradedElement::monomial(upper, j + 1)), j);
            f = g.exact_div_linear(root);
        } else {
            const HTauPoly lower = member(l - 1, j);
            f = (HTauPoly::h(c) - HTauPoly::constant(c, root)) * lower;
        }
    }
    cache_.emplace(std::make_pair(l, j), f);
    return f;
}

std::vector<std::vector<LambdaPoly>> gram_matrix(const std::vector<HTauPoly>& members,
                                                 int grade, MomentTable& table) {
    const std::size_t n = members.size();
    std::vector<std::vector<LambdaPoly>> g(n, std::vector<LambdaPoly>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            g[a][b] = form_graded(members[a], members[b], grade, table);
            if (b != a) g[b][a] = form_graded(members[b], members[a], grade, table);
        }
    return g;
}

} // namespace ospoly
