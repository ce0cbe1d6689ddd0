#include "ospoly/diff_ops.hpp"
#include "ospoly/graded.hpp"
#include "ospoly/ortho.hpp"

#include <doctest.h>

#include <random>

using namespace ospoly;

namespace {
const AlgebraCase G = AlgebraCase::GenericFG;
const AlgebraCase M = AlgebraCase::MatrixUV;

HTauPoly rand_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    return HTauPoly::h_power(G, 2) * Rational(num(rng)) + HTauPoly::h(G) * Rational(num(rng)) +
           HTauPoly::tau(G) * HTauPoly::h(G) * Rational(num(rng)) +
           HTauPoly::tau(G) * Rational(num(rng)) + HTauPoly::constant(G, Rational(num(rng)));
}
} // namespace

TEST_CASE("step-one operators and the tau flip") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly one = HTauPoly::constant(G, Rational(1));
    CHECK(delta(h) == one);
    CHECK(nabla(h) == one);
    CHECK(delta(tau) == tau * Rational(-2));
    CHECK(nabla(tau) == tau * Rational(2));
    // delta(H tau) = -(2H + 1) tau, and it matches the twisted product rule
    CHECK(delta(h * tau) == -(h * Rational(2) + one) * tau);
    CHECK(delta(h * tau) == delta(h) * tau + h * delta(tau) + delta(h) * delta(tau));
}

TEST_CASE("step-two operators fix tau") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly tau = HTauPoly::tau(G);
    CHECK(delta2(h) == HTauPoly::constant(G, Rational(2)));
    CHECK(delta2(tau).is_zero());
    CHECK(nabla2(tau).is_zero());
}

TEST_CASE("composition identities") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        const HTauPoly f = rand_coeff(rng);
        CHECK(delta(nabla(f)) == delta(f) - nabla(f));
        CHECK(delta2(nabla2(f)) == delta2(f) - nabla2(f));
    }
    // exhaustively on the monomial basis up to weighted degree 8
    for (int a = 0; 2 * a <= 8; ++a)
        for (int b = 0; 2 * a + b <= 8 && b <= 1; ++b) {
            HTauPoly f = HTauPoly::h_power(G, a);
            if (b) f *= HTauPoly::tau(G);
            CHECK(delta(nabla(f)) == delta(f) - nabla(f));
            CHECK(nabla(delta(f)) == delta(f) - nabla(f));
            CHECK(delta2(nabla2(f)) == delta2(f) - nabla2(f));
            CHECK(nabla2(delta2(f)) == delta2(f) - nabla2(f));
        }
}

TEST_CASE("conjugation by the lowering generator realizes the operators") {
    std::mt19937_64 rng(52);
    const GradedElement F = GradedElement::lowering(G);
    for (int t = 0; t < 20; ++t) {
        const HTauPoly f = rand_coeff(rng);
        const GradedElement bracket = super_bracket(F, GradedElement::from_coeff(f));
        CHECK(bracket == GradedElement::monomial(delta(f), -1));
        // delta f * F = F * nabla f as normal forms
        CHECK(GradedElement::monomial(delta(f), -1) ==
              F * GradedElement::from_coeff(nabla(f)));
    }
}

TEST_CASE("operator specs over cleared denominators") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly one = HTauPoly::constant(G, Rational(1));
    DiffOperatorSpec ident;
    ident.terms.push_back({one, one, OpKind::Identity});
    const HTauPoly f = h * h + HTauPoly::tau(G);
    auto [num, den] = apply_operator(ident, f);
    CHECK(num == f);
    CHECK(den == one);

    // first-order pair applied to a constant: only the identity term survives
    for (int i = 0; i <= 2; ++i) {
        DiffOperatorSpec s;
        s.terms.push_back({h - HTauPoly::tau(G) + one * half(), one, OpKind::DeltaNabla});
        s.terms.push_back({(h - one * Rational(i)) * Rational(2), one, OpKind::Nabla});
        s.terms.push_back({one * (Rational(2 * i) + half()), one, OpKind::Identity});
        auto [n2, d2] = apply_operator(s, one);
        CHECK(n2 == one * (Rational(2 * i) + half()));
        CHECK(d2 == one);
    }
}

TEST_CASE("rational-coefficient eigen equation for the matrix family") {
    MatrixFamily fam;
    const HTauPoly h = HTauPoly::h(M);
    const HTauPoly lam = HTauPoly::lambda(M);
    const HTauPoly one = HTauPoly::constant(M, Rational(1));
    const HTauPoly f = fam.member(2, 0);

    DiffOperatorSpec s;
    s.terms.push_back({(h - lam) * (h + lam + one), h * Rational(2) + one, OpKind::Delta});
    s.terms.push_back(
        {(h - lam - one) * (h + lam), h * Rational(2) - one, OpKind::Nabla});
    CHECK(eigen_residual(s, f, one * Rational(2)).is_zero());
    CHECK_FALSE(eigen_residual(s, f, one * Rational(3)).is_zero());
}

TEST_CASE("first-order term arbitration at the smallest nontrivial index") {
    GenericFamily fam;
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly one = HTauPoly::constant(G, Rational(1));
    const HTauPoly f = fam.member(1, 0);
    const HTauPoly eigen = one * Rational(-3, 2);
    for (bool use_nabla : {true, false}) {
        DiffOperatorSpec s;
        s.terms.push_back({h - tau + one * half(), one, OpKind::DeltaNabla});
        s.terms.push_back({h * Rational(2), one, use_nabla ? OpKind::Nabla : OpKind::Delta});
        s.terms.push_back({one * half(), one, OpKind::Identity});
        const bool zero = eigen_residual(s, f, eigen).is_zero();
        CHECK(zero == use_nabla);
    }
}
