#include "ospoly/matrix_rep.hpp"

#include <doctest.h>

#include <random>

using namespace ospoly;

namespace {
const AlgebraCase G = AlgebraCase::GenericFG;
const AlgebraCase M = AlgebraCase::MatrixUV;
} // namespace

TEST_CASE("defining relations hold as matrix identities") {
    for (int lambda : {0, 1, 2, 3}) {
        for (const auto& r : check_relations(lambda)) {
            CAPTURE(lambda);
            CAPTURE(r.id);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("projection is a homomorphism") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> grade(-2, 2);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int lambda : {1, 2}) {
        for (AlgebraCase cas : {G, M}) {
            for (int t = 0; t < 8; ++t) {
                GradedElement u = GradedElement::zero(cas);
                GradedElement v = GradedElement::zero(cas);
                for (int p = 0; p < 2; ++p) {
                    u += GradedElement::monomial(
                        HTauPoly::h(cas) * Rational(num(rng)) +
                            HTauPoly::constant(cas, Rational(num(rng))),
                        grade(rng));
                    v += GradedElement::monomial(
                        HTauPoly::h(cas) * Rational(num(rng)) +
                            HTauPoly::constant(cas, Rational(num(rng))),
                        grade(rng));
                }
                CHECK(project(u * v, lambda) == project(u, lambda) * project(v, lambda));
            }
        }
    }
}

TEST_CASE("projection of the ghost center and the Casimir scalar") {
    for (int lambda : {1, 2, 3}) {
        const RepImages rep = build_rep(lambda);
        const CasimirElements ce = casimir_elements(G);
        CHECK(project(ce.tau, lambda) == rep.tau);
        const Rational c = Rational(lambda) * (Rational(lambda) + 1);
        CHECK(project(ce.Omega, lambda) == c * SuperMatrix::identity(lambda));
        const GradedElement fg =
            GradedElement::lowering(G) * GradedElement::raising(G);
        CHECK(project(fg, lambda) == rep.F * rep.G);
    }
}

TEST_CASE("nilpotency exponent of the raising image") {
    for (int lambda : {1, 2, 3}) {
        const RepImages rep = build_rep(lambda);
        CHECK(nilpotency_exponent(rep.V, 2 * lambda + 2) == 2 * lambda + 1);
        CHECK_FALSE(rep.V.pow(static_cast<unsigned>(2 * lambda)).is_zero());
        // G is nilpotent of the same order
        CHECK(nilpotency_exponent(rep.G, 2 * lambda + 2) == 2 * lambda + 1);
    }
}

TEST_CASE("csv dump shape") {
    const RepImages rep = build_rep(1);
    const std::string csv = rep.H.to_csv();
    CHECK(csv == "1,0,0\n0,0,0\n0,0,-1\n");
}
