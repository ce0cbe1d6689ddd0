#include "ospoly/matrix_rep.hpp"
#include "ospoly/supertrace.hpp"

#include <doctest.h>

#include <random>

using namespace ospoly;

namespace {

const AlgebraCase G = AlgebraCase::GenericFG;
const AlgebraCase W = AlgebraCase::WeylPQ;
const AlgebraCase M = AlgebraCase::MatrixUV;

const LambdaPoly lam = LambdaPoly::variable();

} // namespace

TEST_CASE("moment tables: normalization and frozen low moments") {
    MomentTable gen(G, 6);
    CHECK(gen.even_moment(0) == LambdaPoly(Rational(1)));
    CHECK(gen.even_moment(1).is_zero());
    CHECK(gen.even_moment(2) == lam * lam + lam);
    CHECK(gen.odd_moment(0) == LambdaPoly::tau_square() * Rational(2));

    MomentTable weyl(W, 6);
    CHECK(weyl.even_moment(0) == LambdaPoly(Rational(1)));
    CHECK(weyl.even_moment(1).is_zero());
    CHECK(weyl.even_moment(2) == LambdaPoly(Rational(-1, 4)));
    CHECK(weyl.odd_moment(2).is_zero());

    MomentTable mat(M, 6);
    CHECK(mat.even_moment(0) == LambdaPoly(Rational(1)));
    CHECK(mat.even_moment(1).is_zero());
    CHECK(mat.even_moment(2) == lam * lam + lam);

    // extension on demand
    MomentTable small(G, 1);
    CHECK(small.even_moment(5) == gen.even_moment(5));
}

TEST_CASE("trace on normal forms") {
    MomentTable table(G, 8);
    CHECK(trace(GradedElement::one(G), table) == LambdaPoly(Rational(1)));
    CHECK(trace(GradedElement::raising(G), table).is_zero());
    const GradedElement gf = GradedElement::raising(G) * GradedElement::lowering(G);
    CHECK(trace(gf, table) == lam * lam + lam);
}

TEST_CASE("forms: values, symmetry, graded restriction") {
    MomentTable table(G, 10);
    const GradedElement one = GradedElement::one(G);
    const GradedElement g = GradedElement::raising(G);
    CHECK(form(one, one, table) == LambdaPoly(Rational(1)));
    CHECK(form(g, g, table) == -(lam * lam + lam));
    CHECK(form(g, g, table).evaluate(Rational(1)) == Rational(-2));

    const HTauPoly c1 = HTauPoly::constant(G, Rational(1));
    CHECK(form_graded(c1, c1, 0, table) == LambdaPoly(Rational(1)));
    CHECK(form_graded(c1, c1, 1, table) == -(lam * lam + lam));

    // distinct grades pair to zero
    CHECK(form(GradedElement::raising(G, 2), g, table).is_zero());

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < 15; ++t) {
        const HTauPoly f = HTauPoly::h(G) * Rational(num(rng)) +
                           HTauPoly::tau(G) * Rational(num(rng)) +
                           HTauPoly::constant(G, Rational(num(rng)));
        const HTauPoly h2 = HTauPoly::h_power(G, 2) * Rational(num(rng)) +
                            HTauPoly::constant(G, Rational(num(rng)));
        for (int i : {-2, 0, 1, 3})
            CHECK(form_graded(f, h2, i, table) == form_graded(h2, f, i, table));
    }
}

TEST_CASE("matrix realization: supertraces of generators at small lambda") {
    const RepImages rep = build_rep(1);
    CHECK(SuperMatrix::identity(1).supertrace() == Rational(1));
    CHECK(rep.tau.supertrace() == Rational(9, 2));
    CHECK((rep.H * rep.H).supertrace() == Rational(2));
    CHECK((rep.tau * rep.H * rep.H).supertrace() == Rational(3));
    CHECK((rep.G * rep.F).supertrace() == Rational(2));
}

TEST_CASE("abstract trace specializes to the matrix supertrace") {
    for (int lambda : {1, 2}) {
        MomentTable gen_table(G, 10);
        for (const auto& m : crosscheck_trace(lambda, 6, gen_table)) {
            CAPTURE(m.monomial);
            CHECK(m.matrix_value == m.abstract_value);
        }
        MomentTable mat_table(M, 10);
        CHECK(crosscheck_trace(lambda, 6, mat_table).empty());
    }
}

TEST_CASE("odd moments against the matrix model") {
    MomentTable gen(G, 6);
    for (int lambda : {1, 2, 3}) {
        const RepImages rep = build_rep(lambda);
        SuperMatrix hpow = SuperMatrix::identity(lambda);
        for (int k = 0; k <= 4; ++k) {
            if (k > 0) hpow = hpow * rep.H;
            CHECK(gen.odd_moment(k).evaluate(Rational(lambda)) ==
                  (rep.tau * hpow).supertrace());
        }
    }
}
