#include "ospoly/errors.hpp"
#include "ospoly/hypergeom.hpp"
#include "ospoly/ortho.hpp"

#include <doctest.h>

using namespace ospoly;

namespace {
const AlgebraCase G = AlgebraCase::GenericFG;
const AlgebraCase W = AlgebraCase::WeylPQ;
const AlgebraCase M = AlgebraCase::MatrixUV;
} // namespace

TEST_CASE("terminating sums terminate and reject singular rational lowers") {
    const HTauPoly h = HTauPoly::h(W);
    // upper -k forces k+1 terms: compare absorbed sums at k and padded uppers
    const HTauPoly s3 = terminating_sum_absorbed(
        3, {h}, {HTauPoly::constant(W, Rational(5))}, Rational(1), true);
    CHECK_FALSE(s3.is_zero());
    CHECK_THROWS_AS(terminating_sum_rational_lowers(3, {h}, {Rational(-1)}, Rational(1), true, W),
                    SingularParameterError);
    // lower 5 never vanishes within 3 terms
    CHECK_NOTHROW(terminating_sum_rational_lowers(3, {h}, {Rational(5)}, Rational(1), true, W));
}

TEST_CASE("closed forms at the base index") {
    for (int i = 0; i <= 2; ++i) {
        CHECK(hahn_closed_even_grade(0, i) == HTauPoly::constant(G, Rational(1)));
        CHECK(hahn_closed_odd_grade(0, i) == HTauPoly::constant(G, Rational(1)));
        CHECK(dualhahn_closed(0, i, false) == HTauPoly::constant(M, Rational(1)));
        CHECK(dualhahn_closed(0, i, true) == HTauPoly::constant(M, Rational(1)));
        CHECK(meixner_closed(0, 2 * i, false) == HTauPoly::constant(W, Rational(1)));
    }
}

TEST_CASE("first nontrivial closed members, expanded by hand") {
    // even grade: prefactor -(i+1)(i + 1/2 - tau) against the two-term sum
    // collapses to (i+1)(i - H)
    for (int i = 0; i <= 2; ++i) {
        const HTauPoly expect =
            (HTauPoly::constant(G, Rational(i)) - HTauPoly::h(G)) * Rational(i + 1);
        CHECK(hahn_closed_even_grade(1, i) == expect);
    }
    // weyl 2F1 at z = 2, k = 1, i = 0: both conventions give 4H
    CHECK(meixner_closed(1, 0, false) == HTauPoly::h(W) * Rational(4));
    CHECK(meixner_closed(1, 0, true) == HTauPoly::h(W) * Rational(4));
}

TEST_CASE("proportionality comparator") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly f = h * h + HTauPoly::tau(G);
    CHECK(compare_up_to_constant(f, f).outcome == CompareOutcome::Equal);
    const CompareResult prop = compare_up_to_constant(f * Rational(3, 2), f);
    CHECK(prop.outcome == CompareOutcome::Proportional);
    CHECK(prop.ratio == "3/2");
    // lambda-dependent ratios reduce as rational functions
    const LambdaPoly lam = LambdaPoly::variable();
    const CompareResult lp = compare_up_to_constant(f * (lam + LambdaPoly(1)), f);
    CHECK(lp.outcome == CompareOutcome::Proportional);
    CHECK(lp.ratio == "l + 1");
    CHECK(compare_up_to_constant(f, f + HTauPoly::constant(G, Rational(1))).outcome ==
          CompareOutcome::Mismatch);
    // a non-constant multiplier is a mismatch, not a ratio
    CHECK(compare_up_to_constant(f * h, f).outcome == CompareOutcome::Mismatch);
}

TEST_CASE("recursive members against closed forms at small indices") {
    GenericFamily gen;
    for (int i = 0; i <= 2; ++i) {
        const CompareResult r =
            compare_up_to_constant(gen.member(2, 2 * i), hahn_closed_even_grade(1, i));
        CHECK(r.outcome != CompareOutcome::Mismatch);
    }
    WeylFamily weyl;
    const CompareResult w =
        compare_up_to_constant(weyl.member(1, 0), meixner_closed(1, 0, true));
    CHECK(w.outcome == CompareOutcome::Equal);
    // the factorial convention separates at k = 2: only the m! sum stays proportional
    const CompareResult with_fact =
        compare_up_to_constant(weyl.member(2, 0), meixner_closed(2, 0, true));
    CHECK(with_fact.outcome == CompareOutcome::Proportional);
    const CompareResult without_fact =
        compare_up_to_constant(weyl.member(2, 0), meixner_closed(2, 0, false));
    CHECK(without_fact.outcome == CompareOutcome::Mismatch);

    MatrixFamily mat;
    const CompareResult d =
        compare_up_to_constant(mat.member(2, 0), dualhahn_closed(1, 0, true));
    CHECK(d.outcome == CompareOutcome::Proportional);
}
