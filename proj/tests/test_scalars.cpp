#include "ospoly/errors.hpp"
#include "ospoly/exp_series.hpp"
#include "ospoly/lambda_poly.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace ospoly;

namespace {

LambdaPoly lam() { return LambdaPoly::variable(); }

LambdaPoly random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return LambdaPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("rational strings round-trip") {
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(rational_from_string("-9/12") == Rational(-3, 4));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
}

TEST_CASE("lambda polynomial arithmetic") {
    const LambdaPoly p = (lam() + LambdaPoly(Rational(1, 2))) * (lam() + LambdaPoly(Rational(1, 2)));
    CHECK(p == LambdaPoly::tau_square());
    CHECK(p.to_string() == "l^2 + l + 1/4");
    CHECK((lam() * lam() + lam()).evaluate(Rational(1)) == Rational(2));
    CHECK((lam() * lam() + lam()).evaluate(Rational(-1, 2)) == Rational(-1, 4));

    std::mt19937_64 rng(42);
    for (int t = 0; t < 25; ++t) {
        const LambdaPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("division, gcd and interpolation") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        LambdaPoly a = random_poly(rng, 3), b = random_poly(rng, 2);
        if (b.is_zero()) continue;
        auto [q, r] = LambdaPoly::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(*(a * b).exact_divide(b) == a);
    }
    const LambdaPoly g = poly_gcd((lam() + 1) * (lam() + 2), (lam() + 1) * (lam() + 3));
    CHECK(g == lam() + LambdaPoly(1));

    const LambdaPoly p = lam() * lam() + lam();
    std::vector<std::pair<Rational, Rational>> pts;
    for (int x : {0, 1, 2}) pts.emplace_back(Rational(x), p.evaluate(Rational(x)));
    CHECK(lagrange_interpolate(pts) == p);
}

TEST_CASE("ratio of exponential sums: frozen values from the scalar oracle") {
    const LambdaPoly one(Rational(1));
    // (e^{(lambda+1)t} + e^{-lambda t}) / (e^t + 1)
    const ExpPolySeries num({{one, lam() + one}, {one, -lam()}});
    const ExpPolySeries den({{one, one}, {one, LambdaPoly()}});
    const auto c = ratio_series_coeffs(num, den, 2);
    // oracle: long division at five specializations, interpolated back
    const std::vector<Rational> nodes = {Rational(1), Rational(2), Rational(-2),
                                         Rational(1, 3), Rational(5, 2)};
    const auto oracle = ospoly::testing::interpolated_series_ratio(num, den, nodes, 10);
    CHECK(c[0] == oracle[0]);
    CHECK(c[1] == oracle[1]);
    CHECK(c[2] == oracle[2]);
    CHECK(c[0] == one);
    CHECK(c[1].is_zero());
    CHECK(c[2] == (lam() * lam() + lam()).div_rational(Rational(2)));

    // identity ratio
    const auto id = ratio_series_coeffs(den, den, 3);
    CHECK(id[0] == one);
    CHECK(id[1].is_zero());
    CHECK(id[2].is_zero());
    CHECK(id[3].is_zero());

    // 2 e^{t/2} / (1 + e^t)
    const ExpPolySeries num2({{LambdaPoly(Rational(2)), LambdaPoly(Rational(1, 2))}});
    const auto w = ratio_series_coeffs(num2, den, 2);
    const auto worked = ospoly::testing::interpolated_series_ratio(num2, den, nodes, 10);
    CHECK(w[0] == worked[0]);
    CHECK(w[1] == worked[1]);
    CHECK(w[2] == worked[2]);
    CHECK(w[0] == one);
    CHECK(w[1].is_zero());
    CHECK(w[2] == LambdaPoly(Rational(-1, 8)));
}

TEST_CASE("ratio coefficients agree with scalar division at random specializations") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int t = 0; t < 12; ++t) {
        // random two-term numerator and denominator with invertible constant term
        std::vector<ExpTerm> nt = {{random_poly(rng, 2), random_poly(rng, 1)},
                                   {random_poly(rng, 2), LambdaPoly(Rational(small(rng)))}};
        std::vector<ExpTerm> dt = {{LambdaPoly(Rational(2)), random_poly(rng, 1)},
                                   {LambdaPoly(Rational(1)), LambdaPoly(Rational(small(rng)))}};
        const ExpPolySeries num(nt), den(dt);
        const auto exact = ratio_series_coeffs(num, den, 6);
        for (const Rational& x : {Rational(1), Rational(-1, 2), Rational(3)}) {
            const auto scalar = ospoly::testing::scalar_series_ratio(num, den, x, 6);
            for (int k = 0; k <= 6; ++k)
                CHECK(exact[static_cast<std::size_t>(k)].evaluate(x) ==
                      scalar[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("exponential sums merge duplicate exponents and drop zero amplitudes") {
    const LambdaPoly one(Rational(1));
    const ExpPolySeries s({{one, lam()}, {one * Rational(2), lam()}, {LambdaPoly(), one}});
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].amplitude == one * Rational(3));
    // exact cancellation removes the term entirely
    const ExpPolySeries z({{one, lam()}, {-one, lam()}});
    CHECK(z.terms().empty());
}

TEST_CASE("singular denominators are rejected") {
    const LambdaPoly one(Rational(1));
    const ExpPolySeries num({{one, lam()}});
    // e^t - 1 vanishes at t = 0
    const ExpPolySeries den({{one, one}, {-one, LambdaPoly()}});
    CHECK_THROWS_AS(ratio_series_coeffs(num, den, 3), SingularGeneratingFunctionError);
    // lambda-dependent constant term is not invertible either
    const ExpPolySeries den2({{lam(), one}});
    CHECK_THROWS_AS(ratio_series_coeffs(num, den2, 3), SingularGeneratingFunctionError);
}
