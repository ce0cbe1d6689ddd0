#include "ospoly/coeff_ring.hpp"
#include "ospoly/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ospoly;

namespace {

const AlgebraCase G = AlgebraCase::GenericFG;
const AlgebraCase W = AlgebraCase::WeylPQ;

HTauPoly random_coeff(std::mt19937_64& rng, AlgebraCase cas, bool force_tau_parity = false,
                      bool tau_part = false) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto rnd = [&]() {
        return LambdaPoly::from_coeffs({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    };
    std::vector<LambdaPoly> even, odd;
    if (!force_tau_parity || !tau_part) {
        even.resize(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : even) c = rnd();
    }
    if (cas == G && (!force_tau_parity || tau_part)) {
        odd.resize(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : odd) c = rnd();
    }
    return HTauPoly::from_parts(cas, std::move(even), std::move(odd));
}

} // namespace

TEST_CASE("tau squares to (lambda + 1/2)^2 and products reduce") {
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly h = HTauPoly::h(G);
    CHECK(tau * tau == HTauPoly::constant(G, LambdaPoly::tau_square()));
    // (H + tau)(H - tau) = H^2 - lambda^2 - lambda - 1/4
    const HTauPoly expect =
        h * h - HTauPoly::constant(G, LambdaPoly::tau_square());
    CHECK((h + tau) * (h - tau) == expect);
    const HTauPoly one = HTauPoly::constant(G, Rational(1));
    std::mt19937_64 rng(7);
    const HTauPoly f = random_coeff(rng, G);
    CHECK(one * f == f);
}

TEST_CASE("shift_h couples the H shift with the tau sign flip") {
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly h = HTauPoly::h(G);
    CHECK(tau.shift_h(1) == -tau);
    CHECK((h * h).shift_h(2) == h * h + h * Rational(4) + HTauPoly::constant(G, Rational(4)));
    CHECK((h * tau).shift_h(1) == -((h + HTauPoly::constant(G, Rational(1))) * tau));

    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const HTauPoly f = random_coeff(rng, G);
        for (int a : {-3, -1, 2, 5}) CHECK(f.shift_h(a).shift_h(-a) == f);
    }
}

TEST_CASE("weighted degree uses deg H = 2, deg tau = 1 generically and deg H = 1 otherwise") {
    const HTauPoly h2tau = HTauPoly::h_power(G, 2) * HTauPoly::tau(G);
    CHECK(h2tau.weighted_degree() == 5);
    CHECK(HTauPoly::h_power(W, 3).weighted_degree() == 3);
    CHECK(HTauPoly::constant(G, Rational(5)).weighted_degree() == 0);
    CHECK_THROWS_AS(HTauPoly(G).weighted_degree(), ZeroPolynomialError);

    // additivity on tau-parity-pure factors: exact when at least one factor is
    // even; a pure-odd pair reduces tau^2 to a constant and drops exactly 2
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const bool ta = t % 2 == 0, tb = t % 3 == 0;
        const HTauPoly a = random_coeff(rng, G, true, ta);
        const HTauPoly b = random_coeff(rng, G, true, tb);
        if (a.is_zero() || b.is_zero()) continue;
        const int drop = (ta && tb) ? 2 : 0;
        CHECK((a * b).weighted_degree() == a.weighted_degree() + b.weighted_degree() - drop);
    }
    for (int t = 0; t < 30; ++t) {
        const HTauPoly a = random_coeff(rng, G);
        const HTauPoly b = random_coeff(rng, G);
        if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
        CHECK((a * b).weighted_degree() <= a.weighted_degree() + b.weighted_degree());
    }
}

TEST_CASE("exact linear division") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly f = h * h - HTauPoly::constant(G, Rational(1, 4));
    CHECK(f.exact_div_linear(half()) == h + HTauPoly::constant(G, half()));

    try {
        h.exact_div_linear(Rational(1));
        FAIL("expected an inexact division");
    } catch (const InexactDivisionError& e) {
        CHECK(e.remainder == "1");
    }

    // nabla of a reflection-symmetric polynomial divides by H - (i + 1/2)
    for (int i = 0; i <= 2; ++i) {
        const Rational c(i);
        const HTauPoly sym = (h - HTauPoly::constant(G, c)) * (h - HTauPoly::constant(G, c)) +
                             HTauPoly::constant(G, Rational(3));
        const HTauPoly grad = sym - sym.shift_h_plain(-1);
        CHECK_NOTHROW(grad.exact_div_linear(c + half()));
    }

    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        const HTauPoly f2 = random_coeff(rng, G);
        const Rational r(t - 10, 3);
        const HTauPoly prod = f2 * (h - HTauPoly::constant(G, r));
        CHECK(prod.exact_div_linear(r) == f2);
    }
}

TEST_CASE("reflection about a center") {
    const HTauPoly h = HTauPoly::h(W);
    const HTauPoly one = HTauPoly::constant(W, Rational(1));
    const HTauPoly f = (h - one) * (h - one);
    CHECK(f.reflect(Rational(1)) == f);
    CHECK(h.reflect(Rational(0)) == -h);
    for (int i : {1, 2, 3}) {
        const HTauPoly g = h * h - h * Rational(2 * i);
        CHECK(g.reflect(Rational(i)) == g);
    }
    CHECK_THROWS_AS(HTauPoly::tau(G).reflect(Rational(0)), ParityError);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const HTauPoly f2 = random_coeff(rng, W);
        CHECK(f2.reflect(Rational(2)).reflect(Rational(2)) == f2);
    }
}

TEST_CASE("lambda specialization") {
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly spec = tau.specialize_lambda(Rational(1));
    CHECK((spec * spec) == HTauPoly::constant(G, Rational(1)).specialize_lambda(Rational(1)) *
                               Rational(9, 4));
    const HTauPoly f = HTauPoly::constant(G, LambdaPoly::from_coeffs({Rational(0), Rational(1),
                                                                      Rational(1)})) *
                       HTauPoly::h(G);
    CHECK(f.specialize_lambda(Rational(1)) == HTauPoly::h(G).specialize_lambda(Rational(1)) *
                                                  Rational(2));

    // specialize at three nodes and interpolate back (degree <= 2 in lambda)
    std::mt19937_64 rng(12);
    const HTauPoly g = random_coeff(rng, G);
    const std::vector<Rational> nodes = {Rational(0), Rational(1), Rational(-1)};
    for (int k = 0; k <= g.h_degree(); ++k) {
        for (bool oddpart : {false, true}) {
            const LambdaPoly coeff = oddpart ? g.odd_coeff(k) : g.even_coeff(k);
            if (coeff.degree().value_or(0) > 2) continue;
            std::vector<std::pair<Rational, Rational>> pts;
            for (const auto& x : nodes) pts.emplace_back(x, coeff.evaluate(x));
            CHECK(lagrange_interpolate(pts) == coeff);
        }
    }
}

TEST_CASE("pochhammer symbols over the coefficient ring") {
    const HTauPoly one = HTauPoly::constant(G, Rational(1));
    CHECK(pochhammer(HTauPoly::h(G), 0) == one);
    Rational nf = 1;
    for (int n = 1; n <= 5; ++n) {
        nf *= n;
        CHECK(pochhammer(one, n) == one * nf);
    }
    // (i + 1/2 - tau)_2 with the tau reduction, at i = 0
    const HTauPoly x = HTauPoly::constant(G, half()) - HTauPoly::tau(G);
    const HTauPoly expect = HTauPoly::constant(G, LambdaPoly::tau_square()) -
                            HTauPoly::tau(G) * Rational(2) +
                            HTauPoly::constant(G, Rational(3, 4));
    CHECK(pochhammer(x, 2) == expect);
}

TEST_CASE("canonical rendering") {
    const HTauPoly h = HTauPoly::h(G);
    const HTauPoly tau = HTauPoly::tau(G);
    const HTauPoly f = h * half() - tau * half() + HTauPoly::constant(G, Rational(1, 4));
    CHECK(f.to_string() == "(1/2)*H - (1/2)*t + 1/4");
    const HTauPoly g =
        HTauPoly::constant(G, LambdaPoly::from_coeffs({Rational(0), Rational(0), Rational(3, 2)})) *
        HTauPoly::h_power(G, 2);
    CHECK(g.to_string() == "(3/2)*l^2*H^2");
    RenderOptions uni;
    uni.unicode = true;
    CHECK(tau.to_string(uni) == "τ");
    CHECK(HTauPoly(G).to_string() == "0");
}

TEST_CASE("case discipline") {
    CHECK_THROWS_AS(HTauPoly::tau(W), CaseMismatchError);
    const HTauPoly hg = HTauPoly::h(G);
    const HTauPoly hw = HTauPoly::h(W);
    CHECK_THROWS_AS(hg * hw, CaseMismatchError);
}
