#include "ospoly/verify.hpp"

#include "ospoly/errors.hpp"
#include "ospoly/expr.hpp"
#include "ospoly/matrix_rep.hpp"
#include "ospoly/ortho.hpp"
#include "ospoly/supertrace.hpp"

#include <functional>
#include <random>

namespace ospoly {

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

LambdaPoly rand_lambda_poly(Rng& rng) {
    std::uniform_int_distribution<int> deg(0, 1);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = rand_rational(rng);
    return LambdaPoly::from_coeffs(std::move(c));
}

HTauPoly rand_coeff(AlgebraCase cas, Rng& rng) {
    std::uniform_int_distribution<int> deg(0, 2);
    std::vector<LambdaPoly> even(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : even) c = rand_lambda_poly(rng);
    std::vector<LambdaPoly> odd;
    if (cas == AlgebraCase::GenericFG) {
        std::uniform_int_distribution<int> coin(0, 1);
        if (coin(rng)) {
            odd.resize(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& c : odd) c = rand_lambda_poly(rng);
        }
    }
    return HTauPoly::from_parts(cas, std::move(even), std::move(odd));
}

GradedElement rand_element(AlgebraCase cas, Rng& rng) {
    std::uniform_int_distribution<int> grade(-2, 2);
    GradedElement u = GradedElement::zero(cas);
    const int parts = 2;
    for (int p = 0; p < parts; ++p)
        u += GradedElement::monomial(rand_coeff(cas, rng), grade(rng));
    return u;
}

GradedElement rand_homogeneous(AlgebraCase cas, Rng& rng, Parity parity) {
    std::uniform_int_distribution<int> pick(0, 2);
    const int base = parity == Parity::Odd ? 1 : 0;
    GradedElement u = GradedElement::zero(cas);
    for (int p = 0; p < 2; ++p) {
        const int g = base + 2 * (pick(rng) - 1); // in {-2,0,2} or {-1,1,3}
        u += GradedElement::monomial(rand_coeff(cas, rng), g);
    }
    return u;
}

GradedElement rand_homogeneous(AlgebraCase cas, Rng& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    return rand_homogeneous(cas, rng, coin(rng) ? Parity::Odd : Parity::Even);
}

int parity_bit(const GradedElement& u) {
    return u.parity() == Parity::Odd ? 1 : 0;
}

Check make_check(std::string id, std::string ref, bool ok, std::string detail = "") {
    Check c;
    c.id = std::move(id);
    c.ref = std::move(ref);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!ok) c.detail = detail.empty() ? "nonzero residual" : detail;
    return c;
}

const std::vector<AlgebraCase> kAllCases = {AlgebraCase::GenericFG, AlgebraCase::WeylPQ,
                                            AlgebraCase::MatrixUV};

// ---------------------------------------------------------------- casimir --

void algebra_structure_checks(SuiteReport& rep, AlgebraCase cas) {
    const std::string suffix = "." + case_name(cas);
    Rng rng(0x5eed0001 + static_cast<unsigned>(cas));

    bool assoc = true;
    for (int t = 0; t < 50 && assoc; ++t) {
        const GradedElement a = rand_element(cas, rng);
        const GradedElement b = rand_element(cas, rng);
        const GradedElement c = rand_element(cas, rng);
        assoc = ((a * b) * c == a * (b * c));
    }
    rep.add(make_check("algebra.associativity" + suffix, "(u v) w = u (v w)", assoc));

    bool grading = true;
    const GradedElement H = GradedElement::h_element(cas);
    for (int g = -3; g <= 3 && grading; ++g) {
        Rng r2(0x5eed0002 + static_cast<unsigned>(g + 3));
        const GradedElement u = GradedElement::monomial(rand_coeff(cas, r2), g);
        grading = (super_bracket(H, u) == u * Rational(g));
    }
    rep.add(make_check("algebra.h_grading" + suffix, "[H, u] = i u on grade-i elements", grading));

    bool transp = true;
    for (int t = 0; t < 30 && transp; ++t) {
        const GradedElement u = rand_homogeneous(cas, rng);
        const GradedElement v = rand_homogeneous(cas, rng);
        const int pu = parity_bit(u), pv = parity_bit(v);
        GradedElement lhs = (u * v).supertranspose();
        GradedElement rhs = v.supertranspose() * u.supertranspose();
        if ((pu * pv) % 2 != 0) rhs *= Rational(-1);
        transp = (lhs == rhs);
        if (transp) {
            GradedElement twice = u.supertranspose().supertranspose();
            GradedElement expect = pu ? -u : u;
            transp = (twice == expect);
        }
    }
    rep.add(make_check("algebra.supertranspose" + suffix,
                       "(uv)^t = (-1)^{p(u)p(v)} v^t u^t and (u^t)^t = (-1)^{p(u)} u",
                       transp));

    bool braid = true;
    for (int t = 0; t < 30 && braid; ++t) {
        const GradedElement a = rand_homogeneous(cas, rng);
        const GradedElement b = rand_homogeneous(cas, rng);
        const GradedElement c = rand_homogeneous(cas, rng);
        const int pa = parity_bit(a), pb = parity_bit(b), pc = parity_bit(c);
        // [ab, c] = [a, bc] + (-1)^{p(a)(p(b)+p(c))} [b, ca]
        GradedElement lhs = super_bracket(a * b, c);
        GradedElement second = super_bracket(b, c * a);
        if ((pa * (pb + pc)) % 2 != 0) second *= Rational(-1);
        braid = (lhs == super_bracket(a, b * c) + second);
    }
    rep.add(make_check("algebra.bracket_expansion" + suffix,
                       "[ab, c] = [a, bc] + (-1)^{p(a)(p(b)+p(c))} [b, ca]", braid));

    bool jacobi = true;
    for (int t = 0; t < 30 && jacobi; ++t) {
        const GradedElement x = rand_homogeneous(cas, rng);
        const GradedElement y = rand_homogeneous(cas, rng);
        const GradedElement z = rand_homogeneous(cas, rng);
        const int px = parity_bit(x), py = parity_bit(y);
        GradedElement lhs = super_bracket(x, super_bracket(y, z));
        GradedElement second = super_bracket(y, super_bracket(x, z));
        if ((px * py) % 2 != 0) second *= Rational(-1);
        jacobi = (lhs == super_bracket(super_bracket(x, y), z) + second);
    }
    rep.add(make_check("algebra.jacobi" + suffix,
                       "[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]", jacobi));

    bool additive = true;
    for (int t = 0; t < 20 && additive; ++t) {
        const GradedElement u = rand_element(cas, rng);
        const GradedElement v = rand_element(cas, rng);
        const GradedElement uv = u * v;
        for (const auto& [g, f] : uv.coeffs()) {
            bool reachable = false;
            for (const auto& [i, fi] : u.coeffs())
                for (const auto& [j, fj] : v.coeffs())
                    if (i + j == g) reachable = true;
            if (!reachable) additive = false;
        }
    }
    rep.add(make_check("algebra.grade_additivity" + suffix,
                       "support(uv) is contained in pairwise grade sums", additive));
}

SuiteReport casimir_suite() {
    SuiteReport rep;
    rep.suite = "casimir";
    const AlgebraCase c = AlgebraCase::GenericFG;
    const GradedElement G = GradedElement::raising(c);
    const GradedElement F = GradedElement::lowering(c);
    const GradedElement H = GradedElement::h_element(c);
    const GradedElement one = GradedElement::one(c);
    const CasimirElements ce = casimir_elements(c);

    rep.add(make_check("casimir.tau_normal_form", "2GF - H + 1/2 reduces to the ring element tau",
                       ce.tau == GradedElement::tau_element(c)));
    rep.add(make_check("casimir.tau_anticommutes_F", "tau F + F tau = 0",
                       (ce.tau * F + F * ce.tau).is_zero()));
    rep.add(make_check("casimir.tau_anticommutes_G", "tau G + G tau = 0",
                       (ce.tau * G + G * ce.tau).is_zero()));
    rep.add(make_check("casimir.tau_commutes_H", "tau H - H tau = 0",
                       (ce.tau * H - H * ce.tau).is_zero()));

    const LambdaPoly omega_value =
        LambdaPoly::variable() * LambdaPoly::variable() + LambdaPoly::variable();
    rep.add(make_check("casimir.quadratic_casimir_scalar", "tau^2 - 1/4 = lambda(lambda+1)",
                       ce.Omega.as_lambda_constant() == omega_value));
    rep.add(make_check("casimir.quadratic_casimir_central", "[tau^2 - 1/4, F] = [., G] = [., H] = 0",
                       super_bracket(ce.Omega, F).is_zero() &&
                           super_bracket(ce.Omega, G).is_zero() &&
                           super_bracket(ce.Omega, H).is_zero()));

    const GradedElement X = G * G;
    const GradedElement Y = -(F * F);
    rep.add(make_check("casimir.quadratic_casimir_from_generators",
                       "H^2 - H + 4XY - 2GF = tau^2 - 1/4 with X = G^2, Y = -F^2",
                       H * H - H + Rational(4) * (X * Y) - Rational(2) * (G * F) == ce.Omega));
    rep.add(make_check("casimir.sl2_casimir_from_generators",
                       "H^2 - 2H + 4XY = tau^2 + tau - 3/4",
                       H * H - Rational(2) * H + Rational(4) * (X * Y) == ce.omega));
    rep.add(make_check("casimir.casimir_difference", "omega - Omega = tau - 1/2",
                       ce.omega - ce.Omega == ce.tau - one * half()));
    rep.add(make_check("casimir.xy_value",
                       "XY = ((tau + 1/2)^2 - (H - 1)^2)/4",
                       X * Y ==
                           ((ce.tau + one * half()) * (ce.tau + one * half()) -
                            (H - one) * (H - one)) *
                               Rational(1, 4)));

    for (unsigned n = 0; n <= 6; ++n) {
        auto [lhs, rhs] = gn_fn_product(n);
        rep.add(make_check("casimir.product_formula.n" + std::to_string(n),
                           "G^n F^n equals the alternating-shift factored product",
                           lhs == rhs));
    }

    for (AlgebraCase cas : kAllCases) algebra_structure_checks(rep, cas);
    return rep;
}

// ------------------------------------------------------------------ trace --

std::vector<GradedElement> case_generators(AlgebraCase cas) {
    return {GradedElement::raising(cas), GradedElement::lowering(cas),
            GradedElement::h_element(cas)};
}

// Bareiss fraction-free elimination; true iff the matrix has full rank.
bool full_rank(std::vector<std::vector<LambdaPoly>> m) {
    const int n = static_cast<int>(m.size());
    LambdaPoly prev(Rational(1));
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n && pivot < 0; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) pivot = r;
        if (pivot < 0) return false;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(k)]);
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                LambdaPoly num = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] *
                                     m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                                 m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                                     m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                auto q = num.exact_divide(prev);
                if (!q) throw Error("fraction-free elimination lost exactness");
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = *q;
            }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return true;
}

SuiteReport trace_suite() {
    SuiteReport rep;
    rep.suite = "trace";
    for (AlgebraCase cas : kAllCases) {
        const std::string suffix = "." + case_name(cas);
        MomentTable table(cas, 12);
        Rng rng(0x7ace0001 + static_cast<unsigned>(cas));

        rep.add(make_check("trace.normalized" + suffix, "L(1) = 1",
                           trace(GradedElement::one(cas), table) == LambdaPoly(1)));
        rep.add(make_check("trace.graded_vanishing" + suffix, "L vanishes off grade zero",
                           trace(GradedElement::raising(cas), table).is_zero() &&
                               trace(GradedElement::lowering(cas, 2), table).is_zero()));

        bool comm = true;
        for (const GradedElement& x : case_generators(cas))
            for (int t = 0; t < 10 && comm; ++t)
                comm = trace(super_bracket(x, rand_homogeneous(cas, rng)), table).is_zero();
        rep.add(make_check("trace.commutator_vanishing" + suffix,
                           "L([x, u]) = 0 for generators x", comm));

        bool tsym = true;
        for (int t = 0; t < 30 && tsym; ++t) {
            const GradedElement u = rand_element(cas, rng);
            tsym = (trace(u.supertranspose(), table) == trace(u, table));
        }
        rep.add(make_check("trace.transpose_symmetry" + suffix, "L(u^t) = L(u)", tsym));

        bool inv = true;
        for (int t = 0; t < 30 && inv; ++t) {
            const GradedElement w = rand_homogeneous(cas, rng);
            const GradedElement u = rand_homogeneous(cas, rng);
            const GradedElement v = rand_homogeneous(cas, rng);
            LambdaPoly lhs = form(super_bracket(w, u), v, table);
            LambdaPoly rhs = form(u, super_bracket(w.supertranspose(), v), table);
            if ((parity_bit(w) * (parity_bit(u) + 1)) % 2 != 0) rhs = -rhs;
            inv = (lhs == rhs);
        }
        rep.add(make_check("trace.invariance" + suffix,
                           "<[w,u], v> = (-1)^{p(w)(p(u)+1)} <u, [w^t, v]>", inv));

        // Anti-bracket invariance: the stated sign and the proof-chain sign
        // disagree in print, so both candidates run and the winner is recorded.
        {
            bool stated = true, chain = true;
            Rng r2(0x7ace0077 + static_cast<unsigned>(cas));
            for (int t = 0; t < 30 && (stated || chain); ++t) {
                const GradedElement w = rand_homogeneous(cas, r2);
                const GradedElement u = rand_homogeneous(cas, r2);
                const GradedElement v = rand_homogeneous(cas, r2);
                const LambdaPoly lhs = form(anti_bracket(w, u), v, table);
                const LambdaPoly inner = form(u, anti_bracket(w.supertranspose(), v), table);
                LambdaPoly rhs_stated = inner;
                if ((parity_bit(w) * (parity_bit(u) + 1)) % 2 != 0) rhs_stated = -rhs_stated;
                LambdaPoly rhs_chain = -inner;
                if ((parity_bit(u) * (parity_bit(v) + 1)) % 2 != 0) rhs_chain = -rhs_chain;
                if (lhs != rhs_stated) stated = false;
                if (lhs != rhs_chain) chain = false;
            }
            Check c;
            c.id = "trace.antibracket_invariance" + suffix;
            c.ref = "<{w,u}, v> against the two printed sign readings";
            if (stated || chain) {
                c.status = CheckStatus::Resolved;
                c.variant = stated && chain ? "both signs" : (stated ? "stated sign" : "proof-chain sign");
            } else {
                c.status = CheckStatus::Fail;
                c.detail = "neither sign reading holds";
            }
            rep.add(c);
        }

        // Nondegeneracy at desk scale: full-rank Gram of the monomial basis.
        for (int grade = 0; grade <= 2; ++grade) {
            std::vector<HTauPoly> basis;
            if (cas == AlgebraCase::GenericFG) {
                for (int a = 0; 2 * a <= 8 - grade; ++a)
                    for (int b = 0; b <= 1; ++b) {
                        if (2 * a + b > 8 - grade) continue;
                        HTauPoly f = HTauPoly::h_power(cas, a);
                        if (b) f *= HTauPoly::tau(cas);
                        basis.push_back(f);
                    }
            } else {
                for (int a = 0; a + grade <= 8; ++a) basis.push_back(HTauPoly::h_power(cas, a));
            }
            rep.add(make_check("trace.gram_rank" + suffix + ".grade" + std::to_string(grade),
                               "monomial Gram matrix has full rank over Q(lambda)",
                               full_rank(gram_matrix(basis, grade, table))));
        }
    }

    // Isotropy in the matrix presentation: odd symmetry classes pair to zero.
    {
        const AlgebraCase cas = AlgebraCase::MatrixUV;
        MomentTable table(cas, 24);
        bool odd_ok = true, even_ok = true;
        for (int k = 0; k <= 3; ++k) {
            const GradedElement word = GradedElement::raising(cas, 2 * k) *
                                       GradedElement::lowering(cas, 2 * k);
            for (int e = 1; e <= 5 && odd_ok; e += 2) {
                HTauPoly f = (HTauPoly::h(cas) - HTauPoly::constant(cas, Rational(k)));
                HTauPoly fp = HTauPoly::constant(cas, Rational(1));
                for (int j = 0; j < e; ++j) fp *= f;
                odd_ok = trace(word.left_mul_coeff(fp), table).is_zero();
            }
            const GradedElement word2 = GradedElement::raising(cas, 2 * k + 1) *
                                        GradedElement::lowering(cas, 2 * k + 1);
            for (int e = 0; e <= 6 && even_ok; e += 2) {
                HTauPoly f =
                    HTauPoly::h(cas) - HTauPoly::constant(cas, Rational(2 * k + 1, 2));
                HTauPoly fp = HTauPoly::constant(cas, Rational(1));
                for (int j = 0; j < e; ++j) fp *= f;
                even_ok = trace(word2.left_mul_coeff(fp), table).is_zero();
            }
        }
        rep.add(make_check("trace.isotropy.odd_class",
                           "f(2k - H) = -f(H) forces L(f V^{2k} U^{2k}) = 0", odd_ok));
        rep.add(make_check("trace.isotropy.even_class",
                           "f(2k+1 - H) = f(H) forces L(f V^{2k+1} U^{2k+1}) = 0", even_ok));
    }

    // Moment spot values from the generating functions.
    {
        MomentTable gen(AlgebraCase::GenericFG, 4);
        MomentTable weyl(AlgebraCase::WeylPQ, 4);
        MomentTable mat(AlgebraCase::MatrixUV, 4);
        const LambdaPoly lam = LambdaPoly::variable();
        rep.add(make_check("trace.moment_h.generic", "L(H) = 0", gen.even_moment(1).is_zero()));
        rep.add(make_check("trace.moment_h2.generic", "L(H^2) = lambda(lambda+1)",
                           gen.even_moment(2) == lam * lam + lam));
        rep.add(make_check("trace.moment_tau.generic", "L(tau) = 2(lambda+1/2)^2",
                           gen.odd_moment(0) == LambdaPoly::tau_square() * Rational(2)));
        rep.add(make_check("trace.moment_h2.weyl", "L(H^2) = -1/4",
                           weyl.even_moment(2) == LambdaPoly(Rational(-1, 4))));
        rep.add(make_check("trace.moment_h.matrix", "L(H) = 0", mat.even_moment(1).is_zero()));
    }
    return rep;
}

// ----------------------------------------------------------------- matrix --

SuiteReport matrix_suite() {
    SuiteReport rep;
    rep.suite = "matrix";
    MomentTable gen_table(AlgebraCase::GenericFG, 12);
    MomentTable mat_table(AlgebraCase::MatrixUV, 12);
    for (int lambda = 1; lambda <= 3; ++lambda) {
        const std::string suffix = ".l" + std::to_string(lambda);
        bool rel_ok = true;
        std::string bad;
        for (const auto& r : check_relations(lambda))
            if (!r.ok) {
                rel_ok = false;
                bad += r.id + "; ";
            }
        rep.add(make_check("matrix.relations" + suffix,
                           "defining relations hold as exact matrix identities", rel_ok, bad));

        const RepImages rep_images = build_rep(lambda);
        const int e = nilpotency_exponent(rep_images.V, 2 * lambda + 2);
        {
            Check c;
            c.id = "matrix.nilpotency" + suffix;
            c.ref = "minimal e with V^e = 0 (printed exponent reads 2*lambda)";
            if (e == 2 * lambda + 1) {
                c.status = CheckStatus::Resolved;
                c.variant = "V^(2*lambda+1) = 0";
                c.detail = "V^(2*lambda) is nonzero, so the printed exponent is short by one";
            } else {
                c.status = CheckStatus::Fail;
                c.detail = "observed exponent " + std::to_string(e);
            }
            rep.add(c);
        }

        bool cross = crosscheck_trace(lambda, 8, gen_table).empty() &&
                     crosscheck_trace(lambda, 8, mat_table).empty();
        rep.add(make_check("matrix.trace_crosscheck" + suffix,
                           "str(project(u)) = L(u)|_lambda for monomials of weighted degree <= 8",
                           cross));

        {
            const GradedElement G = GradedElement::raising(AlgebraCase::GenericFG);
            const Rational got =
                (project(G, lambda) * project(G.supertranspose(), lambda)).supertrace();
            const Rational want = -Rational(lambda) * (Rational(lambda) + 1);
            const Rational sym = form(G, G, gen_table).evaluate(Rational(lambda));
            rep.add(make_check("matrix.form_gg" + suffix, "<G, G> = -lambda(lambda+1)",
                               got == want && sym == want));
        }

        bool hom = true;
        for (AlgebraCase cas : {AlgebraCase::GenericFG, AlgebraCase::MatrixUV}) {
            Rng rng(0xbeef0001 + static_cast<unsigned>(lambda * 7 + static_cast<int>(cas)));
            for (int t = 0; t < 10 && hom; ++t) {
                const GradedElement u = rand_element(cas, rng);
                const GradedElement v = rand_element(cas, rng);
                hom = (project(u * v, lambda) == project(u, lambda) * project(v, lambda));
            }
        }
        rep.add(make_check("matrix.homomorphism" + suffix,
                           "project(uv) = project(u) project(v)", hom));

        bool strcomm = true;
        {
            Rng rng(0xbeef0100 + static_cast<unsigned>(lambda));
            std::uniform_int_distribution<int> num(-3, 3);
            for (int t = 0; t < 10 && strcomm; ++t) {
                for (int pa = 0; pa <= 1; ++pa)
                    for (int pb = 0; pb <= 1; ++pb) {
                        SuperMatrix A(lambda), B(lambda);
                        for (int r = 0; r < A.dim(); ++r)
                            for (int c = 0; c < A.dim(); ++c) {
                                if ((r + c) % 2 == pa) A.at(r, c) = num(rng);
                                if ((r + c) % 2 == pb) B.at(r, c) = num(rng);
                            }
                        SuperMatrix ba = B * A;
                        SuperMatrix br = (pa * pb) % 2 ? A * B + ba : A * B - ba;
                        if (br.supertrace() != 0) strcomm = false;
                    }
            }
        }
        rep.add(make_check("matrix.supertrace_vanishing" + suffix,
                           "str([A, B]) = 0 for parity-homogeneous matrices", strcomm));

        bool compat = true;
        for (AlgebraCase cas : {AlgebraCase::GenericFG, AlgebraCase::MatrixUV}) {
            MomentTable& table = cas == AlgebraCase::GenericFG ? gen_table : mat_table;
            for (int c = -3; c <= 3 && compat; ++c)
                for (int a = 0; 2 * a + std::abs(c) <= 6 && compat; ++a) {
                    HTauPoly f = HTauPoly::h_power(cas, a);
                    const GradedElement u = GradedElement::monomial(f, c);
                    const Rational lhs =
                        (project(u, lambda) * project(u.supertranspose(), lambda)).supertrace();
                    const Rational rhs = form(u, u, table).evaluate(Rational(lambda));
                    compat = (lhs == rhs);
                }
        }
        rep.add(make_check("matrix.transpose_compat" + suffix,
                           "str(project(u) project(u^t)) = <u, u>|_lambda", compat));

        {
            MatrixFamily fam;
            bool gram_ok = true;
            for (int j = 0; j <= 3 && gram_ok; ++j) {
                std::vector<HTauPoly> members;
                for (int l = 0; l <= 4; ++l) members.push_back(fam.member(l, j));
                const auto gram = gram_matrix(members, j, mat_table);
                for (std::size_t a = 0; a < members.size() && gram_ok; ++a)
                    for (std::size_t b = 0; b < members.size() && gram_ok; ++b) {
                        const GradedElement ua =
                            GradedElement::monomial(members[a], j);
                        const GradedElement ub =
                            GradedElement::monomial(members[b], j);
                        const Rational mat_val =
                            (project(ua, lambda) * project(ub.supertranspose(), lambda))
                                .supertrace();
                        gram_ok = (gram[a][b].evaluate(Rational(lambda)) == mat_val);
                    }
            }
            rep.add(make_check("matrix.gram_crosscheck" + suffix,
                               "family Gram entries agree with the matrix model", gram_ok));
        }
    }
    return rep;
}

} // namespace

SuiteReport run_casimir_suite() { return casimir_suite(); }
SuiteReport run_trace_suite() { return trace_suite(); }
SuiteReport run_matrix_suite() { return matrix_suite(); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"casimir", "trace", "ortho",
                                                   "diffeq", "closed", "matrix"};
    return names;
}

std::optional<SuiteReport> run_suite(const std::string& name) {
    if (name == "casimir") return run_casimir_suite();
    if (name == "trace") return run_trace_suite();
    if (name == "ortho") return run_ortho_suite();
    if (name == "diffeq") return run_diffeq_suite();
    if (name == "closed") return run_closed_suite();
    if (name == "matrix") return run_matrix_suite();
    if (name == "all") {
        SuiteReport all;
        all.suite = "all";
        for (const auto& n : suite_names()) all.merge(*run_suite(n));
        return all;
    }
    return std::nullopt;
}

} // namespace ospoly
