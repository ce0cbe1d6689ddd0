#pragma once

#include "ospoly/coeff_ring.hpp"

#include <map>
#include <string>
#include <utility>

namespace ospoly {

enum class Parity { Even, Odd, Mixed };

// An element in normal form: sum over grades i of f_i(H, tau) * W_i, where
// W_i is the i-th power of the raising generator (G, Q or V) for i > 0 and
// the (-i)-th power of the lowering generator (F, P or U) for i < 0.
// Coefficients always sit to the left of the generator word.
class GradedElement {
public:
    explicit GradedElement(AlgebraCase c) : cas_(c) {}

    static GradedElement zero(AlgebraCase c) { return GradedElement(c); }
    static GradedElement one(AlgebraCase c);
    static GradedElement from_coeff(HTauPoly f);
    static GradedElement monomial(HTauPoly f, int grade);
    static GradedElement raising(AlgebraCase c, int power = 1);
    static GradedElement lowering(AlgebraCase c, int power = 1);
    static GradedElement h_element(AlgebraCase c);
    static GradedElement tau_element(AlgebraCase c); // grade-0 ring tau

    AlgebraCase algebra_case() const { return cas_; }
    const std::map<int, HTauPoly>& coeffs() const { return coeffs_; }
    HTauPoly coeff(int grade) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<LambdaPoly> as_lambda_constant() const;
    Parity parity() const;
    int min_grade() const;
    int max_grade() const;

    GradedElement operator-() const;
    GradedElement& operator+=(const GradedElement& o);
    GradedElement& operator-=(const GradedElement& o);
    GradedElement& operator*=(const Rational& r);
    GradedElement& operator*=(const LambdaPoly& p);

    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(GradedElement a, const Rational& r) { return a *= r; }
    friend GradedElement operator*(const Rational& r, GradedElement a) { return a *= r; }

    // Coefficient multiplication from the left: f * sum g_i W_i = sum (f g_i) W_i.
    GradedElement left_mul_coeff(const HTauPoly& f) const;

    GradedElement pow(unsigned n) const;

    // The antiautomorphism with H^t = H and G^t = -F, F^t = G (resp. Q, P and
    // V, U with V^t = U, U^t = -V); satisfies (uv)^t = (-1)^{p(u)p(v)} v^t u^t.
    GradedElement supertranspose() const;

    // Grade-reversing automorphism: H -> -H, tau -> tau.  In GenericFG/WeylPQ
    // the odd generators pair up square roots of -1, so only even grades have
    // rational images; odd grades throw IrrationalImageError.  MatrixUV maps
    // U <-> V with no sign.
    GradedElement theta() const;

    bool operator==(const GradedElement& o) const {
        return cas_ == o.cas_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const GradedElement& o) const { return !(*this == o); }

    std::string to_string(const RenderOptions& opts = {}) const;

private:
    AlgebraCase cas_;
    std::map<int, HTauPoly> coeffs_;
    void add_term(int grade, const HTauPoly& f);
    HTauPoly proto() const; // zero coefficient carrying the context

    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
};

GradedElement operator*(const GradedElement& a, const GradedElement& b);

// ab - (-1)^{p(a)p(b)} ba; requires parity-homogeneous inputs.
GradedElement super_bracket(const GradedElement& a, const GradedElement& b);
// ab - (-1)^{p(a)(p(b)+1)} ba; requires parity-homogeneous inputs.
GradedElement anti_bracket(const GradedElement& a, const GradedElement& b);
// n-fold [x, [x, ... [x, target] ...]].
GradedElement ad_power(const GradedElement& x, unsigned n, GradedElement target);

struct CasimirElements {
    GradedElement tau;   // 2GF - H + 1/2
    GradedElement Omega; // tau^2 - 1/4, central
    GradedElement omega; // tau^2 + tau - 3/4, the sl(2) Casimir
};
// GenericFG only.
CasimirElements casimir_elements(AlgebraCase c);

// G^n F^n computed by the rewrite engine, and the closed factored product
// (1/2)^n prod_{j=1..n} ((-1)^{j+1} tau + H - (2j-1)/2), for equality testing.
std::pair<GradedElement, GradedElement> gn_fn_product(unsigned n);

} // namespace ospoly
