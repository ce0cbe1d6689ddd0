#pragma once

#include "ospoly/lambda_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ospoly {

// The three presentations of the quotient algebra: generic (generators G, F),
// the Weyl algebra at lambda = -1/2 (Q, P), and the matrix family (V, U).
enum class AlgebraCase { GenericFG, WeylPQ, MatrixUV };

std::string case_name(AlgebraCase c);
std::optional<AlgebraCase> case_from_name(const std::string& name);

struct RenderOptions {
    bool unicode = false; // lambda/tau glyphs instead of "l"/"t"
    std::string lambda_var() const;
    std::string tau_var() const;
};

// Grade-zero coefficients: p(H) + tau*q(H) over Q[lambda], with the product
// rule tau^2 = (lambda + 1/2)^2.  WeylPQ and MatrixUV presentations have no
// tau, so q = 0 is an invariant there.  Values are immutable in spirit: every
// operation returns a fresh value.
class HTauPoly {
public:
    explicit HTauPoly(AlgebraCase c) : cas_(c) {}

    static HTauPoly constant(AlgebraCase c, const Rational& r);
    static HTauPoly constant(AlgebraCase c, const LambdaPoly& p);
    static HTauPoly lambda(AlgebraCase c);
    static HTauPoly h(AlgebraCase c);
    static HTauPoly h_power(AlgebraCase c, int k);
    static HTauPoly tau(AlgebraCase c); // GenericFG only
    // p + tau*q from explicit H-coefficient vectors (ascending powers).
    static HTauPoly from_parts(AlgebraCase c, std::vector<LambdaPoly> even,
                               std::vector<LambdaPoly> odd);

    AlgebraCase algebra_case() const { return cas_; }
    std::optional<Rational> lambda_value() const { return lambda_; }

    // Constants in the same presentation and specialization state as *this.
    HTauPoly like_constant(const Rational& r) const;
    HTauPoly like_constant(const LambdaPoly& p) const;
    HTauPoly like_h() const;
    HTauPoly like_tau() const;
    // lambda as a coefficient: the variable symbolically, the value specialized.
    HTauPoly like_lambda() const;

    // Number of nonzero (H-power, tau) monomials.
    int monomial_count() const;
    bool is_one() const;
    // One (H, tau) slot whose lambda coefficient is a single term: exactly the
    // values that can be rendered inline as c*l^a*t*H^b without parentheses.
    bool is_single_product() const;

    bool is_zero() const { return even_.empty() && odd_.empty(); }
    bool has_tau_part() const { return !odd_.empty(); }
    bool is_constant() const;
    // Constant term when the value is a pure lambda-constant (no H, no tau).
    std::optional<LambdaPoly> as_lambda_constant() const;

    const std::vector<LambdaPoly>& even_part() const { return even_; }
    const std::vector<LambdaPoly>& odd_part() const { return odd_; }
    LambdaPoly even_coeff(int k) const;
    LambdaPoly odd_coeff(int k) const;
    int h_degree() const; // -1 for values with no H dependence (or zero)

    // Coefficient of the top H power, as an H-free value p + tau*q.
    HTauPoly leading_h_coeff() const;

    HTauPoly operator-() const;
    HTauPoly& operator+=(const HTauPoly& o);
    HTauPoly& operator-=(const HTauPoly& o);
    HTauPoly& operator*=(const HTauPoly& o);
    HTauPoly& operator*=(const Rational& r);
    HTauPoly& operator*=(const LambdaPoly& p);

    friend HTauPoly operator+(HTauPoly a, const HTauPoly& b) { return a += b; }
    friend HTauPoly operator-(HTauPoly a, const HTauPoly& b) { return a -= b; }
    friend HTauPoly operator*(HTauPoly a, const HTauPoly& b) { return a *= b; }
    friend HTauPoly operator*(HTauPoly a, const Rational& r) { return a *= r; }
    friend HTauPoly operator*(const Rational& r, HTauPoly a) { return a *= r; }
    friend HTauPoly operator*(HTauPoly a, const LambdaPoly& p) { return a *= p; }
    friend HTauPoly operator*(const LambdaPoly& p, HTauPoly a) { return a *= p; }

    HTauPoly div_rational(const Rational& r) const;

    bool operator==(const HTauPoly& o) const;
    bool operator!=(const HTauPoly& o) const { return !(*this == o); }

    // deg H = 2, deg tau = 1 in GenericFG; deg H = 1 in WeylPQ/MatrixUV.
    // Throws ZeroPolynomialError on the zero value.
    int weighted_degree() const;

    // f(H + a, (-1)^a tau): the shift every odd-generator conjugation induces.
    HTauPoly shift_h(int a) const;
    // f(H + a, tau): the step-two shifts from even-generator conjugation.
    HTauPoly shift_h_plain(int a) const;
    // f(s*H + b, tau), tau untouched.
    HTauPoly substitute_h_affine(const Rational& s, const Rational& b) const;
    // f(2*center - H) for pure-H values; throws ParityError if a tau part exists.
    HTauPoly reflect(const Rational& center) const;
    // f(-H, tau); used by the grade-reversing automorphism.
    HTauPoly mirror_h() const;

    // Quotient g with f = (H - root) * g exactly, part by part.
    // Throws InexactDivisionError carrying the rendered remainder.
    HTauPoly exact_div_linear(const Rational& root) const;

    // Every lambda coefficient evaluated at v; the tau^2 rule becomes (v+1/2)^2.
    HTauPoly specialize_lambda(const Rational& v) const;

    // Value at given lambda, H and tau.
    Rational eval(const Rational& lambda, const Rational& h, const Rational& tau) const;

    // The square tau reduces to: (lambda+1/2)^2 symbolically, (v+1/2)^2 specialized.
    LambdaPoly tau_square_value() const;

    std::string to_string(const RenderOptions& opts = {}) const;

private:
    AlgebraCase cas_;
    std::optional<Rational> lambda_;
    std::vector<LambdaPoly> even_, odd_; // ascending H powers, no trailing zeros
    void trim();
    void check_compatible(const HTauPoly& o) const;

    friend class GradedElement;
};

// x*(x+1)*...*(x+n-1); plain scalar shifts, no tau flip.
HTauPoly pochhammer(const HTauPoly& x, int n);

} // namespace ospoly
