#pragma once

#include "ospoly/graded.hpp"
#include "ospoly/supertrace.hpp"

#include <string>
#include <vector>

namespace ospoly {

// Dense square matrix over Q realizing Mat(lambda+1 | lambda), lambda a
// nonnegative integer.  Rows/columns follow the weight basis v_m for
// m = lambda, lambda-1, ..., -lambda; index r carries parity r mod 2.
class SuperMatrix {
public:
    explicit SuperMatrix(int lambda);
    static SuperMatrix identity(int lambda);

    int lambda() const { return lambda_; }
    int dim() const { return n_; }
    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }

    SuperMatrix operator-() const;
    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const Rational& r);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(SuperMatrix a, const Rational& r) { return a *= r; }
    friend SuperMatrix operator*(const Rational& r, SuperMatrix a) { return a *= r; }
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);

    SuperMatrix pow(unsigned n) const;
    bool is_zero() const;
    bool operator==(const SuperMatrix& o) const { return lambda_ == o.lambda_ && a_ == o.a_; }
    bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

    // Trace of the even block minus trace of the odd block.
    Rational supertrace() const;

    // Row-major CSV with exact "p/q" entries.
    std::string to_csv() const;

private:
    int lambda_;
    int n_;
    std::vector<Rational> a_;
};

// Images of the generators in the weight basis.  F lowers with coefficient 1
// (a gauge choice); G is fixed by GF = (H + tau - 1/2)/2; tau is
// (lambda + 1/2) times the parity operator; U = F, V = (tau - H + 1/2)G,
// X = G^2 and Y = -F^2.
struct RepImages {
    int lambda;
    SuperMatrix H, F, G, tau, U, V, X, Y;
};

RepImages build_rep(int lambda);

// Evaluate a normal-form element in the representation; a superalgebra
// homomorphism on GenericFG and MatrixUV elements.
SuperMatrix project(const GradedElement& u, int lambda);

struct RelationCheck {
    std::string id;
    bool ok;
};

// Every defining relation evaluated as an exact matrix identity.
std::vector<RelationCheck> check_relations(int lambda);

// Smallest e <= cap with V^e = 0, or -1 if none.
int nilpotency_exponent(const SuperMatrix& v, int cap);

struct TraceMismatch {
    std::string monomial;
    Rational matrix_value;
    Rational abstract_value;
};

// str(project(u)) versus the specialized abstract trace, over all monomials
// H^a tau^b W^c of weighted degree 2a + b + |c| <= max_degree.
std::vector<TraceMismatch> crosscheck_trace(int lambda, int max_degree, MomentTable& table);

} // namespace ospoly
