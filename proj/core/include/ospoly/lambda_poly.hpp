#pragma once

#include "ospoly/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospoly {

// Dense polynomial over Q in the formal parameter lambda.  Coefficients are
// stored by ascending power with no trailing zeros; the zero polynomial has an
// empty coefficient vector and no degree.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(int c) : LambdaPoly(Rational(c)) {}
    LambdaPoly(const Rational& c);

    static LambdaPoly variable();
    static LambdaPoly from_coeffs(std::vector<Rational> coeffs);
    // (lambda + 1/2)^2, the square of the ghost-center generator.
    static LambdaPoly tau_square();

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;
    std::optional<int> degree() const;
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly& operator*=(const LambdaPoly& o);
    LambdaPoly& operator*=(const Rational& r);

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(LambdaPoly a, const LambdaPoly& b) { return a *= b; }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& r) { return a *= r; }
    friend LambdaPoly operator*(const Rational& r, LambdaPoly a) { return a *= r; }

    // Exact division by a nonzero rational.
    LambdaPoly div_rational(const Rational& r) const;

    Rational evaluate(const Rational& x) const;
    LambdaPoly pow(unsigned n) const;

    // Quotient/remainder by a nonzero divisor.
    static std::pair<LambdaPoly, LambdaPoly> divmod(const LambdaPoly& a, const LambdaPoly& b);
    // Quotient when the remainder vanishes, nullopt otherwise.
    std::optional<LambdaPoly> exact_divide(const LambdaPoly& d) const;

    bool operator==(const LambdaPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LambdaPoly& o) const { return c_ != o.c_; }

    std::string to_string(const std::string& var = "l") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
LambdaPoly poly_gcd(LambdaPoly a, LambdaPoly b);

// Unique interpolating polynomial of degree < #points through distinct nodes.
LambdaPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// "num/den" reduced by the gcd, with den normalized monic; "1" for equal polys.
std::string render_ratio(const LambdaPoly& num, const LambdaPoly& den);

} // namespace ospoly
