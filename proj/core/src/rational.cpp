#include "ospoly/rational.hpp"

#include "ospoly/errors.hpp"

#include <cctype>

namespace ospoly {

std::string to_string(const Rational& r) {
    return r.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError(0, "empty rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = (s[i] == '-');
        ++i;
    }
    auto read_digits = [&](BigInt& out) {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(i, "expected digit in rational literal");
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out = out * 10 + (s[i] - '0');
            ++i;
        }
    };
    BigInt num, den = 1;
    read_digits(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        read_digits(den);
        if (den == 0) throw ParseError(i, "zero denominator");
    }
    if (i != s.size()) throw ParseError(i, "trailing characters in rational literal");
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw DivisionByZeroError();
    Rational acc = 1;
    Rational b = exp > 0 ? base : Rational(1) / base;
    for (int k = exp > 0 ? exp : -exp; k > 0; --k) acc *= b;
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace ospoly
