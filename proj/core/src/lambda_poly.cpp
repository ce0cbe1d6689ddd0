#include "ospoly/lambda_poly.hpp"

#include "ospoly/errors.hpp"

#include <algorithm>

namespace ospoly {

LambdaPoly::LambdaPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

LambdaPoly LambdaPoly::variable() {
    LambdaPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

LambdaPoly LambdaPoly::from_coeffs(std::vector<Rational> coeffs) {
    LambdaPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

LambdaPoly LambdaPoly::tau_square() {
    return from_coeffs({Rational(1, 4), Rational(1), Rational(1)});
}

void LambdaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool LambdaPoly::is_one() const {
    return c_.size() == 1 && c_[0] == 1;
}

std::optional<int> LambdaPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rational LambdaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

const Rational& LambdaPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomialError();
    return c_.back();
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            prod[a + b] += c_[a] * o.c_[b];
    c_ = std::move(prod);
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& r) {
    if (r == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= r;
    return *this;
}

LambdaPoly LambdaPoly::div_rational(const Rational& r) const {
    if (r == 0) throw DivisionByZeroError();
    LambdaPoly q = *this;
    for (auto& c : q.c_) c /= r;
    return q;
}

Rational LambdaPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

LambdaPoly LambdaPoly::pow(unsigned n) const {
    LambdaPoly acc(1);
    for (unsigned k = 0; k < n; ++k) acc *= *this;
    return acc;
}

std::pair<LambdaPoly, LambdaPoly> LambdaPoly::divmod(const LambdaPoly& a, const LambdaPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    LambdaPoly rem = a;
    std::vector<Rational> q;
    const int db = *b.degree();
    while (!rem.is_zero() && *rem.degree() >= db) {
        const int dr = *rem.degree();
        const Rational f = rem.leading() / b.leading();
        if (static_cast<int>(q.size()) < dr - db + 1) q.resize(static_cast<std::size_t>(dr - db + 1));
        q[static_cast<std::size_t>(dr - db)] = f;
        for (int k = 0; k <= db; ++k) {
            rem.c_.resize(std::max<std::size_t>(rem.c_.size(), static_cast<std::size_t>(dr - db + k + 1)));
            rem.c_[static_cast<std::size_t>(dr - db + k)] -= f * b.coeff(k);
        }
        rem.trim();
    }
    return {from_coeffs(std::move(q)), rem};
}

std::optional<LambdaPoly> LambdaPoly::exact_divide(const LambdaPoly& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

std::string LambdaPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string coeff = ospoly::to_string(mag);
        if (k == 0) {
            out += coeff;
        } else {
            if (mag != 1) out += coeff + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

LambdaPoly poly_gcd(LambdaPoly a, LambdaPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = LambdaPoly::divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.div_rational(a.leading());
    return a;
}

LambdaPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    LambdaPoly acc;
    for (std::size_t j = 0; j < points.size(); ++j) {
        LambdaPoly basis(Rational(1));
        Rational denom = 1;
        for (std::size_t m = 0; m < points.size(); ++m) {
            if (m == j) continue;
            basis *= LambdaPoly::from_coeffs({-points[m].first, Rational(1)});
            denom *= points[j].first - points[m].first;
        }
        acc += basis.div_rational(denom) * points[j].second;
    }
    return acc;
}

std::string render_ratio(const LambdaPoly& num, const LambdaPoly& den) {
    if (den.is_zero()) throw DivisionByZeroError();
    if (num.is_zero()) return "0";
    LambdaPoly g = poly_gcd(num, den);
    LambdaPoly n = *num.exact_divide(g);
    LambdaPoly d = *den.exact_divide(g);
    // normalize so the denominator is monic
    const Rational lead = d.leading();
    n = n.div_rational(lead);
    d = d.div_rational(lead);
    if (d.is_one()) return n.to_string();
    const bool wrap_n = n.degree().value_or(0) > 0;
    std::string out = wrap_n ? "(" + n.to_string() + ")" : n.to_string();
    out += " / ";
    out += d.is_constant() ? d.to_string() : "(" + d.to_string() + ")";
    return out;
}

} // namespace ospoly
