#include "ospoly/graded.hpp"

#include "ospoly/errors.hpp"

#include <algorithm>

namespace ospoly {

namespace {

// R * Lw as a grade-0 coefficient: GF, QP or VU.
HTauPoly raise_lower(const HTauPoly& proto) {
    switch (proto.algebra_case()) {
        case AlgebraCase::GenericFG:
            // GF = (H + tau - 1/2) / 2
            return (proto.like_h() + proto.like_tau() - proto.like_constant(half()))
                .div_rational(Rational(2));
        case AlgebraCase::WeylPQ:
            // QP = H - 1/2
            return proto.like_h() - proto.like_constant(half());
        case AlgebraCase::MatrixUV: {
            // VU = (lambda(lambda+1) - H^2 + H) / 2
            const HTauPoly lam = proto.like_lambda();
            const HTauPoly h = proto.like_h();
            return (lam * lam + lam - h * h + h).div_rational(Rational(2));
        }
    }
    throw Error("unreachable");
}

// Lw * R as a grade-0 coefficient: FG, PQ or UV.
HTauPoly lower_raise(const HTauPoly& proto) {
    switch (proto.algebra_case()) {
        case AlgebraCase::GenericFG:
            // FG = (H - tau + 1/2) / 2
            return (proto.like_h() - proto.like_tau() + proto.like_constant(half()))
                .div_rational(Rational(2));
        case AlgebraCase::WeylPQ:
            // PQ = H + 1/2
            return proto.like_h() + proto.like_constant(half());
        case AlgebraCase::MatrixUV: {
            // UV = (lambda(lambda+1) - H^2 - H) / 2
            const HTauPoly lam = proto.like_lambda();
            const HTauPoly h = proto.like_h();
            return (lam * lam + lam - h * h - h).div_rational(Rational(2));
        }
    }
    throw Error("unreachable");
}

// W_i W_j = C * W_{i+j}; C = 1 unless the powers point in opposite directions.
HTauPoly word_product(const HTauPoly& proto, int i, int j) {
    HTauPoly c = proto.like_constant(Rational(1));
    while (i > 0 && j < 0) {
        c *= raise_lower(proto).shift_h(-(i - 1));
        --i;
        ++j;
    }
    while (i < 0 && j > 0) {
        c *= lower_raise(proto).shift_h(-i - 1);
        ++i;
        --j;
    }
    return c;
}

int transpose_sign(AlgebraCase cas, int grade) {
    if (grade == 0) return 1;
    const long m = grade > 0 ? grade : -grade;
    long exponent;
    if (cas == AlgebraCase::MatrixUV)
        exponent = grade > 0 ? m * (m - 1) / 2 : m * (m + 1) / 2;
    else
        exponent = grade > 0 ? m * (m + 1) / 2 : m * (m - 1) / 2;
    return exponent % 2 == 0 ? 1 : -1;
}

} // namespace

GradedElement GradedElement::one(AlgebraCase c) {
    return from_coeff(HTauPoly::constant(c, Rational(1)));
}

GradedElement GradedElement::from_coeff(HTauPoly f) {
    return monomial(std::move(f), 0);
}

GradedElement GradedElement::monomial(HTauPoly f, int grade) {
    GradedElement u(f.algebra_case());
    u.add_term(grade, f);
    return u;
}

GradedElement GradedElement::raising(AlgebraCase c, int power) {
    return monomial(HTauPoly::constant(c, Rational(1)), power);
}

GradedElement GradedElement::lowering(AlgebraCase c, int power) {
    return monomial(HTauPoly::constant(c, Rational(1)), -power);
}

GradedElement GradedElement::h_element(AlgebraCase c) {
    return from_coeff(HTauPoly::h(c));
}

GradedElement GradedElement::tau_element(AlgebraCase c) {
    return from_coeff(HTauPoly::tau(c));
}

void GradedElement::add_term(int grade, const HTauPoly& f) {
    if (f.algebra_case() != cas_) throw CaseMismatchError();
    if (f.is_zero()) return;
    auto it = coeffs_.find(grade);
    if (it == coeffs_.end()) {
        coeffs_.emplace(grade, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HTauPoly GradedElement::proto() const {
    if (!coeffs_.empty()) return coeffs_.begin()->second.like_constant(Rational(0));
    return HTauPoly(cas_);
}

HTauPoly GradedElement::coeff(int grade) const {
    auto it = coeffs_.find(grade);
    if (it != coeffs_.end()) return it->second;
    return proto();
}

std::optional<LambdaPoly> GradedElement::as_lambda_constant() const {
    if (coeffs_.empty()) return LambdaPoly();
    if (coeffs_.size() != 1 || coeffs_.begin()->first != 0) return std::nullopt;
    return coeffs_.begin()->second.as_lambda_constant();
}

Parity GradedElement::parity() const {
    bool even = false, odd = false;
    for (const auto& [i, f] : coeffs_)
        ((i % 2 + 2) % 2 == 0 ? even : odd) = true;
    if (even && odd) return Parity::Mixed;
    return odd ? Parity::Odd : Parity::Even;
}

int GradedElement::min_grade() const {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int GradedElement::max_grade() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

GradedElement GradedElement::operator-() const {
    GradedElement u(cas_);
    for (const auto& [i, f] : coeffs_) u.coeffs_.emplace(i, -f);
    return u;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    if (cas_ != o.cas_) throw CaseMismatchError();
    for (const auto& [i, f] : o.coeffs_) add_term(i, f);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
    if (cas_ != o.cas_) throw CaseMismatchError();
    for (const auto& [i, f] : o.coeffs_) add_term(i, -f);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& r) {
    if (r == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [i, f] : coeffs_) f *= r;
    return *this;
}

GradedElement& GradedElement::operator*=(const LambdaPoly& p) {
    if (p.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [i, f] : coeffs_) f *= p;
    return *this;
}

GradedElement GradedElement::left_mul_coeff(const HTauPoly& f) const {
    GradedElement u(cas_);
    for (const auto& [i, g] : coeffs_) u.add_term(i, f * g);
    return u;
}

GradedElement GradedElement::pow(unsigned n) const {
    GradedElement acc = one(cas_);
    for (unsigned k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    if (a.cas_ != b.cas_) throw CaseMismatchError();
    GradedElement out(a.cas_);
    for (const auto& [i, f] : a.coeffs_) {
        for (const auto& [j, g] : b.coeffs_) {
            const HTauPoly c = f * g.shift_h(-i) * word_product(f, i, j);
            out.add_term(i + j, c);
        }
    }
    return out;
}

GradedElement GradedElement::supertranspose() const {
    GradedElement u(cas_);
    for (const auto& [i, f] : coeffs_) {
        HTauPoly g = f.shift_h(i);
        const int s = transpose_sign(cas_, i);
        if (s < 0) g *= Rational(-1);
        u.add_term(-i, g);
    }
    return u;
}

GradedElement GradedElement::theta() const {
    GradedElement u(cas_);
    for (const auto& [i, f] : coeffs_) {
        HTauPoly g = f.mirror_h();
        if (cas_ != AlgebraCase::MatrixUV) {
            if (i % 2 != 0) throw IrrationalImageError();
            // (sqrt(-1))^{|i|} = (-1)^{|i|/2}
            if ((std::abs(i) / 2) % 2 != 0) g *= Rational(-1);
        }
        u.add_term(-i, g);
    }
    return u;
}

std::string GradedElement::to_string(const RenderOptions& opts) const {
    if (coeffs_.empty()) return "0";
    const char* rname = "G";
    const char* lname = "F";
    if (cas_ == AlgebraCase::WeylPQ) {
        rname = "Q";
        lname = "P";
    } else if (cas_ == AlgebraCase::MatrixUV) {
        rname = "V";
        lname = "U";
    }
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int grade = it->first;
        const HTauPoly& f = it->second;
        std::string term;
        if (grade == 0) {
            term = f.to_string(opts);
        } else {
            std::string word = grade > 0 ? rname : lname;
            const int p = std::abs(grade);
            if (p > 1) word += "^" + std::to_string(p);
            if (f.is_one())
                term = word;
            else if ((-f).is_one())
                term = "-" + word;
            else if (f.is_single_product())
                term = f.to_string(opts) + "*" + word;
            else
                term = "(" + f.to_string(opts) + ")*" + word;
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

GradedElement super_bracket(const GradedElement& a, const GradedElement& b) {
    const Parity pa = a.parity(), pb = b.parity();
    if (pa == Parity::Mixed || pb == Parity::Mixed) throw ParityError();
    const bool flip = (pa == Parity::Odd && pb == Parity::Odd);
    GradedElement ba = b * a;
    return flip ? a * b + ba : a * b - ba;
}

GradedElement anti_bracket(const GradedElement& a, const GradedElement& b) {
    const Parity pa = a.parity(), pb = b.parity();
    if (pa == Parity::Mixed || pb == Parity::Mixed) throw ParityError();
    // uv - (-1)^{p(u)(p(v)+1)} vu
    const bool flip = (pa == Parity::Odd && pb == Parity::Even);
    GradedElement ba = b * a;
    return flip ? a * b + ba : a * b - ba;
}

GradedElement ad_power(const GradedElement& x, unsigned n, GradedElement target) {
    for (unsigned k = 0; k < n; ++k) target = super_bracket(x, target);
    return target;
}

CasimirElements casimir_elements(AlgebraCase c) {
    if (c != AlgebraCase::GenericFG)
        throw CaseMismatchError("Casimir elements are built in the generic presentation");
    const GradedElement G = GradedElement::raising(c);
    const GradedElement F = GradedElement::lowering(c);
    const GradedElement H = GradedElement::h_element(c);
    const GradedElement one = GradedElement::one(c);
    GradedElement tau = (G * F) * Rational(2) - H + one * half();
    GradedElement tau2 = tau * tau;
    CasimirElements ce{tau, tau2 - one * Rational(1, 4),
                       tau2 + tau - one * Rational(3, 4)};
    return ce;
}

std::pair<GradedElement, GradedElement> gn_fn_product(unsigned n) {
    const AlgebraCase c = AlgebraCase::GenericFG;
    const GradedElement lhs =
        GradedElement::raising(c, static_cast<int>(n)) * GradedElement::lowering(c, static_cast<int>(n));
    HTauPoly prod = HTauPoly::constant(c, Rational(1));
    for (unsigned j = 1; j <= n; ++j) {
        HTauPoly factor = HTauPoly::h(c) - HTauPoly::constant(c, Rational(2 * j - 1, 2));
        HTauPoly t = HTauPoly::tau(c);
        if (j % 2 == 0) t *= Rational(-1);
        factor += t;
        prod *= factor.div_rational(Rational(2));
    }
    return {lhs, GradedElement::from_coeff(prod)};
}

} // namespace ospoly
