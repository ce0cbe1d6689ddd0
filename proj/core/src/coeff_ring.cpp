#include "ospoly/coeff_ring.hpp"

#include "ospoly/errors.hpp"

#include <algorithm>

namespace ospoly {

std::string case_name(AlgebraCase c) {
    switch (c) {
        case AlgebraCase::GenericFG: return "generic";
        case AlgebraCase::WeylPQ: return "weyl";
        case AlgebraCase::MatrixUV: return "matrix";
    }
    return "?";
}

std::optional<AlgebraCase> case_from_name(const std::string& name) {
    if (name == "generic") return AlgebraCase::GenericFG;
    if (name == "weyl") return AlgebraCase::WeylPQ;
    if (name == "matrix") return AlgebraCase::MatrixUV;
    return std::nullopt;
}

std::string RenderOptions::lambda_var() const { return unicode ? "λ" : "l"; }
std::string RenderOptions::tau_var() const { return unicode ? "τ" : "t"; }

HTauPoly HTauPoly::constant(AlgebraCase c, const Rational& r) {
    return constant(c, LambdaPoly(r));
}

HTauPoly HTauPoly::constant(AlgebraCase c, const LambdaPoly& p) {
    HTauPoly f(c);
    if (!p.is_zero()) f.even_ = {p};
    return f;
}

HTauPoly HTauPoly::lambda(AlgebraCase c) {
    return constant(c, LambdaPoly::variable());
}

HTauPoly HTauPoly::h(AlgebraCase c) {
    HTauPoly f(c);
    f.even_ = {LambdaPoly(), LambdaPoly(Rational(1))};
    return f;
}

HTauPoly HTauPoly::h_power(AlgebraCase c, int k) {
    HTauPoly f(c);
    f.even_.assign(static_cast<std::size_t>(k) + 1, LambdaPoly());
    f.even_.back() = LambdaPoly(Rational(1));
    return f;
}

HTauPoly HTauPoly::tau(AlgebraCase c) {
    if (c != AlgebraCase::GenericFG)
        throw CaseMismatchError("tau exists only in the generic presentation");
    HTauPoly f(c);
    f.odd_ = {LambdaPoly(Rational(1))};
    return f;
}

HTauPoly HTauPoly::from_parts(AlgebraCase c, std::vector<LambdaPoly> even,
                              std::vector<LambdaPoly> odd) {
    if (c != AlgebraCase::GenericFG && !odd.empty()) {
        bool all_zero = std::all_of(odd.begin(), odd.end(),
                                    [](const LambdaPoly& p) { return p.is_zero(); });
        if (!all_zero) throw CaseMismatchError("tau part outside the generic presentation");
        odd.clear();
    }
    HTauPoly f(c);
    f.even_ = std::move(even);
    f.odd_ = std::move(odd);
    f.trim();
    return f;
}

HTauPoly HTauPoly::like_constant(const Rational& r) const {
    return like_constant(LambdaPoly(r));
}

HTauPoly HTauPoly::like_constant(const LambdaPoly& p) const {
    HTauPoly f(cas_);
    f.lambda_ = lambda_;
    if (!p.is_zero()) f.even_ = {p};
    return f;
}

HTauPoly HTauPoly::like_h() const {
    HTauPoly f(cas_);
    f.lambda_ = lambda_;
    f.even_ = {LambdaPoly(), LambdaPoly(Rational(1))};
    return f;
}

HTauPoly HTauPoly::like_tau() const {
    if (cas_ != AlgebraCase::GenericFG)
        throw CaseMismatchError("tau exists only in the generic presentation");
    HTauPoly f(cas_);
    f.lambda_ = lambda_;
    f.odd_ = {LambdaPoly(Rational(1))};
    return f;
}

HTauPoly HTauPoly::like_lambda() const {
    return like_constant(lambda_ ? LambdaPoly(*lambda_) : LambdaPoly::variable());
}

int HTauPoly::monomial_count() const {
    int n = 0;
    for (const auto& c : even_)
        if (!c.is_zero()) ++n;
    for (const auto& c : odd_)
        if (!c.is_zero()) ++n;
    return n;
}

bool HTauPoly::is_one() const {
    return odd_.empty() && even_.size() == 1 && even_[0].is_one();
}

bool HTauPoly::is_single_product() const {
    if (monomial_count() != 1) return false;
    const LambdaPoly* coeff = nullptr;
    for (const auto& c : even_)
        if (!c.is_zero()) coeff = &c;
    for (const auto& c : odd_)
        if (!c.is_zero()) coeff = &c;
    int nonzero = 0;
    for (const auto& r : coeff->coeffs())
        if (r != 0) ++nonzero;
    return nonzero == 1;
}

void HTauPoly::trim() {
    while (!even_.empty() && even_.back().is_zero()) even_.pop_back();
    while (!odd_.empty() && odd_.back().is_zero()) odd_.pop_back();
}

void HTauPoly::check_compatible(const HTauPoly& o) const {
    if (cas_ != o.cas_ || lambda_ != o.lambda_) throw CaseMismatchError();
}

bool HTauPoly::is_constant() const {
    return odd_.empty() && even_.size() <= 1;
}

std::optional<LambdaPoly> HTauPoly::as_lambda_constant() const {
    if (!is_constant()) return std::nullopt;
    return even_.empty() ? LambdaPoly() : even_[0];
}

LambdaPoly HTauPoly::even_coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(even_.size())) return LambdaPoly();
    return even_[static_cast<std::size_t>(k)];
}

LambdaPoly HTauPoly::odd_coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(odd_.size())) return LambdaPoly();
    return odd_[static_cast<std::size_t>(k)];
}

int HTauPoly::h_degree() const {
    return std::max(static_cast<int>(even_.size()), static_cast<int>(odd_.size())) - 1;
}

HTauPoly HTauPoly::leading_h_coeff() const {
    const int d = h_degree();
    HTauPoly out(cas_);
    out.lambda_ = lambda_;
    if (d < 0) return out;
    if (!even_coeff(d).is_zero()) out.even_ = {even_coeff(d)};
    if (!odd_coeff(d).is_zero()) out.odd_ = {odd_coeff(d)};
    return out;
}

HTauPoly HTauPoly::operator-() const {
    HTauPoly f = *this;
    for (auto& c : f.even_) c = -c;
    for (auto& c : f.odd_) c = -c;
    return f;
}

HTauPoly& HTauPoly::operator+=(const HTauPoly& o) {
    check_compatible(o);
    if (even_.size() < o.even_.size()) even_.resize(o.even_.size());
    for (std::size_t k = 0; k < o.even_.size(); ++k) even_[k] += o.even_[k];
    if (odd_.size() < o.odd_.size()) odd_.resize(o.odd_.size());
    for (std::size_t k = 0; k < o.odd_.size(); ++k) odd_[k] += o.odd_[k];
    trim();
    return *this;
}

HTauPoly& HTauPoly::operator-=(const HTauPoly& o) {
    check_compatible(o);
    if (even_.size() < o.even_.size()) even_.resize(o.even_.size());
    for (std::size_t k = 0; k < o.even_.size(); ++k) even_[k] -= o.even_[k];
    if (odd_.size() < o.odd_.size()) odd_.resize(o.odd_.size());
    for (std::size_t k = 0; k < o.odd_.size(); ++k) odd_[k] -= o.odd_[k];
    trim();
    return *this;
}

namespace {

std::vector<LambdaPoly> convolve(const std::vector<LambdaPoly>& a,
                                 const std::vector<LambdaPoly>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<LambdaPoly> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<LambdaPoly> add_vec(std::vector<LambdaPoly> a, const std::vector<LambdaPoly>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
    return a;
}

std::vector<LambdaPoly> scale_vec(std::vector<LambdaPoly> a, const LambdaPoly& s) {
    for (auto& c : a) c *= s;
    return a;
}

} // namespace

LambdaPoly HTauPoly::tau_square_value() const {
    if (lambda_) {
        const Rational v = *lambda_ + half();
        return LambdaPoly(v * v);
    }
    return LambdaPoly::tau_square();
}

HTauPoly& HTauPoly::operator*=(const HTauPoly& o) {
    check_compatible(o);
    // (p1 + t q1)(p2 + t q2) = p1 p2 + T q1 q2 + t (p1 q2 + q1 p2), T = tau^2
    std::vector<LambdaPoly> even = convolve(even_, o.even_);
    if (!odd_.empty() && !o.odd_.empty()) {
        const LambdaPoly T = tau_square_value();
        even = add_vec(std::move(even), scale_vec(convolve(odd_, o.odd_), T));
    }
    std::vector<LambdaPoly> odd =
        add_vec(convolve(even_, o.odd_), convolve(odd_, o.even_));
    even_ = std::move(even);
    odd_ = std::move(odd);
    trim();
    return *this;
}

HTauPoly& HTauPoly::operator*=(const Rational& r) {
    for (auto& c : even_) c *= r;
    for (auto& c : odd_) c *= r;
    trim();
    return *this;
}

HTauPoly& HTauPoly::operator*=(const LambdaPoly& p) {
    if (p.is_zero()) {
        even_.clear();
        odd_.clear();
        return *this;
    }
    for (auto& c : even_) c *= p;
    for (auto& c : odd_) c *= p;
    trim();
    return *this;
}

HTauPoly HTauPoly::div_rational(const Rational& r) const {
    if (r == 0) throw DivisionByZeroError();
    HTauPoly f = *this;
    for (auto& c : f.even_) c = c.div_rational(r);
    for (auto& c : f.odd_) c = c.div_rational(r);
    return f;
}

bool HTauPoly::operator==(const HTauPoly& o) const {
    return cas_ == o.cas_ && lambda_ == o.lambda_ && even_ == o.even_ && odd_ == o.odd_;
}

int HTauPoly::weighted_degree() const {
    if (is_zero()) throw ZeroPolynomialError();
    int deg = -1;
    const bool weighted = (cas_ == AlgebraCase::GenericFG);
    for (int k = 0; k < static_cast<int>(even_.size()); ++k)
        if (!even_[static_cast<std::size_t>(k)].is_zero())
            deg = std::max(deg, weighted ? 2 * k : k);
    for (int k = 0; k < static_cast<int>(odd_.size()); ++k)
        if (!odd_[static_cast<std::size_t>(k)].is_zero())
            deg = std::max(deg, weighted ? 2 * k + 1 : k);
    return deg;
}

namespace {

// coefficients of f(s*H + b) from coefficients of f(H)
std::vector<LambdaPoly> substitute_affine_vec(const std::vector<LambdaPoly>& a,
                                              const Rational& s, const Rational& b) {
    if (a.empty()) return {};
    // Horner: f = sum a_k X^k evaluated at X = s*H + b
    std::vector<LambdaPoly> acc;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
        // acc = acc * (s*H + b) + a_k
        std::vector<LambdaPoly> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j] * s;
            next[j] += acc[j] * b;
        }
        if (next.empty()) next.resize(1);
        next[0] += a[static_cast<std::size_t>(k)];
        acc = std::move(next);
    }
    return acc;
}

} // namespace

HTauPoly HTauPoly::substitute_h_affine(const Rational& s, const Rational& b) const {
    HTauPoly f(cas_);
    f.lambda_ = lambda_;
    f.even_ = substitute_affine_vec(even_, s, b);
    f.odd_ = substitute_affine_vec(odd_, s, b);
    f.trim();
    return f;
}

HTauPoly HTauPoly::shift_h(int a) const {
    HTauPoly f = substitute_h_affine(Rational(1), Rational(a));
    if (a % 2 != 0)
        for (auto& c : f.odd_) c = -c;
    return f;
}

HTauPoly HTauPoly::shift_h_plain(int a) const {
    return substitute_h_affine(Rational(1), Rational(a));
}

HTauPoly HTauPoly::reflect(const Rational& center) const {
    if (!odd_.empty()) throw ParityError();
    return substitute_h_affine(Rational(-1), Rational(2) * center);
}

HTauPoly HTauPoly::mirror_h() const {
    return substitute_h_affine(Rational(-1), Rational(0));
}

namespace {

// synthetic division by (H - root); returns remainder through `rem`
std::vector<LambdaPoly> divide_linear_vec(const std::vector<LambdaPoly>& a,
                                          const Rational& root, LambdaPoly& rem) {
    if (a.empty()) {
        rem = LambdaPoly();
        return {};
    }
    std::vector<LambdaPoly> q(a.size() > 1 ? a.size() - 1 : 0);
    LambdaPoly carry; // running b_j
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
        carry = a[static_cast<std::size_t>(k)] + carry * root;
        q[static_cast<std::size_t>(k - 1)] = carry;
    }
    rem = a[0] + carry * root;
    return q;
}

} // namespace

HTauPoly HTauPoly::exact_div_linear(const Rational& root) const {
    LambdaPoly rem_even, rem_odd;
    HTauPoly q(cas_);
    q.lambda_ = lambda_;
    q.even_ = divide_linear_vec(even_, root, rem_even);
    q.odd_ = divide_linear_vec(odd_, root, rem_odd);
    q.trim();
    if (!rem_even.is_zero() || !rem_odd.is_zero()) {
        HTauPoly rem(cas_);
        rem.lambda_ = lambda_;
        if (!rem_even.is_zero()) rem.even_ = {rem_even};
        if (!rem_odd.is_zero()) rem.odd_ = {rem_odd};
        throw InexactDivisionError(rem.to_string());
    }
    return q;
}

HTauPoly HTauPoly::specialize_lambda(const Rational& v) const {
    HTauPoly f(cas_);
    f.lambda_ = v;
    f.even_.reserve(even_.size());
    for (const auto& c : even_) f.even_.push_back(LambdaPoly(c.evaluate(v)));
    f.odd_.reserve(odd_.size());
    for (const auto& c : odd_) f.odd_.push_back(LambdaPoly(c.evaluate(v)));
    f.trim();
    return f;
}

Rational HTauPoly::eval(const Rational& lambda, const Rational& h, const Rational& tau) const {
    Rational acc = 0;
    Rational hp = 1;
    for (std::size_t k = 0; k < std::max(even_.size(), odd_.size()); ++k) {
        if (k < even_.size()) acc += even_[k].evaluate(lambda) * hp;
        if (k < odd_.size()) acc += odd_[k].evaluate(lambda) * hp * tau;
        hp *= h;
    }
    return acc;
}

namespace {

struct Monomial {
    int hpow;
    bool has_tau;
    LambdaPoly coeff;
};

// one monomial rendered without its leading sign; sign returned separately
std::pair<bool, std::string> render_monomial(const Monomial& m, const RenderOptions& opts) {
    std::vector<std::string> pieces;
    bool neg = false;
    std::string coeff_piece;
    const bool have_var_piece = m.has_tau || m.hpow > 0;
    if (m.coeff.degree().value_or(0) == 0) {
        // plain rational coefficient
        Rational r = m.coeff.coeff(0);
        if (r < 0) {
            neg = true;
            r = -r;
        }
        if (!(r == 1 && have_var_piece)) {
            std::string s = to_string(r);
            if (have_var_piece && denominator(r) != 1) s = "(" + s + ")";
            coeff_piece = s;
        }
    } else {
        // lambda-monomial coefficients render inline, anything longer in parens
        bool single = true;
        int nonzero = 0;
        for (const auto& c : m.coeff.coeffs())
            if (c != 0) ++nonzero;
        single = (nonzero == 1);
        if (single) {
            const int d = *m.coeff.degree();
            Rational r = m.coeff.leading();
            if (r < 0) {
                neg = true;
                r = -r;
            }
            if (r != 1) {
                std::string s = to_string(r);
                if (denominator(r) != 1) s = "(" + s + ")";
                pieces.push_back(s);
            }
            std::string lv = opts.lambda_var();
            if (d > 1) lv += "^" + std::to_string(d);
            pieces.push_back(lv);
        } else {
            pieces.push_back("(" + m.coeff.to_string(opts.lambda_var()) + ")");
        }
    }
    if (!coeff_piece.empty()) pieces.insert(pieces.begin(), coeff_piece);
    if (m.has_tau) pieces.push_back(opts.tau_var());
    if (m.hpow > 0) {
        std::string hv = "H";
        if (m.hpow > 1) hv += "^" + std::to_string(m.hpow);
        pieces.push_back(hv);
    }
    if (pieces.empty()) pieces.push_back("1");
    std::string out = pieces[0];
    for (std::size_t k = 1; k < pieces.size(); ++k) out += "*" + pieces[k];
    return {neg, out};
}

} // namespace

std::string HTauPoly::to_string(const RenderOptions& opts) const {
    if (is_zero()) return "0";
    // a pure lambda-constant renders as a bare polynomial in lambda
    if (is_constant() && !even_.empty()) return even_[0].to_string(opts.lambda_var());
    std::vector<Monomial> monos;
    for (int k = static_cast<int>(even_.size()) - 1; k >= 0; --k)
        if (!even_[static_cast<std::size_t>(k)].is_zero())
            monos.push_back({k, false, even_[static_cast<std::size_t>(k)]});
    for (int k = static_cast<int>(odd_.size()) - 1; k >= 0; --k)
        if (!odd_[static_cast<std::size_t>(k)].is_zero())
            monos.push_back({k, true, odd_[static_cast<std::size_t>(k)]});
    // descending weighted degree; (hpow, tau) pairs never collide
    const bool weighted = (cas_ == AlgebraCase::GenericFG);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
        const int wa = weighted ? 2 * a.hpow + (a.has_tau ? 1 : 0) : a.hpow;
        const int wb = weighted ? 2 * b.hpow + (b.has_tau ? 1 : 0) : b.hpow;
        if (wa != wb) return wa > wb;
        return a.has_tau < b.has_tau;
    });
    std::string out;
    bool first = true;
    for (const auto& m : monos) {
        auto [neg, body] = render_monomial(m, opts);
        if (first) {
            out += neg ? "-" : "";
            out += body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

HTauPoly pochhammer(const HTauPoly& x, int n) {
    const HTauPoly one = x.like_constant(Rational(1));
    HTauPoly acc = one;
    HTauPoly shifted = x;
    for (int j = 0; j < n; ++j) {
        if (j > 0) shifted += one;
        acc *= shifted;
    }
    return acc;
}

} // namespace ospoly
