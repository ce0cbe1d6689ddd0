#include "ospoly/matrix_rep.hpp"

#include "ospoly/errors.hpp"

#include <algorithm>

namespace ospoly {

SuperMatrix::SuperMatrix(int lambda)
    : lambda_(lambda), n_(2 * lambda + 1), a_(static_cast<std::size_t>(n_) * n_, Rational(0)) {
    if (lambda < 0) throw Error("lambda must be a nonnegative integer");
}

SuperMatrix SuperMatrix::identity(int lambda) {
    SuperMatrix m(lambda);
    for (int r = 0; r < m.n_; ++r) m.at(r, r) = 1;
    return m;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (lambda_ != o.lambda_) throw CaseMismatchError("mixed representation dimensions");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (lambda_ != o.lambda_) throw CaseMismatchError("mixed representation dimensions");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& r) {
    for (auto& x : a_) x *= r;
    return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.lambda_ != b.lambda_) throw CaseMismatchError("mixed representation dimensions");
    SuperMatrix out(a.lambda_);
    for (int r = 0; r < a.n_; ++r)
        for (int k = 0; k < a.n_; ++k) {
            const Rational& ark = a.at(r, k);
            if (ark == 0) continue;
            for (int c = 0; c < a.n_; ++c) {
                const Rational& bkc = b.at(k, c);
                if (bkc == 0) continue;
                out.at(r, c) += ark * bkc;
            }
        }
    return out;
}

SuperMatrix SuperMatrix::pow(unsigned n) const {
    SuperMatrix acc = identity(lambda_);
    for (unsigned k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

bool SuperMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Rational SuperMatrix::supertrace() const {
    Rational s = 0;
    for (int r = 0; r < n_; ++r) {
        if (r % 2 == 0)
            s += at(r, r);
        else
            s -= at(r, r);
    }
    return s;
}

std::string SuperMatrix::to_csv() const {
    std::string out;
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) {
            if (c) out += ",";
            out += to_string(at(r, c));
        }
        out += "\n";
    }
    return out;
}

RepImages build_rep(int lambda) {
    const int n = 2 * lambda + 1;
    SuperMatrix H(lambda), F(lambda), G(lambda), tau(lambda);
    const Rational lph = Rational(lambda) + half();
    for (int r = 0; r < n; ++r) {
        const Rational m = Rational(lambda - r); // weight of v at index r
        H.at(r, r) = m;
        tau.at(r, r) = (r % 2 == 0) ? lph : Rational(-lph);
    }
    // F v_m = v_{m-1}; index moves down the weight ladder
    for (int c = 0; c + 1 < n; ++c) F.at(c + 1, c) = 1;
    // G v_m = g_m v_{m+1} with g fixed by GF = (H + tau - 1/2)/2
    for (int c = 1; c < n; ++c) {
        const Rational m = Rational(lambda - c);
        const Rational tau_up = (c % 2 == 0) ? Rational(-lph) : lph; // parity of index c-1
        const Rational g = (m + 1 + tau_up - half()) / 2;
        G.at(c - 1, c) = g;
    }
    SuperMatrix U = F;
    SuperMatrix V = (tau - H + half() * SuperMatrix::identity(lambda)) * G;
    SuperMatrix X = G * G;
    SuperMatrix Y = -(F * F);
    return RepImages{lambda, H, F, G, tau, U, V, X, Y};
}

SuperMatrix project(const GradedElement& u, int lambda) {
    const AlgebraCase cas = u.algebra_case();
    if (cas == AlgebraCase::WeylPQ)
        throw CaseMismatchError("the Weyl presentation has no finite matrix model");
    const RepImages rep = build_rep(lambda);
    const SuperMatrix& up = (cas == AlgebraCase::GenericFG) ? rep.G : rep.V;
    const SuperMatrix& down = (cas == AlgebraCase::GenericFG) ? rep.F : rep.U;
    SuperMatrix out(lambda);
    const int n = 2 * lambda + 1;
    const Rational lam(lambda);
    const Rational lph = lam + half();
    for (const auto& [grade, f] : u.coeffs()) {
        SuperMatrix coeff(lambda);
        for (int r = 0; r < n; ++r) {
            const Rational m = Rational(lambda - r);
            const Rational t = (r % 2 == 0) ? lph : Rational(-lph);
            coeff.at(r, r) = f.eval(lam, m, t);
        }
        SuperMatrix word = grade >= 0 ? up.pow(static_cast<unsigned>(grade))
                                      : down.pow(static_cast<unsigned>(-grade));
        out += coeff * word;
    }
    return out;
}

namespace {

SuperMatrix comm(const SuperMatrix& a, const SuperMatrix& b) { return a * b - b * a; }
SuperMatrix anti(const SuperMatrix& a, const SuperMatrix& b) { return a * b + b * a; }

} // namespace

std::vector<RelationCheck> check_relations(int lambda) {
    const RepImages r = build_rep(lambda);
    const SuperMatrix I = SuperMatrix::identity(lambda);
    const Rational lam(lambda);
    const Rational lph = lam + half();
    std::vector<RelationCheck> out;
    auto add = [&](const std::string& id, const SuperMatrix& lhs, const SuperMatrix& rhs) {
        out.push_back({id, lhs == rhs});
    };
    add("[H,F] = -F", comm(r.H, r.F), -r.F);
    add("[H,G] = G", comm(r.H, r.G), r.G);
    add("GF + FG = H", anti(r.G, r.F), r.H);
    add("[G,G] = 2X", anti(r.G, r.G), Rational(2) * r.X);
    add("[F,F] = -2Y", anti(r.F, r.F), Rational(-2) * r.Y);
    add("[H,X] = 2X", comm(r.H, r.X), Rational(2) * r.X);
    add("[H,Y] = -2Y", comm(r.H, r.Y), Rational(-2) * r.Y);
    add("[X,Y] = H", comm(r.X, r.Y), r.H);
    add("[G,Y] = F", comm(r.G, r.Y), r.F);
    add("[F,X] = G", comm(r.F, r.X), r.G);
    add("FG = (H - tau + 1/2)/2", r.F * r.G, (r.H - r.tau + half() * I) * half());
    add("GF = (H + tau - 1/2)/2", r.G * r.F, (r.H + r.tau - half() * I) * half());
    add("tau = 2GF - H + 1/2", r.tau, Rational(2) * (r.G * r.F) - r.H + half() * I);
    add("tau^2 = (lambda + 1/2)^2", r.tau * r.tau, (lph * lph) * I);
    add("tau F + F tau = 0", anti(r.tau, r.F), SuperMatrix(lambda));
    add("tau G + G tau = 0", anti(r.tau, r.G), SuperMatrix(lambda));
    add("Omega = lambda(lambda+1)", r.tau * r.tau - Rational(1, 4) * I, (lam * (lam + 1)) * I);
    add("XY = ((tau + 1/2)^2 - (H - 1)^2)/4", r.X * r.Y,
        ((r.tau + half() * I) * (r.tau + half() * I) - (r.H - I) * (r.H - I)) * Rational(1, 4));
    add("HU - UH = -U", comm(r.H, r.U), -r.U);
    add("HV - VH = V", comm(r.H, r.V), r.V);
    add("VU - UV = H", r.V * r.U - r.U * r.V, r.H);
    add("VU = (lambda(lambda+1) - H^2 + H)/2", r.V * r.U,
        ((lam * (lam + 1)) * I - r.H * r.H + r.H) * half());
    add("UV = (lambda(lambda+1) - H^2 - H)/2", r.U * r.V,
        ((lam * (lam + 1)) * I - r.H * r.H - r.H) * half());
    return out;
}

int nilpotency_exponent(const SuperMatrix& v, int cap) {
    SuperMatrix acc = SuperMatrix::identity(v.lambda());
    for (int e = 1; e <= cap; ++e) {
        acc = acc * v;
        if (acc.is_zero()) return e;
    }
    return -1;
}

std::vector<TraceMismatch> crosscheck_trace(int lambda, int max_degree, MomentTable& table) {
    const AlgebraCase cas = table.algebra_case();
    if (cas == AlgebraCase::WeylPQ)
        throw CaseMismatchError("the Weyl presentation has no finite matrix model");
    std::vector<TraceMismatch> bad;
    const Rational lam(lambda);
    for (int c = -max_degree; c <= max_degree; ++c) {
        const int rest = max_degree - std::abs(c);
        for (int b = 0; b <= (cas == AlgebraCase::GenericFG ? 1 : 0); ++b) {
            for (int a = 0; 2 * a + b <= rest; ++a) {
                HTauPoly f = HTauPoly::h_power(cas, a);
                std::string name = "H^" + std::to_string(a);
                if (b) {
                    f *= HTauPoly::tau(cas);
                    name += "*t";
                }
                if (c != 0) {
                    const bool raising = c > 0;
                    std::string g = cas == AlgebraCase::GenericFG ? (raising ? "G" : "F")
                                                                  : (raising ? "V" : "U");
                    name += "*" + g + "^" + std::to_string(std::abs(c));
                }
                const GradedElement u = GradedElement::monomial(f, c);
                const Rational mat = project(u, lambda).supertrace();
                const Rational abs_val = trace(u, table).evaluate(lam);
                if (mat != abs_val) bad.push_back({name, mat, abs_val});
            }
        }
    }
    return bad;
}

} // namespace ospoly
