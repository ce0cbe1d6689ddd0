#include "ospoly/diff_ops.hpp"

#include "ospoly/errors.hpp"

namespace ospoly {

HTauPoly delta(const HTauPoly& f) { return f.shift_h(1) - f; }
HTauPoly nabla(const HTauPoly& f) { return f - f.shift_h(-1); }
HTauPoly delta2(const HTauPoly& f) { return f.shift_h_plain(2) - f; }
HTauPoly nabla2(const HTauPoly& f) { return f - f.shift_h_plain(-2); }

HTauPoly apply_opkind(OpKind op, const HTauPoly& f) {
    switch (op) {
        case OpKind::Identity: return f;
        case OpKind::Delta: return delta(f);
        case OpKind::Nabla: return nabla(f);
        case OpKind::DeltaNabla: return delta(nabla(f));
        case OpKind::Delta2: return delta2(f);
        case OpKind::Nabla2: return nabla2(f);
        case OpKind::Delta2Nabla2: return delta2(nabla2(f));
    }
    throw Error("unreachable");
}

std::pair<HTauPoly, HTauPoly> apply_operator(const DiffOperatorSpec& spec, const HTauPoly& f) {
    HTauPoly common = f.like_constant(Rational(1));
    for (const auto& t : spec.terms) {
        if (t.den.is_zero()) throw DivisionByZeroError();
        if (t.den.has_tau_part()) throw CaseMismatchError("denominators must be pure H");
        common *= t.den;
    }
    HTauPoly num = f.like_constant(Rational(0));
    for (std::size_t j = 0; j < spec.terms.size(); ++j) {
        HTauPoly complement = f.like_constant(Rational(1));
        for (std::size_t m = 0; m < spec.terms.size(); ++m)
            if (m != j) complement *= spec.terms[m].den;
        num += spec.terms[j].num * complement * apply_opkind(spec.terms[j].op, f);
    }
    return {num, common};
}

HTauPoly eigen_residual(const DiffOperatorSpec& spec, const HTauPoly& f, const HTauPoly& eigen) {
    auto [num, den] = apply_operator(spec, f);
    return num - eigen * f * den;
}

} // namespace ospoly
