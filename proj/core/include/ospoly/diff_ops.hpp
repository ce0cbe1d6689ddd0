#pragma once

#include "ospoly/coeff_ring.hpp"

#include <utility>
#include <vector>

namespace ospoly {

// Step-one difference operators through the tau-flipping shift:
// delta f = f(H+1, -tau) - f,   nabla f = f - f(H-1, -tau).
HTauPoly delta(const HTauPoly& f);
HTauPoly nabla(const HTauPoly& f);

// Step-two operators through the tau-fixing shift (even-generator conjugation):
// delta2 f = f(H+2, tau) - f,   nabla2 f = f - f(H-2, tau).
HTauPoly delta2(const HTauPoly& f);
HTauPoly nabla2(const HTauPoly& f);

enum class OpKind { Identity, Delta, Nabla, DeltaNabla, Delta2, Nabla2, Delta2Nabla2 };

HTauPoly apply_opkind(OpKind op, const HTauPoly& f);

// One summand of a difference operator: (num/den) * op, with den a product of
// linear factors in H alone.  Verification always clears denominators, so the
// rational coefficients are never evaluated as fractions.
struct OpTerm {
    HTauPoly num;
    HTauPoly den;
    OpKind op;
};

struct DiffOperatorSpec {
    std::vector<OpTerm> terms;
};

// (numerator, denominator) of (spec f) over the product of all denominators.
std::pair<HTauPoly, HTauPoly> apply_operator(const DiffOperatorSpec& spec, const HTauPoly& f);

// Cleared-denominator residual of (spec f) = eigen * f; zero iff the identity holds.
HTauPoly eigen_residual(const DiffOperatorSpec& spec, const HTauPoly& f, const HTauPoly& eigen);

} // namespace ospoly
