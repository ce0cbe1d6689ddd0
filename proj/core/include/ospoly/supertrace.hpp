#pragma once

#include "ospoly/exp_series.hpp"
#include "ospoly/graded.hpp"

#include <vector>

namespace ospoly {

// Exact moments L(H^k) and L(tau H^k) of the unique normalized invariant
// functional, per presentation.  Built from the trace generating functions
// and extended on demand; L(1) = 1 in every case.
class MomentTable {
public:
    MomentTable(AlgebraCase c, int max_order);

    AlgebraCase algebra_case() const { return cas_; }
    int max_order() const { return static_cast<int>(even_.size()) - 1; }

    const LambdaPoly& even_moment(int k); // L(H^k)
    const LambdaPoly& odd_moment(int k);  // L(tau H^k); zero outside GenericFG

    void extend(int order);

private:
    AlgebraCase cas_;
    std::vector<LambdaPoly> even_, odd_;
    void rebuild(int order);
};

// L(u): the grade-0 coefficient p(H) + tau q(H) paired against the moments;
// all other grades contribute nothing.  Extends the table as needed.
LambdaPoly trace(const GradedElement& u, MomentTable& table);

// <u, v> = L(u v^t); supersymmetric and invariant.
LambdaPoly form(const GradedElement& u, const GradedElement& v, MomentTable& table);

// Restricted form <f, g>_i on coefficients against the grade-i generator word.
LambdaPoly form_graded(const HTauPoly& f, const HTauPoly& g, int i, MomentTable& table);

} // namespace ospoly
