#pragma once

#include "ospoly/coeff_ring.hpp"

#include <string>
#include <vector>

namespace ospoly {

// Terminating hypergeometric-type sum with the lower-parameter Pochhammers
// absorbed against matching prefactor Pochhammers, so every step is polynomial:
//   sum_{m=0..k} (-k)_m * prod_u (u)_m * prod_b (b+m)_{k-m} * z^m [ / m! ].
// Callers multiply the remaining prefactor themselves.
HTauPoly terminating_sum_absorbed(int k, const std::vector<HTauPoly>& uppers,
                                  const std::vector<HTauPoly>& absorbed_lowers,
                                  const Rational& z, bool with_m_factorial);

// Direct terminating sum when every lower parameter is rational; throws
// SingularParameterError if a lower Pochhammer vanishes at or before term k.
HTauPoly terminating_sum_rational_lowers(int k, const std::vector<HTauPoly>& uppers,
                                         const std::vector<Rational>& lowers,
                                         const Rational& z, bool with_m_factorial,
                                         AlgebraCase cas);

// Printed closed forms, assembled from Pochhammer symbols and terminating sums.

// Hahn-type member over C[tau]: even member 2k at even grade 2i.
HTauPoly hahn_closed_even_grade(int k, int i);
// Odd tie at even grade: bracket * hahn_closed_even_grade.  The printed
// reading halves the whole bracket; the erratum reading halves only the tau
// term.
HTauPoly hahn_closed_even_grade_tie(int k, int i, bool half_whole_bracket);
// Even member 2k at odd grade 2i+1, and its odd tie -tau/(2i+k+2) * member.
HTauPoly hahn_closed_odd_grade(int k, int i);
HTauPoly hahn_closed_odd_grade_tie(int k, int i);

// Meixner-type member (Weyl presentation), both factorial conventions of the
// printed 2F1-at-2 display.
HTauPoly meixner_closed(int k, int j, bool with_m_factorial);

// Dual-Hahn-type member 2k at even grade 2i (matrix presentation); as printed,
// or with the off-by-one lower parameter and mirrored upper corrected.
HTauPoly dualhahn_closed(int k, int i, bool corrected_params);

enum class CompareOutcome { Equal, Proportional, Mismatch };

struct CompareResult {
    CompareOutcome outcome;
    std::string ratio;      // recursive / closed, constant in H and tau
    std::string difference; // rendered when Mismatch
};

// Does recursive = c * closed for some constant c in Q(lambda)?
CompareResult compare_up_to_constant(const HTauPoly& recursive, const HTauPoly& closed);

} // namespace ospoly
