#pragma once

#include "ospoly/supertrace.hpp"

#include <map>
#include <vector>

namespace ospoly {

// Readings of the odd-member seed at odd grades in the generic presentation.
// The printed seed lands two grades below its target; ReducedAd keeps the seed
// and drops two adjoint steps (degree-law consistent), RaisedSeed keeps the
// step count and raises the seed power by two.  RaisedSeed(k) = ReducedAd(k+2).
enum class OddOddReading { AsPrinted, ReducedAd, RaisedSeed };

// f_{k,j} for the generic presentation, defined through iterated super-adjoint
// action of the lowering generator on raising-power seeds.
class GenericFamily {
public:
    // ReducedAd reading where the printed seed is inconsistent.
    HTauPoly member(int k, int j) const;
    // Odd grade 2i+1 and odd k under an explicit reading.  AsPrinted throws
    // GradeMismatchError: the seed sits two grades short of the target.
    HTauPoly member_odd_odd(int k, int i, OddOddReading reading) const;

private:
    mutable std::map<std::pair<int, int>, HTauPoly> cache_;
};

// f_{k,j} for the Weyl presentation: two adjoint steps per member index.
class WeylFamily {
public:
    HTauPoly member(int k, int j) const;

private:
    mutable std::map<std::pair<int, int>, HTauPoly> cache_;
};

// f_{l,j} for the matrix-family presentation, built from the recursive proof
// forms: nested brackets/anti-brackets with exact division by H - (i + 1/2).
// An InexactDivisionError escaping from here falsifies the divisibility lemma.
class MatrixFamily {
public:
    HTauPoly member(int l, int j) const;

private:
    mutable std::map<std::pair<int, int>, HTauPoly> cache_;
};

// Pairwise restricted-form values <members[a], members[b]>_grade.
std::vector<std::vector<LambdaPoly>> gram_matrix(const std::vector<HTauPoly>& members,
                                                 int grade, MomentTable& table);

// Coefficient at the expected grade of a single-grade normal form.
HTauPoly extract_grade(const GradedElement& u, int expected_grade);

} // namespace ospoly
