#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ospoly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary operation on values living in different presentations.
struct CaseMismatchError : Error {
    CaseMismatchError() : Error("case mismatch") {}
    explicit CaseMismatchError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// Linear division f / (H - root) left a nonzero remainder.
struct InexactDivisionError : Error {
    std::string remainder;
    explicit InexactDivisionError(std::string rem)
        : Error("inexact division, remainder " + rem), remainder(std::move(rem)) {}
};

// Generating-function denominator is not invertible at t = 0.
struct SingularGeneratingFunctionError : Error {
    SingularGeneratingFunctionError() : Error("singular generating function") {}
};

// A lower hypergeometric parameter hit a nonpositive integer before termination.
struct SingularParameterError : Error {
    SingularParameterError() : Error("singular parameter") {}
};

// Bracket operations require parity-homogeneous inputs.
struct ParityError : Error {
    ParityError() : Error("parity-mixed input") {}
};

// Grade-reversing automorphism would produce an unpaired square root of -1.
struct IrrationalImageError : Error {
    IrrationalImageError() : Error("irrational image") {}
};

// Degree of the zero polynomial is undefined.
struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("degree of zero polynomial") {}
};

// Normal form did not land on the expected grade.
struct GradeMismatchError : Error {
    explicit GradeMismatchError(const std::string& what = "normal-form grade mismatch")
        : Error(what) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

} // namespace ospoly
