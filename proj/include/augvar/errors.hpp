#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace augvar {

enum class ErrorKind {
    ZeroPolynomial,
    NotInvertible,
    NonzeroConstantTerm,
    ConstantTermNotOne,
    BackendMismatch,
    VariableMismatch,
    NotAVertex,
    NotUnimodular,
    NegativeExponentAtZero,
    NotInvertibleAtPoint,
    DimensionMismatch,
    NotTwoDimensionalInput,
    PreconditionViolation,
    SignLengthMismatch,
    NonPrimitiveRay,
    DegenerateFan,
    NotANormalizedTriple,
    NoRootAvailable,
    DoubleRoot,
    NotAFactor,
    UnsupportedRing,
    MissingAssignment,
    IndexOutOfRange,
    ParseError,
    VerificationFailure,
    Overflow,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace augvar
